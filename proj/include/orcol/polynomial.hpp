#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "orcol/graph.hpp"

namespace orcol {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the integers. Zero coefficients are
/// never stored; terms iterate in lexicographic exponent order. Coefficient
/// arithmetic is checked and throws std::overflow_error instead of wrapping.
class Polynomial {
public:
    explicit Polynomial(std::size_t variables) : variables_(variables) {}

    static Polynomial constant(std::size_t variables, std::int64_t c);
    static Polynomial monomial(Exponents exponents, std::int64_t c = 1);
    /// x_i (0-based).
    static Polynomial variable(std::size_t variables, std::size_t i);

    std::size_t variable_count() const noexcept { return variables_; }
    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Exponents& e) const;
    /// Highest exponent of variable i over all terms (0 for the zero polynomial).
    std::uint32_t degree_in(std::size_t i) const;

    /// Adds c to the coefficient of x^e, dropping the term if it cancels.
    void add_term(const Exponents& e, std::int64_t c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_shape(const Exponents& e) const;

    std::size_t variables_;
    std::map<Exponents, std::int64_t> terms_;
};

/// Graph polynomial with all exponents reduced modulo k (each in [0, k)).
struct ReducedPolynomial {
    std::uint32_t k = 1;
    Polynomial polynomial{1};

    friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;
};

/// Edge factor (x_plus - x_minus) in the reference orientation.
struct Factor {
    Vertex plus;
    Vertex minus;
    friend bool operator==(const Factor&, const Factor&) = default;
};

inline constexpr std::uint64_t default_max_terms = std::uint64_t{1} << 22;

std::vector<Factor> factor_list(const Multigraph& g);

/// Least value >= i congruent to e modulo (j - i). Requires e >= i and j > i,
/// otherwise throws std::domain_error.
std::uint32_t reduce_exponent(std::uint32_t e, std::uint32_t i, std::uint32_t j);

/// Maximal reduction by the scheme x^j -> x^i, applied to every nonzero
/// exponent; exponent 0 stays 0. Like terms are merged.
Polynomial reduce_polynomial(const Polynomial& p, std::uint32_t i, std::uint32_t j);

/// Product of all edge factors, fully expanded and unreduced. Throws
/// CapExceeded when an intermediate product exceeds max_terms terms.
Polynomial graph_polynomial(const Multigraph& g, std::uint64_t max_terms = default_max_terms);

/// Product of all edge factors with exponents reduced mod k after every
/// multiplication. Throws CapExceeded when k^n > max_terms.
ReducedPolynomial reduced_graph_polynomial(const Multigraph& g, std::uint32_t k,
                                           std::uint64_t max_terms = default_max_terms);

/// Sum of c * prod a_i^e_i over the integers, with overflow checks.
std::int64_t evaluate(const Polynomial& p, std::span<const std::int64_t> point);

/// Substitutes x_i <- x_i^m.
Polynomial raise_exponents(const Polynomial& p, std::uint32_t m);

/// Multiplies by x_1 * ... * x_n.
Polynomial times_all_variables(const Polynomial& p);

/// Every coefficient reduced into [0, l); zero residues are kept.
std::map<Exponents, std::uint64_t> coefficients_mod(const Polynomial& p, std::uint64_t l);
inline std::map<Exponents, std::uint64_t> coefficients_mod(const ReducedPolynomial& p, std::uint64_t l) {
    return coefficients_mod(p.polynomial, l);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace orcol
