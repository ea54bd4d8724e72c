#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orcol/polynomial.hpp"

namespace orcol {

/// GF(p^t) in polynomial representation over GF(p).
struct FieldDescriptor {
    std::uint32_t p = 2;
    std::uint32_t t = 1;
    std::uint32_t q = 2;
    /// Monic irreducible modulus, t + 1 coefficients, index = degree.
    /// For t == 1 this is x and elements are plain residues mod p.
    std::vector<std::uint32_t> modulus;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

using FieldRef = std::shared_ptr<const FieldDescriptor>;

/// Element as t residues mod p, index = power of the generator.
struct FieldElement {
    FieldRef field;
    std::vector<std::uint32_t> coeffs;

    bool is_zero() const noexcept;
    /// Base-p number whose digits are coeffs; a bijection onto [0, q).
    std::uint32_t index() const noexcept;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
};

inline constexpr std::uint32_t default_max_field_order = 1u << 16;
inline constexpr std::uint64_t default_max_points = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// The modulus is the lexicographically smallest monic irreducible of degree
/// t (coefficients compared from x^(t-1) down to the constant term).
/// Throws std::invalid_argument for non-prime p or t == 0, CapExceeded when
/// p^t > max_order.
FieldRef make_field(std::uint32_t p, std::uint32_t t, std::uint32_t max_order = default_max_field_order);

/// Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
/// Coefficients are index = degree, leading coefficient last and nonzero.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

FieldElement ff_zero(const FieldRef& f);
FieldElement ff_one(const FieldRef& f);
/// Inverse of FieldElement::index().
FieldElement ff_element(const FieldRef& f, std::uint32_t index);
/// Image of an integer in the prime subfield.
FieldElement ff_from_integer(const FieldRef& f, std::int64_t value);
std::vector<FieldElement> ff_elements(const FieldRef& f);

// Mixed-field operands throw std::invalid_argument.
FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_pow(const FieldElement& a, std::uint64_t e);
/// a^(q-2); throws std::domain_error for zero.
FieldElement ff_inv(const FieldElement& a);

/// { x^m : x != 0 } with m = (q-1)/k, sorted by index. Throws
/// std::invalid_argument unless k divides q - 1.
std::vector<FieldElement> color_set(const FieldRef& f, std::uint32_t k);

/// Integer coefficients enter through the prime subfield.
FieldElement evaluate(const Polynomial& p, std::span<const FieldElement> point, const FieldRef& f);

/// Evaluates at all q^n points. Throws CapExceeded when q^n > max_points.
bool is_identically_zero(const Polynomial& p, const FieldRef& f, std::uint64_t max_points = default_max_points);

/// Formal zero test after reducing coefficients mod p. Valid as an identical
/// zero test only for per-variable degree <= q - 1, which is enforced
/// (std::domain_error otherwise).
bool degree_bounded_zero_test(const Polynomial& p, const FieldRef& f);

/// "3", "g^2 + 2g + 1", ... with g the class of x modulo the field modulus.
std::string to_string(const FieldElement& a);
/// "x^2 + x + 1"
std::string modulus_string(const FieldDescriptor& f);

}  // namespace orcol
