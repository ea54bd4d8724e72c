#include "orcol/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "orcol/errors.hpp"

namespace orcol {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
    return r;
}

Polynomial Polynomial::constant(std::size_t variables, std::int64_t c) {
    Polynomial p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

Polynomial Polynomial::monomial(Exponents exponents, std::int64_t c) {
    Polynomial p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
    if (i >= variables) throw std::invalid_argument("variable index out of range");
    Exponents e(variables, 0);
    e[i] = 1;
    return monomial(std::move(e));
}

std::int64_t Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::uint32_t Polynomial::degree_in(std::size_t i) const {
    if (i >= variables_) throw std::invalid_argument("variable index out of range");
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

void Polynomial::check_shape(const Exponents& e) const {
    if (e.size() != variables_)
        throw std::invalid_argument("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                                    std::to_string(variables_));
}

void Polynomial::add_term(const Exponents& e, std::int64_t c) {
    check_shape(e);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.variables_ != b.variables_) throw std::invalid_argument("variable count mismatch");
    Polynomial out(a.variables_);
    Exponents e(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

std::vector<Factor> factor_list(const Multigraph& g) {
    std::vector<Factor> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back({e.tail, e.head});
    return out;
}

std::uint32_t reduce_exponent(std::uint32_t e, std::uint32_t i, std::uint32_t j) {
    if (j <= i) throw std::domain_error("reduction scheme needs j > i");
    if (e < i) throw std::domain_error("exponent " + std::to_string(e) + " is below the scheme floor " + std::to_string(i));
    return i + (e - i) % (j - i);
}

Polynomial reduce_polynomial(const Polynomial& p, std::uint32_t i, std::uint32_t j) {
    Polynomial out(p.variable_count());
    Exponents reduced(p.variable_count());
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) reduced[v] = e[v] == 0 ? 0 : reduce_exponent(e[v], i, j);
        out.add_term(reduced, c);
    }
    return out;
}

Polynomial graph_polynomial(const Multigraph& g, std::uint64_t max_terms) {
    const std::size_t n = g.vertex_count();
    Polynomial product = Polynomial::constant(n, 1);
    for (const Factor& f : factor_list(g)) {
        product = product * (Polynomial::variable(n, f.plus) - Polynomial::variable(n, f.minus));
        if (product.term_count() > max_terms)
            throw CapExceeded("expanded graph polynomial exceeds " + std::to_string(max_terms) + " terms");
    }
    return product;
}

ReducedPolynomial reduced_graph_polynomial(const Multigraph& g, std::uint32_t k, std::uint64_t max_terms) {
    if (k == 0) throw std::invalid_argument("modulus k must be positive");
    const std::size_t n = g.vertex_count();

    // Terms are keyed by the base-k code of their exponent vector.
    std::vector<std::uint64_t> weight(n);
    std::uint64_t space = 1;
    for (std::size_t v = 0; v < n; ++v) {
        weight[v] = space;
        if (space > max_terms / k)
            throw CapExceeded("reduced polynomial may need " + std::to_string(k) + "^" + std::to_string(n) +
                              " terms, cap is " + std::to_string(max_terms));
        space *= k;
    }

    auto bump = [&](std::uint64_t code, Vertex v) {
        std::uint64_t digit = (code / weight[v]) % k;
        return digit + 1 == k ? code - digit * weight[v] : code + weight[v];
    };

    std::unordered_map<std::uint64_t, std::int64_t> current{{0, 1}};
    for (const Factor& f : factor_list(g)) {
        std::unordered_map<std::uint64_t, std::int64_t> next;
        next.reserve(current.size() * 2);
        for (const auto& [code, c] : current) {
            auto& plus = next[bump(code, f.plus)];
            plus = checked_add(plus, c);
            auto& minus = next[bump(code, f.minus)];
            minus = checked_add(minus, checked_mul(c, -1));
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        current = std::move(next);
    }

    ReducedPolynomial out{k, Polynomial(n)};
    Exponents e(n);
    for (const auto& [code, c] : current) {
        for (std::size_t v = 0; v < n; ++v) e[v] = static_cast<std::uint32_t>((code / weight[v]) % k);
        out.polynomial.add_term(e, c);
    }
    return out;
}

std::int64_t evaluate(const Polynomial& p, std::span<const std::int64_t> point) {
    if (point.size() != p.variable_count()) throw std::invalid_argument("assignment length must equal variable count");
    std::int64_t total = 0;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t term = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t r = 0; r < e[v]; ++r) term = checked_mul(term, point[v]);
        total = checked_add(total, term);
    }
    return total;
}

Polynomial raise_exponents(const Polynomial& p, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("substitution power must be positive");
    Polynomial out(p.variable_count());
    Exponents raised(p.variable_count());
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) raised[v] = e[v] * m;
        out.add_term(raised, c);
    }
    return out;
}

Polynomial times_all_variables(const Polynomial& p) {
    Polynomial out(p.variable_count());
    Exponents shifted(p.variable_count());
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) shifted[v] = e[v] + 1;
        out.add_term(shifted, c);
    }
    return out;
}

std::map<Exponents, std::uint64_t> coefficients_mod(const Polynomial& p, std::uint64_t l) {
    if (l < 2) throw std::invalid_argument("modulus l must be at least 2");
    std::map<Exponents, std::uint64_t> out;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t r = c % static_cast<std::int64_t>(l);
        if (r < 0) r += static_cast<std::int64_t>(l);
        out.emplace_hint(out.end(), e, static_cast<std::uint64_t>(r));
    }
    return out;
}

}  // namespace orcol
