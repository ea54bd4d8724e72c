#include "orcol/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orcol/errors.hpp"

namespace orcol {

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field) throw std::invalid_argument("field element without a field");
    if (a.field != b.field && !(*a.field == *b.field))
        throw std::invalid_argument("operands belong to different fields");
}

// Remainder of `poly` modulo the monic `divisor` over GF(p); both index = degree.
std::vector<std::uint32_t> remainder_mod(std::vector<std::uint32_t> poly, std::span<const std::uint32_t> divisor,
                                         std::uint32_t p) {
    const std::size_t d = divisor.size() - 1;
    for (std::size_t deg = poly.size(); deg-- > d;) {
        std::uint64_t c = poly[deg];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) {
            std::size_t at = deg - d + i;
            poly[at] = static_cast<std::uint32_t>((poly[at] + (p - c) * divisor[i]) % p);
        }
    }
    poly.resize(std::min(poly.size(), d));
    return poly;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint32_t FieldElement::index() const noexcept {
    std::uint32_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * field->p + coeffs[i];
    return idx;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.coeffs == b.coeffs;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    if (poly.empty() || poly.back() == 0) throw std::invalid_argument("polynomial needs a nonzero leading coefficient");
    const std::size_t degree = poly.size() - 1;
    if (degree == 0) return false;
    std::vector<std::uint32_t> monic(poly.begin(), poly.end());
    for (std::size_t d = 1; d <= degree / 2; ++d) {
        const std::uint64_t count = checked_power(p, d, UINT64_MAX - 1);
        std::vector<std::uint32_t> divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i, rest /= p) divisor[i] = static_cast<std::uint32_t>(rest % p);
            auto r = remainder_mod(monic, divisor, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

FieldRef make_field(std::uint32_t p, std::uint32_t t, std::uint32_t max_order) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (t == 0) throw std::invalid_argument("extension degree must be at least 1");
    const std::uint64_t q = checked_power(p, t, max_order);
    if (q > max_order)
        throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(t) + " exceeds bound " +
                          std::to_string(max_order));

    auto f = std::make_shared<FieldDescriptor>();
    f->p = p;
    f->t = t;
    f->q = static_cast<std::uint32_t>(q);
    if (t == 1) {
        f->modulus = {0, 1};
        return f;
    }
    std::vector<std::uint32_t> candidate(t + 1, 0);
    candidate[t] = 1;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < t; ++i, rest /= p) candidate[i] = static_cast<std::uint32_t>(rest % p);
        if (is_irreducible(candidate, p)) {
            f->modulus = candidate;
            return f;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable: one exists for every degree
}

FieldElement ff_zero(const FieldRef& f) { return {f, std::vector<std::uint32_t>(f->t, 0)}; }

FieldElement ff_one(const FieldRef& f) {
    FieldElement e = ff_zero(f);
    e.coeffs[0] = 1 % f->p;
    return e;
}

FieldElement ff_element(const FieldRef& f, std::uint32_t index) {
    if (index >= f->q) throw std::invalid_argument("element index out of range");
    FieldElement e = ff_zero(f);
    for (std::size_t i = 0; i < f->t; ++i, index /= f->p) e.coeffs[i] = index % f->p;
    return e;
}

FieldElement ff_from_integer(const FieldRef& f, std::int64_t value) {
    std::int64_t r = value % static_cast<std::int64_t>(f->p);
    if (r < 0) r += f->p;
    FieldElement e = ff_zero(f);
    e.coeffs[0] = static_cast<std::uint32_t>(r);
    return e;
}

std::vector<FieldElement> ff_elements(const FieldRef& f) {
    std::vector<FieldElement> out;
    out.reserve(f->q);
    for (std::uint32_t i = 0; i < f->q; ++i) out.push_back(ff_element(f, i));
    return out;
}

FieldElement ff_add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % a.field->p;
    return r;
}

FieldElement ff_sub(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    FieldElement r = a;
    const std::uint32_t p = a.field->p;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = (r.coeffs[i] + p - b.coeffs[i]) % p;
    return r;
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const FieldDescriptor& f = *a.field;
    const std::uint64_t p = f.p;
    std::vector<std::uint32_t> product(2 * f.t - 1, 0);
    for (std::size_t i = 0; i < f.t; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < f.t; ++j)
            product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p);
    }
    return {a.field, remainder_mod(std::move(product), f.modulus, f.p)};
}

FieldElement ff_pow(const FieldElement& a, std::uint64_t e) {
    FieldElement result = ff_one(a.field);
    FieldElement base = a;
    while (e > 0) {
        if (e & 1u) result = ff_mul(result, base);
        e >>= 1;
        if (e > 0) base = ff_mul(base, base);
    }
    return result;
}

FieldElement ff_inv(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    return ff_pow(a, a.field->q - 2);
}

std::vector<FieldElement> color_set(const FieldRef& f, std::uint32_t k) {
    if (k == 0 || (f->q - 1) % k != 0)
        throw std::invalid_argument("k = " + std::to_string(k) + " does not divide q - 1 = " + std::to_string(f->q - 1));
    const std::uint32_t m = (f->q - 1) / k;
    std::vector<bool> seen(f->q, false);
    for (std::uint32_t i = 1; i < f->q; ++i) seen[ff_pow(ff_element(f, i), m).index()] = true;
    std::vector<FieldElement> out;
    for (std::uint32_t i = 0; i < f->q; ++i)
        if (seen[i]) out.push_back(ff_element(f, i));
    return out;
}

FieldElement evaluate(const Polynomial& p, std::span<const FieldElement> point, const FieldRef& f) {
    if (point.size() != p.variable_count()) throw std::invalid_argument("assignment length must equal variable count");
    FieldElement total = ff_zero(f);
    for (const auto& [e, c] : p.terms()) {
        FieldElement term = ff_from_integer(f, c);
        if (term.is_zero()) continue;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = ff_mul(term, ff_pow(point[v], e[v]));
        total = ff_add(total, term);
    }
    return total;
}

bool is_identically_zero(const Polynomial& p, const FieldRef& f, std::uint64_t max_points) {
    const std::size_t n = p.variable_count();
    if (checked_power(f->q, n, max_points) > max_points)
        throw CapExceeded("exhaustive evaluation needs " + std::to_string(f->q) + "^" + std::to_string(n) +
                          " points, bound is " + std::to_string(max_points));

    // Coefficients in the field, and per-variable power tables indexed [value][exponent].
    std::vector<std::pair<const Exponents*, FieldElement>> terms;
    for (const auto& [e, c] : p.terms()) {
        FieldElement coeff = ff_from_integer(f, c);
        if (!coeff.is_zero()) terms.emplace_back(&e, std::move(coeff));
    }
    if (terms.empty()) return true;

    const auto elements = ff_elements(f);
    std::vector<std::vector<std::vector<FieldElement>>> powers(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t degree = 0;
        for (const auto& [e, c] : terms) degree = std::max(degree, (*e)[v]);
        powers[v].resize(f->q);
        for (std::uint32_t a = 0; a < f->q; ++a) {
            auto& row = powers[v][a];
            row.push_back(ff_one(f));
            for (std::uint32_t d = 1; d <= degree; ++d) row.push_back(ff_mul(row.back(), elements[a]));
        }
    }

    std::vector<std::uint32_t> point(n, 0);
    for (;;) {
        FieldElement total = ff_zero(f);
        for (const auto& [e, coeff] : terms) {
            FieldElement term = coeff;
            for (std::size_t v = 0; v < n; ++v)
                if ((*e)[v] > 0) term = ff_mul(term, powers[v][point[v]][(*e)[v]]);
            total = ff_add(total, term);
        }
        if (!total.is_zero()) return false;
        std::size_t v = 0;
        while (v < n && ++point[v] == f->q) point[v++] = 0;
        if (v == n) return true;
    }
}

bool degree_bounded_zero_test(const Polynomial& p, const FieldRef& f) {
    for (std::size_t v = 0; v < p.variable_count(); ++v)
        if (p.degree_in(v) > f->q - 1)
            throw std::domain_error("degree in x" + std::to_string(v + 1) + " exceeds q - 1 = " + std::to_string(f->q - 1));
    for (const auto& [e, c] : p.terms())
        if (c % static_cast<std::int64_t>(f->p) != 0) return false;
    return true;
}

namespace {

std::string render(std::span<const std::uint32_t> coeffs, const char* symbol) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        std::uint32_t c = coeffs[d];
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0) {
            out << c;
            continue;
        }
        if (c != 1) out << c;
        out << symbol;
        if (d > 1) out << '^' << d;
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace

std::string to_string(const FieldElement& a) { return render(a.coeffs, "g"); }

std::string modulus_string(const FieldDescriptor& f) { return render(f.modulus, "x"); }

}  // namespace orcol
