#include "orcol/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orcol/errors.hpp"

namespace orcol {

std::string to_string(Engine e) { return e == Engine::census ? "census" : "polynomial"; }

bool LProfile::necessary_condition_holds() const {
    for (const auto& row : rows)
        if (row.coprime_to_k && !row.satisfied) return false;
    return true;
}

namespace {

Witness census_witness(const std::vector<std::uint32_t>& key, const SubclassCounts& c) {
    return {key, c.difference(), c.agree, c.disagree};
}

std::int64_t mod_floor(std::int64_t a, std::uint64_t l) {
    std::int64_t r = a % static_cast<std::int64_t>(l);
    return r < 0 ? r + static_cast<std::int64_t>(l) : r;
}

void check_moduli(const std::vector<std::uint64_t>& ls) {
    for (auto l : ls)
        if (l < 2) throw std::invalid_argument("profile modulus l must be at least 2");
}

}  // namespace

std::optional<Witness> sufficient_witness(const ClassTable& t) {
    for (auto it = t.classes.rbegin(); it != t.classes.rend(); ++it)
        if (it->second.agree != it->second.disagree) return census_witness(it->first, it->second);
    return std::nullopt;
}

std::optional<Witness> sufficient_witness(const ReducedPolynomial& p) {
    if (p.polynomial.is_zero()) return std::nullopt;
    const auto& [e, c] = *p.polynomial.terms().rbegin();
    return Witness{e, c, std::nullopt, std::nullopt};
}

LProfile necessary_profile(const ClassTable& t, const std::vector<std::uint64_t>& ls) {
    check_moduli(ls);
    LProfile profile{t.k, {}};
    for (auto l : ls) {
        LProfileRow row{l, std::gcd(l, std::uint64_t{t.k}) == 1, false, std::nullopt};
        for (auto it = t.classes.rbegin(); it != t.classes.rend(); ++it) {
            const auto& [key, counts] = *it;
            if (counts.agree % l != counts.disagree % l) {
                row.satisfied = true;
                row.witness = census_witness(key, counts);
                break;
            }
        }
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

LProfile necessary_profile(const ReducedPolynomial& p, const std::vector<std::uint64_t>& ls) {
    check_moduli(ls);
    LProfile profile{p.k, {}};
    for (auto l : ls) {
        LProfileRow row{l, std::gcd(l, std::uint64_t{p.k}) == 1, false, std::nullopt};
        for (auto it = p.polynomial.terms().rbegin(); it != p.polynomial.terms().rend(); ++it) {
            const auto& [e, c] = *it;
            if (mod_floor(c, l) != 0) {
                row.satisfied = true;
                row.witness = Witness{e, c, std::nullopt, std::nullopt};
                break;
            }
        }
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

bool odd_k_parity(const ClassTable& t) {
    if (t.k % 2 == 0) throw std::invalid_argument("the parity criterion needs odd k");
    for (const auto& [key, counts] : t.classes)
        if (counts.total() % 2 == 1) return true;
    return false;
}

bool odd_k_parity(const ReducedPolynomial& p) {
    if (p.k % 2 == 0) throw std::invalid_argument("the parity criterion needs odd k");
    for (const auto& [e, c] : p.polynomial.terms())
        if (c % 2 != 0) return true;
    return false;
}

Verdict decide_colorable(const Multigraph& g, std::uint32_t k, const Caps& caps) {
    if (k == 0) throw std::invalid_argument("modulus k must be positive");
    if (g.edge_count() <= caps.max_edges) {
        ClassTable t = build_class_table(g, k, {caps.max_edges, caps.threads});
        auto w = sufficient_witness(t);
        return {w.has_value(), std::move(w), Engine::census};
    }
    ReducedPolynomial p = reduced_graph_polynomial(g, k, caps.max_terms);
    auto w = sufficient_witness(p);
    return {w.has_value(), std::move(w), Engine::polynomial};
}

PrimePowerChoice select_prime_power(std::int64_t c, std::uint32_t k) {
    if (c == 0) throw std::invalid_argument("coefficient must be nonzero");
    if (k == 0) throw std::invalid_argument("modulus k must be positive");
    const std::uint64_t magnitude = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    std::uint64_t p = 2;
    while (!is_prime(p) || magnitude % p == 0 || k % p == 0) ++p;

    std::uint64_t power = 1;
    std::uint64_t q = 1;
    for (std::uint32_t t = 1; t <= k; ++t) {
        power = power * (p % k) % k;
        if (q > UINT64_MAX / p) throw std::overflow_error("prime power does not fit in 64 bits");
        q *= p;
        if (power == 1 % k) return {p, t, q};
    }
    throw std::logic_error("no t <= k with p^t = 1 mod k");  // excluded by pigeonhole since gcd(p, k) = 1
}

std::optional<std::vector<std::uint32_t>> find_coloring(const Multigraph& g, std::uint32_t k) {
    const std::size_t n = g.vertex_count();
    if (k == 0 || g.has_loop()) return std::nullopt;

    // Earlier neighbours only: vertex v is checked against colored vertices.
    std::vector<std::vector<Vertex>> earlier(n);
    for (const Edge& e : g.edges()) {
        Vertex lo = std::min(e.tail, e.head), hi = std::max(e.tail, e.head);
        earlier[hi].push_back(lo);
    }

    std::vector<std::uint32_t> color(n, 0);
    std::vector<std::uint32_t> next(n, 0);
    std::size_t v = 0;
    while (true) {
        // Vertex 0 only tries color 0: any coloring can be renamed to start there.
        const std::uint32_t limit = v == 0 ? 1 : k;
        bool placed = false;
        while (next[v] < limit) {
            std::uint32_t c = next[v]++;
            bool ok = true;
            for (Vertex u : earlier[v])
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                color[v] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (++v == n) return color;
            next[v] = 0;
        } else {
            if (v == 0) return std::nullopt;
            --v;
        }
    }
}

std::uint64_t count_colorings(const Multigraph& g, std::uint32_t k, std::uint64_t max_assignments) {
    const std::size_t n = g.vertex_count();
    if (k == 0) return 0;
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > max_assignments / k)
            throw CapExceeded("counting needs " + std::to_string(k) + "^" + std::to_string(n) +
                              " assignments, bound is " + std::to_string(max_assignments));
        space *= k;
    }
    std::vector<std::uint32_t> color(n, 0);
    std::uint64_t proper = 0;
    for (std::uint64_t i = 0; i < space; ++i) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if (color[e.tail] == color[e.head]) {
                ok = false;
                break;
            }
        if (ok) ++proper;
        for (std::size_t v = 0; v < n && ++color[v] == k; ++v) color[v] = 0;
    }
    return proper;
}

std::vector<CoefficientMismatch> compare_coefficients(const ClassTable& t, const ReducedPolynomial& p) {
    std::vector<CoefficientMismatch> out;
    if (t.k != p.k) throw std::invalid_argument("census and polynomial use different k");
    const auto census = census_coefficients(t);
    const auto& poly = p.polynomial.terms();
    auto a = census.begin();
    auto b = poly.begin();
    while (a != census.end() || b != poly.end()) {
        if (b == poly.end() || (a != census.end() && a->first < b->first)) {
            if (a->second != 0) out.push_back({a->first, a->second, 0});
            ++a;
        } else if (a == census.end() || b->first < a->first) {
            out.push_back({b->first, 0, b->second});
            ++b;
        } else {
            if (a->second != b->second) out.push_back({a->first, a->second, b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

CrossCheckReport cross_check(const Multigraph& g, std::uint32_t k, const Caps& caps) {
    CrossCheckReport report;
    report.k = k;
    ClassTable table = build_class_table(g, k, {caps.max_edges, caps.threads});
    ReducedPolynomial poly = reduced_graph_polynomial(g, k, caps.max_terms);
    report.mismatches = compare_coefficients(table, poly);
    report.tables_equal = report.mismatches.empty();

    auto w = sufficient_witness(table);
    report.verdict = {w.has_value(), std::move(w), Engine::census};
    report.coloring = find_coloring(g, k);
    report.oracle_colorable = report.coloring.has_value();
    report.verdict_matches_oracle = report.verdict.colorable == report.oracle_colorable;
    return report;
}

}  // namespace orcol
