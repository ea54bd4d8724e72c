#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "orcol/criteria.hpp"
#include "orcol/errors.hpp"

using namespace orcol;
using testing::all_graphs_on_four_vertices;
using testing::complete_graph;
using testing::cycle_graph;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool proper(const Multigraph& g, const std::vector<std::uint32_t>& c, std::uint32_t k) {
    for (const Edge& e : g.edges())
        if (c[e.tail] == c[e.head]) return false;
    for (auto x : c)
        if (x >= k) return false;
    return true;
}

}  // namespace

TEST_CASE("sufficient_witness") {
    auto single = sufficient_witness(build_class_table(Multigraph(2, {{0, 1}}), 2));
    REQUIRE(single);
    CHECK(single->residues == std::vector<std::uint32_t>{1, 0});
    CHECK(single->coefficient == 1);
    CHECK(*single->agree == 1);
    CHECK(*single->disagree == 0);

    for (std::uint32_t k = 1; k <= 4; ++k) CHECK(!sufficient_witness(build_class_table(Multigraph(1, {{0, 0}}), k)));

    auto c4 = sufficient_witness(build_class_table(cycle_graph(4), 2));
    REQUIRE(c4);
    CHECK(std::abs(c4->coefficient) == 2);
    CHECK(c4->residues == std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK(*c4->agree == 2);
    CHECK(*c4->disagree == 0);
}

TEST_CASE("necessary_profile") {
    auto c4 = necessary_profile(build_class_table(cycle_graph(4), 2), {2});
    REQUIRE(c4.rows.size() == 1);
    CHECK(!c4.rows[0].satisfied);
    CHECK(!c4.rows[0].coprime_to_k);
    CHECK(c4.necessary_condition_holds());

    auto k3 = necessary_profile(build_class_table(complete_graph(3), 3), {2});
    REQUIRE(k3.rows[0].witness);
    CHECK(k3.rows[0].witness->residues == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(k3.rows[0].satisfied);
    CHECK(k3.rows[0].coprime_to_k);

    auto edge = necessary_profile(build_class_table(Multigraph(2, {{0, 1}}), 2), {3});
    CHECK(edge.rows[0].satisfied);
    CHECK(edge.rows[0].coprime_to_k);

    CHECK_THROWS_AS(necessary_profile(build_class_table(cycle_graph(4), 2), {1}), std::invalid_argument);
}

TEST_CASE("profile and parity agree between census and polynomial") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 80; ++i) {
        auto g = testing::random_multigraph(rng, 6, 10, true);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 5);
        auto t = build_class_table(g, k);
        auto p = reduced_graph_polynomial(g, k);
        auto a = necessary_profile(t);
        auto b = necessary_profile(p);
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
            CHECK(a.rows[r].satisfied == b.rows[r].satisfied);
            CHECK(a.rows[r].coprime_to_k == b.rows[r].coprime_to_k);
        }
        if (k % 2 == 1) CHECK(odd_k_parity(t) == odd_k_parity(p));
    }
}

TEST_CASE("odd_k_parity") {
    CHECK(odd_k_parity(build_class_table(complete_graph(3), 3)));
    CHECK(!odd_k_parity(build_class_table(complete_graph(4), 3)));
    CHECK(odd_k_parity(build_class_table(Multigraph(3, {}), 3)));
    CHECK_THROWS_AS(odd_k_parity(build_class_table(complete_graph(3), 2)), std::invalid_argument);
}

TEST_CASE("decide_colorable examples") {
    auto c5 = decide_colorable(cycle_graph(5), 2);
    CHECK(!c5.colorable);
    CHECK(!c5.witness);
    for (const auto& [key, c] : census_coefficients(build_class_table(cycle_graph(5), 2))) CHECK(c == 0);

    auto c4 = decide_colorable(cycle_graph(4), 2);
    CHECK(c4.colorable);
    REQUIRE(c4.witness);
    CHECK(c4.witness->residues == std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK(c4.witness->coefficient == 2);

    CHECK(decide_colorable(Multigraph(3, {}), 1).colorable);
    CHECK(!decide_colorable(Multigraph(2, {{0, 1}}), 1).colorable);
}

TEST_CASE("decide_colorable falls back to the polynomial engine") {
    auto k3 = complete_graph(3);
    Caps caps;
    caps.max_edges = 2;
    auto v = decide_colorable(k3, 3, caps);
    CHECK(v.engine == Engine::polynomial);
    CHECK(v.colorable);
    CHECK(!v.witness->agree);
    caps.max_terms = 10;
    CHECK_THROWS_AS(decide_colorable(k3, 3, caps), CapExceeded);
    CHECK_THROWS_AS(decide_colorable(k3, 0), std::invalid_argument);

    // 30 parallel edges: no census, polynomial decides.
    Multigraph thick(2, std::vector<Edge>(30, Edge{0, 1}));
    auto t = decide_colorable(thick, 2);
    CHECK(t.engine == Engine::polynomial);
    CHECK(t.colorable);
    CHECK(!decide_colorable(thick, 1).colorable);
}

TEST_CASE("select_prime_power examples") {
    CHECK(select_prime_power(2, 3) == PrimePowerChoice{5, 2, 25});
    CHECK(select_prime_power(1, 2) == PrimePowerChoice{3, 1, 3});
    CHECK(select_prime_power(6, 5) == PrimePowerChoice{7, 4, 2401});
    CHECK(select_prime_power(-2, 3) == PrimePowerChoice{5, 2, 25});
    CHECK(select_prime_power(1, 1) == PrimePowerChoice{2, 1, 2});
    CHECK_THROWS_AS(select_prime_power(0, 3), std::invalid_argument);
}

TEST_CASE("select_prime_power postconditions") {
    for (std::int64_t c : {1, 2, 3, 6, 10, 30, -7, 210, 2310}) {
        for (std::uint32_t k = 1; k <= 12; ++k) {
            auto ch = select_prime_power(c, k);
            CHECK(ch.q == ipow(ch.p, ch.t));
            CHECK(ch.q % k == 1 % k);
            CHECK(std::abs(c) % static_cast<std::int64_t>(ch.p) != 0);
            CHECK(k % ch.p != 0);
            CHECK(ch.t <= k);
            for (std::uint32_t s = 1; s < ch.t; ++s) CHECK(ipow(ch.p, s) % k != 1 % k);
            for (std::uint64_t smaller = 2; smaller < ch.p; ++smaller) {
                bool prime = true;
                for (std::uint64_t d = 2; d < smaller; ++d) prime &= smaller % d != 0;
                if (prime) CHECK((std::abs(c) % static_cast<std::int64_t>(smaller) == 0 || k % smaller == 0));
            }
        }
    }
}

TEST_CASE("find_coloring") {
    auto k3 = find_coloring(complete_graph(3), 3);
    REQUIRE(k3);
    CHECK(*k3 == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(!find_coloring(cycle_graph(5), 2));
    for (std::uint32_t k = 1; k <= 4; ++k) CHECK(!find_coloring(Multigraph(1, {{0, 0}}), k));
    CHECK(!find_coloring(Multigraph(1, {}), 0));

    for (const auto& g : all_graphs_on_four_vertices()) {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            auto c = find_coloring(g, k);
            CHECK(c.has_value() == testing::has_proper_coloring(g, k));
            if (c) CHECK(proper(g, *c, k));
        }
    }
}

TEST_CASE("count_colorings") {
    CHECK(count_colorings(Multigraph(2, {}), 3) == 9);
    CHECK(count_colorings(complete_graph(3), 3) == 6);
    CHECK(count_colorings(cycle_graph(4), 2) == 2);
    CHECK(count_colorings(Multigraph(1, {{0, 0}}), 3) == 0);
    CHECK_THROWS_AS(count_colorings(Multigraph(30, {}), 3), CapExceeded);
}

TEST_CASE("cross_check") {
    auto k3 = cross_check(complete_graph(3), 3);
    CHECK(k3.ok());
    CHECK(k3.verdict.colorable);

    auto c5 = cross_check(cycle_graph(5), 2);
    CHECK(c5.ok());
    CHECK(!c5.verdict.colorable);

    auto parallel = cross_check(Multigraph(2, {{0, 1}, {0, 1}}), 2);
    CHECK(parallel.ok());
    CHECK(parallel.verdict.colorable);
    CHECK(parallel.oracle_colorable);
}

TEST_CASE("decisiveness, odd-k parity, monotonicity and necessity on all 4-vertex graphs") {
    for (const auto& g : all_graphs_on_four_vertices()) {
        bool previous = false;
        for (std::uint32_t k = 1; k <= 5; ++k) {
            auto t = build_class_table(g, k);
            bool oracle = find_coloring(g, k).has_value();
            bool decided = sufficient_witness(t).has_value();
            CHECK(decided == oracle);
            CHECK((!previous || decided));
            previous = decided;
            if (k % 2 == 1) CHECK(odd_k_parity(t) == oracle);
            if (oracle) {
                auto profile = necessary_profile(t, {2, 3, 5, 7, 11, 13});
                for (const auto& row : profile.rows)
                    if (row.coprime_to_k) CHECK(row.satisfied);
            }
        }
    }
}

TEST_CASE("uniquely colorable gadget has many witness classes") {
    // K3 plus vertex 4 adjacent to 1 and 2
    Multigraph gadget(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}});
    CHECK(count_colorings(gadget, 3) == 6);  // one coloring up to renaming
    std::size_t nonzero = 0;
    for (const auto& [key, c] : census_coefficients(build_class_table(gadget, 3))) nonzero += c != 0;
    CHECK(nonzero >= 3);
}
