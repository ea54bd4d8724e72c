#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orcol/census.hpp"
#include "orcol/errors.hpp"

using namespace orcol;
using testing::complete_graph;
using testing::cycle_graph;

TEST_CASE("out_degree_vector") {
    auto k3 = complete_graph(3);
    CHECK(out_degree_vector(Orientation(k3)) == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(out_degree_vector(Orientation(k3, std::uint64_t{0b111})) == std::vector<std::uint32_t>{0, 1, 2});

    Multigraph loop(1, {{0, 0}});
    CHECK(out_degree_vector(Orientation(loop, std::uint64_t{0})) == std::vector<std::uint32_t>{1});
    CHECK(out_degree_vector(Orientation(loop, std::uint64_t{1})) == std::vector<std::uint32_t>{1});
}

TEST_CASE("flip_parity") {
    auto k3 = complete_graph(3);
    CHECK(flip_parity(Orientation(k3)) == Parity::even);
    CHECK(flip_parity(Orientation(k3, std::uint64_t{0b001})) == Parity::odd);
    // edges (1,2) and (2,3) are indices 0 and 2
    CHECK(flip_parity(Orientation(k3, std::uint64_t{0b101})) == Parity::even);
}

TEST_CASE("residue_class") {
    auto k3 = complete_graph(3);
    CHECK(residue_class(Orientation(k3), 3).entries == std::vector<std::uint32_t>{2, 1, 0});
    // 1->2, 2->3, 3->1: flip edge (1,3)
    CHECK(residue_class(Orientation(k3, std::uint64_t{0b010}), 3).entries == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(residue_class(Orientation(cycle_graph(4)), 2).entries == std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK_THROWS_AS(residue_class(Orientation(k3), 0), std::invalid_argument);
}

TEST_CASE("build_class_table examples") {
    SUBCASE("single edge, k=2") {
        auto t = build_class_table(Multigraph(2, {{0, 1}}), 2);
        REQUIRE(t.classes.size() == 2);
        CHECK(t.classes.at({1, 0}) == SubclassCounts{1, 0});
        CHECK(t.classes.at({0, 1}) == SubclassCounts{0, 1});
    }
    SUBCASE("C4, k=2: eight classes of two orientations") {
        auto t = build_class_table(cycle_graph(4), 2);
        CHECK(t.classes.size() == 8);
        for (const auto& [key, c] : t.classes) CHECK(c.total() == 2);
    }
    SUBCASE("empty graph has one orientation") {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            auto t = build_class_table(Multigraph(2, {}), k);
            REQUIRE(t.classes.size() == 1);
            CHECK(t.classes.at({0, 0}) == SubclassCounts{1, 0});
        }
    }
    SUBCASE("k = 1 collapses to one class") {
        auto t = build_class_table(complete_graph(3), 1);
        REQUIRE(t.classes.size() == 1);
        CHECK(t.classes.begin()->first == std::vector<std::uint32_t>{0, 0, 0});
        CHECK(t.classes.begin()->second == SubclassCounts{4, 4});
    }
}

TEST_CASE("census cap") {
    std::vector<Edge> edges(25, Edge{0, 1});
    Multigraph g(2, edges);
    CHECK_THROWS_AS(build_class_table(g, 2), CapExceeded);
    CHECK_NOTHROW(build_class_table(g, 2, {25, 1}));
}

TEST_CASE("census_coefficients") {
    auto single = census_coefficients(build_class_table(Multigraph(2, {{0, 1}}), 2));
    CHECK(single == std::map<std::vector<std::uint32_t>, std::int64_t>{{{0, 1}, -1}, {{1, 0}, 1}});

    // (x1-x2)(x1-x3)(x2-x3), x1x2x3 terms cancel
    auto k3 = census_coefficients(build_class_table(complete_graph(3), 3));
    std::map<std::vector<std::uint32_t>, std::int64_t> expected{
        {{0, 1, 2}, -1}, {{0, 2, 1}, 1}, {{1, 0, 2}, 1}, {{1, 1, 1}, 0},
        {{1, 2, 0}, -1}, {{2, 0, 1}, -1}, {{2, 1, 0}, 1}};
    CHECK(k3 == expected);

    CHECK(census_coefficients(build_class_table(cycle_graph(4), 2)).at({1, 1, 1, 1}) == 2);
}

TEST_CASE("census matches the from-scratch oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        auto g = testing::random_multigraph(rng, 6, 12, true);
        std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 5);
        auto t = build_class_table(g, k);
        auto naive = testing::naive_census(g, k);
        REQUIRE(t.classes.size() == naive.size());
        for (const auto& [key, cell] : naive) {
            REQUIRE(t.classes.count(key) == 1);
            CHECK(t.classes.at(key).agree == cell.even);
            CHECK(t.classes.at(key).disagree == cell.odd);
        }
    }
}

TEST_CASE("census invariants on random multigraphs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto g = testing::random_multigraph(rng, 6, 10, true);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 5);
        auto t = build_class_table(g, k);

        CHECK(t.orientation_count() == (std::uint64_t{1} << g.edge_count()));
        for (const auto& [key, c] : t.classes) CHECK(c.total() > 0);

        if (g.has_loop())
            for (const auto& [key, c] : t.classes) CHECK(c.agree == c.disagree);

        if (g.edge_count() > 0) {
            // Reversing one stored edge negates every coefficient.
            auto edges = g.edges();
            std::size_t e = rng() % edges.size();
            std::swap(edges[e].tail, edges[e].head);
            auto flipped = census_coefficients(build_class_table(Multigraph(g.vertex_count(), edges), k));
            auto original = census_coefficients(t);
            REQUIRE(flipped.size() == original.size());
            for (const auto& [key, c] : original) CHECK(flipped.at(key) == -c);
        }

        // Relabeling permutes coordinates and keeps the counts.
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (const Edge& ed : g.edges()) relabeled.push_back({perm[ed.tail], perm[ed.head]});
        auto r = build_class_table(Multigraph(g.vertex_count(), relabeled), k);
        REQUIRE(r.classes.size() == t.classes.size());
        for (const auto& [key, c] : t.classes) {
            std::vector<std::uint32_t> moved(key.size());
            for (std::size_t v = 0; v < key.size(); ++v) moved[perm[v]] = key[v];
            CHECK(r.classes.at(moved) == c);
        }
    }
}

TEST_CASE("partition independence and thread determinism") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        auto g = testing::random_multigraph(rng, 7, 14, true);
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % 3);
        auto whole = build_class_table(g, k);
        const std::uint64_t total = std::uint64_t{1} << g.edge_count();

        std::vector<std::uint64_t> cuts{0, total};
        for (int c = 0; c < 4; ++c) cuts.push_back(total ? rng() % (total + 1) : 0);
        std::sort(cuts.begin(), cuts.end());
        ClassTable merged = tally_mask_range(g, k, 0, 0);
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) merge_into(merged, tally_mask_range(g, k, cuts[c], cuts[c + 1]));
        CHECK(merged == whole);

        for (unsigned threads : {2u, 3u, 8u}) CHECK(build_class_table(g, k, {24, threads}) == whole);
    }
    std::vector<Edge> edges;
    for (int e = 0; e < 18; ++e) edges.push_back({static_cast<Vertex>(e % 8), static_cast<Vertex>((e * 3 + 1) % 8)});
    Multigraph g18(8, edges);
    CHECK(build_class_table(g18, 3, {24, 4}) == build_class_table(g18, 3, {24, 1}));
}

TEST_CASE("merge_into rejects mismatched tables") {
    auto a = build_class_table(complete_graph(3), 3);
    auto b = build_class_table(complete_graph(3), 2);
    CHECK_THROWS_AS(merge_into(a, b), std::invalid_argument);
}
