#include "lmis/oracle.hpp"

#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using lmis::ConflictGraph;
using lmis::LShape;

namespace {

ConflictGraph graph_from_edges(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    ConflictGraph g;
    g.size = n;
    g.adj.assign(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : edges) {
        g.adj[u][v] = g.adj[v][u] = true;
    }
    return g;
}

}  // namespace

TEST_CASE("build_conflict_graph") {
    const std::vector<LShape> disjoint = {LShape{0, 0, 1, 1}, LShape{5, 5, 6, 6}};
    const ConflictGraph g0 = lmis::build_conflict_graph(disjoint);
    CHECK_FALSE(g0.adjacent(0, 1));

    // three shapes through a shared neighborhood: a triangle, confirmed
    // pairwise by the predicate first
    const std::vector<LShape> tri = {LShape{0, 0, 4, 4}, LShape{2, -2, 6, 2},
                                     LShape{1, -1, 5, 3}};
    for (std::size_t u = 0; u < 3; ++u) {
        for (std::size_t v = u + 1; v < 3; ++v) {
            CHECK(lmis::intersects(tri[u], tri[v]));
        }
    }
    const ConflictGraph g1 = lmis::build_conflict_graph(tri);
    CHECK(g1.adjacent(0, 1));
    CHECK(g1.adjacent(0, 2));
    CHECK(g1.adjacent(1, 2));

    const ConflictGraph g2 = lmis::build_conflict_graph({});
    CHECK(g2.size == 0);
}

TEST_CASE("brute_force_mis on canonical graphs") {
    const ConflictGraph edgeless = graph_from_edges(5, {});
    CHECK(lmis::brute_force_mis(edgeless).size() == 5);

    std::vector<std::pair<std::size_t, std::size_t>> complete_edges;
    for (std::size_t u = 0; u < 5; ++u) {
        for (std::size_t v = u + 1; v < 5; ++v) {
            complete_edges.emplace_back(u, v);
        }
    }
    CHECK(lmis::brute_force_mis(graph_from_edges(5, complete_edges)).size() == 1);

    const ConflictGraph c5 = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(lmis::brute_force_mis(c5).size() == 2);
}

TEST_CASE("brute_force_mis refuses instances above the cap") {
    const ConflictGraph big = graph_from_edges(31, {});
    CHECK_THROWS_AS(lmis::brute_force_mis(big, 30), lmis::Error);
    CHECK(lmis::brute_force_mis(big, 31).size() == 31);
}

TEST_CASE("brute_force_mis agrees with subset enumeration") {
    lmis::SplitMix64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng.next_below(14) + 1;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (rng.next_below(100) < 35) {
                    edges.emplace_back(u, v);
                }
            }
        }
        const ConflictGraph g = graph_from_edges(n, edges);
        const auto got = lmis::brute_force_mis(g);
        for (std::size_t a = 0; a < got.size(); ++a) {
            for (std::size_t b = a + 1; b < got.size(); ++b) {
                CHECK_FALSE(g.adjacent(got[a], got[b]));
            }
        }
        CHECK(got.size() == testsupport::exhaustive_mis_size(g));
    }
}

TEST_CASE("brute_force_mis on geometric instances") {
    for (std::uint64_t seed = 1400; seed < 1420; ++seed) {
        const auto inst = testsupport::random_instance(seed, 14, lmis::GenMode::General, 24);
        const auto g = lmis::build_conflict_graph(inst.shapes);
        const auto got = lmis::brute_force_mis(g);
        CHECK(lmis::verify_independent(inst.shapes, got));
        CHECK(got.size() == testsupport::exhaustive_mis_size(inst.shapes));
    }
}

TEST_CASE("verify_independent") {
    CHECK(lmis::verify_independent({LShape{0, 0, 1, 1}}, {}));
    CHECK(lmis::verify_independent({LShape{0, 0, 1, 1}}, {0}));

    const LShape l{2, 2, 4, 4};
    CHECK_FALSE(lmis::verify_independent({l, l}, {0, 1}));
    const auto pair = lmis::find_violation({l, l}, {0, 1});
    REQUIRE(pair.has_value());
    CHECK(pair->first == 0);
    CHECK(pair->second == 1);

    CHECK_THROWS_AS(lmis::verify_independent({l}, {3}), lmis::Error);
}
