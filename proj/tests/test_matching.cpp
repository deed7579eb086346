#include "doctest.h"

#include <optional>

#include "oracles.hpp"
#include "pathfactor/graph_gen.hpp"
#include "pathfactor/matching.hpp"

using namespace pathfactor;

TEST_CASE("maximum matching on named graphs") {
    CHECK(maximum_matching(cycle(5)).size() == 2);

    Matching k4 = maximum_matching(complete(4));
    CHECK(k4.size() == 2);
    CHECK(k4.is_perfect(complete(4)));
    CHECK(k4.edges() == std::vector<Edge>{{0, 1}, {2, 3}});  // lexicographic tie-break

    CHECK(maximum_matching(star(3)).size() == 1);
    CHECK(maximum_matching(empty_graph(0)).size() == 0);
}

TEST_CASE("matching type rejects invalid edge sets") {
    CHECK_THROWS_AS(Matching(path(3), {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Matching(path(3), {{0, 2}}), std::invalid_argument);
}

TEST_CASE("blossom matching equals brute force on random graphs up to n = 8") {
    Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = sample_graph(1, 8, rng);
        CHECK(matching_number(g) == oracle::matching_number(g));
    }
}

TEST_CASE("maximum_matching returns a valid matching of maximum size") {
    Rng rng(22);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = sample_graph(1, 8, rng);
        Matching m = maximum_matching(g);  // constructor revalidates disjointness
        CHECK(m.size() == oracle::matching_number(g));
    }
}

namespace {

// all maximum matchings by direct enumeration, keep the lex-smallest edge list
std::vector<Edge> lex_min_maximum_matching(const Graph& g) {
    int target = oracle::matching_number(g);
    std::optional<std::vector<Edge>> best;
    std::vector<Edge> cur;
    std::vector<bool> used(g.order(), false);
    auto rec = [&](auto&& self, size_t edge_idx) -> void {
        if (static_cast<int>(cur.size()) == target) {
            if (!best || cur < *best) best = cur;
            return;
        }
        if (edge_idx == g.edges().size()) return;
        const auto& [u, v] = g.edges()[edge_idx];
        if (!used[u] && !used[v]) {
            used[u] = used[v] = true;
            cur.push_back({u, v});
            self(self, edge_idx + 1);
            cur.pop_back();
            used[u] = used[v] = false;
        }
        self(self, edge_idx + 1);
    };
    rec(rec, 0);
    return best.value_or(std::vector<Edge>{});
}

}  // namespace

TEST_CASE("maximum_matching tie-break is the lex-smallest edge list") {
    Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = sample_graph(1, 7, rng);
        CHECK(maximum_matching(g).edges() == lex_min_maximum_matching(g));
    }
}

TEST_CASE("perfect matching decisions") {
    CHECK(has_perfect_matching(complete(2)));
    CHECK_FALSE(has_perfect_matching(path(3)));
    CHECK(has_perfect_matching(cycle(6)));
    CHECK(oracle::has_perfect_matching(cycle(6)));
    CHECK(has_perfect_matching(empty_graph(0)));
}

TEST_CASE("factor-critical recognition") {
    CHECK(is_factor_critical(complete(1)));
    CHECK_FALSE(is_factor_critical(complete(2)));
    CHECK(is_factor_critical(cycle(5)));
    for (int v = 0; v < 5; ++v)
        CHECK(oracle::has_perfect_matching(delete_vertices(cycle(5), VertexSet{v}).graph));
    CHECK_FALSE(is_factor_critical(cycle(6)));
    CHECK(is_factor_critical(complete(7)));
}

TEST_CASE("factor-critical graphs of order >= 3 are odd and connected") {
    Rng rng(23);
    int critical_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = sample_graph(3, 9, rng);
        if (!is_factor_critical(g)) continue;
        ++critical_seen;
        CHECK(g.order() % 2 == 1);
        CHECK(is_connected(g));
    }
    CHECK(critical_seen > 0);
}

TEST_CASE("factor-criticality is invariant under relabeling") {
    Rng rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = sample_graph(1, 8, rng);
        Graph h = oracle::relabel(g, oracle::random_permutation(g.order(), rng));
        CHECK(is_factor_critical(g) == is_factor_critical(h));
    }
}
