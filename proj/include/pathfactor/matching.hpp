#pragma once

#include "pathfactor/graph.hpp"

namespace pathfactor {

// Set of pairwise vertex-disjoint edges of a host graph.
class Matching {
public:
    Matching() = default;
    Matching(const Graph& host, std::vector<Edge> edges);  // validates disjointness

    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool is_perfect(const Graph& host) const { return 2 * size() == host.order(); }

private:
    std::vector<Edge> edges_;  // normalized, sorted
};

// Size of a maximum matching (Edmonds blossom search).
int matching_number(const Graph& g);

// Maximum matching; among all maximum matchings returns the one with the
// lexicographically smallest edge list, so results are stable for golden files.
Matching maximum_matching(const Graph& g);

// True iff a matching covers every vertex; the empty graph counts as matched.
bool has_perfect_matching(const Graph& g);

// True iff g - v has a perfect matching for every vertex v.
// K1 qualifies via the empty-graph convention.
bool is_factor_critical(const Graph& g);

}  // namespace pathfactor
