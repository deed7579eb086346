#pragma once

#include <optional>

#include "pathfactor/budget.hpp"
#include "pathfactor/graph.hpp"

namespace pathfactor {

// Vertex-disjoint paths, each with at least 3 vertices, covering V(G).
// Paths are canonicalized: each runs from its smaller endpoint, and paths
// are sorted by first vertex.
struct PathFactor {
    std::vector<std::vector<int>> paths;
};

bool is_valid_path_factor(const Graph& g, const PathFactor& f);

// Witness set X with sun(G - X) >= 2|X| + 1, certifying no factor exists.
struct SunViolation {
    VertexSet x;
    int sun_components = 0;
};

// Exactly one of the two is engaged.
struct KanekoCertificate {
    std::optional<PathFactor> factor;
    std::optional<SunViolation> violation;
    bool has_factor() const { return factor.has_value(); }
};

// Decide factor existence by scanning every X subset by increasing
// cardinality (lexicographic within a cardinality), so a reported violation
// is a minimum witness. When no X violates, a factor is constructed.
KanekoCertificate kaneko_check(const Graph& g, int budget = kDefaultBudget);

// Direct backtracking search over path partitions, independent of the
// criterion above. Deterministic; exponential worst case, desk scale only
// (order capped at 64).
std::optional<PathFactor> find_path_factor(const Graph& g);

bool has_p3_factor(const Graph& g);

}  // namespace pathfactor
