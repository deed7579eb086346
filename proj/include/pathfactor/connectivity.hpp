#pragma once

#include <optional>

#include "pathfactor/budget.hpp"
#include "pathfactor/graph.hpp"
#include "pathfactor/rational.hpp"

namespace pathfactor {

// kappa(G) via Menger: minimum over nonadjacent pairs of the maximum number
// of internally vertex-disjoint paths. Complete graphs return n-1,
// disconnected graphs 0.
int vertex_connectivity(const Graph& g);

// lambda(G) via minimum s-t edge cut from a fixed source.
int edge_connectivity(const Graph& g);

struct BindingNumber {
    Rational value;
    VertexSet witness;  // minimizing X, lexicographically smallest among ties
};

// bind(G) = min |N(X)|/|X| over nonempty X with N(X) != V(G), computed by
// exhaustive subset enumeration with exact rationals. nullopt when no X
// qualifies (only the empty graph).
std::optional<BindingNumber> binding_number(const Graph& g, int budget = kDefaultBudget);

}  // namespace pathfactor
