#pragma once

#include <optional>

#include "pathfactor/graph.hpp"

namespace pathfactor {

// A sun is K1, K2, or the corona of a factor-critical core: every core
// vertex v_i carries one pendant u_i whose sole neighbor is v_i.
enum class SunKind { Trivial, Edge, Corona };

struct SunDecomposition {
    SunKind kind;
    Graph core;                            // Corona only, relabeled 0..|core|-1
    VertexSet core_vertices;               // Corona only, original labels
    std::vector<std::pair<int, int>> pairing;  // (core vertex, pendant), original labels
};

// Decompose a connected graph as a sun; nullopt when it is not one.
// K2 reports Edge rather than corona-of-K1 so golden files stay stable.
// Throws std::invalid_argument on disconnected input.
std::optional<SunDecomposition> classify_sun(const Graph& g);

bool is_sun(const Graph& g);      // false rather than throwing on disconnected input
bool is_big_sun(const Graph& g);  // sun with at least six vertices

// Number of connected components that are suns.
int sun_count(const Graph& g);

}  // namespace pathfactor
