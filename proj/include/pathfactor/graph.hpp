#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pathfactor {

// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple graph on vertices 0..n-1. All mutation-style operations
// below return a new graph, so witness sets stay valid against the graph
// they were computed on.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted
    bool has_edge(int u, int v) const;
    bool contains_vertex(int v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;           // normalized, sorted, unique
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

// Subset of 0..n-1 kept in canonical sorted order without duplicates.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs);
    explicit VertexSet(std::vector<int> vs);

    const std::vector<int>& values() const { return vs_; }
    int size() const { return static_cast<int>(vs_.size()); }
    bool empty() const { return vs_.empty(); }
    bool contains(int v) const;

    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;  // lexicographic

private:
    std::vector<int> vs_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);

// Subset of edges in canonical (normalized, sorted) order.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> es);
    explicit EdgeSet(std::vector<Edge> es);

    const std::vector<Edge>& values() const { return es_; }
    int size() const { return static_cast<int>(es_.size()); }
    bool empty() const { return es_.empty(); }

    auto begin() const { return es_.begin(); }
    auto end() const { return es_.end(); }

    bool operator==(const EdgeSet&) const = default;

private:
    std::vector<Edge> es_;
};

// -- constructors for the families used throughout ------------------------

Graph empty_graph(int n);          // n >= 0 isolated vertices
Graph complete(int n);             // n >= 1
Graph path(int n);                 // n >= 1
Graph cycle(int n);                // n >= 3
Graph star(int leaves);            // K_{1,leaves}, center 0

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

// One pendant vertex attached to each vertex of the core; the core keeps
// labels 0..n-1 and pendant i gets label n+i.
Graph corona_of(const Graph& core);

// -- deletion ---------------------------------------------------------------

// Induced subgraph after removing q, relabeled to 0..n-|q|-1.
struct VertexDeletion {
    Graph graph;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new;  // -1 for deleted vertices
};

VertexDeletion delete_vertices(const Graph& g, const VertexSet& q);
Graph delete_edges(const Graph& g, const EdgeSet& e);

// -- components -------------------------------------------------------------

// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> component_vertex_sets(const Graph& g);
std::vector<Graph> components(const Graph& g);
int omega(const Graph& g);
int isolated_count(const Graph& g);
bool is_connected(const Graph& g);  // false for n = 0

}  // namespace pathfactor
