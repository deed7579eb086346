#include "pathfactor/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathfactor {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (!contains_vertex(u) || !contains_vertex(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet::VertexSet(std::vector<int> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
    if (!vs_.empty() && vs_.front() < 0)
        throw std::invalid_argument("negative vertex label");
}

VertexSet::VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}

bool VertexSet::contains(int v) const {
    return std::binary_search(vs_.begin(), vs_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

EdgeSet::EdgeSet(std::vector<Edge> es) {
    for (auto& [u, v] : es)
        if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    es_ = std::move(es);
}

EdgeSet::EdgeSet(std::initializer_list<Edge> es) : EdgeSet(std::vector<Edge>(es)) {}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete(n) requires n >= 1");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path(n) requires n >= 1");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, std::move(es));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle(n) requires n >= 3");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, std::move(es));
}

Graph star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star(leaves) requires leaves >= 0");
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph(leaves + 1, std::move(es));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int off = g1.order();
    std::vector<Edge> es = g1.edges();
    for (const auto& [u, v] : g2.edges()) es.emplace_back(u + off, v + off);
    return Graph(g1.order() + g2.order(), std::move(es));
}

Graph join(const Graph& g1, const Graph& g2) {
    const int off = g1.order();
    std::vector<Edge> es = g1.edges();
    for (const auto& [u, v] : g2.edges()) es.emplace_back(u + off, v + off);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) es.emplace_back(u, off + v);
    return Graph(g1.order() + g2.order(), std::move(es));
}

Graph corona_of(const Graph& core) {
    if (core.order() < 1) throw std::invalid_argument("corona_of requires a nonempty core");
    const int n = core.order();
    std::vector<Edge> es = core.edges();
    for (int v = 0; v < n; ++v) es.emplace_back(v, n + v);
    return Graph(2 * n, std::move(es));
}

VertexDeletion delete_vertices(const Graph& g, const VertexSet& q) {
    for (int v : q)
        if (!g.contains_vertex(v))
            throw std::invalid_argument("delete_vertices: vertex outside host graph");
    VertexDeletion out;
    out.old_to_new.assign(g.order(), -1);
    out.new_to_old.reserve(g.order() - q.size());
    for (int v = 0; v < g.order(); ++v) {
        if (q.contains(v)) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges()) {
        int nu = out.old_to_new[u], nv = out.old_to_new[v];
        if (nu >= 0 && nv >= 0) es.emplace_back(nu, nv);
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(es));
    return out;
}

Graph delete_edges(const Graph& g, const EdgeSet& e) {
    for (const auto& [u, v] : e)
        if (!g.has_edge(u, v))
            throw std::invalid_argument("delete_edges: edge outside host graph");
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    const auto& drop = e.values();
    for (const auto& ed : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), ed)) es.push_back(ed);
    return Graph(g.order(), std::move(es));
}

std::vector<VertexSet> component_vertex_sets(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack;
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        std::vector<int> comp;
        stack.push_back(root);
        seen[root] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : component_vertex_sets(g)) {
        // induce directly; cheaper than delete_vertices of the complement
        std::vector<int> old_to_new(g.order(), -1);
        int idx = 0;
        for (int v : comp) old_to_new[v] = idx++;
        std::vector<Edge> es;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (v < w && old_to_new[w] >= 0)
                    es.emplace_back(old_to_new[v], old_to_new[w]);
        out.emplace_back(comp.size(), std::move(es));
    }
    return out;
}

int omega(const Graph& g) { return static_cast<int>(component_vertex_sets(g).size()); }

int isolated_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) ++count;
    return count;
}

bool is_connected(const Graph& g) { return omega(g) == 1; }

}  // namespace pathfactor
