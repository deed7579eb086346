#include "pathfactor/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace pathfactor {

Matching::Matching(const Graph& host, std::vector<Edge> edges) {
    std::vector<bool> covered(host.order(), false);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!host.has_edge(u, v))
            throw std::invalid_argument("matching edge outside host graph");
        if (covered[u] || covered[v])
            throw std::invalid_argument("matching edges share a vertex");
        covered[u] = covered[v] = true;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

namespace {

// Edmonds' augmenting-path search with blossom contraction, array form.
// Returns match[v] = partner or -1.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_) {}

    std::vector<int> run() {
        // greedy seed, edges in canonical order
        for (const auto& [u, v] : g_.edges())
            if (match_[u] == -1 && match_[v] == -1) {
                match_[u] = v;
                match_[v] = u;
            }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) {
                int exposed = find_augmenting_path(v);
                if (exposed != -1) augment(exposed);
            }
        return match_;
    }

private:
    int find_augmenting_path(int root) {
        used_.assign(n_, false);
        parent_.assign(n_, -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lowest_common_ancestor(v, to);
                    blossom_.assign(n_, false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int lowest_common_ancestor(int a, int b) {
        std::vector<bool> seen(n_, false);
        int v = a;
        while (true) {
            v = base_[v];
            seen[v] = true;
            if (match_[v] == -1) break;
            v = parent_[match_[v]];
        }
        v = b;
        while (true) {
            v = base_[v];
            if (seen[v]) return v;
            v = parent_[match_[v]];
        }
    }

    void mark_path(int v, int until_base, int child) {
        while (base_[v] != until_base) {
            blossom_[base_[v]] = true;
            blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, blossom_;
};

}  // namespace

int matching_number(const Graph& g) {
    auto match = BlossomMatcher(g).run();
    int covered = 0;
    for (int v = 0; v < g.order(); ++v)
        if (match[v] != -1) ++covered;
    return covered / 2;
}

Matching maximum_matching(const Graph& g) {
    const int target = matching_number(g);
    std::vector<Edge> chosen;
    std::vector<int> removed;  // endpoints of chosen edges
    for (const auto& [u, v] : g.edges()) {
        if (static_cast<int>(chosen.size()) == target) break;
        auto hit = [&](int x) { return std::find(removed.begin(), removed.end(), x) != removed.end(); };
        if (hit(u) || hit(v)) continue;
        // keep {u,v} iff the rest still completes a maximum matching
        std::vector<int> drop = removed;
        drop.push_back(u);
        drop.push_back(v);
        Graph rest = delete_vertices(g, VertexSet(drop)).graph;
        if (matching_number(rest) == target - static_cast<int>(chosen.size()) - 1) {
            chosen.emplace_back(u, v);
            removed.push_back(u);
            removed.push_back(v);
        }
    }
    return Matching(g, std::move(chosen));
}

bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return matching_number(g) * 2 == g.order();
}

bool is_factor_critical(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (!has_perfect_matching(delete_vertices(g, VertexSet{v}).graph)) return false;
    return true;
}

}  // namespace pathfactor
