#include "pathfactor/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>

namespace pathfactor {

namespace {

// Dinic max-flow; enough for the unit-capacity Menger networks here.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

    void add_edge(int from, int to, int cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    int run(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
        }
        return flow;
    }

private:
    struct Arc {
        int to, next, cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        level_[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = arcs_[e].next) {
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] == -1) {
                    level_[arcs_[e].to] = level_[v] + 1;
                    q.push(arcs_[e].to);
                }
            }
        }
        return level_[t] != -1;
    }

    int dfs(int v, int t, int limit) {
        if (v == t || limit == 0) return limit;
        for (int& e = it_[v]; e != -1; e = arcs_[e].next) {
            Arc& a = arcs_[e];
            if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                int pushed = dfs(a.to, t, std::min(limit, a.cap));
                if (pushed > 0) {
                    a.cap -= pushed;
                    arcs_[e ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_, level_, it_;
};

constexpr int kInf = 1 << 29;

// max number of internally vertex-disjoint s-t paths (s,t nonadjacent):
// split every vertex into in/out halves with unit capacity
int disjoint_path_count(const Graph& g, int s, int t) {
    const int n = g.order();
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    MaxFlow flow(2 * n);
    for (int v = 0; v < n; ++v) flow.add_edge(in(v), out(v), v == s || v == t ? kInf : 1);
    for (const auto& [u, v] : g.edges()) {
        flow.add_edge(out(u), in(v), kInf);
        flow.add_edge(out(v), in(u), kInf);
    }
    return flow.run(out(s), in(t));
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;  // complete
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, disjoint_path_count(g, s, t));
    return best;
}

int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        MaxFlow flow(n);
        for (const auto& [u, v] : g.edges()) {
            flow.add_edge(u, v, 1);
            flow.add_edge(v, u, 1);
        }
        best = std::min(best, flow.run(0, t));
    }
    return best;
}

std::optional<BindingNumber> binding_number(const Graph& g, int budget) {
    const int n = g.order();
    if (n > budget) throw BudgetExceeded("binding_number", n, budget);
    if (n > 62) throw std::invalid_argument("binding_number: order above the 62-vertex cap");
    if (n == 0) return std::nullopt;

    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nb[v] |= 1ull << w;
    const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

    auto to_list = [n](std::uint64_t mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        return vs;
    };

    std::optional<Rational> best;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        std::uint64_t hood = 0;
        for (std::uint64_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            hood |= nb[v];
        }
        if (hood == full) continue;
        Rational value(std::popcount(hood), std::popcount(mask));
        if (!best || value < *best) {
            best = value;
            best_mask = mask;
        } else if (value == *best && to_list(mask) < to_list(best_mask)) {
            best_mask = mask;
        }
    }
    if (!best) return std::nullopt;
    return BindingNumber{*best, VertexSet(to_list(best_mask))};
}

}  // namespace pathfactor
