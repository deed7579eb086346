#include "pathfactor/path_factor.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "pathfactor/combinatorics.hpp"
#include "pathfactor/sun.hpp"

namespace pathfactor {

bool is_valid_path_factor(const Graph& g, const PathFactor& f) {
    std::vector<bool> covered(g.order(), false);
    for (const auto& p : f.paths) {
        if (p.size() < 3) return false;
        for (size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (!g.contains_vertex(v) || covered[v]) return false;
            covered[v] = true;
            if (i > 0 && !g.has_edge(p[i - 1], v)) return false;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

namespace {

// Partition search: take the lowest uncovered vertex, enumerate every path
// through it (right arm first, then left arm), close once the path has >= 3
// vertices, and recurse. Boundary states that cannot be completed are
// memoized by covered-set.
class PathPartitioner {
public:
    explicit PathPartitioner(const Graph& g) : g_(g), n_(g.order()) {
        adj_mask_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) adj_mask_[v] |= bit(w);
        full_ = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    }

    std::optional<PathFactor> run() {
        if (!solve(0)) return std::nullopt;
        PathFactor f;
        f.paths = std::move(result_);
        for (auto& p : f.paths)
            if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        std::sort(f.paths.begin(), f.paths.end());
        return f;
    }

private:
    static uint64_t bit(int v) { return 1ull << v; }

    bool solve(uint64_t covered) {
        if (covered == full_) return true;
        const uint64_t free = full_ & ~covered;
        if (std::popcount(free) < 3) return false;
        if (failed_.count(covered)) return false;
        // every component of the free part needs at least 3 vertices
        for (uint64_t rest = free; rest;) {
            uint64_t comp = rest & -rest;
            while (true) {
                uint64_t grown = comp;
                for (uint64_t scan = comp; scan;) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    grown |= adj_mask_[v] & free;
                }
                if (grown == comp) break;
                comp = grown;
            }
            if (std::popcount(comp) < 3) {
                failed_.insert(covered);
                return false;
            }
            rest &= ~comp;
        }
        int v = std::countr_zero(free);
        std::deque<int> outer = std::move(path_);  // caller's path in progress
        path_.assign(1, v);
        bool ok = grow_right(covered | bit(v));
        path_ = std::move(outer);
        if (ok) return true;
        failed_.insert(covered);
        return false;
    }

    bool grow_right(uint64_t covered) {
        if (grow_left(covered)) return true;
        uint64_t cand = prune_twins(adj_mask_[path_.back()] & ~covered, covered);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            path_.push_back(w);
            if (grow_right(covered | bit(w))) return true;
            path_.pop_back();
        }
        return false;
    }

    bool grow_left(uint64_t covered) {
        if (path_.size() >= 3) {
            result_.emplace_back(path_.begin(), path_.end());
            if (solve(covered)) return true;
            result_.pop_back();
        }
        uint64_t cand = prune_twins(adj_mask_[path_.front()] & ~covered, covered);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            path_.push_front(w);
            if (grow_left(covered | bit(w))) return true;
            path_.pop_front();
        }
        return false;
    }

    // Candidates whose adjacency agrees on the free vertices and the current
    // path endpoints are interchangeable (the transposition is an
    // automorphism of the rest of the search), so only the lowest-indexed
    // representative of each class needs trying. This collapses the huge
    // symmetric pendant sets of the join families.
    uint64_t prune_twins(uint64_t cand, uint64_t covered) const {
        if (std::popcount(cand) < 2) return cand;
        const uint64_t scope =
            (full_ & ~covered) | bit(path_.front()) | bit(path_.back());
        uint64_t kept = 0;
        for (uint64_t rest = cand; rest;) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            bool duplicate = false;
            for (uint64_t seen = kept; seen && !duplicate;) {
                int u = std::countr_zero(seen);
                seen &= seen - 1;
                duplicate = (adj_mask_[c] & scope & ~bit(u)) ==
                            (adj_mask_[u] & scope & ~bit(c));
            }
            if (!duplicate) kept |= bit(c);
        }
        return kept;
    }

    const Graph& g_;
    int n_;
    uint64_t full_;
    std::vector<uint64_t> adj_mask_;
    std::deque<int> path_;
    std::vector<std::vector<int>> result_;
    std::unordered_set<uint64_t> failed_;
};

}  // namespace

std::optional<PathFactor> find_path_factor(const Graph& g) {
    if (g.order() > 64)
        throw std::invalid_argument("find_path_factor: order above the 64-vertex search cap");
    return PathPartitioner(g).run();
}

bool has_p3_factor(const Graph& g) { return find_path_factor(g).has_value(); }

KanekoCertificate kaneko_check(const Graph& g, int budget) {
    const int n = g.order();
    if (n > budget) throw BudgetExceeded("kaneko_check", n, budget);

    std::optional<SunViolation> found;
    for_each_subset_by_size(n, [&](const std::vector<int>& x) {
        const int k = static_cast<int>(x.size());
        Graph rest = delete_vertices(g, VertexSet(x)).graph;
        auto comps = components(rest);
        if (static_cast<int>(comps.size()) < 2 * k + 1) return false;
        int suns = 0;
        for (const auto& c : comps)
            if (classify_sun(c)) ++suns;
        if (suns < 2 * k + 1) return false;
        found = SunViolation{VertexSet(x), suns};
        return true;
    });
    if (found) return {std::nullopt, std::move(found)};

    auto pf = find_path_factor(g);
    if (!pf)
        throw std::logic_error("kaneko_check: no violation found yet no factor constructed");
    return {std::move(pf), std::nullopt};
}

}  // namespace pathfactor
