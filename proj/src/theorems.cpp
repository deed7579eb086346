#include "pathfactor/theorems.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pathfactor/combinatorics.hpp"
#include "pathfactor/connectivity.hpp"
#include "pathfactor/graph_gen.hpp"

namespace pathfactor {

namespace {

// Independent sets of fixed size in lexicographic order; fn returns true to stop.
template <typename Fn>
bool for_each_independent_set(const Graph& g, int size, Fn&& fn) {
    const int n = g.order();
    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nb[v] |= 1ull << w;
    std::vector<int> cur;
    std::uint64_t conflict = 0;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(cur.size()) == size) return fn(cur);
        for (int v = start; v < n; ++v) {
            if (conflict >> v & 1) continue;
            cur.push_back(v);
            std::uint64_t saved = conflict;
            conflict |= nb[v];
            if (self(self, v + 1)) return true;
            conflict = saved;
            cur.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

HypothesisVerdict order_verdict(const Graph& g, int bound) {
    HypothesisVerdict v;
    v.name = "order";
    v.satisfied = g.order() >= bound;
    v.detail = "n = " + std::to_string(g.order()) + (v.satisfied ? " >= " : " < ") +
               std::to_string(bound);
    return v;
}

HypothesisVerdict connectivity_verdict(const Graph& g, int bound) {
    int kappa = vertex_connectivity(g);
    HypothesisVerdict v;
    v.name = "connectivity";
    v.satisfied = kappa >= bound;
    v.detail = "kappa = " + std::to_string(kappa) + (v.satisfied ? " >= " : " < ") +
               std::to_string(bound);
    return v;
}

HypothesisVerdict binding_verdict(const Graph& g, const Rational& threshold, bool strict,
                                  int budget) {
    auto bind = binding_number(g, budget);
    HypothesisVerdict v;
    v.name = "binding";
    if (!bind) {
        v.satisfied = false;
        v.detail = "bind undefined";
        return v;
    }
    v.satisfied = strict ? bind->value > threshold : bind->value >= threshold;
    v.detail = "bind = " + bind->value.str() + " " +
               (v.satisfied ? (strict ? ">" : ">=") : (strict ? "<=" : "<")) + " " +
               threshold.str();
    if (!v.satisfied) v.witness = bind->witness;
    return v;
}

void validate(TheoremId id, const TheoremParams& p) {
    switch (id) {
        case TheoremId::Theorem2:
            if (p.m < 0) throw std::invalid_argument("theorem 2 requires m >= 0");
            break;
        case TheoremId::Theorem3:
            if (p.k < 0) throw std::invalid_argument("theorem 3 requires k >= 0");
            break;
        case TheoremId::Theorem4:
            if (p.r < 1 || p.m < 0 || p.m > 2 * p.r + 1)
                throw std::invalid_argument("theorem 4 requires r >= 1 and 0 <= m <= 2r+1");
            break;
        case TheoremId::Theorem5:
            if (p.r < 1 || p.k < 0)
                throw std::invalid_argument("theorem 5 requires r >= 1 and k >= 0");
            break;
    }
}

}  // namespace

HypothesisVerdict degree_condition(const Graph& g, int r, const Rational& threshold,
                                   int budget) {
    if (r < 1) throw std::invalid_argument("degree_condition requires r >= 1");
    const int n = g.order();
    if (n > budget) throw BudgetExceeded("degree_condition", n, budget);
    if (n > 64) throw std::invalid_argument("degree_condition: order above the 64-vertex cap");
    const int size = 2 * r + 1;

    HypothesisVerdict v;
    v.name = "degree";
    bool any_set = false;
    bool stopped = for_each_independent_set(g, size, [&](const std::vector<int>& set) {
        any_set = true;
        int max_deg = 0;
        for (int x : set) max_deg = std::max(max_deg, g.degree(x));
        if (Rational(max_deg) >= threshold) return false;
        v.witness = VertexSet(set);
        v.detail = "independent " + std::to_string(size) + "-set with max degree " +
                   std::to_string(max_deg) + " < " + threshold.str();
        return true;
    });
    v.satisfied = !stopped;
    if (v.satisfied)
        v.detail = any_set ? "every independent " + std::to_string(size) +
                                 "-set has max degree >= " + threshold.str()
                           : "vacuous: no independent set of size " + std::to_string(size);
    return v;
}

std::optional<int> min_independent_max_degree(const Graph& g, int size, int budget) {
    if (g.order() > budget) throw BudgetExceeded("min_independent_max_degree", g.order(), budget);
    if (g.order() > 64)
        throw std::invalid_argument("min_independent_max_degree: order above the 64-vertex cap");
    std::optional<int> best;
    for_each_independent_set(g, size, [&](const std::vector<int>& set) {
        int max_deg = 0;
        for (int x : set) max_deg = std::max(max_deg, g.degree(x));
        if (!best || max_deg < *best) best = max_deg;
        return false;
    });
    return best;
}

std::vector<HypothesisVerdict> check_theorem2_hypotheses(const Graph& g, int m, int budget) {
    validate(TheoremId::Theorem2, {.m = m});
    // bind(G) > 3/2 - 1/(4m+4)
    Rational threshold = Rational(3, 2) - Rational(1, 4 * m + 4);
    return {connectivity_verdict(g, 2 * m + 1), binding_verdict(g, threshold, true, budget)};
}

std::vector<HypothesisVerdict> check_theorem3_hypotheses(const Graph& g, int k, int budget) {
    validate(TheoremId::Theorem3, {.k = k});
    return {connectivity_verdict(g, k + 2),
            binding_verdict(g, Rational(5 + k, 4), false, budget)};
}

std::vector<HypothesisVerdict> check_theorem4_hypotheses(const Graph& g, const TheoremParams& p,
                                                         int budget) {
    validate(TheoremId::Theorem4, p);
    return {order_verdict(g, 4 * p.r + 6 * p.m + 4), connectivity_verdict(g, p.r + p.m),
            degree_condition(g, p.r, Rational(g.order(), 3), budget)};
}

std::vector<HypothesisVerdict> check_theorem5_hypotheses(const Graph& g, const TheoremParams& p,
                                                         int budget) {
    validate(TheoremId::Theorem5, p);
    return {order_verdict(g, 4 * p.r + p.k + 4), connectivity_verdict(g, p.r + p.k),
            degree_condition(g, p.r, Rational(g.order() + 2 * p.k, 3), budget)};
}

HypothesisVerdict kano_lu_yu_condition(const Graph& g, int budget) {
    const int n = g.order();
    if (n > budget) throw BudgetExceeded("kano_lu_yu_condition", n, budget);
    if (n > 64) throw std::invalid_argument("kano_lu_yu_condition: order above the 64-vertex cap");
    std::vector<std::uint64_t> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nb[v] |= 1ull << w;

    HypothesisVerdict verdict;
    verdict.name = "kano_lu_yu";
    verdict.satisfied = true;
    verdict.detail = "i(G-X) <= (2/3)|X| for all X";
    for_each_subset_by_size(n, [&](const std::vector<int>& x) {
        std::uint64_t mask = 0;
        for (int v : x) mask |= 1ull << v;
        int isolated = 0;
        for (int v = 0; v < n; ++v)
            if (!(mask >> v & 1) && (nb[v] & ~mask) == 0) ++isolated;
        if (3 * isolated <= 2 * static_cast<int>(x.size())) return false;
        verdict.satisfied = false;
        verdict.witness = VertexSet(x);
        verdict.detail = "i(G-X) = " + std::to_string(isolated) + " > (2/3)|X| with |X| = " +
                         std::to_string(x.size());
        return true;
    });
    return verdict;
}

FactorDeletedVerdict verify_factor_deleted(const Graph& g, int m, int budget) {
    if (m < 0 || m > g.edge_count())
        throw std::invalid_argument("verify_factor_deleted requires 0 <= m <= |E|");
    if (g.order() > budget) throw BudgetExceeded("verify_factor_deleted", g.order(), budget);

    const auto& all = g.edges();
    FactorDeletedVerdict out;
    out.holds = true;
    for_each_combination(g.edge_count(), m, [&](const std::vector<int>& idx) {
        std::vector<Edge> drop;
        drop.reserve(m);
        for (int i : idx) drop.push_back(all[i]);
        EdgeSet removed(drop);
        Graph h = delete_edges(g, removed);
        if (has_p3_factor(h)) return false;
        out.holds = false;
        out.counterexample = removed;
        out.certificate = *kaneko_check(h, budget).violation;
        return true;
    });
    return out;
}

FactorCriticalVerdict verify_factor_critical(const Graph& g, int k, int budget) {
    if (k < 0 || k >= g.order())
        throw std::invalid_argument("verify_factor_critical requires 0 <= k < n");
    if (g.order() > budget) throw BudgetExceeded("verify_factor_critical", g.order(), budget);

    FactorCriticalVerdict out;
    out.holds = true;
    for_each_combination(g.order(), k, [&](const std::vector<int>& q) {
        VertexSet removed(q);
        auto del = delete_vertices(g, removed);
        if (has_p3_factor(del.graph)) return false;
        out.holds = false;
        out.counterexample = removed;
        SunViolation cert = *kaneko_check(del.graph, budget).violation;
        std::vector<int> original;
        for (int v : cert.x) original.push_back(del.new_to_old[v]);
        out.certificate = SunViolation{VertexSet(original), cert.sun_components};
        return true;
    });
    return out;
}

Graph remark1_family(int r, int m, int t) {
    if (r < 1 || t < 1 || m < 0 || m > 2 * r + 1)
        throw std::invalid_argument("remark1_family requires r >= 1, t >= 1, 0 <= m <= 2r+1");
    Graph side = empty_graph(2 * r * t + 1);
    for (int i = 0; i < m; ++i) side = disjoint_union(side, complete(2));
    return join(complete(r * t + m), side);
}

Graph remark2_family(int r, int k, int t) {
    if (r < 1 || t < 1 || k < 0)
        throw std::invalid_argument("remark2_family requires r >= 1, t >= 1, k >= 0");
    return join(complete(r * t + 2 * k + 1), empty_graph(2 * r * t + 2 * k + 3));
}

bool remark1_meets_order_bound(int r, int m, int t) {
    return 3 * r * t + 3 * m + 1 >= 4 * r + 6 * m + 4;
}

bool remark2_meets_order_bound(int r, int k, int t) {
    return 3 * r * t + 4 * k + 4 >= 4 * r + k + 4;
}

std::vector<HypothesisVerdict> check_hypotheses(TheoremId id, const Graph& g,
                                                const TheoremParams& p, int budget) {
    switch (id) {
        case TheoremId::Theorem2: return check_theorem2_hypotheses(g, p.m, budget);
        case TheoremId::Theorem3: return check_theorem3_hypotheses(g, p.k, budget);
        case TheoremId::Theorem4: return check_theorem4_hypotheses(g, p, budget);
        case TheoremId::Theorem5: return check_theorem5_hypotheses(g, p, budget);
    }
    throw std::invalid_argument("unknown theorem id");
}

TheoremReport evaluate_theorem(TheoremId id, const Graph& g, const TheoremParams& p, int budget,
                               bool conclusion_only_if_hypotheses) {
    validate(id, p);
    TheoremReport rep;
    rep.order = g.order();
    rep.edge_count = g.edge_count();
    rep.hypotheses = check_hypotheses(id, g, p, budget);
    rep.hypotheses_satisfied = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                                           [](const auto& h) { return h.satisfied; });
    if (conclusion_only_if_hypotheses && !rep.hypotheses_satisfied) return rep;

    if (id == TheoremId::Theorem2 || id == TheoremId::Theorem4) {
        // hypothesis-failing graphs may not even have m edges; leave the
        // conclusion unevaluated then (it cannot happen under the hypotheses)
        if (p.m > g.edge_count()) return rep;
        auto verdict = verify_factor_deleted(g, p.m, budget);
        rep.conclusion_holds = verdict.holds;
        rep.counterexample_edges = verdict.counterexample;
        rep.certificate = verdict.certificate;
    } else {
        if (p.k >= g.order()) return rep;
        auto verdict = verify_factor_critical(g, p.k, budget);
        rep.conclusion_holds = verdict.holds;
        rep.counterexample_vertices = verdict.counterexample;
        rep.certificate = verdict.certificate;
    }
    return rep;
}

ScanSummary theorem_scan(TheoremId id, const TheoremParams& p, const GraphSource& source,
                         int budget) {
    validate(id, p);
    ScanSummary summary;
    auto consume = [&](const Graph& g) {
        TheoremReport rep = evaluate_theorem(id, g, p, budget, true);
        rep.index = summary.total;
        ++summary.total;
        if (rep.hypotheses_satisfied) {
            ++summary.hypotheses_satisfied;
            if (rep.is_counterexample()) ++summary.counterexamples;
        } else {
            ++summary.skipped;
        }
        summary.reports.push_back(std::move(rep));
    };

    if (const auto* ex = std::get_if<ExhaustiveSource>(&source)) {
        if (ex->n < 1 || ex->n > 6)
            throw std::invalid_argument("exhaustive scan supports 1 <= n <= 6");
        for_each_labeled_graph(ex->n, [&](const Graph& g) {
            consume(g);
            return false;
        });
    } else {
        const auto& rs = std::get<RandomSource>(source);
        if (rs.samples < 0 || rs.n_min < 1 || rs.n_max < rs.n_min)
            throw std::invalid_argument("bad random source");
        Rng rng(rs.seed);
        for (int i = 0; i < rs.samples; ++i) consume(sample_graph(rs.n_min, rs.n_max, rng));
    }
    return summary;
}

}  // namespace pathfactor
