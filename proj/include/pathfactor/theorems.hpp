#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathfactor/budget.hpp"
#include "pathfactor/graph.hpp"
#include "pathfactor/path_factor.hpp"
#include "pathfactor/rational.hpp"

namespace pathfactor {

// Parameters of the degree-condition theorems; each theorem reads only the
// fields it uses. Theorem 4 needs r >= 1 and 0 <= m <= 2r+1, Theorem 5
// needs r >= 1 and k >= 0.
struct TheoremParams {
    int r = 1;
    int m = 0;
    int k = 0;
};

struct HypothesisVerdict {
    std::string name;  // "order" | "connectivity" | "degree" | "binding"
    bool satisfied = false;
    std::string detail;
    std::optional<VertexSet> witness;  // violating independent set, or violating X for bind
};

// Satisfied iff every independent set of 2r+1 vertices contains one of
// degree >= threshold; vacuously satisfied when no such set exists. The
// witness, when present, is the lexicographically first violating set.
HypothesisVerdict degree_condition(const Graph& g, int r, const Rational& threshold,
                                   int budget = kDefaultBudget);

// min over independent sets of the given size of their maximum degree;
// nullopt when the graph has no independent set of that size.
std::optional<int> min_independent_max_degree(const Graph& g, int size,
                                              int budget = kDefaultBudget);

std::vector<HypothesisVerdict> check_theorem2_hypotheses(const Graph& g, int m,
                                                         int budget = kDefaultBudget);
std::vector<HypothesisVerdict> check_theorem3_hypotheses(const Graph& g, int k,
                                                         int budget = kDefaultBudget);
std::vector<HypothesisVerdict> check_theorem4_hypotheses(const Graph& g, const TheoremParams& p,
                                                         int budget = kDefaultBudget);
std::vector<HypothesisVerdict> check_theorem5_hypotheses(const Graph& g, const TheoremParams& p,
                                                         int budget = kDefaultBudget);

// i(G-X) <= (2/3)|X| for all X; sufficient for a path factor on its own.
HypothesisVerdict kano_lu_yu_condition(const Graph& g, int budget = kDefaultBudget);

// Does g keep a path factor after deleting ANY m edges? On failure reports
// the first failing edge set and the Kaneko witness for the deleted graph.
struct FactorDeletedVerdict {
    bool holds = false;
    std::optional<EdgeSet> counterexample;
    std::optional<SunViolation> certificate;
};
FactorDeletedVerdict verify_factor_deleted(const Graph& g, int m, int budget = kDefaultBudget);

// Does g keep a path factor after deleting ANY k vertices? The certificate's
// X is reported in the labels of g (disjoint from the deleted Q).
struct FactorCriticalVerdict {
    bool holds = false;
    std::optional<VertexSet> counterexample;
    std::optional<SunViolation> certificate;
};
FactorCriticalVerdict verify_factor_critical(const Graph& g, int k, int budget = kDefaultBudget);

// Sharpness families. remark1_family(r,m,t) joins K_{rt+m} with
// (2rt+1)K1 u mK2 (order 3rt+3m+1); remark2_family(r,k,t) joins
// K_{rt+2k+1} with (2rt+2k+3)K1 (order 3rt+4k+4). The clique takes the
// lowest labels, so the published witness sets are lexicographic minima.
Graph remark1_family(int r, int m, int t);
Graph remark2_family(int r, int k, int t);

// Below these order bounds the instance stops being demonstrative (a
// Theorem 4/5 hypothesis already fails); generators stay usable but the CLI
// warns.
bool remark1_meets_order_bound(int r, int m, int t);
bool remark2_meets_order_bound(int r, int k, int t);

// ---------------------------------------------------------------------------

enum class TheoremId { Theorem2 = 2, Theorem3 = 3, Theorem4 = 4, Theorem5 = 5 };

std::vector<HypothesisVerdict> check_hypotheses(TheoremId id, const Graph& g,
                                                const TheoremParams& p,
                                                int budget = kDefaultBudget);

struct TheoremReport {
    int index = 0;
    int order = 0;
    int edge_count = 0;
    std::vector<HypothesisVerdict> hypotheses;
    bool hypotheses_satisfied = false;
    std::optional<bool> conclusion_holds;
    std::optional<EdgeSet> counterexample_edges;      // theorems 2, 4
    std::optional<VertexSet> counterexample_vertices; // theorems 3, 5
    std::optional<SunViolation> certificate;
    bool is_counterexample() const {
        return hypotheses_satisfied && conclusion_holds && !*conclusion_holds;
    }
};

// Evaluate one graph. When `conclusion_only_if_hypotheses` is set the
// conclusion is skipped for hypothesis-failing graphs (scan semantics:
// the theorems are implications, such graphs cannot falsify them).
TheoremReport evaluate_theorem(TheoremId id, const Graph& g, const TheoremParams& p,
                               int budget = kDefaultBudget,
                               bool conclusion_only_if_hypotheses = false);

struct ExhaustiveSource {
    int n = 0;  // every labeled graph of this order; n <= 6
};
struct RandomSource {
    int n_min = 0;
    int n_max = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};
using GraphSource = std::variant<ExhaustiveSource, RandomSource>;

struct ScanSummary {
    int total = 0;
    int hypotheses_satisfied = 0;
    int skipped = 0;
    int counterexamples = 0;
    std::vector<TheoremReport> reports;  // ordered by graph index
};

// The executable restatement of Theorems 2-5: the scan fails if any graph
// satisfies every hypothesis yet violates the conclusion.
ScanSummary theorem_scan(TheoremId id, const TheoremParams& p, const GraphSource& source,
                         int budget = kDefaultBudget);

}  // namespace pathfactor
