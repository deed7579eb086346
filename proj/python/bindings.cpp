#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pathfactor/connectivity.hpp"
#include "pathfactor/graph.hpp"
#include "pathfactor/graph_gen.hpp"
#include "pathfactor/graph_io.hpp"
#include "pathfactor/matching.hpp"
#include "pathfactor/path_factor.hpp"
#include "pathfactor/sun.hpp"
#include "pathfactor/theorems.hpp"

namespace py = pybind11;
using namespace pathfactor;

namespace {

// python callers pass plain lists/tuples; wrap the strong set types here
VertexSet vset(const std::vector<int>& vs) { return VertexSet(vs); }
EdgeSet eset(const std::vector<std::pair<int, int>>& es) {
    return EdgeSet(std::vector<Edge>(es.begin(), es.end()));
}

std::optional<std::vector<int>> opt_values(const std::optional<VertexSet>& s) {
    if (!s) return std::nullopt;
    return s->values();
}

TheoremId theorem_from_int(int t) {
    switch (t) {
        case 2: return TheoremId::Theorem2;
        case 3: return TheoremId::Theorem3;
        case 4: return TheoremId::Theorem4;
        case 5: return TheoremId::Theorem5;
    }
    throw std::invalid_argument("theorem must be one of 2, 3, 4, 5");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "path-factor analysis: suns, Kaneko criterion, connectivity and "
              "binding-number invariants, theorem checkers and sharpness families";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream ss;
            ss << "Graph(n=" << g.order() << ", edges=" << g.edge_count() << ")";
            return ss.str();
        });

    // constructors and surgery
    m.def("empty_graph", &empty_graph, py::arg("n"));
    m.def("complete", &complete, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("star", &star, py::arg("leaves"));
    m.def("disjoint_union", &disjoint_union, py::arg("g1"), py::arg("g2"));
    m.def("join", &join, py::arg("g1"), py::arg("g2"));
    m.def("corona_of", &corona_of, py::arg("core"));

    py::class_<VertexDeletion>(m, "VertexDeletion")
        .def_readonly("graph", &VertexDeletion::graph)
        .def_readonly("new_to_old", &VertexDeletion::new_to_old)
        .def_readonly("old_to_new", &VertexDeletion::old_to_new);
    m.def(
        "delete_vertices",
        [](const Graph& g, const std::vector<int>& q) { return delete_vertices(g, vset(q)); },
        py::arg("g"), py::arg("q"));
    m.def(
        "delete_edges",
        [](const Graph& g, const std::vector<std::pair<int, int>>& e) {
            return delete_edges(g, eset(e));
        },
        py::arg("g"), py::arg("e"));

    m.def("components", &components, py::arg("g"));
    m.def("omega", &omega, py::arg("g"));
    m.def("isolated_count", &isolated_count, py::arg("g"));
    m.def("is_connected", &is_connected, py::arg("g"));

    // edge-list text format
    m.def("read_graph", &read_graph_text, py::arg("text"));
    m.def("read_graph_file", &read_graph_file, py::arg("path"));
    m.def("write_graph", &write_graph, py::arg("g"));
    m.def("write_graph_file", &write_graph_file, py::arg("g"), py::arg("path"));

    // matching
    m.def("matching_number", &matching_number, py::arg("g"));
    m.def(
        "maximum_matching", [](const Graph& g) { return maximum_matching(g).edges(); },
        py::arg("g"));
    m.def("has_perfect_matching", &has_perfect_matching, py::arg("g"));
    m.def("is_factor_critical", &is_factor_critical, py::arg("g"));

    // suns
    py::enum_<SunKind>(m, "SunKind")
        .value("Trivial", SunKind::Trivial)
        .value("Edge", SunKind::Edge)
        .value("Corona", SunKind::Corona);
    py::class_<SunDecomposition>(m, "SunDecomposition")
        .def_readonly("kind", &SunDecomposition::kind)
        .def_readonly("core", &SunDecomposition::core)
        .def_property_readonly("core_vertices",
                               [](const SunDecomposition& d) { return d.core_vertices.values(); })
        .def_readonly("pairing", &SunDecomposition::pairing);
    m.def("classify_sun", &classify_sun, py::arg("g"));
    m.def("is_sun", &is_sun, py::arg("g"));
    m.def("is_big_sun", &is_big_sun, py::arg("g"));
    m.def("sun_count", &sun_count, py::arg("g"));

    // path factors
    py::class_<PathFactor>(m, "PathFactor")
        .def_readonly("paths", &PathFactor::paths)
        .def("__repr__", [](const PathFactor& f) {
            return "PathFactor(paths=" + std::to_string(f.paths.size()) + ")";
        });
    py::class_<SunViolation>(m, "SunViolation")
        .def_property_readonly("x", [](const SunViolation& v) { return v.x.values(); })
        .def_readonly("sun_components", &SunViolation::sun_components);
    py::class_<KanekoCertificate>(m, "KanekoCertificate")
        .def_readonly("factor", &KanekoCertificate::factor)
        .def_readonly("violation", &KanekoCertificate::violation)
        .def("has_factor", &KanekoCertificate::has_factor);
    m.def("kaneko_check", &kaneko_check, py::arg("g"), py::arg("budget") = kDefaultBudget);
    m.def(
        "find_path_factor",
        [](const Graph& g) -> std::optional<std::vector<std::vector<int>>> {
            auto f = find_path_factor(g);
            if (!f) return std::nullopt;
            return f->paths;
        },
        py::arg("g"));
    m.def("has_p3_factor", &has_p3_factor, py::arg("g"));
    m.def(
        "is_valid_path_factor",
        [](const Graph& g, const std::vector<std::vector<int>>& paths) {
            return is_valid_path_factor(g, PathFactor{paths});
        },
        py::arg("g"), py::arg("paths"));

    // connectivity and binding number
    py::class_<Rational>(m, "Rational")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });
    m.def("vertex_connectivity", &vertex_connectivity, py::arg("g"));
    m.def("edge_connectivity", &edge_connectivity, py::arg("g"));
    py::class_<BindingNumber>(m, "BindingNumber")
        .def_readonly("value", &BindingNumber::value)
        .def_property_readonly("witness",
                               [](const BindingNumber& b) { return b.witness.values(); });
    m.def("binding_number", &binding_number, py::arg("g"), py::arg("budget") = kDefaultBudget);

    // theorem lab
    py::class_<HypothesisVerdict>(m, "HypothesisVerdict")
        .def_readonly("name", &HypothesisVerdict::name)
        .def_readonly("satisfied", &HypothesisVerdict::satisfied)
        .def_readonly("detail", &HypothesisVerdict::detail)
        .def_property_readonly(
            "witness", [](const HypothesisVerdict& h) { return opt_values(h.witness); })
        .def("__repr__", [](const HypothesisVerdict& h) {
            return "HypothesisVerdict(" + h.name + ", " +
                   (h.satisfied ? "satisfied" : "violated") + ")";
        });
    m.def("degree_condition", &degree_condition, py::arg("g"), py::arg("r"),
          py::arg("threshold"), py::arg("budget") = kDefaultBudget);
    m.def("min_independent_max_degree", &min_independent_max_degree, py::arg("g"),
          py::arg("size"), py::arg("budget") = kDefaultBudget);
    m.def("check_theorem2_hypotheses", &check_theorem2_hypotheses, py::arg("g"), py::arg("m"),
          py::arg("budget") = kDefaultBudget);
    m.def("check_theorem3_hypotheses", &check_theorem3_hypotheses, py::arg("g"), py::arg("k"),
          py::arg("budget") = kDefaultBudget);
    m.def(
        "check_theorem4_hypotheses",
        [](const Graph& g, int r, int m_, int budget) {
            return check_theorem4_hypotheses(g, {.r = r, .m = m_}, budget);
        },
        py::arg("g"), py::arg("r") = 1, py::arg("m") = 0, py::arg("budget") = kDefaultBudget);
    m.def(
        "check_theorem5_hypotheses",
        [](const Graph& g, int r, int k, int budget) {
            return check_theorem5_hypotheses(g, {.r = r, .k = k}, budget);
        },
        py::arg("g"), py::arg("r") = 1, py::arg("k") = 0, py::arg("budget") = kDefaultBudget);
    m.def("kano_lu_yu_condition", &kano_lu_yu_condition, py::arg("g"),
          py::arg("budget") = kDefaultBudget);

    py::class_<FactorDeletedVerdict>(m, "FactorDeletedVerdict")
        .def_readonly("holds", &FactorDeletedVerdict::holds)
        .def_property_readonly("counterexample",
                               [](const FactorDeletedVerdict& v)
                                   -> std::optional<std::vector<Edge>> {
                                   if (!v.counterexample) return std::nullopt;
                                   return v.counterexample->values();
                               })
        .def_readonly("certificate", &FactorDeletedVerdict::certificate);
    py::class_<FactorCriticalVerdict>(m, "FactorCriticalVerdict")
        .def_readonly("holds", &FactorCriticalVerdict::holds)
        .def_property_readonly(
            "counterexample",
            [](const FactorCriticalVerdict& v) { return opt_values(v.counterexample); })
        .def_readonly("certificate", &FactorCriticalVerdict::certificate);
    m.def("verify_factor_deleted", &verify_factor_deleted, py::arg("g"), py::arg("m"),
          py::arg("budget") = kDefaultBudget);
    m.def("verify_factor_critical", &verify_factor_critical, py::arg("g"), py::arg("k"),
          py::arg("budget") = kDefaultBudget);

    m.def("remark1_family", &remark1_family, py::arg("r"), py::arg("m"), py::arg("t"));
    m.def("remark2_family", &remark2_family, py::arg("r"), py::arg("k"), py::arg("t"));
    m.def("remark1_meets_order_bound", &remark1_meets_order_bound, py::arg("r"), py::arg("m"),
          py::arg("t"));
    m.def("remark2_meets_order_bound", &remark2_meets_order_bound, py::arg("r"), py::arg("k"),
          py::arg("t"));

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("index", &TheoremReport::index)
        .def_readonly("order", &TheoremReport::order)
        .def_readonly("edge_count", &TheoremReport::edge_count)
        .def_readonly("hypotheses", &TheoremReport::hypotheses)
        .def_readonly("hypotheses_satisfied", &TheoremReport::hypotheses_satisfied)
        .def_readonly("conclusion_holds", &TheoremReport::conclusion_holds)
        .def_readonly("certificate", &TheoremReport::certificate)
        .def("is_counterexample", &TheoremReport::is_counterexample);
    py::class_<ScanSummary>(m, "ScanSummary")
        .def_readonly("total", &ScanSummary::total)
        .def_readonly("hypotheses_satisfied", &ScanSummary::hypotheses_satisfied)
        .def_readonly("skipped", &ScanSummary::skipped)
        .def_readonly("counterexamples", &ScanSummary::counterexamples)
        .def_readonly("reports", &ScanSummary::reports);
    m.def(
        "evaluate_theorem",
        [](const Graph& g, int theorem, int r, int m_, int k, int budget,
           bool conclusion_only_if_hypotheses) {
            return evaluate_theorem(theorem_from_int(theorem), g, {.r = r, .m = m_, .k = k},
                                    budget, conclusion_only_if_hypotheses);
        },
        py::arg("g"), py::arg("theorem"), py::arg("r") = 1, py::arg("m") = 0, py::arg("k") = 0,
        py::arg("budget") = kDefaultBudget, py::arg("conclusion_only_if_hypotheses") = false);
    m.def(
        "theorem_scan",
        [](int theorem, int r, int m_, int k, int n_min, int n_max, int samples,
           std::uint64_t seed, int budget) {
            return theorem_scan(theorem_from_int(theorem), {.r = r, .m = m_, .k = k},
                                RandomSource{n_min, n_max, samples, seed}, budget);
        },
        py::arg("theorem"), py::arg("r") = 1, py::arg("m") = 0, py::arg("k") = 0,
        py::arg("n_min") = 8, py::arg("n_max") = 10, py::arg("samples") = 100,
        py::arg("seed") = 0, py::arg("budget") = kDefaultBudget);
    m.def(
        "theorem_scan_exhaustive",
        [](int theorem, int r, int m_, int k, int n, int budget) {
            return theorem_scan(theorem_from_int(theorem), {.r = r, .m = m_, .k = k},
                                ExhaustiveSource{n}, budget);
        },
        py::arg("theorem"), py::arg("r") = 1, py::arg("m") = 0, py::arg("k") = 0,
        py::arg("n") = 4, py::arg("budget") = kDefaultBudget);

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;
}
