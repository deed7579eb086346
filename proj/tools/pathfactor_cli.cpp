// pathfactor CLI: analyze graphs, check the theorem hypotheses/conclusions,
// generate the sharpness families, and run seeded counterexample scans.
//
// Exit codes: 0 consistent, 1 theorem counterexample found,
//             2 usage or parse error, 3 enumeration budget exceeded.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pathfactor/connectivity.hpp"
#include "pathfactor/graph.hpp"
#include "pathfactor/graph_gen.hpp"
#include "pathfactor/graph_io.hpp"
#include "pathfactor/matching.hpp"
#include "pathfactor/path_factor.hpp"
#include "pathfactor/sun.hpp"
#include "pathfactor/theorems.hpp"

using json = nlohmann::ordered_json;
using namespace pathfactor;

namespace {

json to_json(const VertexSet& vs) { return json(vs.values()); }

json to_json(const EdgeSet& es) {
    json arr = json::array();
    for (const auto& [u, v] : es) arr.push_back({u, v});
    return arr;
}

json to_json(const SunViolation& viol) {
    return {{"x", to_json(viol.x)}, {"sun_components", viol.sun_components}};
}

json to_json(const HypothesisVerdict& h) {
    json j = {{"name", h.name}, {"satisfied", h.satisfied}, {"detail", h.detail}};
    j["witness"] = h.witness ? to_json(*h.witness) : json(nullptr);
    return j;
}

json certificate_json(const KanekoCertificate& cert) {
    if (cert.has_factor())
        return {{"type", "factor"}, {"paths", cert.factor->paths}};
    return {{"type", "violation"},
            {"x", to_json(cert.violation->x)},
            {"sun_components", cert.violation->sun_components}};
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

json params_json(TheoremId id, const TheoremParams& p) {
    switch (id) {
        case TheoremId::Theorem2: return {{"m", p.m}};
        case TheoremId::Theorem3: return {{"k", p.k}};
        case TheoremId::Theorem4: return {{"r", p.r}, {"m", p.m}};
        case TheoremId::Theorem5: return {{"r", p.r}, {"k", p.k}};
    }
    return {};
}

int run_analyze(const std::string& file, bool as_json, int budget) {
    Graph g = read_graph_file(file);
    auto bind = binding_number(g, budget);
    KanekoCertificate cert = kaneko_check(g, budget);

    json rep;
    rep["n"] = g.order();
    rep["edges"] = g.edge_count();
    rep["omega"] = omega(g);
    rep["isolated"] = isolated_count(g);
    rep["sun"] = sun_count(g);
    rep["kappa"] = vertex_connectivity(g);
    rep["lambda"] = edge_connectivity(g);
    rep["bind"] = bind ? json(bind->value.str()) : json("undefined");
    rep["bind_witness"] = bind ? to_json(bind->witness) : json(nullptr);
    rep["has_p3_factor"] = cert.has_factor();
    rep["certificate"] = certificate_json(cert);

    if (as_json) {
        std::cout << rep.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: n=" << g.order() << " |E|=" << g.edge_count() << "\n"
              << "omega=" << rep["omega"] << " isolated=" << rep["isolated"]
              << " sun=" << rep["sun"] << "\n"
              << "kappa=" << rep["kappa"] << " lambda=" << rep["lambda"] << " bind=";
    if (bind)
        std::cout << bind->value.str() << " (~" << bind->value.to_double()
                  << ", witness X=" << to_json(bind->witness).dump() << ")";
    else
        std::cout << "undefined";
    std::cout << "\n";
    if (cert.has_factor()) {
        std::cout << "P>=3-factor: yes\n";
        for (const auto& p : cert.factor->paths) std::cout << "  path " << json(p).dump() << "\n";
    } else {
        std::cout << "P>=3-factor: no\n  violation X=" << to_json(cert.violation->x).dump()
                  << " sun(G-X)=" << cert.violation->sun_components << " >= 2|X|+1\n";
    }
    return 0;
}

int run_check(const std::string& file, int theorem, const TheoremParams& p, bool as_json,
              int budget) {
    TheoremId id = theorem_from_int(theorem);
    Graph g = read_graph_file(file);
    TheoremReport rep = evaluate_theorem(id, g, p, budget);

    json out;
    out["theorem"] = theorem;
    out["params"] = params_json(id, p);
    out["n"] = g.order();
    out["edges"] = g.edge_count();
    json hyp = json::array();
    for (const auto& h : rep.hypotheses) hyp.push_back(to_json(h));
    out["hypotheses"] = hyp;
    out["hypotheses_satisfied"] = rep.hypotheses_satisfied;
    out["conclusion_holds"] = rep.conclusion_holds ? json(*rep.conclusion_holds) : json(nullptr);
    out["counterexample"] = nullptr;
    if (rep.counterexample_edges)
        out["counterexample"] = {{"edges", to_json(*rep.counterexample_edges)}};
    else if (rep.counterexample_vertices)
        out["counterexample"] = {{"vertices", to_json(*rep.counterexample_vertices)}};
    out["certificate"] = rep.certificate ? to_json(*rep.certificate) : json(nullptr);
    out["implication_intact"] = !rep.is_counterexample();

    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "theorem " << theorem << " " << out["params"].dump() << " on graph n="
                  << g.order() << "\n";
        for (const auto& h : rep.hypotheses)
            std::cout << "hypothesis " << h.name << ": "
                      << (h.satisfied ? "satisfied" : "violated") << " (" << h.detail << ")\n";
        std::cout << "conclusion: "
                  << (!rep.conclusion_holds ? "not evaluated (undefined for these parameters)"
                      : *rep.conclusion_holds ? "holds"
                                              : "fails");
        if (rep.counterexample_edges)
            std::cout << " at E'=" << to_json(*rep.counterexample_edges).dump();
        if (rep.counterexample_vertices)
            std::cout << " at Q=" << to_json(*rep.counterexample_vertices).dump();
        if (rep.certificate)
            std::cout << " with witness X=" << to_json(rep.certificate->x).dump()
                      << " sun=" << rep.certificate->sun_components;
        std::cout << "\n";
        if (rep.is_counterexample())
            std::cout << "implication: COUNTEREXAMPLE\n";
        else if (rep.hypotheses_satisfied)
            std::cout << "implication: intact\n";
        else
            std::cout << "implication: skipped (hypotheses unsatisfied)\n";
    }
    return rep.is_counterexample() ? 1 : 0;
}

int run_gen(const std::string& family, const TheoremParams& p, int t,
            const std::string& out_file, bool as_json, int budget) {
    Graph g;
    bool meets_order = false;
    Rational sharp(0), required(0);
    if (family == "remark1") {
        g = remark1_family(p.r, p.m, t);
        meets_order = remark1_meets_order_bound(p.r, p.m, t);
        sharp = Rational(g.order() - 1, 3);
        required = Rational(g.order(), 3);
    } else if (family == "remark2") {
        g = remark2_family(p.r, p.k, t);
        meets_order = remark2_meets_order_bound(p.r, p.k, t);
        sharp = Rational(g.order() + 2 * p.k - 1, 3);
        required = Rational(g.order() + 2 * p.k, 3);
    } else {
        throw std::invalid_argument("family must be remark1 or remark2");
    }

    int kappa = vertex_connectivity(g);
    std::optional<int> min_max_degree;
    if (g.order() <= budget) min_max_degree = min_independent_max_degree(g, 2 * p.r + 1, budget);
    if (!out_file.empty()) write_graph_file(g, out_file);

    if (as_json) {
        json out;
        out["family"] = family;
        out["r"] = p.r;
        if (family == "remark1") out["m"] = p.m;
        if (family == "remark2") out["k"] = p.k;
        out["t"] = t;
        out["n"] = g.order();
        out["edges"] = g.edge_count();
        out["kappa"] = kappa;
        out["min_independent_max_degree"] =
            min_max_degree ? json(*min_max_degree) : json(nullptr);
        out["sharp_threshold"] = sharp.str();
        out["theorem_threshold"] = required.str();
        out["meets_order_bound"] = meets_order;
        if (!out_file.empty()) out["out"] = out_file;
        out["graph"] = write_graph(g);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::ostream& info = out_file.empty() ? std::cerr : std::cout;
    info << family << " r=" << p.r;
    if (family == "remark1") info << " m=" << p.m;
    if (family == "remark2") info << " k=" << p.k;
    info << " t=" << t << ": n=" << g.order() << " |E|=" << g.edge_count()
         << " kappa=" << kappa << "\n";
    if (min_max_degree)
        info << "min over independent " << 2 * p.r + 1 << "-sets of max degree = "
             << *min_max_degree << "\n";
    info << "sharp threshold " << sharp.str() << ", theorem threshold " << required.str()
         << "\n";
    if (!meets_order)
        info << "warning: below order threshold, instance is not demonstrative\n";
    if (!out_file.empty())
        info << "wrote " << out_file << "\n";
    else
        std::cout << write_graph(g);
    return 0;
}

int run_scan(int theorem, const TheoremParams& p, const std::string& n_range, int samples,
             std::uint64_t seed, bool as_json, int budget) {
    TheoremId id = theorem_from_int(theorem);
    auto colon = n_range.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--n-range must look like 8:10");
    int n_min = std::stoi(n_range.substr(0, colon));
    int n_max = std::stoi(n_range.substr(colon + 1));
    if (samples < 0) throw std::invalid_argument("--samples must be >= 0");

    ScanSummary summary = samples == 0
                              ? ScanSummary{}
                              : theorem_scan(id, p, RandomSource{n_min, n_max, samples, seed},
                                             budget);

    json out;
    out["theorem"] = theorem;
    out["params"] = params_json(id, p);
    out["n_min"] = n_min;
    out["n_max"] = n_max;
    out["samples"] = samples;
    out["seed"] = seed;
    out["budget"] = budget;
    out["total"] = summary.total;
    out["hypotheses_satisfied"] = summary.hypotheses_satisfied;
    out["skipped"] = summary.skipped;
    out["counterexamples"] = summary.counterexamples;
    json bad = json::array();
    Rng replay(seed);
    for (int i = 0; i < summary.total; ++i) {
        Graph g = sample_graph(n_min, n_max, replay);  // re-derive for reporting
        const TheoremReport& rep = summary.reports[i];
        if (!rep.is_counterexample()) continue;
        json r;
        r["index"] = rep.index;
        r["n"] = rep.order;
        r["edges"] = rep.edge_count;
        r["graph"] = write_graph(g);
        if (rep.counterexample_edges)
            r["counterexample"] = {{"edges", to_json(*rep.counterexample_edges)}};
        if (rep.counterexample_vertices)
            r["counterexample"] = {{"vertices", to_json(*rep.counterexample_vertices)}};
        r["certificate"] = rep.certificate ? to_json(*rep.certificate) : json(nullptr);
        bad.push_back(r);
    }
    out["counterexample_reports"] = bad;

    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "scan theorem " << theorem << " " << out["params"].dump() << " n in ["
                  << n_min << "," << n_max << "] samples=" << samples << " seed=" << seed
                  << "\n"
                  << "total=" << summary.total
                  << " hypotheses_satisfied=" << summary.hypotheses_satisfied
                  << " skipped=" << summary.skipped
                  << " counterexamples=" << summary.counterexamples << "\n";
        if (!bad.empty()) std::cout << bad.dump(2) << "\n";
    }
    return summary.counterexamples > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-factor analysis toolkit"};
    app.require_subcommand(1);
    int budget = kDefaultBudget;

    std::string file, out_file, family, n_range = "8:10";
    int theorem = 4, t = 1, samples = 0;
    std::uint64_t seed = 0;
    bool as_json = false;
    TheoremParams params;

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for a graph");
    analyze->add_option("file", file, "edge-list file")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");
    analyze->add_option("--budget", budget, "max order for subset-enumeration operations")
        ->capture_default_str();

    CLI::App* check = app.add_subcommand("check", "hypotheses + conclusion of one theorem");
    check->add_option("file", file, "edge-list file")->required();
    check->add_option("--theorem", theorem, "2, 3, 4 or 5")->required();
    check->add_option("--r", params.r, "parameter r");
    check->add_option("--m", params.m, "parameter m");
    check->add_option("--k", params.k, "parameter k");
    check->add_flag("--json", as_json, "machine-readable output");
    check->add_option("--budget", budget, "max order for subset-enumeration operations")
        ->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "generate a sharpness family instance");
    gen->add_option("--family", family, "remark1 or remark2")->required();
    gen->add_option("--r", params.r, "parameter r");
    gen->add_option("--m", params.m, "parameter m (remark1)");
    gen->add_option("--k", params.k, "parameter k (remark2)");
    gen->add_option("--t", t, "scale parameter")->required();
    gen->add_option("--out", out_file, "write edge list here");
    gen->add_flag("--json", as_json, "machine-readable output");
    gen->add_option("--budget", budget, "max order for subset-enumeration operations")
        ->capture_default_str();

    CLI::App* scan = app.add_subcommand("scan", "seeded random counterexample scan");
    scan->add_option("--theorem", theorem, "2, 3, 4 or 5")->required();
    scan->add_option("--r", params.r, "parameter r");
    scan->add_option("--m", params.m, "parameter m");
    scan->add_option("--k", params.k, "parameter k");
    scan->add_option("--n-range", n_range, "order range, e.g. 8:10");
    scan->add_option("--samples", samples, "number of sampled graphs")->required();
    scan->add_option("--seed", seed, "rng seed");
    scan->add_flag("--json", as_json, "machine-readable output");
    scan->add_option("--budget", budget, "max order for subset-enumeration operations")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(file, as_json, budget);
        if (check->parsed()) return run_check(file, theorem, params, as_json, budget);
        if (gen->parsed()) return run_gen(family, params, t, out_file, as_json, budget);
        if (scan->parsed())
            return run_scan(theorem, params, n_range, samples, seed, as_json, budget);
    } catch (const ParseError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
