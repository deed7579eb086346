#include "doctest.h"

#include "oracles.hpp"
#include "pathfactor/connectivity.hpp"
#include "pathfactor/graph_gen.hpp"
#include "pathfactor/path_factor.hpp"
#include "pathfactor/sun.hpp"
#include "pathfactor/theorems.hpp"

using namespace pathfactor;

TEST_CASE("degree condition: vacuous, satisfied, violated") {
    // K8 has no independent triple
    auto vac = degree_condition(complete(8), 1, Rational(8, 3));
    CHECK(vac.satisfied);
    CHECK_FALSE(vac.witness.has_value());
    CHECK_FALSE(min_independent_max_degree(complete(8), 3).has_value());

    Graph g = join(complete(3), empty_graph(7));  // remark1_family(1,0,3), n = 10
    auto hit = degree_condition(g, 1, Rational(10 - 1, 3));
    CHECK(hit.satisfied);
    auto miss = degree_condition(g, 1, Rational(10, 3));
    CHECK_FALSE(miss.satisfied);
    REQUIRE(miss.witness.has_value());
    CHECK(*miss.witness == VertexSet{3, 4, 5});  // first leaf triple

    CHECK(min_independent_max_degree(g, 3) == 3);
    CHECK_THROWS_AS(degree_condition(empty_graph(19), 1, Rational(1)), BudgetExceeded);
}

TEST_CASE("theorem 4 hypothesis bundle") {
    auto all_good = check_theorem4_hypotheses(complete(8), {.r = 1, .m = 0});
    REQUIRE(all_good.size() == 3);
    for (const auto& h : all_good) CHECK(h.satisfied);

    auto sharp = check_theorem4_hypotheses(remark1_family(1, 0, 3), {.r = 1, .m = 0});
    CHECK(sharp[0].satisfied);        // n = 10 >= 8
    CHECK(sharp[1].satisfied);        // kappa = 3 >= 1
    CHECK_FALSE(sharp[2].satisfied);  // degree at n/3 fails

    auto p8 = check_theorem4_hypotheses(path(8), {.r = 1, .m = 1});
    CHECK_FALSE(p8[1].satisfied);  // kappa = 1 < 2

    CHECK_THROWS_AS(check_theorem4_hypotheses(complete(4), {.r = 0, .m = 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_theorem4_hypotheses(complete(4), {.r = 1, .m = 4}),
                    std::invalid_argument);
}

TEST_CASE("theorem 5 hypothesis bundle") {
    auto all_good = check_theorem5_hypotheses(complete(9), {.r = 1, .k = 1});
    REQUIRE(all_good.size() == 3);
    for (const auto& h : all_good) CHECK(h.satisfied);

    Graph sharp_graph = remark2_family(1, 1, 1);  // K4 v 7K1, n = 11
    auto sharp = check_theorem5_hypotheses(sharp_graph, {.r = 1, .k = 1});
    CHECK(sharp[0].satisfied);        // 11 >= 9
    CHECK(sharp[1].satisfied);        // kappa = 4 >= 2
    CHECK_FALSE(sharp[2].satisfied);  // leaves have degree 4 = (n+2k-1)/3 < (n+2k)/3
    CHECK(min_independent_max_degree(sharp_graph, 3) == 4);

    auto tiny = check_theorem5_hypotheses(empty_graph(2), {.r = 1, .k = 0});
    CHECK_FALSE(tiny[0].satisfied);  // order bound
}

TEST_CASE("theorem 2 and 3 hypothesis bundles use exact thresholds") {
    auto t2 = check_theorem2_hypotheses(complete(6), 1);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].satisfied);  // kappa = 5 >= 3
    CHECK(t2[1].satisfied);  // bind = 5 > 3/2 - 1/8
    CHECK(t2[1].detail.find("11/8") != std::string::npos);

    auto c5 = check_theorem2_hypotheses(cycle(5), 0);
    CHECK(c5[0].satisfied);  // kappa = 2 >= 1
    CHECK(c5[1].satisfied);  // bind(C5) = 4/3 > 5/4

    auto t3 = check_theorem3_hypotheses(complete(4), 0);
    CHECK(t3[0].satisfied);  // kappa = 3 >= 2
    CHECK(t3[1].satisfied);  // bind = 3 >= 5/4

    // boundary: theorem 3 is non-strict, equality passes
    // bind(C4) = 1 < 5/4 fails; K4 minus an edge has bind 3/2 >= 5/4
    Graph diamond = delete_edges(complete(4), EdgeSet{{0, 1}});
    auto bd = binding_number(diamond);
    REQUIRE(bd.has_value());
    auto verdict = check_theorem3_hypotheses(diamond, 0);
    CHECK(verdict[1].satisfied == (bd->value >= Rational(5, 4)));
}

TEST_CASE("kano-lu-yu sufficient condition") {
    auto claw = kano_lu_yu_condition(star(3));
    CHECK_FALSE(claw.satisfied);
    CHECK(*claw.witness == VertexSet{0});

    CHECK(kano_lu_yu_condition(complete(6)).satisfied);

    // C6 fails the condition (it still has a factor; the condition is only
    // sufficient): X = {0,2,4} isolates the other three vertices
    auto c6 = kano_lu_yu_condition(cycle(6));
    CHECK_FALSE(c6.satisfied);
    CHECK(*c6.witness == VertexSet{0, 2, 4});
    CHECK(kano_lu_yu_condition(cycle(3)).satisfied);

    // the condition really is sufficient at desk scale
    Rng rng(61);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = sample_graph(1, 8, rng);
        if (kano_lu_yu_condition(g).satisfied) CHECK(has_p3_factor(g));
    }
}

TEST_CASE("factor-deleted verification") {
    CHECK(verify_factor_deleted(cycle(8), 1).holds);

    auto k2 = verify_factor_deleted(complete(2), 0);
    CHECK_FALSE(k2.holds);
    CHECK(*k2.counterexample == EdgeSet{});
    CHECK(k2.certificate->x == VertexSet{});
    CHECK(k2.certificate->sun_components == 1);

    // remark1_family(1,1,2): the only failing E' is the K2 edge
    Graph g = remark1_family(1, 1, 2);  // K3 v (5K1 u K2), n = 10
    auto verdict = verify_factor_deleted(g, 1);
    CHECK_FALSE(verdict.holds);
    CHECK(*verdict.counterexample == EdgeSet{{8, 9}});
    CHECK(verdict.certificate->x == VertexSet{0, 1, 2});
    CHECK(verdict.certificate->sun_components == 7);  // 2rt + 2m + 1

    CHECK_THROWS_AS(verify_factor_deleted(complete(3), 9), std::invalid_argument);
}

TEST_CASE("factor-critical verification") {
    CHECK(verify_factor_critical(complete(5), 2).holds);

    auto sharp = verify_factor_critical(remark2_family(1, 0, 2), 0);
    CHECK_FALSE(sharp.holds);
    CHECK(*sharp.counterexample == VertexSet{});
    CHECK(sharp.certificate->x == VertexSet{0, 1, 2});
    CHECK(sharp.certificate->sun_components == 7);  // 2rt + 2k + 3

    auto p3 = verify_factor_critical(path(3), 1);
    CHECK_FALSE(p3.holds);
    CHECK(*p3.counterexample == VertexSet{0});

    CHECK_THROWS_AS(verify_factor_critical(complete(3), 3), std::invalid_argument);
}

TEST_CASE("factor-critical certificates map back to host labels") {
    Graph g = remark2_family(1, 1, 1);  // K4 v 7K1
    auto verdict = verify_factor_critical(g, 1);
    CHECK_FALSE(verdict.holds);
    CHECK(*verdict.counterexample == VertexSet{0});
    // X lives in g's labels, disjoint from Q = {0}: the rest of the clique
    CHECK(verdict.certificate->x == VertexSet{1, 2, 3});
    CHECK(verdict.certificate->sun_components == 7);
    Graph joint = delete_vertices(g, set_union(*verdict.counterexample,
                                               verdict.certificate->x)).graph;
    CHECK(sun_count(joint) == 7);
}

TEST_CASE("remark family shapes") {
    CHECK(remark1_family(1, 0, 3) == join(complete(3), empty_graph(7)));
    CHECK(remark1_family(1, 0, 3).order() == 10);
    CHECK(remark1_family(1, 1, 4).order() == 16);
    CHECK(remark1_family(1, 1, 4).edge_count() == 66);
    CHECK(remark1_family(1, 0, 1) == star(3));
    CHECK_FALSE(remark1_meets_order_bound(1, 0, 1));
    CHECK(remark1_meets_order_bound(1, 0, 3));
    CHECK_THROWS_AS(remark1_family(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(remark1_family(1, 4, 1), std::invalid_argument);

    CHECK(remark2_family(1, 0, 2) == join(complete(3), empty_graph(7)));
    CHECK(remark2_family(1, 1, 1).order() == 11);
    CHECK(remark2_family(2, 0, 1) == join(complete(3), empty_graph(7)));
    CHECK(remark2_meets_order_bound(1, 1, 1));
    CHECK_THROWS_AS(remark2_family(1, -1, 1), std::invalid_argument);
}

TEST_CASE("remark1 family sharpness holds across the demonstrative range") {
    // every (r,m,t) with t <= 4 meeting the order bound and n <= 18
    for (auto [r, m, t] : {std::tuple{1, 0, 3}, std::tuple{1, 0, 4}, std::tuple{1, 1, 4},
                           std::tuple{2, 0, 2}}) {
        REQUIRE(remark1_meets_order_bound(r, m, t));
        Graph g = remark1_family(r, m, t);
        int n = g.order();
        CHECK(n == 3 * r * t + 3 * m + 1);
        CHECK(vertex_connectivity(g) == r * t + m);
        auto min_max = min_independent_max_degree(g, 2 * r + 1);
        REQUIRE(min_max.has_value());
        CHECK(Rational(*min_max) == Rational(n - 1, 3));
        CHECK(degree_condition(g, r, Rational(n - 1, 3)).satisfied);
        CHECK_FALSE(degree_condition(g, r, Rational(n, 3)).satisfied);
        auto verdict = verify_factor_deleted(g, m);
        CHECK_FALSE(verdict.holds);
        REQUIRE(verdict.certificate.has_value());
        CHECK(verdict.certificate->x.size() == r * t + m);
        CHECK(verdict.certificate->sun_components == 2 * r * t + 2 * m + 1);
    }
}

TEST_CASE("remark2 family sharpness holds across the demonstrative range") {
    for (auto [r, k, t] : {std::tuple{1, 0, 2}, std::tuple{1, 0, 3}, std::tuple{1, 1, 1},
                           std::tuple{1, 1, 2}, std::tuple{1, 2, 1}}) {
        REQUIRE(remark2_meets_order_bound(r, k, t));
        Graph g = remark2_family(r, k, t);
        int n = g.order();
        CHECK(n == 3 * r * t + 4 * k + 4);
        CHECK(vertex_connectivity(g) == r * t + 2 * k + 1);
        auto min_max = min_independent_max_degree(g, 2 * r + 1);
        REQUIRE(min_max.has_value());
        CHECK(Rational(*min_max) == Rational(n + 2 * k - 1, 3));
        CHECK(degree_condition(g, r, Rational(n + 2 * k - 1, 3)).satisfied);
        CHECK_FALSE(degree_condition(g, r, Rational(n + 2 * k, 3)).satisfied);
        auto verdict = verify_factor_critical(g, k);
        CHECK_FALSE(verdict.holds);
        REQUIRE(verdict.certificate.has_value());
        CHECK(verdict.certificate->x.size() == r * t + k + 1);
        CHECK(verdict.certificate->sun_components == 2 * r * t + 2 * k + 3);
    }
}

TEST_CASE("deleting zero edges or vertices is exactly factor existence") {
    Rng rng(62);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = sample_graph(1, 8, rng);
        bool factor = has_p3_factor(g);
        CHECK(verify_factor_deleted(g, 0).holds == factor);
        CHECK(verify_factor_critical(g, 0).holds == factor);
    }
}

TEST_CASE("theorem scans find no counterexamples") {
    ScanSummary t4 = theorem_scan(TheoremId::Theorem4, {.r = 1, .m = 0},
                                  RandomSource{8, 9, 60, 7});
    CHECK(t4.total == 60);
    CHECK(t4.counterexamples == 0);
    CHECK(t4.hypotheses_satisfied + t4.skipped == t4.total);

    ScanSummary t5 = theorem_scan(TheoremId::Theorem5, {.r = 1, .k = 0},
                                  RandomSource{8, 9, 60, 7});
    CHECK(t5.counterexamples == 0);

    ScanSummary t2 = theorem_scan(TheoremId::Theorem2, {.m = 0}, RandomSource{4, 8, 60, 7});
    CHECK(t2.counterexamples == 0);

    ScanSummary t3 = theorem_scan(TheoremId::Theorem3, {.k = 0}, RandomSource{4, 8, 60, 7});
    CHECK(t3.counterexamples == 0);

    // m = 1 needs n >= 14 before the order hypothesis can hold
    ScanSummary t4m1 = theorem_scan(TheoremId::Theorem4, {.r = 1, .m = 1},
                                    RandomSource{14, 15, 40, 5});
    CHECK(t4m1.hypotheses_satisfied > 0);
    CHECK(t4m1.counterexamples == 0);

    ScanSummary exhaustive = theorem_scan(TheoremId::Theorem2, {.m = 0}, ExhaustiveSource{4});
    CHECK(exhaustive.total == 64);
    CHECK(exhaustive.counterexamples == 0);

    ScanSummary none = theorem_scan(TheoremId::Theorem4, {.r = 1, .m = 0},
                                    RandomSource{8, 9, 0, 7});
    CHECK(none.total == 0);
}

TEST_CASE("scans are deterministic for a fixed seed") {
    auto run = [] {
        return theorem_scan(TheoremId::Theorem4, {.r = 1, .m = 0}, RandomSource{8, 10, 40, 99});
    };
    ScanSummary a = run();
    ScanSummary b = run();
    CHECK(a.total == b.total);
    CHECK(a.hypotheses_satisfied == b.hypotheses_satisfied);
    CHECK(a.skipped == b.skipped);
    REQUIRE(a.reports.size() == b.reports.size());
    for (size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].order == b.reports[i].order);
        CHECK(a.reports[i].edge_count == b.reports[i].edge_count);
        CHECK(a.reports[i].hypotheses_satisfied == b.reports[i].hypotheses_satisfied);
    }
}

TEST_CASE("evaluate_theorem reports both directions of a sharpness instance") {
    // hypotheses fail AND conclusion fails: the implication survives
    Graph g = remark1_family(1, 0, 3);
    TheoremReport rep = evaluate_theorem(TheoremId::Theorem4, g, {.r = 1, .m = 0});
    CHECK_FALSE(rep.hypotheses_satisfied);
    REQUIRE(rep.conclusion_holds.has_value());
    CHECK_FALSE(*rep.conclusion_holds);
    CHECK_FALSE(rep.is_counterexample());

    TheoremReport ok = evaluate_theorem(TheoremId::Theorem4, complete(8), {.r = 1, .m = 0});
    CHECK(ok.hypotheses_satisfied);
    CHECK(*ok.conclusion_holds);
}
