#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pancycle/certify.hpp"
#include "pancycle/cycles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"

using namespace pancycle;

TEST_SUITE("certify") {

TEST_CASE("hypotheses per p") {
    const Hypotheses h3 = Hypotheses::for_p(3);
    CHECK(h3.s == 5);
    CHECK(h3.t == 3);
    CHECK(h3.min_order == 9);
    CHECK(h3.min_degree == 3);
    CHECK(h3.require_two_connected);
    CHECK(h3.implies_settled_case());

    const Hypotheses h4 = Hypotheses::for_p(4);
    CHECK(h4.s == 6);
    CHECK(h4.min_order == 11);
    CHECK_FALSE(h4.implies_settled_case());

    Hypotheses h = Hypotheses::for_p(3);
    h.override_st(4, 2);
    CHECK(h.st_overridden);
    CHECK(h.implies_settled_case());
    h.override_st(5, 3);
    CHECK_FALSE(h.st_overridden);

    CHECK_THROWS_AS(Hypotheses::for_p(1), PreconditionViolated);
    CHECK_THROWS_AS(Hypotheses::for_p(7), PreconditionViolated);
}

TEST_CASE("check_hypotheses on K9") {
    const Verdict v = check_hypotheses(graphs::complete(9), Hypotheses::for_p(3));
    CHECK(v.hypotheses_met);
    CHECK(v.g6 == write_graph6(graphs::complete(9)));
    CHECK(v.checks.order == true);
    CHECK(v.checks.min_degree == true);
    CHECK(v.checks.two_connected == true);
    CHECK(v.checks.st == true);
    CHECK_FALSE(v.checks.first_failure());
}

TEST_CASE("check_hypotheses on C9") {
    const Verdict full = check_hypotheses(graphs::cycle(9), Hypotheses::for_p(3));
    CHECK_FALSE(full.hypotheses_met);
    CHECK(full.checks.min_degree == false);
    CHECK(full.checks.two_connected == true);
    CHECK(full.checks.st == false);
    CHECK(full.checks.first_failure() == "mindeg");

    const Verdict cut = check_hypotheses(graphs::cycle(9), Hypotheses::for_p(3), true);
    CHECK(cut.checks.order == true);
    CHECK(cut.checks.min_degree == false);
    CHECK_FALSE(cut.checks.two_connected);
    CHECK_FALSE(cut.checks.st);
}

TEST_CASE("order is checked first") {
    const Verdict v = check_hypotheses(graphs::complete(8), Hypotheses::for_p(3), true);
    CHECK(v.checks.first_failure() == "order");
    CHECK_FALSE(v.checks.min_degree);
}

TEST_CASE("main theorem on K9 and C9") {
    const Verdict k9 = verify_main_theorem(graphs::complete(9));
    CHECK(k9.conclusion == true);
    CHECK_FALSE(k9.counterexample);
    REQUIRE(k9.detail);
    CHECK((*k9.detail)["certificate"] == "valid");
    CHECK((*k9.detail)["chain"] == Json::array({3, 4, 5, 6, 7, 8}));

    const Verdict c9 = verify_main_theorem(graphs::cycle(9));
    CHECK_FALSE(c9.hypotheses_met);
    CHECK_FALSE(c9.conclusion);
    CHECK_FALSE(c9.counterexample);
}

TEST_CASE("the C5 blow-up for p = 6") {
    const Graph b = blow_up(graphs::cycle(5), 3);
    const Hypotheses h6 = Hypotheses::for_p(6);
    const Verdict hyp = check_hypotheses(b, h6);
    CHECK(hyp.hypotheses_met);

    const Verdict tri = verify_triangle_lemma(b, 6);
    CHECK(tri.hypotheses_met);
    CHECK(tri.conclusion == true);
    REQUIRE(tri.detail);
    CHECK((*tri.detail)["c5_blowup"] == 3);

    const Verdict thm = verify_main_theorem(b, h6);
    CHECK(thm.counterexample);
    CHECK_FALSE(thm.inconsistent);
    REQUIRE(thm.detail);
    const auto missing = (*thm.detail)["missing"];
    CHECK(missing.front() == 3);
}

TEST_CASE("gadget lemma") {
    const Verdict k9 = verify_gadget_lemma(graphs::complete(9));
    CHECK(k9.conclusion == true);
    REQUIRE(k9.detail);
    CHECK(k9.detail->contains("apex"));

    const Verdict c9 = verify_gadget_lemma(graphs::cycle(9));
    CHECK_FALSE(c9.hypotheses_met);
    CHECK_FALSE(c9.conclusion);
}

TEST_CASE("path lemma") {
    const Verdict k9 = verify_path_lemma(graphs::complete(9), 3);
    CHECK(k9.conclusion == true);
    CHECK((*k9.detail)["longest"] == 1);

    const Verdict c9 = verify_path_lemma(graphs::cycle(9), 3);
    CHECK_FALSE(c9.hypotheses_met);

    const Verdict a = verify_path_lemma(graphs::complete(9), 3, Sampled{50}, 17);
    const Verdict b = verify_path_lemma(graphs::complete(9), 3, Sampled{50}, 17);
    CHECK(a.seed == 17u);
    CHECK(*a.detail == *b.detail);
    CHECK((*a.detail)["pairs"] == 50);
}

TEST_CASE("path lemma verdicts agree with brute-force path lengths") {
    std::mt19937_64 rng(73);
    int met = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 5 + trial % 4;
        const int p = 2 + trial % 2;
        const Graph g = oracle::random_graph(n, 0.5 + 0.04 * (trial % 10), rng);
        const Verdict v = verify_path_lemma(g, p);
        if (!v.hypotheses_met) continue;
        ++met;
        int longest = 0;
        for (const auto& st : oracle::subsets(n, 4)) {
            const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
            for (const auto& q : pairs) {
                std::vector<bool> s(n, false), t(n, false), x(n, false);
                s[st[q[0]]] = s[st[q[1]]] = true;
                t[st[q[2]]] = t[st[q[3]]] = true;
                longest = std::max(longest, oracle::shortest_st_path(g, s, t, x));
            }
        }
        REQUIRE((*v.detail)["longest"] == longest);
        REQUIRE(v.conclusion == (longest <= p));
    }
    CHECK(met > 50);
}

TEST_CASE("triangle lemma") {
    const Verdict k9 = verify_triangle_lemma(graphs::complete(9), 3);
    CHECK(k9.conclusion == true);
    CHECK_THROWS_AS(verify_triangle_lemma(graphs::complete(9), 1), PreconditionViolated);
    CHECK_FALSE(verify_triangle_lemma(graphs::cycle(9), 3).hypotheses_met);
}

TEST_CASE("verdicts are deterministic") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(10, 0.6, rng);
        const Verdict a = verify_main_theorem(g);
        const Verdict b = verify_main_theorem(g);
        CHECK(a.conclusion == b.conclusion);
        CHECK(a.detail == b.detail);
    }
}

TEST_CASE("theorem verdict on all connected 9-vertex graphs of minimum degree 3 in a slice") {
    int met = 0;
    for (const auto& rec : oracle::geng("-C -d3 9 0/40")) {
        const Graph g = parse_graph6(rec);
        const Verdict v = verify_main_theorem(g);
        REQUIRE_FALSE(v.counterexample);
        REQUIRE_FALSE(v.inconsistent);
        if (!v.hypotheses_met) continue;
        ++met;
        REQUIRE(v.conclusion == true);
        REQUIRE(cycle_spectrum(g).pancyclic);
    }
    CHECK(met > 100);
}

}  // TEST_SUITE
