#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pancycle/cycles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"

using namespace pancycle;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("is_valid_cycle") {
    const Graph c5 = graphs::cycle(5);
    CHECK(is_valid_cycle(c5, {0, 1, 2, 3, 4}));
    CHECK(is_valid_cycle(c5, {2, 1, 0, 4, 3}));
    CHECK_FALSE(is_valid_cycle(c5, {0, 1, 2, 3}));
    CHECK_FALSE(is_valid_cycle(c5, {0, 1, 2, 3, 4, 0}));
    CHECK_FALSE(is_valid_cycle(c5, {0, 1}));
    CHECK_FALSE(is_valid_cycle(c5, {0, 1, 7}));
    CHECK(is_valid_cycle(graphs::complete(3), {0, 1, 2}));
}

TEST_CASE("spectra of small named graphs") {
    const SpectrumVerdict k5 = cycle_spectrum(graphs::complete(5));
    CHECK(k5.present == std::vector<int>{3, 4, 5});
    CHECK(k5.pancyclic);
    CHECK(k5.missing.empty());

    const SpectrumVerdict c9 = cycle_spectrum(graphs::cycle(9));
    CHECK(c9.present == std::vector<int>{9});
    CHECK_FALSE(c9.pancyclic);
    CHECK(c9.missing == std::vector<int>{3, 4, 5, 6, 7, 8});

    const SpectrumVerdict pet = cycle_spectrum(graphs::petersen());
    CHECK(pet.present == std::vector<int>{5, 6, 8, 9});
    CHECK(pet.missing == std::vector<int>{3, 4, 7, 10});

    const SpectrumVerdict k44 = cycle_spectrum(graphs::complete_bipartite(4, 4));
    CHECK(k44.present == std::vector<int>{4, 6, 8});

    CHECK(cycle_spectrum(graphs::complete(9)).pancyclic);
    CHECK(cycle_spectrum(graphs::path(5)).present.empty());

    for (const auto& [len, w] : pet.witnesses) {
        CHECK(w.length() == len);
        CHECK(is_valid_cycle(graphs::petersen(), w.vertices));
    }
}

TEST_CASE("has_cycle_of_length") {
    const auto c = has_cycle_of_length(graphs::complete(6), 4);
    REQUIRE(c);
    CHECK(c->vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(has_cycle_of_length(graphs::petersen(), 7));
    CHECK_THROWS_AS(has_cycle_of_length(graphs::complete(4), 2), PreconditionViolated);
    CHECK_THROWS_AS(has_cycle_of_length(graphs::complete(4), 5), PreconditionViolated);
}

TEST_CASE("spectrum agrees with cycle enumeration") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& rec : oracle::geng(std::to_string(n))) {
            const Graph g = parse_graph6(rec);
            const SpectrumVerdict v = cycle_spectrum(g);
            REQUIRE_MESSAGE(as_set(v.present) == oracle::cycle_lengths(g), rec);
            for (const auto& [len, w] : v.witnesses) REQUIRE(is_valid_cycle(g, w.vertices));
            REQUIRE(v.pancyclic == (static_cast<int>(v.present.size()) == n - 2));
        }
}

TEST_CASE("bipartite graphs have only even cycles") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = 2 + trial % 5, b = 2 + (trial / 5) % 5;
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng() % 3) edges.emplace_back(u, a + v);
        const Graph g(a + b, edges);
        for (int len : cycle_spectrum(g).present) REQUIRE(len % 2 == 0);
    }
}

TEST_CASE("extend_c_tilde") {
    const Graph k9 = graphs::complete(9);
    const TriCycleWitness base = *find_c_tilde(k9, 3);
    const TriCycleWitness next = extend_c_tilde(k9, base);
    CHECK(next.length() == 4);
    CHECK(is_valid(k9, next));

    TriCycleWitness broken = base;
    broken.apex = broken.cycle[0];
    CHECK_THROWS_AS(extend_c_tilde(k9, broken), PreconditionViolated);
    CHECK_THROWS_AS(extend_c_tilde(k9.without_edge(base.cycle[0], base.cycle[1]), base), PreconditionViolated);

    const TriCycleWitness top = *find_c_tilde(k9, 8);
    CHECK_THROWS_AS(extend_c_tilde(k9, top), PreconditionViolated);
}

TEST_CASE("extension steps by one or two on certified graphs") {
    std::mt19937_64 rng(67);
    int steps = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(10, 0.6, rng);
        if (!check_st(g, 5, 3).holds || !is_two_connected(g) || min_degree(g) < 3) continue;
        auto w = find_c_tilde(g, 3);
        if (!w) w = find_c_tilde(g, 4);
        REQUIRE(w);
        while (w->length() < g.order() - 1) {
            const TriCycleWitness nx = extend_c_tilde(g, *w);
            REQUIRE(is_valid(g, nx));
            const int step = nx.length() - w->length();
            REQUIRE((step == 1 || step == 2));
            if (step == 2) CHECK_FALSE(find_c_tilde(g, w->length() + 1));
            w = nx;
            ++steps;
        }
    }
    CHECK(steps > 100);
}

TEST_CASE("certificate for K9") {
    const Graph k9 = graphs::complete(9);
    const PancyclicCertificate cert = certify_pancyclic(k9);
    CHECK(cert.order == 9);
    REQUIRE(cert.lengths.size() == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(cert.lengths[i].length == 3 + i);
        CHECK(cert.lengths[i].cycle.length() == 3 + i);
    }
    REQUIRE(cert.chain.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(cert.chain[i].length() == 3 + i);
    CHECK(verify_certificate(k9, cert));
}

TEST_CASE("certify_pancyclic enforces its hypotheses") {
    CHECK_THROWS_AS(certify_pancyclic(graphs::cycle(9)), HypothesesViolated);
    CHECK_THROWS_AS(certify_pancyclic(graphs::complete(8)), HypothesesViolated);
    CHECK_THROWS_AS(certify_pancyclic(blow_up(graphs::cycle(5), 3)), HypothesesViolated);
}

TEST_CASE("verify_certificate catches tampering") {
    const Graph k9 = graphs::complete(9);
    const PancyclicCertificate cert = certify_pancyclic(k9);
    const auto& c = cert.lengths.back().cycle.vertices;
    CHECK_FALSE(verify_certificate(k9.without_edge(c[0], c[1]), cert));

    PancyclicCertificate missing = cert;
    missing.lengths.erase(missing.lengths.begin() + 2);
    CHECK_FALSE(verify_certificate(k9, missing));

    PancyclicCertificate wrong_len = cert;
    wrong_len.lengths[1].length = 3;
    CHECK_FALSE(verify_certificate(k9, wrong_len));

    PancyclicCertificate wrong_order = cert;
    wrong_order.order = 10;
    CHECK_FALSE(verify_certificate(k9, wrong_order));

    PancyclicCertificate big_step = cert;
    big_step.chain.erase(big_step.chain.begin() + 1, big_step.chain.begin() + 3);
    CHECK_FALSE(verify_certificate(k9, big_step));
}

TEST_CASE("certificates on graphs satisfying the hypotheses") {
    std::mt19937_64 rng(71);
    int certified = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 9 + trial % 4;
        const Graph g = oracle::random_graph(n, 0.55, rng);
        if (!check_st(g, 5, 3).holds || !is_two_connected(g) || min_degree(g) < 3) continue;
        const PancyclicCertificate cert = certify_pancyclic(g);
        REQUIRE(verify_certificate(g, cert));
        REQUIRE(static_cast<int>(cert.lengths.size()) == n - 2);
        REQUIRE(cert.chain.back().length() == n - 1);
        ++certified;
    }
    CHECK(certified > 50);
}

TEST_CASE("provenance names") {
    for (Provenance p : {Provenance::BaseGadget, Provenance::ExtensionStep, Provenance::TriangleOfApex,
                         Provenance::DirectSearch})
        CHECK(provenance_from_string(to_string(p)) == p);
    CHECK_FALSE(provenance_from_string("nope"));
}

}  // TEST_SUITE
