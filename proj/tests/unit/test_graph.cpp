#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/gadgets.hpp"
#include "pancycle/graph.hpp"

using namespace pancycle;

namespace {

Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction validates its input") {
    CHECK_THROWS_AS(Graph(65), OrderTooLarge);
    CHECK_THROWS_AS(Graph(0), PreconditionViolated);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionViolated);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionViolated);
    const std::uint64_t asym[2] = {0b10, 0b00};
    CHECK_THROWS_AS(Graph::from_rows(2, asym), PreconditionViolated);
    const std::uint64_t loop[2] = {0b01, 0b00};
    CHECK_THROWS_AS(Graph::from_rows(2, loop), PreconditionViolated);
    const std::uint64_t beyond[2] = {0b110, 0b001};
    CHECK_THROWS_AS(Graph::from_rows(2, beyond), PreconditionViolated);

    const Graph g(64, {{0, 63}});
    CHECK(g.adjacent(63, 0));
    CHECK(g.size() == 1);
}

TEST_CASE("adjacency is symmetric and loop-free on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 64, 0.3, rng);
        for (int u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.order(); ++v) REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

TEST_CASE("derived graphs") {
    const Graph c5 = graphs::cycle(5);
    CHECK(c5.complement() == graphs::cycle(5).complement());
    CHECK(c5.complement().size() == 5);
    CHECK(c5.without_edge(0, 1).size() == 4);
    CHECK(c5.with_edge(0, 2).adjacent(2, 0));
    const Graph sub = graphs::complete(5).induced(VertexSet{1, 3, 4});
    CHECK(sub == graphs::complete(3));
}

TEST_CASE("min_degree") {
    CHECK(min_degree(graphs::complete(5)) == 4);
    CHECK(min_degree(graphs::cycle(9)) == 2);
    CHECK(min_degree(blow_up(graphs::cycle(5), 3)) == 6);
    CHECK(min_degree(Graph(1)) == 0);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(graphs::complete(4)));
    CHECK_FALSE(is_connected(two_triangles()));
    CHECK(is_connected(graphs::cycle(9)));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("is_two_connected") {
    CHECK(is_two_connected(graphs::cycle(9)));
    CHECK_FALSE(is_two_connected(graphs::path(4)));
    CHECK_FALSE(is_two_connected(graphs::bowtie()));
    CHECK_FALSE(is_two_connected(graphs::complete(2)));
    CHECK(is_two_connected(graphs::complete(3)));
    CHECK_FALSE(is_two_connected(two_triangles()));
}

TEST_CASE("is_two_connected agrees with vertex deletion on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + trial % 12;
        const Graph g = oracle::random_graph(n, 0.2 + 0.05 * (trial % 10), rng);
        REQUIRE(is_two_connected(g) == oracle::two_connected(g));
        REQUIRE(is_connected(g) == oracle::connected(g));
    }
}

TEST_CASE("induced_size") {
    CHECK(induced_size(graphs::complete(5), VertexSet{0, 2, 4}) == 3);
    CHECK(induced_size(graphs::complete_bipartite(4, 4), VertexSet{0, 1, 2, 3}) == 0);
    const Graph k33 = graphs::complete_bipartite(3, 3);
    for (const auto& s : oracle::subsets(6, 5)) {
        VertexSet vs;
        for (Vertex v : s) vs.insert(v);
        CHECK(induced_size(k33, vs) == 6);
        CHECK(oracle::induced_edges(k33, s) == 6);
    }
}

TEST_CASE("check_st examples") {
    const StVerdict k4 = check_st(graphs::complete(4), 5, 3);
    CHECK(k4.holds);
    CHECK(k4.vacuous);
    CHECK(k4.min_size == StVerdict::kVacuous);
    CHECK_FALSE(k4.witness);

    const StVerdict k33 = check_st(graphs::complete_bipartite(3, 3), 5, 3, true);
    CHECK(k33.holds);
    CHECK(k33.min_size == 6);

    const Graph c9 = graphs::cycle(9);
    const StVerdict v = check_st(c9, 5, 3);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->size() == 5);
    CHECK(induced_size(c9, *v.witness) < 3);
    CHECK(induced_size(c9, VertexSet{0, 2, 4, 6, 8}) == 1);
    CHECK(check_st(c9, 5, 3, true).min_size == oracle::st_condition(c9, 5, 3).min_size);
}

TEST_CASE("check_st matches subset enumeration") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 1 + trial % 10;
        const Graph g = oracle::random_graph(n, 0.3 + 0.06 * (trial % 10), rng);
        const int s = 1 + static_cast<int>(rng() % 7);
        const int t = static_cast<int>(rng() % (s * (s - 1) / 2 + 2));
        const auto ref = oracle::st_condition(g, s, t);
        const StVerdict fast = check_st(g, s, t);
        const StVerdict exact = check_st(g, s, t, true);
        REQUIRE(fast.holds == ref.holds);
        REQUIRE(exact.holds == ref.holds);
        if (n >= s) {
            REQUIRE(exact.min_size == ref.min_size);
        } else {
            REQUIRE(exact.min_size == StVerdict::kVacuous);
        }
        if (!ref.holds) {
            REQUIRE(fast.witness);
            CHECK(fast.witness->to_vector() == *ref.first_violation);
            CHECK(exact.witness->to_vector() == *ref.first_violation);
            CHECK(induced_size(g, *fast.witness) < t);
            CHECK(fast.witness->size() == s);
        } else {
            CHECK_FALSE(fast.witness);
        }
    }
}

TEST_CASE("[s,t] monotonicity: [s,t] implies [s+1,t+1] for t >= 1") {
    std::mt19937_64 rng(19);
    int premises = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = 2 + trial % 9;
        const Graph g = oracle::random_graph(n, 0.5 + 0.04 * (trial % 10), rng);
        const int s = 2 + static_cast<int>(rng() % (n - 1));
        const int t = 1 + static_cast<int>(rng() % (s * (s - 1) / 2));  // fails for t = 0: an edgeless graph
        if (!check_st(g, s, t).holds) continue;
        ++premises;
        REQUIRE(check_st(g, s + 1, t + 1).holds);
    }
    CHECK(premises > 1000);
}

TEST_CASE("independence number") {
    CHECK(independence_number(graphs::complete(5)) == 1);
    CHECK(independence_number(graphs::cycle(9)) == oracle::independence_number(graphs::cycle(9)));
    CHECK(independence_number(graphs::cycle(9)) == 4);
    CHECK(independence_number(graphs::complete_bipartite(3, 3)) == 3);
    CHECK(independence_number(graphs::petersen()) == 4);
    CHECK(independence_number(Graph(40)) == 40);
    CHECK(independence_number(blow_up(graphs::cycle(5), 8)) == 16);
}

TEST_CASE("independence number matches brute force and the [k+1,1] condition") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + trial % 12;
        const Graph g = oracle::random_graph(n, 0.15 + 0.07 * (trial % 10), rng);
        const int alpha = independence_number(g);
        REQUIRE(alpha == oracle::independence_number(g));
        for (int k = 1; k <= n; ++k) REQUIRE((alpha <= k) == check_st(g, k + 1, 1).holds);
    }
}

TEST_CASE("blow_up") {
    const Graph c5 = graphs::cycle(5);
    CHECK(blow_up(c5, 1) == c5);
    const Graph b = blow_up(c5, 3);
    CHECK(b.order() == 15);
    CHECK(b.size() == 45);
    CHECK(min_degree(b) == 6);
    CHECK_FALSE(find_triangle(b));
    CHECK_FALSE(oracle::has_triangle(b));

    const Graph c4 = blow_up(graphs::complete(2), 2);
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(is_connected(c4));

    CHECK_THROWS_AS(blow_up(c5, 13), OrderTooLarge);
    CHECK_THROWS_AS(blow_up(c5, 0), PreconditionViolated);
}

TEST_CASE("blow_up degree law") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 8;
        const int k = 1 + static_cast<int>(rng() % (64 / n < 8 ? 64 / n : 8));
        const Graph h = oracle::random_graph(n, 0.5, rng);
        const Graph b = blow_up(h, k);
        for (int v = 0; v < b.order(); ++v) REQUIRE(b.degree(v) == k * h.degree(v / k));
    }
}

TEST_CASE("C5 blow-up recognition") {
    const Graph c5 = graphs::cycle(5);
    CHECK(recognize_c5_blowup(blow_up(c5, 3)) == 3);
    CHECK(recognize_c5_blowup(c5) == 1);
    CHECK_FALSE(recognize_c5_blowup(graphs::petersen()));
    CHECK_FALSE(recognize_c5_blowup(graphs::complete(5)));
    CHECK_FALSE(recognize_c5_blowup(graphs::cycle(10)));
    CHECK_FALSE(recognize_c5_blowup(blow_up(graphs::cycle(5), 2).without_edge(0, 2)));
    for (int k = 1; 5 * k <= 64; ++k) CHECK(recognize_c5_blowup(blow_up(c5, k)) == k);

    std::mt19937_64 rng(31);
    std::vector<Vertex> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(recognize_c5_blowup(relabel(blow_up(c5, 4), perm)) == 4);
}

TEST_CASE("standard constructions") {
    CHECK(graphs::petersen().size() == 15);
    for (int v = 0; v < 10; ++v) CHECK(graphs::petersen().degree(v) == 3);
    CHECK(graphs::bowtie().order() == 5);
    CHECK(graphs::bowtie() == graphs::dumbbell(0));
    CHECK(graphs::dumbbell(2).order() == 7);
    CHECK(graphs::complete_bipartite(4, 4).size() == 16);
}

}  // TEST_SUITE
