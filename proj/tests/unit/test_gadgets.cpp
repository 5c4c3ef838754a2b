#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/gadgets.hpp"
#include "pancycle/graph6.hpp"

using namespace pancycle;

namespace {

std::vector<bool> flags(int n, std::initializer_list<Vertex> vs) {
    std::vector<bool> f(n, false);
    for (Vertex v : vs) f[v] = true;
    return f;
}

std::vector<bool> flags(int n, VertexSet s) {
    std::vector<bool> f(n, false);
    for (Vertex v : s) f[v] = true;
    return f;
}

// Two vertex-disjoint triangles and a simple path of exactly `len` edges
// between them whose interior avoids both.
bool brute_dumbbell(const Graph& g, int len) {
    const auto tris = oracle::subsets(g.order(), 3);
    for (const auto& a : tris) {
        if (oracle::induced_edges(g, a) != 3) continue;
        for (const auto& b : tris) {
            if (oracle::induced_edges(g, b) != 3) continue;
            std::vector<bool> blocked(g.order(), false);
            bool disjoint = true;
            for (Vertex v : a) blocked[v] = true;
            for (Vertex v : b) {
                disjoint = disjoint && !blocked[v];
                blocked[v] = true;
            }
            if (!disjoint) continue;
            for (Vertex x : a)
                for (Vertex y : b) {
                    std::vector<bool> on(g.order(), false);
                    std::function<bool(Vertex, int)> walk = [&](Vertex head, int left) {
                        if (left == 1) return g.adjacent(head, y);
                        for (Vertex w = 0; w < g.order(); ++w) {
                            if (on[w] || blocked[w] || !g.adjacent(head, w)) continue;
                            on[w] = true;
                            const bool ok = walk(w, left - 1);
                            on[w] = false;
                            if (ok) return true;
                        }
                        return false;
                    };
                    if (walk(x, len)) return true;
                }
        }
    }
    return false;
}

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("find_triangle") {
    const auto t = find_triangle(graphs::complete(4));
    REQUIRE(t);
    CHECK(*t == std::array<Vertex, 3>{0, 1, 2});
    CHECK_FALSE(find_triangle(graphs::cycle(9)));
    CHECK_FALSE(find_triangle(blow_up(graphs::cycle(5), 3)));
    const auto late = find_triangle(Graph(7, {{0, 1}, {4, 5}, {5, 6}, {4, 6}, {2, 3}}));
    REQUIRE(late);
    CHECK(*late == std::array<Vertex, 3>{4, 5, 6});
}

TEST_CASE("find_triangle agrees with brute force") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = oracle::random_graph(3 + trial % 10, 0.25, rng);
        const auto t = find_triangle(g);
        REQUIRE(t.has_value() == oracle::has_triangle(g));
        if (t) {
            for (const auto& s : oracle::subsets(g.order(), 3)) {
                if (oracle::induced_edges(g, s) != 3) continue;
                CHECK(std::vector<Vertex>(t->begin(), t->end()) == s);  // lexicographically first
                break;
            }
        }
    }
}

TEST_CASE("find_c_tilde examples") {
    const auto w = find_c_tilde(graphs::complete(5), 3);
    REQUIRE(w);
    CHECK(w->cycle == std::vector<Vertex>{0, 1, 2});
    CHECK(w->apex == 3);
    CHECK(w->edge_index == 0);
    CHECK(is_valid(graphs::complete(5), *w));

    CHECK_FALSE(find_c_tilde(graphs::cycle(9), 3));

    const Graph k4_pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    CHECK_FALSE(oracle::has_c_tilde(k4_pendant, 4));
    CHECK_FALSE(find_c_tilde(k4_pendant, 4));
    CHECK(find_c_tilde(k4_pendant, 3));

    CHECK_FALSE(find_c_tilde(graphs::complete(5), 2));
    CHECK_FALSE(find_c_tilde(graphs::complete(5), 5));
}

TEST_CASE("find_c_tilde agrees with brute force on all graphs up to 7 vertices") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& rec : oracle::geng(std::to_string(n))) {
            const Graph g = parse_graph6(rec);
            for (int l = 3; l <= n - 1; ++l) {
                const auto w = find_c_tilde(g, l);
                REQUIRE_MESSAGE(w.has_value() == oracle::has_c_tilde(g, l), rec << " l=" << l);
                if (w) {
                    REQUIRE(is_valid(g, *w));
                    CHECK(w->length() == l);
                }
            }
        }
}

TEST_CASE("find_switch examples") {
    const auto w = find_switch(graphs::complete(5), 3);
    REQUIRE(w);
    CHECK(w->t == 1);
    CHECK(is_valid(graphs::complete(5), *w));
    for (int l = 3; l <= 8; ++l) CHECK_FALSE(find_switch(graphs::cycle(9), l));
}

TEST_CASE("find_switch is optimal on all graphs up to 8 vertices") {
    for (int n = 4; n <= 8; ++n)
        for (const auto& rec : oracle::geng(std::to_string(n))) {
            const Graph g = parse_graph6(rec);
            for (int l = 3; l <= n - 1; ++l) {
                const auto w = find_switch(g, l);
                const auto best = oracle::best_switch(g, l);
                REQUIRE_MESSAGE(w.has_value() == best.has_value(), rec << " l=" << l);
                if (!w) continue;
                REQUIRE(is_valid(g, *w));
                const auto key = oracle::switch_key(g, w->path, w->apex, w->t, w->s);
                REQUIRE_MESSAGE(key == *best, rec << " l=" << l);
            }
        }
}

TEST_CASE("a C~ with an edge leaving it yields a (t,1,l)-switch") {
    for (int n = 5; n <= 8; ++n)
        for (const auto& rec : oracle::geng("-c " + std::to_string(n))) {
            const Graph g = parse_graph6(rec);
            for (int l = 3; l < n - 1; ++l) {
                const auto c = find_c_tilde(g, l);
                if (!c) continue;
                // Connected with l + 1 < n vertices in the gadget: some edge leaves it.
                const auto w = find_switch(g, l);
                REQUIRE_MESSAGE(w, rec << " l=" << l);
                CHECK(w->s >= 1);
            }
        }
}

TEST_CASE("a switch does not imply a C~ of the same length") {
    // Path 0-1-2-3 with 4 on the edge 1-2: a (2,1,3)-switch, yet no 3-cycle has an apex.
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
    REQUIRE(find_switch(g, 3));
    CHECK_FALSE(find_c_tilde(g, 3));
    CHECK_FALSE(oracle::has_c_tilde(g, 3));
}

TEST_CASE("find_dumbbell") {
    const auto bow = find_dumbbell(graphs::bowtie(), 0);
    REQUIRE(bow);
    CHECK(bow->is_bowtie());
    CHECK(bow->tri_a == std::array<Vertex, 3>{0, 1, 2});
    CHECK(bow->tri_b == std::array<Vertex, 3>{2, 3, 4});
    CHECK(is_valid(graphs::bowtie(), *bow));

    const Graph d1 = graphs::dumbbell(1);
    const auto w1 = find_dumbbell(d1, 1);
    REQUIRE(w1);
    CHECK(w1->tri_a == std::array<Vertex, 3>{0, 1, 2});
    CHECK(w1->tri_b == std::array<Vertex, 3>{3, 4, 5});
    CHECK(w1->path == std::vector<Vertex>{2, 3});
    CHECK(is_valid(d1, *w1));
    CHECK_FALSE(find_dumbbell(d1, 0));
    CHECK_FALSE(find_dumbbell(d1, 2));

    const Graph d3 = graphs::dumbbell(3);
    REQUIRE(find_dumbbell(d3, 3));
    CHECK(find_dumbbell(d3, 3)->length() == 3);
    CHECK_FALSE(find_dumbbell(d3, 2));

    for (int l = 0; l <= 4; ++l) CHECK_FALSE(find_dumbbell(graphs::complete_bipartite(3, 3), l));
    CHECK_THROWS_AS(find_dumbbell(d1, -1), PreconditionViolated);
}

TEST_CASE("find_dumbbell agrees with brute force") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::random_graph(6 + trial % 4, 0.3, rng);
        for (int l = 1; l <= 3; ++l) {
            const auto w = find_dumbbell(g, l);
            REQUIRE(w.has_value() == brute_dumbbell(g, l));
            if (w) REQUIRE(is_valid(g, *w));
        }
    }
}

TEST_CASE("shortest_st_path examples") {
    const Graph c9 = graphs::cycle(9);
    const auto adj = shortest_st_path(c9, VertexSet{0, 1}, VertexSet{2, 3});
    REQUIRE(adj);
    CHECK(adj->length() == 1);

    const auto p = shortest_st_path(c9, VertexSet{0, 1}, VertexSet{4, 5});
    REQUIRE(p);
    CHECK(p->length() == 3);
    CHECK(p->vertices == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(p->successor(0) == 2);
    CHECK(p->predecessor(3) == 3);
    CHECK(is_valid(c9, *p, VertexSet{0, 1}, VertexSet{4, 5}));

    const Graph split(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK_FALSE(shortest_st_path(split, VertexSet{0}, VertexSet{5}));

    const auto around = shortest_st_path(c9, VertexSet{0, 1}, VertexSet{4, 5}, VertexSet{2});
    REQUIRE(around);
    CHECK(around->vertices == std::vector<Vertex>{0, 8, 7, 6, 5});
    CHECK_FALSE(shortest_st_path(c9, VertexSet{0, 1}, VertexSet{4, 5}, VertexSet{2, 7}));
}

TEST_CASE("shortest_st_path rejects bad sets") {
    const Graph c9 = graphs::cycle(9);
    CHECK_THROWS_AS(shortest_st_path(c9, VertexSet{}, VertexSet{1}), InvalidSets);
    CHECK_THROWS_AS(shortest_st_path(c9, VertexSet{1}, VertexSet{}), InvalidSets);
    CHECK_THROWS_AS(shortest_st_path(c9, VertexSet{1, 2}, VertexSet{2, 3}), InvalidSets);
    CHECK_THROWS_AS(shortest_st_path(c9, VertexSet{1}, VertexSet{3}, VertexSet{1}), InvalidSets);
    CHECK_THROWS_AS(shortest_st_path(c9, VertexSet{1}, VertexSet{12}), InvalidSets);
}

TEST_CASE("shortest_st_path is globally shortest") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 4 + trial % 5;
        const Graph g = oracle::random_graph(n, 0.25 + 0.05 * (trial % 6), rng);
        VertexSet s, t, x;
        for (int v = 0; v < n; ++v) {
            switch (rng() % 4) {
                case 0: s.insert(v); break;
                case 1: t.insert(v); break;
                case 2: if (rng() % 3 == 0) x.insert(v); break;
                default: break;
            }
        }
        if (s.empty() || t.empty()) continue;
        const auto p = shortest_st_path(g, s, t, x);
        const int ref = oracle::shortest_st_path(g, flags(n, s), flags(n, t), flags(n, x));
        REQUIRE(p.has_value() == (ref >= 0));
        if (p) {
            REQUIRE(p->length() == ref);
            REQUIRE(is_valid(g, *p, s, t));
            for (std::size_t i = 1; i + 1 < p->vertices.size(); ++i) CHECK_FALSE(x.contains(p->vertices[i]));
        }
    }
}

TEST_CASE("enlarging S or T never lengthens the shortest path") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 4 + trial % 7;
        const Graph g = oracle::random_graph(n, 0.2 + 0.05 * (trial % 8), rng);
        VertexSet s, t, more_s, more_t;
        for (int v = 0; v < n; ++v) {
            switch (rng() % 6) {
                case 0: s.insert(v); break;
                case 1: t.insert(v); break;
                case 2: more_s.insert(v); break;
                case 3: more_t.insert(v); break;
                default: break;
            }
        }
        if (s.empty() || t.empty()) continue;
        const auto small = shortest_st_path(g, s, t);
        const auto big = shortest_st_path(g, s | more_s, t | more_t);
        if (small) REQUIRE((big && big->length() <= small->length()));
    }
}

TEST_CASE("validators reject tampered witnesses") {
    const Graph k5 = graphs::complete(5);
    TriCycleWitness c = *find_c_tilde(k5, 3);
    CHECK(is_valid(k5, c));
    CHECK_FALSE(is_valid(k5.without_edge(c.cycle[0], c.cycle[1]), c));
    TriCycleWitness bad = c;
    bad.apex = c.cycle[1];
    CHECK_FALSE(is_valid(k5, bad));
    bad = c;
    bad.edge_index = 3;
    CHECK_FALSE(is_valid(k5, bad));
    bad = c;
    bad.cycle[2] = bad.cycle[0];
    CHECK_FALSE(is_valid(k5, bad));
    bad = c;
    bad.apex = 9;
    CHECK_FALSE(is_valid(k5, bad));

    SwitchWitness s = *find_switch(k5, 3);
    CHECK(is_valid(k5, s));
    SwitchWitness bs = s;
    bs.s = 9;
    CHECK_FALSE(is_valid(k5, bs));
    bs = s;
    bs.t = 0;
    CHECK_FALSE(is_valid(k5, bs));

    DumbbellWitness d{{0, 1, 2}, {2, 3, 4}, {}};
    CHECK(is_valid(graphs::bowtie(), d));
    CHECK_FALSE(is_valid(graphs::bowtie().without_edge(3, 4), d));
    d.tri_b = {0, 3, 4};
    CHECK_FALSE(is_valid(graphs::bowtie(), d));

    PathWitness p{{1, 2, 3, 4}};
    CHECK(is_valid(graphs::cycle(9), p, VertexSet{0, 1}, VertexSet{4, 5}));
    CHECK_FALSE(is_valid(graphs::cycle(9), p, VertexSet{0, 1}, VertexSet{3, 4}));
    CHECK_FALSE(is_valid(graphs::cycle(9), p, VertexSet{0, 2}, VertexSet{4, 5}));
}

TEST_CASE("rerouting through the apex gives a cycle one longer") {
    std::mt19937_64 rng(59);
    int seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = oracle::random_graph(9, 0.5, rng);
        for (int l = 3; l <= 8; ++l) {
            const auto w = find_c_tilde(g, l);
            if (!w) continue;
            ++seen;
            const auto cyc = reroute_through_apex(*w);
            REQUIRE(static_cast<int>(cyc.size()) == l + 1);
            for (std::size_t i = 0; i < cyc.size(); ++i) REQUIRE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
            std::vector<Vertex> sorted = cyc;
            std::sort(sorted.begin(), sorted.end());
            REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
    CHECK(seen > 500);
}

}  // TEST_SUITE
