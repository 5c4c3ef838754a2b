#include <doctest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"
#include "reference_codec.h"

using namespace pancycle;

namespace {

std::string reference_encode(const Graph& g) {
    unsigned long long rows[64];
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
    char buf[800];
    ref_graph6_encode(g.order(), rows, buf);
    return buf;
}

Graph reference_decode(const std::string& s) {
    unsigned long long rows[64];
    const int n = ref_graph6_decode(s.c_str(), rows);
    REQUIRE(n > 0);
    std::vector<std::uint64_t> r(rows, rows + n);
    return Graph::from_rows(n, r);
}

}  // namespace

TEST_SUITE("graph6") {

TEST_CASE("reference values") {
    // Frozen from nauty's encoder.
    CHECK(reference_encode(graphs::complete(4)) == "C~");
    CHECK(reference_encode(graphs::cycle(5)) == "Dhc");
    CHECK(reference_encode(Graph(1)) == "@");

    CHECK(parse_graph6("C~") == graphs::complete(4));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("Dhc") == graphs::cycle(5));
    CHECK(write_graph6(graphs::complete(4)) == "C~");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(graphs::cycle(5)) == "Dhc");
}

TEST_CASE("header and trailing whitespace") {
    CHECK(parse_graph6(">>graph6<<C~") == graphs::complete(4));
    CHECK(parse_graph6("C~\n") == graphs::complete(4));
    CHECK(parse_graph6("C~\r\n") == graphs::complete(4));
}

TEST_CASE("long order field") {
    const Graph g63(63, {{0, 62}, {5, 7}});
    const std::string s63 = write_graph6(g63);
    CHECK(s63.substr(0, 4) == "~??~");
    CHECK(parse_graph6(s63) == g63);
    CHECK(s63 == reference_encode(g63));

    const Graph g64 = graphs::complete(64);
    CHECK(parse_graph6(write_graph6(g64)) == g64);
    CHECK(write_graph6(g64) == reference_encode(g64));
}

TEST_CASE("malformed records") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("?"), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("C~~"), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("C"), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("A`"), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("C\x7f"), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("C "), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("~?"), MalformedRecord);
    CHECK_THROWS_AS(parse_graph6("~??}"), MalformedRecord);  // 62 in the long form
    CHECK(parse_graph6("A_") == graphs::complete(2));
}

TEST_CASE("orders beyond 64") {
    CHECK_THROWS_AS(parse_graph6("~?@@"), OrderTooLarge);
    CHECK_THROWS_AS(parse_graph6("~~??????"), OrderTooLarge);
}

TEST_CASE("round trip and agreement with the reference codec") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Graph g = oracle::random_graph(n, (rng() % 100) / 100.0, rng);
        const std::string s = write_graph6(g);
        REQUIRE(parse_graph6(s) == g);
        REQUIRE(write_graph6(parse_graph6(s)) == s);
        if (trial % 10 == 0) {
            REQUIRE(s == reference_encode(g));
            REQUIRE(reference_decode(s) == g);
        }
    }
}

TEST_CASE("every 5-vertex record round-trips") {
    for (const auto& rec : oracle::geng("5")) {
        CHECK(write_graph6(parse_graph6(rec)) == rec);
        CHECK(parse_graph6(rec) == reference_decode(rec));
    }
}

}  // TEST_SUITE
