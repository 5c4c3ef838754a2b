#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"
#include "pancycle/harness.hpp"

using namespace pancycle;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("pancycle_harness_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const std::string& name) const { return path / name; }
};

void write_lines(const fs::path& p, const std::vector<std::string>& lines) {
    std::ofstream f(p, std::ios::binary);
    for (const auto& l : lines) f << l << '\n';
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> mixed_input() {
    auto lines = oracle::geng("-C -d3 9 7/400");
    lines.insert(lines.begin() + 5, "not a graph");
    lines.insert(lines.begin() + 9, write_graph6(graphs::complete(4)));
    lines.insert(lines.begin() + 12, write_graph6(graphs::cycle(9)));
    lines.push_back(">>graph6<<" + write_graph6(graphs::complete(10)));
    lines.push_back("~~");
    return lines;
}

// Hypotheses loose enough that a 9-cycle passes them and fails pancyclicity.
ScanConfig loose_config() {
    ScanConfig cfg;
    Hypotheses& h = cfg.filter.hypotheses;
    h.require_two_connected = false;
    h.min_degree = 0;
    h.min_order = 3;
    h.override_st(1, 0);
    return cfg;
}

void check_identity(const ScanTotals& t) {
    CHECK(t.read == t.parse_errors + t.filtered_sum() + t.verified);
    CHECK(t.counterexamples <= t.verified);
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("check names") {
    for (Check c : {Check::Theorem, Check::GadgetLemma, Check::PathLemma, Check::TriangleLemma})
        CHECK(check_from_string(to_string(c)) == c);
    CHECK_FALSE(check_from_string("bogus"));
}

TEST_CASE("empty input") {
    TempDir dir;
    write_lines(dir / "empty.g6", {});
    const ScanReport r = scan((dir / "empty.g6").string(), ScanConfig{});
    CHECK(r.totals == ScanTotals{});
    CHECK(r.complete);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("accounting over a mixed input") {
    TempDir dir;
    const auto lines = mixed_input();
    write_lines(dir / "in.g6", lines);
    const ScanReport r = scan((dir / "in.g6").string(), ScanConfig{});
    CHECK(r.totals.read == lines.size());
    CHECK(r.totals.parse_errors == 2);
    CHECK(r.totals.filtered_out.at("order") == 1);
    CHECK(r.totals.filtered_out.at("mindeg") == 1);
    CHECK(r.totals.counterexamples == 0);
    CHECK(r.totals.inconsistencies == 0);
    CHECK(r.totals.orders_seen.at(10) == 1);
    check_identity(r.totals);

    std::uint64_t expected_verified = 0;
    for (const auto& l : lines) {
        try {
            if (check_hypotheses(parse_graph6(l), Hypotheses::for_p(3)).hypotheses_met) ++expected_verified;
        } catch (const Error&) {
        }
    }
    CHECK(r.totals.verified == expected_verified);

    const Json j = to_json(r);
    CHECK(j["coverage"]["records"] == lines.size());
    CHECK(j["coverage"]["complete"] == true);
    CHECK(j["totals"]["read"] == lines.size());
}

TEST_CASE("order range filter") {
    TempDir dir;
    write_lines(dir / "in.g6", mixed_input());
    ScanConfig cfg;
    cfg.filter.n_min = 10;
    const ScanReport r = scan((dir / "in.g6").string(), cfg);
    CHECK(r.totals.verified == 1);
    check_identity(r.totals);
}

TEST_CASE("counterexamples are reported and written") {
    TempDir dir;
    write_lines(dir / "in.g6", {write_graph6(graphs::complete(9)), write_graph6(graphs::cycle(9)), "junk"});
    ScanConfig cfg = loose_config();
    cfg.out = dir / "out.jsonl";
    const ScanReport r = scan((dir / "in.g6").string(), cfg);
    CHECK(r.totals.verified == 2);
    CHECK(r.totals.counterexamples == 1);
    CHECK(r.totals.inconsistencies == 0);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0].seq == 2);
    CHECK(r.counterexamples[0].g6 == write_graph6(graphs::cycle(9)));
    CHECK(slurp(dir / "out.jsonl.cex.g6") == write_graph6(graphs::cycle(9)) + "\n");

    std::istringstream jsonl(slurp(dir / "out.jsonl"));
    std::string line;
    int count = 0;
    while (std::getline(jsonl, line)) {
        const Json j = Json::parse(line);
        CHECK(j.contains("g6"));
        ++count;
    }
    CHECK(count == 3);

    cfg.emit = EmitMode::Counterexamples;
    scan((dir / "in.g6").string(), cfg);
    std::istringstream only(slurp(dir / "out.jsonl"));
    count = 0;
    while (std::getline(only, line)) {
        CHECK(Json::parse(line)["counterexample"] == true);
        ++count;
    }
    CHECK(count == 1);
}

TEST_CASE("results do not depend on the worker count") {
    TempDir dir;
    write_lines(dir / "in.g6", mixed_input());
    ScanConfig cfg;
    cfg.checks = {Check::Theorem, Check::GadgetLemma, Check::PathLemma, Check::TriangleLemma};
    cfg.path_samples = 20;
    cfg.seed = 99;
    cfg.batch_size = 7;

    std::optional<ScanReport> first;
    std::string first_out;
    for (int w : {1, 4, 8}) {
        cfg.workers = w;
        cfg.out = dir / ("out" + std::to_string(w) + ".jsonl");
        const ScanReport r = scan((dir / "in.g6").string(), cfg);
        const std::string text = slurp(*cfg.out);
        if (!first) {
            first = r;
            first_out = text;
            continue;
        }
        CHECK(r.totals == first->totals);
        CHECK(text == first_out);
    }
}

TEST_CASE("an interrupted scan resumes to the same result") {
    TempDir dir;
    write_lines(dir / "in.g6", mixed_input());
    ScanConfig base = loose_config();
    base.batch_size = 5;
    base.out = dir / "full.jsonl";
    const ScanReport full = scan((dir / "in.g6").string(), base);

    ScanConfig cfg = base;
    cfg.out = dir / "part.jsonl";
    cfg.checkpoint = dir / "cp.json";
    cfg.checkpoint_every_records = 3;
    cfg.stop_after = 23;
    const ScanReport part = scan((dir / "in.g6").string(), cfg);
    CHECK_FALSE(part.complete);
    CHECK(part.last_seq == 23);
    check_identity(part.totals);

    cfg.stop_after.reset();
    cfg.workers = 3;
    const ScanReport rest = scan((dir / "in.g6").string(), cfg);
    CHECK(rest.resumed);
    CHECK(rest.complete);
    CHECK(rest.totals == full.totals);
    check_identity(rest.totals);
    CHECK(slurp(dir / "part.jsonl") == slurp(dir / "full.jsonl"));
    CHECK(slurp(dir / "part.jsonl.cex.g6") == slurp(dir / "full.jsonl.cex.g6"));

    const ScanReport again = resume(dir / "cp.json");
    CHECK(again.complete);
    CHECK(again.totals == full.totals);
}

TEST_CASE("resume() continues from the checkpoint file alone") {
    TempDir dir;
    write_lines(dir / "in.g6", mixed_input());
    ScanConfig cfg;
    const ScanReport full = scan((dir / "in.g6").string(), cfg);

    cfg.checkpoint = dir / "cp.json";
    cfg.stop_after = 10;
    scan((dir / "in.g6").string(), cfg);
    const ScanReport r = resume(dir / "cp.json", 2);
    CHECK(r.complete);
    CHECK(r.totals == full.totals);
}

TEST_CASE("a checkpoint refuses changed input or configuration") {
    TempDir dir;
    auto lines = mixed_input();
    write_lines(dir / "in.g6", lines);
    ScanConfig cfg;
    cfg.checkpoint = dir / "cp.json";
    cfg.stop_after = 10;
    scan((dir / "in.g6").string(), cfg);

    ScanConfig other = cfg;
    other.seed = 5;
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), other), CheckpointMismatch);
    other = cfg;
    other.filter.n_min = 9;
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), other), CheckpointMismatch);

    std::swap(lines[0], lines[1]);
    write_lines(dir / "in.g6", lines);
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), cfg), CheckpointMismatch);

    lines.pop_back();
    write_lines(dir / "in.g6", lines);
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), cfg), CheckpointMismatch);
}

TEST_CASE("gzip input is read transparently") {
    TempDir dir;
    write_lines(dir / "in.g6", mixed_input());
    const std::string cmd = "gzip -c '" + (dir / "in.g6").string() + "' > '" + (dir / "in.g6.gz").string() + "'";
    REQUIRE(std::system(cmd.c_str()) == 0);
    const ScanReport plain = scan((dir / "in.g6").string(), ScanConfig{});
    const ScanReport gz = scan((dir / "in.g6.gz").string(), ScanConfig{});
    CHECK(gz.totals == plain.totals);
}

TEST_CASE("stream input") {
    const auto lines = mixed_input();
    std::FILE* f = std::tmpfile();
    REQUIRE(f);
    for (const auto& l : lines) std::fprintf(f, "%s\n", l.c_str());
    std::rewind(f);
    const ScanReport r = scan(f, "tmp", ScanConfig{});
    CHECK(r.totals.read == lines.size());
    check_identity(r.totals);

    ScanConfig cp;
    cp.checkpoint = "never.json";
    std::rewind(f);
    CHECK_THROWS_AS(scan(f, "tmp", cp), PreconditionViolated);
    std::fclose(f);
}

TEST_CASE("missing input") {
    CHECK_THROWS_AS(scan("/nonexistent/input.g6", ScanConfig{}), InputUnreadable);
}

TEST_CASE("invalid configurations") {
    TempDir dir;
    write_lines(dir / "in.g6", {});
    ScanConfig cfg;
    cfg.workers = 0;
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), cfg), PreconditionViolated);
    cfg = ScanConfig{};
    cfg.checks.clear();
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), cfg), PreconditionViolated);
    cfg = ScanConfig{};
    cfg.filter.n_min = 12;
    cfg.filter.n_max = 11;
    CHECK_THROWS_AS(scan((dir / "in.g6").string(), cfg), PreconditionViolated);
    cfg = ScanConfig{};
    cfg.checkpoint = dir / "cp.json";
    CHECK_THROWS_AS(scan("-", cfg), PreconditionViolated);
}

TEST_CASE("probe") {
    TempDir dir;
    write_lines(dir / "in.g6", {write_graph6(graphs::complete(9)), write_graph6(graphs::complete(11)),
                                write_graph6(graphs::complete(12))});
    CHECK_THROWS_AS(probe_conjecture(3, (dir / "in.g6").string(), ScanConfig{}), PreconditionViolated);
    CHECK_THROWS_AS(probe_conjecture(6, (dir / "in.g6").string(), ScanConfig{}), PreconditionViolated);
    const ScanReport r = probe_conjecture(4, (dir / "in.g6").string(), ScanConfig{});
    CHECK(r.totals.filtered_out.at("order") == 1);
    CHECK(r.totals.verified == 2);
    CHECK(r.config["filter"]["hypotheses"]["s"] == 6);
}

TEST_CASE("config round trip") {
    ScanConfig cfg = loose_config();
    cfg.checks = {Check::PathLemma, Check::Theorem};
    cfg.seed = 12;
    cfg.path_samples = 40;
    cfg.emit = EmitMode::Verified;
    cfg.filter.n_min = 7;
    const ScanConfig back = scan_config_from_json(to_json(cfg));
    CHECK(to_json(back) == to_json(cfg));
}

}  // TEST_SUITE
