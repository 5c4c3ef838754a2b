#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "../../tools/cli.hpp"
#include "pancycle/certify.hpp"
#include "pancycle/graph6.hpp"

using namespace pancycle;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "pancycle");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string k9 = write_graph6(graphs::complete(9));
const std::string c9 = write_graph6(graphs::cycle(9));

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
    const Result ok = run({"check", k9});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("pancyclic: holds") != std::string::npos);

    const Result unmet = run({"check", c9});
    CHECK(unmet.code == cli::kOk);
    CHECK(unmet.out.find("hypotheses unmet") != std::string::npos);

    const Result j = run({"--json", "check", k9});
    CHECK(j.code == cli::kOk);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["hypotheses_met"] == true);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"check"}).code == cli::kUsage);
    CHECK(run({"check", "not-graph6"}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({"gadget", k9, "--kind", "ctilde"}).code == cli::kUsage);
    CHECK(run({"gadget", k9, "--kind", "ctilde", "--len", "9"}).code == cli::kUsage);
    CHECK(run({"probe", "--in", "-", "--p", "3"}).code == cli::kUsage);
    CHECK(run({"scan", "--in", "/nonexistent.g6"}).code == cli::kUsage);
    CHECK(run({"scan", "--in", "-", "--checks", "theorem,nope"}).code == cli::kUsage);
}

TEST_CASE("inline graph and --file together") {
    const fs::path f = fs::temp_directory_path() / ("pancycle_cli_" + std::to_string(::getpid()) + ".g6");
    std::ofstream(f) << k9 << '\n';
    CHECK(run({"check", k9, "--file", f.string()}).code == cli::kUsage);
    CHECK(run({"check", "--file", f.string()}).code == cli::kOk);
    fs::remove(f);
}

TEST_CASE("certify") {
    const Result ok = run({"--json", "certify", k9});
    CHECK(ok.code == cli::kOk);
    const Json cert = Json::parse(ok.out);
    CHECK(cert.contains("lengths"));

    CHECK(run({"certify", c9}).code == cli::kUsage);
    const Result forced = run({"certify", c9, "--skip-hypotheses"});
    CHECK(forced.code == cli::kCounterexample);
    CHECK(forced.err.find("missing 3 4 5 6 7 8") != std::string::npos);
}

TEST_CASE("spectrum") {
    const Result r = run({"spectrum", "Dhc"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("present:   5") != std::string::npos);
    CHECK(r.out.find("missing:   3 4") != std::string::npos);
    const Json j = Json::parse(run({"--json", "spectrum", k9}).out);
    CHECK(j["pancyclic"] == true);
}

TEST_CASE("gadget") {
    const Json w = Json::parse(run({"--json", "gadget", k9, "--kind", "switch", "--len", "3"}).out);
    CHECK(w["witness"]["t"] == 1);
    CHECK(run({"gadget", c9, "--kind", "triangle"}).out == "none\n");
    const Json bow = Json::parse(run({"--json", "gadget", write_graph6(graphs::bowtie()), "--kind", "bowtie"}).out);
    CHECK_FALSE(bow["witness"].is_null());
}

TEST_CASE("lemma") {
    CHECK(run({"lemma", k9, "--which", "gadget"}).code == cli::kOk);
    CHECK(run({"lemma", k9, "--which", "path", "--p", "3", "--mode", "sampled", "--count", "20"}).code == cli::kOk);
    const Json j = Json::parse(run({"--json", "lemma", write_graph6(blow_up(graphs::cycle(5), 3)), "--which",
                                    "triangle", "--p", "6"})
                                   .out);
    CHECK(j["conclusion"] == true);
}

TEST_CASE("scan exit codes") {
    const fs::path f = fs::temp_directory_path() / ("pancycle_cli_scan_" + std::to_string(::getpid()) + ".g6");
    std::ofstream(f) << k9 << '\n' << c9 << '\n';
    const Result plain = run({"--json", "scan", "--in", f.string()});
    CHECK(plain.code == cli::kOk);
    const Json rep = Json::parse(plain.out);
    CHECK(rep["totals"]["read"] == 2);
    CHECK(rep["totals"]["verified"] == 1);

    const Result loose = run({"scan", "--in", f.string(), "--min-degree", "2", "--st", "1", "0"});
    CHECK(loose.code == cli::kCounterexample);
    CHECK(loose.out.find("counterexample #2: " + c9) != std::string::npos);
    fs::remove(f);
}

}  // TEST_SUITE
