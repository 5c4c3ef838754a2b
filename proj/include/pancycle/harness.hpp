#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pancycle/certify.hpp"

namespace pancycle {

enum class Check { Theorem, GadgetLemma, PathLemma, TriangleLemma };

std::string_view to_string(Check c);
std::optional<Check> check_from_string(std::string_view s);

struct FilterSpec {
    Hypotheses hypotheses = Hypotheses::for_p(3);
    int n_min = 1;
    int n_max = kMaxOrder;
};

/// Which records go to the JSONL output.
enum class EmitMode { All, Verified, Counterexamples };

struct ScanConfig {
    FilterSpec filter;
    std::vector<Check> checks{Check::Theorem};
    int workers = 1;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> path_samples;  // sampled path-lemma mode; exhaustive when unset

    std::optional<std::filesystem::path> out;  // counterexamples also go to <out>.cex.g6
    EmitMode emit = EmitMode::All;

    std::optional<std::filesystem::path> checkpoint;
    std::uint64_t checkpoint_every_records = 100000;
    double checkpoint_every_seconds = 10.0;

    // Stop after this many records as if interrupted; the checkpoint (when
    // configured) lets a later run continue from there.
    std::optional<std::uint64_t> stop_after;
    std::size_t batch_size = 256;
};

struct ScanTotals {
    std::uint64_t read = 0;
    std::uint64_t parse_errors = 0;
    std::map<std::string, std::uint64_t> filtered_out{{"order", 0}, {"mindeg", 0}, {"twoconn", 0}, {"st", 0}};
    std::uint64_t verified = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t inconsistencies = 0;
    std::map<int, std::uint64_t> orders_seen;

    std::uint64_t filtered_sum() const;
    friend bool operator==(const ScanTotals&, const ScanTotals&) = default;
};

struct FlaggedRecord {
    std::uint64_t seq = 0;
    std::string g6;
    Json detail;
};

struct ScanReport {
    ScanTotals totals;
    std::vector<FlaggedRecord> counterexamples;
    std::vector<FlaggedRecord> inconsistencies;
    std::string input;
    std::uint64_t last_seq = 0;
    bool complete = false;
    bool resumed = false;
    double wall_seconds = 0;
    Json config;
};

/// Scans a graph6 stream ("-" for standard input; gzip is detected from the
/// magic bytes). Output order follows input order for any worker count.
/// With a checkpoint path that already exists, the scan continues from it
/// provided the input bytes and configuration match; otherwise
/// CheckpointMismatch is thrown.
ScanReport scan(const std::string& input, const ScanConfig& cfg);

/// Same over an already-open stream (e.g. a pipe from a generator).
/// Checkpointing is unavailable here since the content cannot be re-read.
ScanReport scan(std::FILE* stream, const std::string& label, const ScanConfig& cfg);

/// Scan specialised to the open cases p = 4, 5: hypotheses(p), orders from
/// 2p+3, theorem check only. Counterexamples are flushed as they are found.
ScanReport probe_conjecture(int p, const std::string& input, ScanConfig cfg);
ScanReport probe_conjecture(int p, std::FILE* stream, const std::string& label, ScanConfig cfg);

/// Continues the scan recorded in `checkpoint`. A finished scan returns its
/// stored report immediately.
ScanReport resume(const std::filesystem::path& checkpoint, std::optional<int> workers = std::nullopt);

Json to_json(const ScanReport& r);
Json to_json(const ScanConfig& cfg);
ScanConfig scan_config_from_json(const Json& j);

}  // namespace pancycle
