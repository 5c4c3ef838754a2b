#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pancycle/certify.hpp"
#include "pancycle/cycles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/gadgets.hpp"
#include "pancycle/graph6.hpp"
#include "pancycle/harness.hpp"
#include "pancycle/serialize.hpp"

namespace pancycle::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string inline_g6;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("g6", inline_g6, "Graph in graph6 format");
        cmd->add_option("--file", file, "Read the graph from the first record of a file");
    }

    Graph load() const {
        if (!inline_g6.empty() && !file.empty()) throw UsageError("give the graph inline or with --file, not both");
        if (inline_g6.empty() && file.empty()) throw UsageError("no graph given");
        std::string text = inline_g6;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw UsageError("cannot read '" + file + "'");
            while (std::getline(in, text) && text.find_first_not_of(" \t\r") == std::string::npos) {
            }
        }
        try {
            return parse_graph6(text);
        } catch (const Error& e) {
            throw UsageError(std::string("bad graph6 record: ") + e.what());
        }
    }
};

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s.empty() ? "-" : s;
}

std::string tri_state(const std::optional<bool>& b) { return b ? (*b ? "pass" : "fail") : "not evaluated"; }

void print_checks(std::ostream& out, const HypothesisChecks& c) {
    out << "order:          " << tri_state(c.order) << '\n'
        << "min degree:     " << tri_state(c.min_degree) << '\n'
        << "2-connected:    " << tri_state(c.two_connected) << '\n';
    if (c.connected) out << "connected:      " << tri_state(c.connected) << '\n';
    out << "[s,t]:          " << tri_state(c.st) << '\n';
}

int verdict_exit(const Verdict& v) {
    if (v.counterexample) return kCounterexample;
    if (v.inconsistent) return kInconsistent;
    return kOk;
}

void print_verdict(std::ostream& out, const Verdict& v, bool json, std::string_view what) {
    if (json) {
        out << to_json(v).dump() << '\n';
        return;
    }
    out << "graph:          " << v.g6 << '\n';
    print_checks(out, v.checks);
    if (!v.hypotheses_met) {
        out << what << ": hypotheses unmet, not evaluated\n";
        return;
    }
    out << what << ": " << (v.conclusion && *v.conclusion ? "holds" : "FAILS") << '\n';
    if (v.counterexample) out << "COUNTEREXAMPLE\n";
    if (v.inconsistent) out << "INCONSISTENT: certificate engine and cycle spectrum disagree\n";
    if (v.detail) out << "detail:         " << v.detail->dump() << '\n';
}

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
    static const std::map<std::string, Check> aliases{{"theorem", Check::Theorem},
                                                      {"gadget", Check::GadgetLemma},
                                                      {"gadget_lemma", Check::GadgetLemma},
                                                      {"path", Check::PathLemma},
                                                      {"path_lemma", Check::PathLemma},
                                                      {"triangle", Check::TriangleLemma},
                                                      {"triangle_lemma", Check::TriangleLemma}};
    std::vector<Check> out;
    for (const auto& n : names) {
        auto it = aliases.find(n);
        if (it == aliases.end()) throw UsageError("unknown check '" + n + "'");
        if (std::find(out.begin(), out.end(), it->second) == out.end()) out.push_back(it->second);
    }
    return out;
}

void print_report(std::ostream& out, const ScanReport& r, bool json) {
    if (json) {
        out << to_json(r).dump(2) << '\n';
        return;
    }
    const auto& t = r.totals;
    out << "input:           " << r.input << (r.resumed ? " (resumed)" : "") << '\n'
        << "records read:    " << t.read << '\n'
        << "parse errors:    " << t.parse_errors << '\n'
        << "filtered out:    " << t.filtered_sum();
    std::string parts;
    for (const auto& [k, v] : t.filtered_out) parts += (parts.empty() ? "" : ", ") + k + " " + std::to_string(v);
    out << " (" << parts << ")\n"
        << "verified:        " << t.verified << '\n'
        << "counterexamples: " << t.counterexamples << '\n';
    if (t.inconsistencies) out << "inconsistencies: " << t.inconsistencies << '\n';
    std::string orders;
    for (const auto& [n, c] : t.orders_seen) orders += (orders.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(c);
    out << "orders seen:     " << (orders.empty() ? "-" : orders) << '\n'
        << "complete:        " << (r.complete ? "yes" : "no, resume from the checkpoint") << '\n'
        << "wall seconds:    " << r.wall_seconds << '\n';
    for (const auto& c : r.counterexamples) out << "counterexample #" << c.seq << ": " << c.g6 << '\n';
    for (const auto& c : r.inconsistencies) out << "inconsistency #" << c.seq << ": " << c.g6 << ' ' << c.detail.dump() << '\n';
}

int report_exit(const ScanReport& r) {
    if (r.totals.counterexamples) return kCounterexample;
    if (r.totals.inconsistencies) return kInconsistent;
    return kOk;
}

struct ScanOutputFlags {
    std::string out;
    std::string emit = "all";
    std::string checkpoint;
    std::uint64_t checkpoint_every = 100000;
    double checkpoint_seconds = 10.0;
    std::uint64_t max_records = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", out, "JSONL verdict file; counterexamples also go to <out>.cex.g6");
        cmd->add_option("--emit", emit, "Records written to --out")
            ->check(CLI::IsMember({"all", "verified", "counterexamples"}));
        cmd->add_option("--checkpoint", checkpoint, "Checkpoint file; an existing one is continued");
        cmd->add_option("--checkpoint-every", checkpoint_every, "Records between checkpoints")->check(CLI::PositiveNumber);
        cmd->add_option("--checkpoint-seconds", checkpoint_seconds, "Seconds between checkpoints")->check(CLI::PositiveNumber);
        cmd->add_option("--max-records", max_records, "Stop after this many records, leaving the scan resumable");
    }

    void apply(ScanConfig& cfg) const {
        if (!out.empty()) cfg.out = out;
        cfg.emit = emit == "verified" ? EmitMode::Verified : emit == "counterexamples" ? EmitMode::Counterexamples : EmitMode::All;
        if (!checkpoint.empty()) cfg.checkpoint = checkpoint;
        cfg.checkpoint_every_records = checkpoint_every;
        cfg.checkpoint_every_seconds = checkpoint_seconds;
        if (max_records) cfg.stop_after = max_records;
    }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pancyclicity verification for [s,t]-graphs", "pancycle"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> workers;
    std::uint64_t seed = 0;
    bool json = false;
    app.add_option("--workers", workers, "Worker threads for scans")->envname("PANCYCLE_WORKERS")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_flag("--json", json, "Machine-readable JSON on standard output");

    GraphSource src;
    int p = 3;

    auto* check = app.add_subcommand("check", "Hypotheses and pancyclicity verdict for one graph");
    src.attach(check);
    check->add_option("--p", p, "Conjecture parameter")->check(CLI::Range(2, 6));

    auto* certify = app.add_subcommand("certify", "Emit a per-length cycle certificate");
    src.attach(certify);
    bool unchecked = false;
    certify->add_flag("--skip-hypotheses", unchecked, "Build the certificate without checking the hypotheses");

    auto* spectrum = app.add_subcommand("spectrum", "Cycle lengths present and missing");
    src.attach(spectrum);

    auto* gadget = app.add_subcommand("gadget", "Find a structural configuration");
    src.attach(gadget);
    std::string kind;
    std::optional<int> len;
    gadget->add_option("--kind", kind, "Configuration to find")
        ->required()
        ->check(CLI::IsMember({"triangle", "ctilde", "switch", "dumbbell", "bowtie"}));
    gadget->add_option("--len", len, "Cycle or path length");

    auto* lemma = app.add_subcommand("lemma", "Check a lemma statement on one graph");
    src.attach(lemma);
    std::string which, mode = "exhaustive";
    std::uint64_t count = 1000;
    lemma->add_option("--which", which, "Lemma to check")->required()->check(CLI::IsMember({"gadget", "path", "triangle"}));
    lemma->add_option("--p", p, "Lemma parameter")->check(CLI::Range(2, 6));
    lemma->add_option("--mode", mode, "Path lemma mode")->check(CLI::IsMember({"exhaustive", "sampled"}));
    lemma->add_option("--count", count, "Samples in sampled mode")->check(CLI::PositiveNumber);

    auto* scan_cmd = app.add_subcommand("scan", "Scan a graph6 stream");
    std::string input;
    std::vector<std::string> checks{"theorem"};
    std::optional<int> n_min, n_max, min_order, min_degree_flag;
    std::vector<int> st;
    bool no_two_connected = false;
    std::uint64_t path_samples = 0;
    ScanOutputFlags scan_flags;
    scan_cmd->add_option("--in", input, "graph6 input, optionally gzipped; - for standard input")->required();
    scan_cmd->add_option("--p", p, "Conjecture parameter")->check(CLI::Range(2, 6));
    scan_cmd->add_option("--checks", checks, "theorem, gadget_lemma, path_lemma, triangle_lemma")->delimiter(',');
    scan_cmd->add_option("--n-min", n_min, "Smallest order scanned")->check(CLI::Range(1, 64));
    scan_cmd->add_option("--n-max", n_max, "Largest order scanned")->check(CLI::Range(1, 64));
    scan_cmd->add_option("--min-order", min_order, "Override the order hypothesis")->check(CLI::Range(3, 64));
    scan_cmd->add_option("--min-degree", min_degree_flag, "Override the minimum degree hypothesis")->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--st", st, "Override the [s,t] condition")->expected(2);
    scan_cmd->add_flag("--no-two-connected", no_two_connected, "Drop the 2-connectivity hypothesis");
    scan_cmd->add_option("--path-samples", path_samples, "Sampled path lemma with this many pairs per graph");
    scan_flags.attach(scan_cmd);

    auto* probe = app.add_subcommand("probe", "Counterexample search for the open cases p = 4, 5");
    ScanOutputFlags probe_flags;
    probe->add_option("--in", input, "graph6 input, optionally gzipped; - for standard input")->required();
    probe->add_option("--p", p, "4 or 5")->required();
    probe_flags.attach(probe);

    auto* resume_cmd = app.add_subcommand("resume", "Continue an interrupted scan");
    std::string checkpoint;
    resume_cmd->add_option("--checkpoint", checkpoint, "Checkpoint file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed()) {
            const Graph g = src.load();
            const Verdict v = verify_main_theorem(g, Hypotheses::for_p(p));
            print_verdict(out, v, json, "pancyclic");
            return verdict_exit(v);
        }

        if (certify->parsed()) {
            const Graph g = src.load();
            try {
                const PancyclicCertificate cert = unchecked ? build_certificate(g) : certify_pancyclic(g);
                if (!verify_certificate(g, cert)) {
                    err << "certificate failed independent verification\n";
                    return kInconsistent;
                }
                out << to_json(cert).dump(json ? -1 : 2) << '\n';
                return kOk;
            } catch (const HypothesesViolated& e) {
                err << e.what() << '\n';
                return kUsage;
            } catch (const Error& e) {
                if (g.order() < 3) throw UsageError("a certificate needs at least 3 vertices");
                const SpectrumVerdict s = cycle_spectrum(g);
                err << e.what() << '\n';
                err << "cycle spectrum: missing " << join(s.missing) << '\n';
                return s.pancyclic ? kInconsistent : kCounterexample;
            }
        }

        if (spectrum->parsed()) {
            const Graph g = src.load();
            if (g.order() < 3) throw UsageError("the cycle spectrum needs at least 3 vertices");
            const SpectrumVerdict s = cycle_spectrum(g);
            if (json) {
                out << to_json(s).dump() << '\n';
            } else {
                out << "present:   " << join(s.present) << '\n'
                    << "missing:   " << join(s.missing) << '\n'
                    << "pancyclic: " << (s.pancyclic ? "yes" : "no") << '\n';
            }
            return kOk;
        }

        if (gadget->parsed()) {
            const Graph g = src.load();
            Json found;
            if (kind == "triangle") {
                if (auto t = find_triangle(g)) found = triangle_to_json(*t);
            } else if (kind == "bowtie") {
                if (auto w = find_dumbbell(g, 0)) found = to_json(*w);
            } else {
                if (!len) throw UsageError("--kind " + kind + " needs --len");
                if (kind == "dumbbell") {
                    if (*len < 1) throw UsageError("dumbbell length must be at least 1; use --kind bowtie for 0");
                    if (auto w = find_dumbbell(g, *len)) found = to_json(*w);
                } else {
                    if (*len < 3 || *len > g.order() - 1) throw UsageError("--len must lie in [3, n-1]");
                    if (kind == "ctilde") {
                        if (auto w = find_c_tilde(g, *len)) found = to_json(*w);
                    } else if (auto w = find_switch(g, *len)) {
                        found = to_json(*w);
                    }
                }
            }
            if (json) {
                Json q{{"kind", kind}, {"len", len ? Json(*len) : Json(nullptr)}};
                out << Json{{"query", q}, {"witness", found}}.dump() << '\n';
            } else {
                out << (found.is_null() ? "none" : found.dump()) << '\n';
            }
            return kOk;
        }

        if (lemma->parsed()) {
            const Graph g = src.load();
            Verdict v;
            if (which == "gadget") {
                v = verify_gadget_lemma(g);
            } else if (which == "path") {
                v = mode == "sampled" ? verify_path_lemma(g, p, Sampled{count}, seed) : verify_path_lemma(g, p, Exhaustive{});
            } else {
                v = verify_triangle_lemma(g, p);
            }
            print_verdict(out, v, json, "lemma");
            return verdict_exit(v);
        }

        if (scan_cmd->parsed()) {
            ScanConfig cfg;
            cfg.filter.hypotheses = Hypotheses::for_p(p);
            Hypotheses& h = cfg.filter.hypotheses;
            if (min_order) h.min_order = *min_order;
            if (min_degree_flag) h.min_degree = *min_degree_flag;
            if (no_two_connected) h.require_two_connected = false;
            if (!st.empty()) h.override_st(st[0], st[1]);
            if (n_min) cfg.filter.n_min = *n_min;
            if (n_max) cfg.filter.n_max = *n_max;
            cfg.checks = parse_checks(checks);
            cfg.workers = workers.value_or(1);
            cfg.seed = seed;
            if (path_samples) cfg.path_samples = path_samples;
            scan_flags.apply(cfg);
            const ScanReport r = scan(input, cfg);
            print_report(out, r, json);
            return report_exit(r);
        }

        if (probe->parsed()) {
            if (p != 4 && p != 5) throw UsageError("probe takes --p 4 or --p 5; p = 3 is settled, use scan");
            ScanConfig cfg;
            cfg.workers = workers.value_or(1);
            cfg.seed = seed;
            probe_flags.apply(cfg);
            const ScanReport r = probe_conjecture(p, input, cfg);
            print_report(out, r, json);
            return report_exit(r);
        }

        if (resume_cmd->parsed()) {
            const ScanReport r = resume(checkpoint, workers);
            print_report(out, r, json);
            return report_exit(r);
        }
    } catch (const UsageError& e) {
        err << "pancycle: " << e.what() << '\n';
        return kUsage;
    } catch (const InputUnreadable& e) {
        err << "pancycle: " << e.what() << '\n';
        return kUsage;
    } catch (const CheckpointMismatch& e) {
        err << "pancycle: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionViolated& e) {
        err << "pancycle: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "pancycle: internal error: " << e.what() << '\n';
        return kInconsistent;
    }
    return kUsage;
}

}  // namespace pancycle::cli
