#include "pancycle/harness.hpp"

#include <zlib.h>

#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <mutex>
#include <thread>
#include <unistd.h>

#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"
#include "pancycle/serialize.hpp"

namespace pancycle {

std::string_view to_string(Check c) {
    switch (c) {
        case Check::Theorem: return "theorem";
        case Check::GadgetLemma: return "gadget_lemma";
        case Check::PathLemma: return "path_lemma";
        case Check::TriangleLemma: return "triangle_lemma";
    }
    return "unknown";
}

std::optional<Check> check_from_string(std::string_view s) {
    for (Check c : {Check::Theorem, Check::GadgetLemma, Check::PathLemma, Check::TriangleLemma})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

std::uint64_t ScanTotals::filtered_sum() const {
    std::uint64_t sum = 0;
    for (const auto& [k, v] : filtered_out) sum += v;
    return sum;
}

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kCheckpointVersion = 1;

class LineReader {
public:
    explicit LineReader(gzFile f) : f_(f) {
        if (!f_) throw InputUnreadable("cannot open input stream");
        gzbuffer(f_, 1 << 17);
    }
    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;
    ~LineReader() { gzclose(f_); }

    static LineReader open(const std::string& path) {
        if (path == "-") return LineReader(gzdopen(dup(STDIN_FILENO), "rb"));
        gzFile f = gzopen(path.c_str(), "rb");
        if (!f) throw InputUnreadable("cannot open input '" + path + "'");
        return LineReader(f);
    }

    // Next non-empty line without its terminator.
    bool next(std::string& line) {
        for (;;) {
            line.clear();
            bool got = false;
            while (gzgets(f_, buf_, sizeof buf_)) {
                got = true;
                line.append(buf_);
                if (line.back() == '\n') break;
            }
            int err = 0;
            gzerror(f_, &err);
            if (err != Z_OK && err != Z_STREAM_END) throw InputUnreadable("input read error");
            if (!got) return false;
            while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
            if (!line.empty()) return true;
        }
    }

private:
    gzFile f_;
    char buf_[4096];
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

Json file_identity(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputUnreadable("cannot open input '" + path + "'");
    std::vector<char> chunk(1 << 20);
    std::uint64_t h = 1469598103934665603ull, size = 0;
    while (in) {
        in.read(chunk.data(), static_cast<std::streamsize>(chunk.size()));
        const auto got = static_cast<std::size_t>(in.gcount());
        h = fnv1a(std::string_view(chunk.data(), got), h);
        size += got;
    }
    return Json{{"path", fs::absolute(path).string()}, {"size", size}, {"hash", hex64(h)}};
}

Json hypotheses_to_json(const Hypotheses& h) {
    return Json{{"p", h.p}, {"s", h.s}, {"t", h.t}, {"min_order", h.min_order}, {"min_degree", h.min_degree},
                {"two_connected", h.require_two_connected}, {"st_overridden", h.st_overridden}};
}

Hypotheses hypotheses_from_json(const Json& j) {
    Hypotheses h;
    h.p = j.at("p").get<int>();
    h.s = j.at("s").get<int>();
    h.t = j.at("t").get<int>();
    h.min_order = j.at("min_order").get<int>();
    h.min_degree = j.at("min_degree").get<int>();
    h.require_two_connected = j.at("two_connected").get<bool>();
    h.st_overridden = j.at("st_overridden").get<bool>();
    return h;
}

std::string_view to_string(EmitMode m) {
    switch (m) {
        case EmitMode::All: return "all";
        case EmitMode::Verified: return "verified";
        case EmitMode::Counterexamples: return "counterexamples";
    }
    return "all";
}

EmitMode emit_from_string(std::string_view s) {
    if (s == "verified") return EmitMode::Verified;
    if (s == "counterexamples") return EmitMode::Counterexamples;
    return EmitMode::All;
}

// Only the settings that change what a record's verdict is.
std::string config_hash(const ScanConfig& cfg) {
    Json j = to_json(cfg);
    for (const char* k : {"workers", "checkpoint", "checkpoint_every_records", "checkpoint_every_seconds"}) j.erase(k);
    return hex64(fnv1a(j.dump()));
}

Json totals_to_json(const ScanTotals& t) {
    Json orders = Json::object();
    for (const auto& [n, c] : t.orders_seen) orders[std::to_string(n)] = c;
    Json filtered = Json::object();
    for (const auto& [k, v] : t.filtered_out) filtered[k] = v;
    return Json{{"read", t.read},
                {"parse_errors", t.parse_errors},
                {"filtered_out", filtered},
                {"verified", t.verified},
                {"counterexamples", t.counterexamples},
                {"inconsistencies", t.inconsistencies},
                {"orders_seen", orders}};
}

ScanTotals totals_from_json(const Json& j) {
    ScanTotals t;
    t.read = j.at("read").get<std::uint64_t>();
    t.parse_errors = j.at("parse_errors").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("filtered_out").items()) t.filtered_out[k] = v.get<std::uint64_t>();
    t.verified = j.at("verified").get<std::uint64_t>();
    t.counterexamples = j.at("counterexamples").get<std::uint64_t>();
    t.inconsistencies = j.at("inconsistencies").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("orders_seen").items()) t.orders_seen[std::stoi(k)] = v.get<std::uint64_t>();
    return t;
}

Json flagged_to_json(const std::vector<FlaggedRecord>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(Json{{"seq", r.seq}, {"g6", r.g6}, {"detail", r.detail}});
    return out;
}

std::vector<FlaggedRecord> flagged_from_json(const Json& j) {
    std::vector<FlaggedRecord> out;
    for (const auto& r : j) out.push_back({r.at("seq").get<std::uint64_t>(), r.at("g6").get<std::string>(), r.at("detail")});
    return out;
}

struct Outcome {
    enum class Kind { ParseError, Filtered, Verified };
    Kind kind = Kind::Verified;
    std::string filter_reason;
    int order = 0;
    bool counterexample = false;
    bool inconsistent = false;
    std::string g6;
    std::string line;  // JSONL text, empty when not emitted
    Json detail;
};

Verdict run_check(Check c, const Graph& g, const ScanConfig& cfg, std::uint64_t seq, const Verdict& checked) {
    const Hypotheses& h = cfg.filter.hypotheses;
    switch (c) {
        case Check::Theorem: return conclude_main_theorem(g, h, checked, cfg.out.has_value());
        case Check::GadgetLemma: return verify_gadget_lemma(g);
        case Check::PathLemma:
            if (cfg.path_samples) return verify_path_lemma(g, h.p, Sampled{*cfg.path_samples}, cfg.seed + seq);
            return verify_path_lemma(g, h.p, Exhaustive{});
        case Check::TriangleLemma: return verify_triangle_lemma(g, h.p);
    }
    throw PreconditionViolated("unknown check");
}

Outcome evaluate(std::uint64_t seq, const std::string& raw, const ScanConfig& cfg) {
    Outcome o;
    std::optional<Graph> g;
    try {
        g = parse_graph6(raw);
    } catch (const Error& e) {
        o.kind = Outcome::Kind::ParseError;
        o.g6 = raw;
        if (cfg.out && cfg.emit == EmitMode::All) o.line = Json{{"seq", seq}, {"g6", raw}, {"error", e.what()}}.dump();
        return o;
    }
    o.order = g->order();

    // A record that parses is already in canonical form apart from the header.
    std::string_view text = raw;
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (text.back() == ' ' || text.back() == '\t') text.remove_suffix(1);
    Verdict v;
    v.seq = seq;
    v.g6 = std::string(text);
    if (o.order < cfg.filter.n_min || o.order > cfg.filter.n_max) {
        v.checks.order = false;
    } else {
        v.checks = hypothesis_checks(*g, cfg.filter.hypotheses, true);
        v.hypotheses_met = v.checks.all_passed() && v.checks.st.has_value();
    }
    o.g6 = v.g6;
    if (auto reason = v.checks.first_failure()) {
        o.kind = Outcome::Kind::Filtered;
        o.filter_reason = *reason;
        if (cfg.out && cfg.emit == EmitMode::All) {
            Json j = to_json(v);
            j["skip"] = *reason;
            o.line = j.dump();
        }
        return o;
    }

    std::vector<std::pair<Check, Verdict>> results;
    std::optional<std::string> internal_error;
    bool any_conclusion = false, all_hold = true;
    try {
        for (Check c : cfg.checks) {
            Verdict cv = run_check(c, *g, cfg, seq, v);
            if (cv.conclusion) {
                any_conclusion = true;
                all_hold = all_hold && *cv.conclusion;
            }
            o.counterexample = o.counterexample || cv.counterexample;
            o.inconsistent = o.inconsistent || cv.inconsistent;
            results.emplace_back(c, std::move(cv));
        }
    } catch (const std::exception& e) {
        internal_error = e.what();
        o.inconsistent = true;
    }
    const bool flagged = o.counterexample || o.inconsistent;
    const bool emit_line = cfg.out && (cfg.emit != EmitMode::Counterexamples || flagged);
    if (!flagged && !emit_line) return o;

    Json details = Json::object();
    for (auto& [c, cv] : results) {
        Json d{{"hypotheses_met", cv.hypotheses_met},
               {"conclusion", cv.conclusion ? Json(*cv.conclusion) : Json(nullptr)},
               {"counterexample", cv.counterexample}};
        if (cv.inconsistent) d["inconsistent"] = true;
        if (cv.detail) d["detail"] = std::move(*cv.detail);
        if (cv.seed) d["seed"] = *cv.seed;
        details[std::string(to_string(c))] = std::move(d);
    }
    if (internal_error) details["internal_error"] = *internal_error;
    if (any_conclusion) v.conclusion = all_hold;
    v.counterexample = o.counterexample;
    v.inconsistent = o.inconsistent;
    if (cfg.path_samples && std::find(cfg.checks.begin(), cfg.checks.end(), Check::PathLemma) != cfg.checks.end())
        v.seed = cfg.seed;
    if (flagged) o.detail = details;
    v.detail = std::move(details);
    if (emit_line) o.line = to_json(v).dump();
    return o;
}

struct Batch {
    std::uint64_t index = 0;
    std::uint64_t first_seq = 0;
    std::vector<std::string> lines;
};

class WorkerPool {
public:
    WorkerPool(int workers, const ScanConfig& cfg) : cfg_(cfg) {
        for (int i = 0; i < workers; ++i) threads_.emplace_back([this] { work(); });
    }
    ~WorkerPool() {
        {
            std::lock_guard lock(m_);
            closing_ = true;
        }
        work_cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    void submit(Batch b) {
        {
            std::lock_guard lock(m_);
            queue_.push_back(std::move(b));
        }
        work_cv_.notify_one();
    }

    // Blocks until batch `index` is finished and hands its outcomes over.
    std::vector<Outcome> take(std::uint64_t index) {
        std::unique_lock lock(m_);
        done_cv_.wait(lock, [&] { return done_.contains(index); });
        auto node = done_.extract(index);
        return std::move(node.mapped());
    }

    std::optional<std::vector<Outcome>> try_take(std::uint64_t index) {
        std::lock_guard lock(m_);
        auto it = done_.find(index);
        if (it == done_.end()) return std::nullopt;
        auto out = std::move(it->second);
        done_.erase(it);
        return out;
    }

private:
    void work() {
        for (;;) {
            Batch b;
            {
                std::unique_lock lock(m_);
                work_cv_.wait(lock, [&] { return closing_ || !queue_.empty(); });
                if (queue_.empty()) return;
                b = std::move(queue_.front());
                queue_.pop_front();
            }
            std::vector<Outcome> out;
            out.reserve(b.lines.size());
            for (std::size_t i = 0; i < b.lines.size(); ++i) out.push_back(evaluate(b.first_seq + i, b.lines[i], cfg_));
            {
                std::lock_guard lock(m_);
                done_.emplace(b.index, std::move(out));
            }
            done_cv_.notify_all();
        }
    }

    const ScanConfig& cfg_;
    std::mutex m_;
    std::condition_variable work_cv_, done_cv_;
    std::deque<Batch> queue_;
    std::map<std::uint64_t, std::vector<Outcome>> done_;
    bool closing_ = false;
    std::vector<std::thread> threads_;
};

class OutputFile {
public:
    OutputFile(const fs::path& path, std::uint64_t keep_bytes, bool resuming) {
        if (resuming && fs::exists(path)) {
            if (fs::file_size(path) < keep_bytes) throw CheckpointMismatch("output file '" + path.string() + "' is shorter than the checkpoint records");
            fs::resize_file(path, keep_bytes);
            f_ = std::fopen(path.c_str(), "ab");
        } else {
            if (resuming && keep_bytes > 0) throw CheckpointMismatch("output file '" + path.string() + "' is missing");
            f_ = std::fopen(path.c_str(), "wb");
        }
        if (!f_) throw InputUnreadable("cannot open output '" + path.string() + "'");
    }
    OutputFile(const OutputFile&) = delete;
    OutputFile& operator=(const OutputFile&) = delete;
    ~OutputFile() {
        if (f_) std::fclose(f_);
    }

    void write_line(std::string_view s) {
        std::fwrite(s.data(), 1, s.size(), f_);
        std::fputc('\n', f_);
    }
    std::uint64_t flush() {
        std::fflush(f_);
        return static_cast<std::uint64_t>(std::ftell(f_));
    }

private:
    std::FILE* f_ = nullptr;
};

struct RunState {
    ScanTotals totals;
    std::vector<FlaggedRecord> counterexamples;
    std::vector<FlaggedRecord> inconsistencies;
    std::uint64_t last_seq = 0;
    std::uint64_t out_offset = 0;
    std::uint64_t cex_offset = 0;
    double wall_seconds = 0;
    bool complete = false;
};

fs::path cex_path(const fs::path& out) { return fs::path(out.string() + ".cex.g6"); }

void write_checkpoint(const fs::path& path, const Json& identity, const ScanConfig& cfg, const RunState& st) {
    Json j{{"version", kCheckpointVersion},
           {"input", identity},
           {"config", to_json(cfg)},
           {"config_hash", config_hash(cfg)},
           {"last_seq", st.last_seq},
           {"complete", st.complete},
           {"totals", totals_to_json(st.totals)},
           {"counterexamples", flagged_to_json(st.counterexamples)},
           {"inconsistencies", flagged_to_json(st.inconsistencies)},
           {"out_offset", st.out_offset},
           {"cex_offset", st.cex_offset},
           {"wall_seconds", st.wall_seconds}};
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InputUnreadable("cannot write checkpoint '" + tmp.string() + "'");
        out << j.dump(2) << '\n';
        out.flush();
        if (!out) throw InputUnreadable("cannot write checkpoint '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

Json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputUnreadable("cannot read '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw CheckpointMismatch("unreadable checkpoint '" + path.string() + "': " + e.what());
    }
}

RunState state_from_checkpoint(const Json& j) {
    RunState st;
    st.last_seq = j.at("last_seq").get<std::uint64_t>();
    st.complete = j.at("complete").get<bool>();
    st.totals = totals_from_json(j.at("totals"));
    st.counterexamples = flagged_from_json(j.at("counterexamples"));
    st.inconsistencies = flagged_from_json(j.at("inconsistencies"));
    st.out_offset = j.at("out_offset").get<std::uint64_t>();
    st.cex_offset = j.at("cex_offset").get<std::uint64_t>();
    st.wall_seconds = j.at("wall_seconds").get<double>();
    return st;
}

ScanReport make_report(const RunState& st, const ScanConfig& cfg, const std::string& label, bool resumed) {
    ScanReport r;
    r.totals = st.totals;
    r.counterexamples = st.counterexamples;
    r.inconsistencies = st.inconsistencies;
    r.input = label;
    r.last_seq = st.last_seq;
    r.complete = st.complete;
    r.resumed = resumed;
    r.wall_seconds = st.wall_seconds;
    r.config = to_json(cfg);
    return r;
}

void validate(const ScanConfig& cfg) {
    if (cfg.workers < 1) throw PreconditionViolated("workers must be at least 1");
    if (cfg.filter.n_min > cfg.filter.n_max || cfg.filter.n_max > kMaxOrder)
        throw PreconditionViolated("order range must satisfy n_min <= n_max <= 64");
    if (cfg.checks.empty()) throw PreconditionViolated("at least one check is required");
    if (cfg.batch_size == 0) throw PreconditionViolated("batch size must be positive");
}

ScanReport run_scan(LineReader& reader, const std::string& label, const ScanConfig& cfg,
                    const std::optional<Json>& identity, RunState st, bool resumed) {
    const auto started = Clock::now();
    const double wall_before = st.wall_seconds;
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - started).count(); };

    std::optional<OutputFile> out, cex;
    if (cfg.out) {
        out.emplace(*cfg.out, st.out_offset, resumed);
        cex.emplace(cex_path(*cfg.out), st.cex_offset, resumed);
    }

    std::string line;
    std::uint64_t seq = 0;
    while (seq < st.last_seq && reader.next(line)) ++seq;
    if (seq < st.last_seq) throw CheckpointMismatch("input ended before the checkpointed record " + std::to_string(st.last_seq));

    std::uint64_t since_checkpoint = 0;
    double last_checkpoint_time = 0;
    auto checkpoint_now = [&] {
        if (out) st.out_offset = out->flush();
        if (cex) st.cex_offset = cex->flush();
        st.wall_seconds = wall_before + elapsed();
        if (cfg.checkpoint) write_checkpoint(*cfg.checkpoint, *identity, cfg, st);
        since_checkpoint = 0;
        last_checkpoint_time = elapsed();
    };

    auto emit = [&](std::vector<Outcome>&& outcomes) {
        for (auto& o : outcomes) {
            ++st.last_seq;
            ++st.totals.read;
            switch (o.kind) {
                case Outcome::Kind::ParseError: ++st.totals.parse_errors; break;
                case Outcome::Kind::Filtered:
                    ++st.totals.orders_seen[o.order];
                    ++st.totals.filtered_out[o.filter_reason];
                    break;
                case Outcome::Kind::Verified:
                    ++st.totals.orders_seen[o.order];
                    ++st.totals.verified;
                    break;
            }
            if (out && !o.line.empty()) out->write_line(o.line);
            if (o.counterexample) {
                ++st.totals.counterexamples;
                st.counterexamples.push_back({st.last_seq, o.g6, o.detail});
                if (cex) {
                    cex->write_line(o.g6);
                    st.cex_offset = cex->flush();
                }
            }
            if (o.inconsistent) {
                ++st.totals.inconsistencies;
                st.inconsistencies.push_back({st.last_seq, o.g6, o.detail});
            }
        }
        since_checkpoint += outcomes.size();
        if (cfg.checkpoint && (since_checkpoint >= cfg.checkpoint_every_records ||
                               elapsed() - last_checkpoint_time >= cfg.checkpoint_every_seconds))
            checkpoint_now();
    };

    bool interrupted = false;
    {
        WorkerPool pool(cfg.workers, cfg);
        const std::uint64_t max_in_flight = static_cast<std::uint64_t>(cfg.workers) * 4;
        std::uint64_t next_index = 0, next_emit = 0;
        bool eof = false;
        while (!eof) {
            Batch b;
            b.index = next_index;
            b.first_seq = seq + 1;
            while (b.lines.size() < cfg.batch_size) {
                if (cfg.stop_after && seq >= *cfg.stop_after) {
                    interrupted = true;
                    eof = true;
                    break;
                }
                if (!reader.next(line)) {
                    eof = true;
                    break;
                }
                ++seq;
                b.lines.push_back(line);
            }
            if (!b.lines.empty()) {
                while (next_index - next_emit >= max_in_flight) emit(pool.take(next_emit++));
                pool.submit(std::move(b));
                ++next_index;
            }
            while (next_emit < next_index) {
                auto ready = pool.try_take(next_emit);
                if (!ready) break;
                ++next_emit;
                emit(std::move(*ready));
            }
        }
        while (next_emit < next_index) emit(pool.take(next_emit++));
    }

    st.complete = !interrupted;
    if (out) st.out_offset = out->flush();
    if (cex) st.cex_offset = cex->flush();
    st.wall_seconds = wall_before + elapsed();
    if (cfg.checkpoint) write_checkpoint(*cfg.checkpoint, *identity, cfg, st);
    return make_report(st, cfg, label, resumed);
}

}  // namespace

ScanReport scan(const std::string& input, const ScanConfig& cfg) {
    validate(cfg);
    std::optional<Json> identity;
    RunState st;
    bool resumed = false;
    if (cfg.checkpoint) {
        if (input == "-") throw PreconditionViolated("checkpointing needs a file input");
        identity = file_identity(input);
        if (fs::exists(*cfg.checkpoint)) {
            const Json cp = read_json_file(*cfg.checkpoint);
            if (cp.value("version", 0) != kCheckpointVersion) throw CheckpointMismatch("unsupported checkpoint version");
            if (cp.at("input").at("hash") != identity->at("hash") || cp.at("input").at("size") != identity->at("size"))
                throw CheckpointMismatch("input content differs from the checkpointed scan");
            if (cp.at("config_hash").get<std::string>() != config_hash(cfg))
                throw CheckpointMismatch("scan configuration differs from the checkpointed scan");
            st = state_from_checkpoint(cp);
            resumed = true;
            if (st.complete) return make_report(st, cfg, input, true);
        }
    }
    LineReader reader = LineReader::open(input);
    return run_scan(reader, input, cfg, identity, std::move(st), resumed);
}

ScanReport scan(std::FILE* stream, const std::string& label, const ScanConfig& cfg) {
    validate(cfg);
    if (cfg.checkpoint) throw PreconditionViolated("checkpointing needs a file input");
    LineReader reader(gzdopen(dup(fileno(stream)), "rb"));
    return run_scan(reader, label, cfg, std::nullopt, RunState{}, false);
}

namespace {

ScanConfig probe_config(int p, ScanConfig cfg) {
    if (p != 4 && p != 5) throw PreconditionViolated("probe covers p = 4 and p = 5 only; p = 3 is a theorem, use scan");
    cfg.filter.hypotheses = Hypotheses::for_p(p);
    cfg.filter.n_min = 2 * p + 3;
    cfg.filter.n_max = kMaxOrder;
    cfg.checks = {Check::Theorem};
    return cfg;
}

}  // namespace

ScanReport probe_conjecture(int p, const std::string& input, ScanConfig cfg) { return scan(input, probe_config(p, std::move(cfg))); }

ScanReport probe_conjecture(int p, std::FILE* stream, const std::string& label, ScanConfig cfg) {
    return scan(stream, label, probe_config(p, std::move(cfg)));
}

ScanReport resume(const fs::path& checkpoint, std::optional<int> workers) {
    const Json cp = read_json_file(checkpoint);
    ScanConfig cfg;
    try {
        cfg = scan_config_from_json(cp.at("config"));
    } catch (const Json::exception& e) {
        throw CheckpointMismatch(std::string("checkpoint configuration unreadable: ") + e.what());
    }
    cfg.checkpoint = checkpoint;
    if (workers) cfg.workers = *workers;
    return scan(cp.at("input").at("path").get<std::string>(), cfg);
}

Json to_json(const ScanConfig& cfg) {
    Json checks = Json::array();
    for (Check c : cfg.checks) checks.push_back(std::string(to_string(c)));
    return Json{{"filter",
                 {{"hypotheses", hypotheses_to_json(cfg.filter.hypotheses)},
                  {"order_range", {cfg.filter.n_min, cfg.filter.n_max}}}},
                {"checks", checks},
                {"seed", cfg.seed},
                {"path_samples", cfg.path_samples ? Json(*cfg.path_samples) : Json(nullptr)},
                {"workers", cfg.workers},
                {"out", cfg.out ? Json(fs::absolute(*cfg.out).string()) : Json(nullptr)},
                {"emit", std::string(to_string(cfg.emit))},
                {"checkpoint", cfg.checkpoint ? Json(cfg.checkpoint->string()) : Json(nullptr)},
                {"checkpoint_every_records", cfg.checkpoint_every_records},
                {"checkpoint_every_seconds", cfg.checkpoint_every_seconds}};
}

ScanConfig scan_config_from_json(const Json& j) {
    ScanConfig cfg;
    const Json& f = j.at("filter");
    cfg.filter.hypotheses = hypotheses_from_json(f.at("hypotheses"));
    cfg.filter.n_min = f.at("order_range").at(0).get<int>();
    cfg.filter.n_max = f.at("order_range").at(1).get<int>();
    cfg.checks.clear();
    for (const auto& c : j.at("checks")) {
        const auto check = check_from_string(c.get<std::string>());
        if (!check) throw CheckpointMismatch("unknown check " + c.dump());
        cfg.checks.push_back(*check);
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("path_samples").is_null()) cfg.path_samples = j.at("path_samples").get<std::uint64_t>();
    cfg.workers = j.at("workers").get<int>();
    if (!j.at("out").is_null()) cfg.out = j.at("out").get<std::string>();
    cfg.emit = emit_from_string(j.at("emit").get<std::string>());
    cfg.checkpoint_every_records = j.at("checkpoint_every_records").get<std::uint64_t>();
    cfg.checkpoint_every_seconds = j.at("checkpoint_every_seconds").get<double>();
    return cfg;
}

Json to_json(const ScanReport& r) {
    return Json{{"totals", totals_to_json(r.totals)},
                {"counterexamples", flagged_to_json(r.counterexamples)},
                {"inconsistencies", flagged_to_json(r.inconsistencies)},
                {"coverage",
                 {{"input", r.input},
                  {"records", r.last_seq},
                  {"complete", r.complete},
                  {"order_range", r.config.at("filter").at("order_range")},
                  {"orders_seen", totals_to_json(r.totals).at("orders_seen")}}},
                {"resumed", r.resumed},
                {"wall_seconds", r.wall_seconds},
                {"config", r.config}};
}

}  // namespace pancycle
