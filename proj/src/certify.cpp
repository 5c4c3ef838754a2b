#include "pancycle/certify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pancycle/cycles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"
#include "pancycle/serialize.hpp"

namespace pancycle {

Hypotheses Hypotheses::for_p(int p) {
    if (p < 2 || p > 6) throw PreconditionViolated("p must lie in [2, 6]");
    Hypotheses h;
    h.p = p;
    h.min_order = 2 * p + 3;
    h.min_degree = p;
    h.s = p + 2;
    h.t = p;
    return h;
}

Hypotheses& Hypotheses::override_st(int s_, int t_) {
    s = s_;
    t = t_;
    st_overridden = s_ != p + 2 || t_ != p;
    return *this;
}

bool Hypotheses::implies_settled_case() const {
    // An [s,t]-graph is an [s+1,t+1]-graph, so s <= 5 and t >= s-2 give [5,3].
    return s <= 5 && t - s >= -2 && require_two_connected && min_order >= 9 && min_degree >= 3;
}

bool HypothesisChecks::all_passed() const {
    for (const auto* c : {&order, &min_degree, &two_connected, &connected, &st})
        if (c->has_value() && !**c) return false;
    return true;
}

std::optional<std::string> HypothesisChecks::first_failure() const {
    if (order && !*order) return "order";
    if (min_degree && !*min_degree) return "mindeg";
    if (two_connected && !*two_connected) return "twoconn";
    if (connected && !*connected) return "connected";
    if (st && !*st) return "st";
    return std::nullopt;
}

HypothesisChecks hypothesis_checks(const Graph& g, const Hypotheses& h, bool short_circuit) {
    if (h.min_order < 3) throw PreconditionViolated("hypotheses need min_order >= 3");
    HypothesisChecks c;
    auto stop = [&](const std::optional<bool>& r) { return short_circuit && r && !*r; };

    c.order = g.order() >= h.min_order;
    if (stop(c.order)) return c;
    c.min_degree = min_degree(g) >= h.min_degree;
    if (stop(c.min_degree)) return c;
    if (h.require_two_connected) c.two_connected = is_two_connected(g);
    if (stop(c.two_connected)) return c;
    c.st = check_st(g, h.s, h.t).holds;
    return c;
}

Verdict check_hypotheses(const Graph& g, const Hypotheses& h, bool short_circuit) {
    Verdict v;
    v.checks = hypothesis_checks(g, h, short_circuit);
    v.g6 = write_graph6(g);
    v.hypotheses_met = v.checks.all_passed() && v.checks.st.has_value();
    return v;
}

namespace {

Json hypotheses_json(const Hypotheses& h) {
    Json j{{"p", h.p}, {"s", h.s}, {"t", h.t}, {"min_order", h.min_order}, {"min_degree", h.min_degree},
           {"two_connected", h.require_two_connected}};
    if (h.st_overridden) j["st_overridden"] = true;
    return j;
}

}  // namespace

Verdict verify_main_theorem(const Graph& g, const Hypotheses& h) {
    return conclude_main_theorem(g, h, check_hypotheses(g, h));
}

Verdict conclude_main_theorem(const Graph& g, const Hypotheses& h, Verdict v, bool certificate_detail) {
    if (!v.hypotheses_met) return v;

    std::string engine_failure;
    try {
        const PancyclicCertificate cert = build_certificate(g);
        if (verify_certificate(g, cert)) {
            v.conclusion = true;
            if (!certificate_detail) return v;
            Json chain = Json::array();
            for (const auto& w : cert.chain) chain.push_back(w.length());
            std::size_t direct = std::count_if(cert.lengths.begin(), cert.lengths.end(), [](const auto& e) {
                return e.provenance == Provenance::DirectSearch;
            });
            v.detail = Json{{"certificate", "valid"}, {"chain", chain}, {"direct_search", direct}};
            return v;
        }
        engine_failure = "certificate failed independent verification";
    } catch (const ExtensionFailed& e) {
        engine_failure = e.what();
    } catch (const CertificateGap& e) {
        engine_failure = e.what();
    }

    const SpectrumVerdict spectrum = cycle_spectrum(g);
    v.conclusion = spectrum.pancyclic;
    v.counterexample = !spectrum.pancyclic;
    v.inconsistent = spectrum.pancyclic && h.implies_settled_case();
    v.detail = Json{{"engine_failure", engine_failure}, {"missing", spectrum.missing}, {"hypotheses", hypotheses_json(h)}};
    return v;
}

Verdict verify_gadget_lemma(const Graph& g) {
    Verdict v;
    v.g6 = write_graph6(g);
    v.checks.order = g.order() >= 9;
    v.checks.min_degree = min_degree(g) >= 3;
    v.checks.st = check_st(g, 5, 3).holds;
    v.hypotheses_met = v.checks.all_passed();
    if (!v.hypotheses_met) return v;

    if (auto w = find_c_tilde(g, 3)) {
        v.detail = to_json(*w);
    } else if (auto w4 = find_c_tilde(g, 4)) {
        v.detail = to_json(*w4);
    }
    v.conclusion = v.detail.has_value();
    v.counterexample = !*v.conclusion;
    return v;
}

namespace {

struct PathCheck {
    int longest = 0;
    std::optional<std::pair<VertexSet, VertexSet>> violation;
};

void probe_pair(const Graph& g, int p, VertexSet s, VertexSet t, PathCheck& out) {
    const auto path = shortest_st_path(g, s, t);
    const int len = path ? path->length() : std::numeric_limits<int>::max();
    out.longest = std::max(out.longest, len);
    if (len > p && !out.violation) out.violation = std::make_pair(s, t);
}

}  // namespace

Verdict verify_path_lemma(const Graph& g, int p, PathLemmaMode mode, std::uint64_t seed) {
    Verdict v;
    v.g6 = write_graph6(g);
    v.checks.connected = is_connected(g);
    v.checks.st = check_st(g, p + 2, p).holds;
    v.hypotheses_met = v.checks.all_passed();
    if (std::holds_alternative<Sampled>(mode)) v.seed = seed;
    if (!v.hypotheses_met) return v;

    const int n = g.order();
    PathCheck result;
    std::uint64_t pairs = 0;
    if (n >= 4) {
        if (std::holds_alternative<Exhaustive>(mode)) {
            // S and T play symmetric roles, so each unordered pair is tried once.
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = a + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d) {
                            if (c == b || d == b) continue;
                            probe_pair(g, p, VertexSet{a, b}, VertexSet{c, d}, result);
                            ++pairs;
                        }
        } else {
            std::mt19937_64 rng(seed);
            std::vector<Vertex> order(static_cast<std::size_t>(n));
            const std::uint64_t count = std::get<Sampled>(mode).count;
            for (; pairs < count; ++pairs) {
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                const int s_size = std::uniform_int_distribution<int>(2, n - 2)(rng);
                const int t_size = std::uniform_int_distribution<int>(2, n - s_size)(rng);
                VertexSet s, t;
                for (int i = 0; i < s_size; ++i) s.insert(order[i]);
                for (int i = 0; i < t_size; ++i) t.insert(order[s_size + i]);
                probe_pair(g, p, s, t, result);
            }
        }
    }
    v.conclusion = !result.violation.has_value();
    v.counterexample = !*v.conclusion;
    v.detail = Json{{"p", p}, {"pairs", pairs}, {"longest", result.longest}};
    if (result.violation) {
        (*v.detail)["S"] = result.violation->first.to_vector();
        (*v.detail)["T"] = result.violation->second.to_vector();
    }
    return v;
}

Verdict verify_triangle_lemma(const Graph& g, int p) {
    if (p < 2) throw PreconditionViolated("the triangle lemma needs p >= 2");
    Verdict v;
    v.g6 = write_graph6(g);
    v.checks.order = g.order() >= 2 * p + 3;
    v.checks.min_degree = min_degree(g) >= p;
    v.checks.st = check_st(g, p + 2, p).holds;
    v.hypotheses_met = v.checks.all_passed();
    if (!v.hypotheses_met) return v;

    if (auto tri = find_triangle(g)) {
        v.conclusion = true;
        v.detail = triangle_to_json(*tri);
        return v;
    }
    const auto k = recognize_c5_blowup(g);
    const bool consistent = p % 2 == 0 && p >= 6 && k == p / 2;
    v.conclusion = consistent;
    v.counterexample = !consistent;
    v.detail = Json{{"triangle_free", true}, {"c5_blowup", k ? Json(*k) : Json(nullptr)}};
    return v;
}

}  // namespace pancycle
