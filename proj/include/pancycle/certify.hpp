#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "pancycle/graph.hpp"

namespace pancycle {

using Json = nlohmann::ordered_json;

/// Preconditions of the [p+2,p] pancyclicity statement: 2-connected, order at
/// least 2p+3, minimum degree at least p. Any field may be overridden; an
/// overridden [s,t] pair is flagged in reports.
struct Hypotheses {
    int p = 3;
    bool require_two_connected = true;
    int min_order = 9;
    int min_degree = 3;
    int s = 5;
    int t = 3;
    bool st_overridden = false;

    static Hypotheses for_p(int p);
    Hypotheses& override_st(int s_, int t_);

    /// True when these hypotheses are at least as strong as the settled p = 3
    /// case, so a failed extension chain is an inconsistency, not just data.
    bool implies_settled_case() const;
};

struct HypothesisChecks {
    std::optional<bool> order;
    std::optional<bool> min_degree;
    std::optional<bool> two_connected;
    std::optional<bool> connected;
    std::optional<bool> st;

    bool all_passed() const;
    /// Name of the first failed check ("order", "mindeg", ...), if any.
    std::optional<std::string> first_failure() const;
};

struct Verdict {
    std::uint64_t seq = 0;
    std::string g6;
    HypothesisChecks checks;
    bool hypotheses_met = false;
    std::optional<bool> conclusion;
    bool counterexample = false;
    // The certificate engine and the spectrum disagreed where the theorem says
    // they cannot. Reported separately; never counted as a counterexample.
    bool inconsistent = false;
    std::optional<Json> detail;
    std::optional<std::uint64_t> seed;
};

/// Per-check breakdown in the order order -> min degree -> 2-connectivity ->
/// [s,t]. With `short_circuit` the remaining checks are left unset after the
/// first failure.
Verdict check_hypotheses(const Graph& g, const Hypotheses& h, bool short_circuit = false);

/// The checks alone, without rendering the graph6 text.
HypothesisChecks hypothesis_checks(const Graph& g, const Hypotheses& h, bool short_circuit = false);

/// Pancyclicity verdict under h (the p = 3 theorem by default). A
/// counterexample needs both deciders to agree: the certificate engine fails
/// and the cycle spectrum confirms a missing length.
Verdict verify_main_theorem(const Graph& g, const Hypotheses& h = Hypotheses::for_p(3));

/// The conclusion half of verify_main_theorem for a verdict whose hypotheses
/// were already checked against h (as check_hypotheses returns it). Without
/// `certificate_detail` a successful verdict carries no detail.
Verdict conclude_main_theorem(const Graph& g, const Hypotheses& h, Verdict checked, bool certificate_detail = true);

/// [5,3], order >= 9, minimum degree >= 3 (no connectivity): a C~_3 or C~_4.
Verdict verify_gadget_lemma(const Graph& g);

struct Exhaustive {};
struct Sampled {
    std::uint64_t count = 1000;
};
using PathLemmaMode = std::variant<Exhaustive, Sampled>;

/// Connected [p+2,p]-graph: every disjoint S, T with |S|,|T| >= 2 has an
/// (S,T)-path of length <= p. Exhaustive mode covers all pairs of 2-sets;
/// sampled mode draws `count` pairs of random sizes from `seed`.
Verdict verify_path_lemma(const Graph& g, int p, PathLemmaMode mode = Exhaustive{}, std::uint64_t seed = 0);

/// For a [p+2,p]-graph with minimum degree >= p and order >= 2p+3: triangle-free
/// only if p is even, p >= 6 and g is the (p/2)-blow-up of C_5.
Verdict verify_triangle_lemma(const Graph& g, int p);

}  // namespace pancycle
