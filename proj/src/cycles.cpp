#include "pancycle/cycles.hpp"

#include <algorithm>
#include <string>

#include "cycle_search.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/graph6.hpp"

namespace pancycle {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::BaseGadget: return "base-gadget";
        case Provenance::ExtensionStep: return "extension-step";
        case Provenance::TriangleOfApex: return "triangle-of-apex";
        case Provenance::DirectSearch: return "direct-search";
    }
    return "unknown";
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
    for (Provenance p : {Provenance::BaseGadget, Provenance::ExtensionStep, Provenance::TriangleOfApex,
                         Provenance::DirectSearch})
        if (to_string(p) == s) return p;
    return std::nullopt;
}

bool is_valid_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    const std::size_t l = cycle.size();
    if (l < 3) return false;
    VertexSet seen;
    for (Vertex v : cycle) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < l; ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % l])) return false;
    return true;
}

std::optional<CycleWitness> has_cycle_of_length(const Graph& g, int l) {
    if (l < 3 || l > g.order()) throw PreconditionViolated("cycle length must lie in [3, n]");
    std::optional<CycleWitness> found;
    detail::for_each_cycle(g, l, [&](std::span<const Vertex> cyc, std::uint64_t) {
        found = CycleWitness{{cyc.begin(), cyc.end()}};
        return true;
    });
    return found;
}

SpectrumVerdict cycle_spectrum(const Graph& g) {
    if (g.order() < 3) throw PreconditionViolated("cycle spectrum needs at least 3 vertices");
    SpectrumVerdict out;
    for (int l = 3; l <= g.order(); ++l) {
        if (auto w = has_cycle_of_length(g, l)) {
            out.present.push_back(l);
            out.witnesses.emplace(l, std::move(*w));
        } else {
            out.missing.push_back(l);
        }
    }
    out.pancyclic = out.missing.empty();
    return out;
}

namespace {

std::string hypothesis_dump(const Graph& g) {
    const StVerdict st = check_st(g, 5, 3);
    return "graph6=" + write_graph6(g) + " order=" + std::to_string(g.order()) +
           " min_degree=" + std::to_string(min_degree(g)) + " two_connected=" + (is_two_connected(g) ? "yes" : "no") +
           " st53=" + (st.holds ? "yes" : "no");
}

}  // namespace

TriCycleWitness extend_c_tilde(const Graph& g, const TriCycleWitness& w) {
    if (!is_valid(g, w)) throw PreconditionViolated("extend_c_tilde: witness is not a valid C~ in this graph");
    const int l = w.length();
    if (l >= g.order() - 1) throw PreconditionViolated("extend_c_tilde: witness already spans n-1 cycle vertices");
    if (auto next = find_c_tilde(g, l + 1)) return *next;
    if (l + 2 <= g.order() - 1)
        if (auto next = find_c_tilde(g, l + 2)) return *next;
    throw ExtensionFailed("no C~_" + std::to_string(l + 1) + " or C~_" + std::to_string(l + 2) + " after C~_" +
                          std::to_string(l) + ": " + hypothesis_dump(g));
}

PancyclicCertificate build_certificate(const Graph& g) {
    const int n = g.order();
    PancyclicCertificate cert;
    cert.order = n;

    std::optional<TriCycleWitness> base = find_c_tilde(g, 3);
    if (!base) base = find_c_tilde(g, 4);
    if (!base) throw CertificateGap("no C~_3 or C~_4 to start from: " + hypothesis_dump(g));

    cert.chain.push_back(*base);
    while (cert.chain.back().length() < n - 1) cert.chain.push_back(extend_c_tilde(g, cert.chain.back()));

    std::map<int, PancyclicCertificate::Entry> by_length;
    auto offer = [&](std::vector<Vertex> cycle, Provenance p) {
        const int len = static_cast<int>(cycle.size());
        by_length.try_emplace(len, PancyclicCertificate::Entry{len, CycleWitness{std::move(cycle)}, p});
    };
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        const TriCycleWitness& link = cert.chain[i];
        const Provenance p = i == 0 ? Provenance::BaseGadget : Provenance::ExtensionStep;
        offer(link.cycle, p);
        offer(reroute_through_apex(link), p);
    }
    if (base->length() == 4) {
        const Vertex a = base->cycle[base->edge_index];
        const Vertex b = base->cycle[(base->edge_index + 1) % 4];
        offer({a, b, base->apex}, Provenance::TriangleOfApex);
    }

    // Links step by 1 or 2 and each covers m and m+1, so nothing from the
    // base length up to n can be missing. Checked rather than assumed.
    for (std::size_t i = 1; i < cert.chain.size(); ++i) {
        const int step = cert.chain[i].length() - cert.chain[i - 1].length();
        if (step < 1 || step > 2)
            throw CertificateGap("chain step of " + std::to_string(step) + ": " + hypothesis_dump(g));
    }
    for (int l = 3; l <= n; ++l) {
        if (by_length.contains(l)) continue;
        auto direct = has_cycle_of_length(g, l);
        if (!direct) throw CertificateGap("no cycle of length " + std::to_string(l) + ": " + hypothesis_dump(g));
        offer(std::move(direct->vertices), Provenance::DirectSearch);
    }
    for (auto& [len, entry] : by_length) cert.lengths.push_back(std::move(entry));
    return cert;
}

PancyclicCertificate certify_pancyclic(const Graph& g) {
    std::string failed;
    if (g.order() < 9) failed += " order<9";
    if (min_degree(g) < 3) failed += " min_degree<3";
    if (!is_two_connected(g)) failed += " not-2-connected";
    if (!check_st(g, 5, 3).holds) failed += " not-[5,3]";
    if (!failed.empty()) throw HypothesesViolated("hypotheses violated:" + failed);
    return build_certificate(g);
}

bool verify_certificate(const Graph& g, const PancyclicCertificate& cert) {
    const int n = g.order();
    if (cert.order != n || n < 3) return false;
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (const auto& e : cert.lengths) {
        if (e.length < 3 || e.length > n || covered[e.length]) return false;
        if (static_cast<int>(e.cycle.vertices.size()) != e.length) return false;
        if (!is_valid_cycle(g, e.cycle.vertices)) return false;
        covered[e.length] = true;
    }
    for (int l = 3; l <= n; ++l)
        if (!covered[l]) return false;
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        if (!is_valid(g, cert.chain[i])) return false;
        if (i > 0) {
            const int step = cert.chain[i].length() - cert.chain[i - 1].length();
            if (step < 1 || step > 2) return false;
        }
    }
    return true;
}

}  // namespace pancycle
