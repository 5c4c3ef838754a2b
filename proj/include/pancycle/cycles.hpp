#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pancycle/gadgets.hpp"
#include "pancycle/graph.hpp"

namespace pancycle {

struct CycleWitness {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct SpectrumVerdict {
    std::vector<int> present;
    std::map<int, CycleWitness> witnesses;
    std::vector<int> missing;
    bool pancyclic = false;
};

enum class Provenance { BaseGadget, ExtensionStep, TriangleOfApex, DirectSearch };

std::string_view to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

struct PancyclicCertificate {
    struct Entry {
        int length = 0;
        CycleWitness cycle;
        Provenance provenance = Provenance::DirectSearch;
    };

    int order = 0;
    std::vector<Entry> lengths;  // sorted by length
    std::vector<TriCycleWitness> chain;
};

/// Plain cycle check: distinct in-range vertices, consecutive and wrap-around
/// edges present.
bool is_valid_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// First cycle of length l in canonical order, or none. Requires 3 <= l <= n.
std::optional<CycleWitness> has_cycle_of_length(const Graph& g, int l);

SpectrumVerdict cycle_spectrum(const Graph& g);

/// Given a valid C~_l with l < n-1, returns a C~_{l+1} when one exists
/// anywhere in g, otherwise a C~_{l+2}. Throws PreconditionViolated for an
/// invalid witness and ExtensionFailed when neither exists.
TriCycleWitness extend_c_tilde(const Graph& g, const TriCycleWitness& w);

/// Chain from a C~_3 (or C~_4) base up to C~_{n-1}, harvesting C_m and
/// C_{m+1} from every link. Does not look at hypotheses.
PancyclicCertificate build_certificate(const Graph& g);

/// build_certificate guarded by the p = 3 hypotheses: 2-connected, n >= 9,
/// minimum degree >= 3, [5,3]. Throws HypothesesViolated otherwise.
PancyclicCertificate certify_pancyclic(const Graph& g);

/// Independent re-check: edge-by-edge cycle validation and full coverage of
/// lengths 3..n. Also checks the chain links and their step sizes.
bool verify_certificate(const Graph& g, const PancyclicCertificate& cert);

}  // namespace pancycle
