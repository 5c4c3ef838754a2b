#pragma once

#include <array>

#include "pancycle/certify.hpp"
#include "pancycle/cycles.hpp"
#include "pancycle/gadgets.hpp"

namespace pancycle {

// JSON forms used by the CLI and the scan output. Keys keep the documented
// insertion order so emitted text is stable across runs.

Json to_json(const TriCycleWitness& w);
Json to_json(const SwitchWitness& w);
Json to_json(const DumbbellWitness& w);
Json to_json(const PathWitness& w);
Json to_json(const CycleWitness& w);
Json triangle_to_json(const std::array<Vertex, 3>& tri);
Json to_json(const StVerdict& v, int s, int t);
Json to_json(const SpectrumVerdict& v);
Json to_json(const PancyclicCertificate& cert);
Json to_json(const HypothesisChecks& c);
Json to_json(const Verdict& v);

/// Throws MalformedRecord when the document does not follow the schema.
PancyclicCertificate certificate_from_json(const Json& j);
TriCycleWitness tri_cycle_from_json(const Json& j);

}  // namespace pancycle
