#include "pancycle/serialize.hpp"

#include "pancycle/errors.hpp"

namespace pancycle {

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const TriCycleWitness& w) {
    return Json{{"kind", "ctilde"}, {"length", w.length()}, {"cycle", w.cycle}, {"apex", w.apex}, {"edge_index", w.edge_index}};
}

Json to_json(const SwitchWitness& w) {
    return Json{{"kind", "switch"}, {"length", w.length()}, {"path", w.path}, {"apex", w.apex}, {"t", w.t}, {"s", w.s}};
}

Json to_json(const DumbbellWitness& w) {
    return Json{{"kind", w.is_bowtie() ? "bowtie" : "dumbbell"},
                {"length", w.length()},
                {"tri_a", w.tri_a},
                {"tri_b", w.tri_b},
                {"path", w.path}};
}

Json to_json(const PathWitness& w) {
    return Json{{"kind", "st_path"}, {"length", w.length()}, {"vertices", w.vertices}};
}

Json to_json(const CycleWitness& w) {
    return Json{{"kind", "cycle"}, {"length", w.length()}, {"vertices", w.vertices}};
}

Json triangle_to_json(const std::array<Vertex, 3>& tri) { return Json{{"kind", "triangle"}, {"vertices", tri}}; }

Json to_json(const StVerdict& v, int s, int t) {
    Json j{{"s", s}, {"t", t}, {"holds", v.holds}, {"vacuous", v.vacuous}};
    if (v.min_size) {
        if (*v.min_size == StVerdict::kVacuous)
            j["min_size"] = "inf";
        else
            j["min_size"] = *v.min_size;
    } else {
        j["min_size"] = nullptr;
    }
    j["witness"] = v.witness ? Json(v.witness->to_vector()) : Json(nullptr);
    return j;
}

Json to_json(const SpectrumVerdict& v) {
    Json w = Json::object();
    for (const auto& [len, c] : v.witnesses) w[std::to_string(len)] = c.vertices;
    return Json{{"present", v.present}, {"missing", v.missing}, {"pancyclic", v.pancyclic}, {"witnesses", w}};
}

Json to_json(const PancyclicCertificate& cert) {
    Json lengths = Json::array();
    for (const auto& e : cert.lengths)
        lengths.push_back(Json{{"l", e.length}, {"cycle", e.cycle.vertices}, {"provenance", to_string(e.provenance)}});
    Json chain = Json::array();
    for (const auto& w : cert.chain) chain.push_back(to_json(w));
    return Json{{"order", cert.order}, {"lengths", lengths}, {"chain", chain}};
}

Json to_json(const HypothesisChecks& c) {
    Json j{{"order", optional_bool(c.order)},
           {"mindeg", optional_bool(c.min_degree)},
           {"twoconn", optional_bool(c.two_connected)},
           {"st", optional_bool(c.st)}};
    if (c.connected) j["connected"] = *c.connected;
    return j;
}

Json to_json(const Verdict& v) {
    Json j{{"seq", v.seq}, {"g6", v.g6}, {"checks", to_json(v.checks)},
           {"hypotheses_met", v.hypotheses_met}, {"conclusion", optional_bool(v.conclusion)},
           {"counterexample", v.counterexample}};
    if (v.inconsistent) j["inconsistent"] = true;
    if (v.detail) j["detail"] = *v.detail;
    if (v.seed) j["seed"] = *v.seed;
    return j;
}

TriCycleWitness tri_cycle_from_json(const Json& j) {
    try {
        return TriCycleWitness{j.at("cycle").get<std::vector<Vertex>>(), j.at("apex").get<Vertex>(),
                               j.at("edge_index").get<int>()};
    } catch (const Json::exception& e) {
        throw MalformedRecord(std::string("bad C~ witness: ") + e.what());
    }
}

PancyclicCertificate certificate_from_json(const Json& j) {
    try {
        PancyclicCertificate cert;
        cert.order = j.at("order").get<int>();
        for (const auto& e : j.at("lengths")) {
            const auto prov = provenance_from_string(e.at("provenance").get<std::string>());
            if (!prov) throw MalformedRecord("unknown provenance " + e.at("provenance").dump());
            cert.lengths.push_back({e.at("l").get<int>(), CycleWitness{e.at("cycle").get<std::vector<Vertex>>()}, *prov});
        }
        for (const auto& w : j.at("chain")) cert.chain.push_back(tri_cycle_from_json(w));
        return cert;
    } catch (const Json::exception& e) {
        throw MalformedRecord(std::string("bad certificate: ") + e.what());
    }
}

}  // namespace pancycle
