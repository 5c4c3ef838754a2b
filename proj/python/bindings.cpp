#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pancycle/certify.hpp"
#include "pancycle/cycles.hpp"
#include "pancycle/errors.hpp"
#include "pancycle/gadgets.hpp"
#include "pancycle/graph6.hpp"
#include "pancycle/harness.hpp"
#include "pancycle/serialize.hpp"

namespace py = pybind11;
using namespace pancycle;

namespace {

// Results cross the boundary as plain dicts, in the same shape the CLI prints.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& obj) {
    return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

template <class T>
py::object optional_py(const std::optional<T>& w) {
    return w ? to_py(to_json(*w)) : py::none();
}

VertexSet to_set(const std::vector<Vertex>& vs, int n) {
    VertexSet s;
    for (Vertex v : vs) {
        if (v < 0 || v >= n) throw InvalidSets("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw py::index_error("vertex " + std::to_string(v) + " out of range");
}

ScanConfig make_config(int p, const std::vector<std::string>& checks, int workers, std::uint64_t seed,
                       std::optional<int> n_min, std::optional<int> n_max, std::optional<std::uint64_t> path_samples,
                       std::optional<std::filesystem::path> out, const std::string& emit,
                       std::optional<std::filesystem::path> checkpoint, std::optional<std::uint64_t> max_records) {
    ScanConfig cfg;
    cfg.filter.hypotheses = Hypotheses::for_p(p);
    if (n_min) cfg.filter.n_min = *n_min;
    if (n_max) cfg.filter.n_max = *n_max;
    cfg.checks.clear();
    for (const auto& name : checks) {
        const auto c = check_from_string(name);
        if (!c) throw py::value_error("unknown check '" + name + "'");
        cfg.checks.push_back(*c);
    }
    cfg.workers = workers;
    cfg.seed = seed;
    cfg.path_samples = path_samples;
    cfg.out = std::move(out);
    if (emit == "all") cfg.emit = EmitMode::All;
    else if (emit == "verified") cfg.emit = EmitMode::Verified;
    else if (emit == "counterexamples") cfg.emit = EmitMode::Counterexamples;
    else throw py::value_error("emit must be all, verified or counterexamples");
    cfg.checkpoint = std::move(checkpoint);
    cfg.stop_after = max_records;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_pancycle, m) {
    m.doc() = "Pancyclicity checks for [s,t]-graphs";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<MalformedRecord>(m, "MalformedRecord", error.ptr());
    py::register_exception<OrderTooLarge>(m, "OrderTooLarge", error.ptr());
    py::register_exception<InvalidSets>(m, "InvalidSets", error.ptr());
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", error.ptr());
    py::register_exception<HypothesesViolated>(m, "HypothesesViolated", error.ptr());
    py::register_exception<ExtensionFailed>(m, "ExtensionFailed", error.ptr());
    py::register_exception<CertificateGap>(m, "CertificateGap", error.ptr());
    py::register_exception<InputUnreadable>(m, "InputUnreadable", error.ptr());
    py::register_exception<CheckpointMismatch>(m, "CheckpointMismatch", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("adjacent",
             [](const Graph& g, Vertex u, Vertex v) {
                 check_vertex(g, u);
                 check_vertex(g, v);
                 return g.adjacent(u, v);
             })
        .def("degree",
             [](const Graph& g, Vertex v) {
                 check_vertex(g, v);
                 return g.degree(v);
             })
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 check_vertex(g, v);
                 return g.neighbors(v).to_vector();
             })
        .def("edges", &Graph::edges)
        .def("complement", &Graph::complement)
        .def("__len__", &Graph::order)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + write_graph6(g) + "')"; });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("write_graph6", &write_graph6);

    auto graphs_mod = m.def_submodule("graphs", "Standard constructions");
    graphs_mod.def("complete", &graphs::complete);
    graphs_mod.def("cycle", &graphs::cycle);
    graphs_mod.def("path", &graphs::path);
    graphs_mod.def("complete_bipartite", &graphs::complete_bipartite);
    graphs_mod.def("petersen", &graphs::petersen);
    graphs_mod.def("bowtie", &graphs::bowtie);
    graphs_mod.def("dumbbell", &graphs::dumbbell);

    m.def("min_degree", &min_degree);
    m.def("is_connected", py::overload_cast<const Graph&>(&is_connected));
    m.def("is_two_connected", &is_two_connected);
    m.def("independence_number", &independence_number);
    m.def("blow_up", &blow_up);
    m.def("recognize_c5_blowup", &recognize_c5_blowup);
    m.def(
        "check_st", [](const Graph& g, int s, int t, bool exact) { return to_py(to_json(check_st(g, s, t, exact), s, t)); },
        py::arg("g"), py::arg("s"), py::arg("t"), py::arg("exact_minimum") = false);

    m.def("find_triangle", [](const Graph& g) -> py::object {
        const auto t = find_triangle(g);
        return t ? to_py(triangle_to_json(*t)) : py::none();
    });
    m.def("find_c_tilde", [](const Graph& g, int l) { return optional_py(find_c_tilde(g, l)); });
    m.def("find_switch", [](const Graph& g, int l) { return optional_py(find_switch(g, l)); });
    m.def("find_dumbbell", [](const Graph& g, int l) { return optional_py(find_dumbbell(g, l)); });
    m.def(
        "shortest_st_path",
        [](const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& t, const std::vector<Vertex>& excluded) {
            const int n = g.order();
            return optional_py(shortest_st_path(g, to_set(s, n), to_set(t, n), to_set(excluded, n)));
        },
        py::arg("g"), py::arg("S"), py::arg("T"), py::arg("excluded") = std::vector<Vertex>{});

    m.def("cycle_spectrum", [](const Graph& g) { return to_py(to_json(cycle_spectrum(g))); });
    m.def("extend_c_tilde",
          [](const Graph& g, const py::dict& w) { return to_py(to_json(extend_c_tilde(g, tri_cycle_from_json(from_py(w))))); });
    m.def("certify_pancyclic", [](const Graph& g) { return to_py(to_json(certify_pancyclic(g))); });
    m.def("build_certificate", [](const Graph& g) { return to_py(to_json(build_certificate(g))); });
    m.def("verify_certificate",
          [](const Graph& g, const py::dict& cert) { return verify_certificate(g, certificate_from_json(from_py(cert))); });

    m.def(
        "check_hypotheses", [](const Graph& g, int p) { return to_py(to_json(check_hypotheses(g, Hypotheses::for_p(p)))); },
        py::arg("g"), py::arg("p") = 3);
    m.def(
        "verify_main_theorem",
        [](const Graph& g, int p) { return to_py(to_json(verify_main_theorem(g, Hypotheses::for_p(p)))); }, py::arg("g"),
        py::arg("p") = 3);
    m.def("verify_gadget_lemma", [](const Graph& g) { return to_py(to_json(verify_gadget_lemma(g))); });
    m.def(
        "verify_path_lemma",
        [](const Graph& g, int p, std::optional<std::uint64_t> samples, std::uint64_t seed) {
            const PathLemmaMode mode = samples ? PathLemmaMode(Sampled{*samples}) : PathLemmaMode(Exhaustive{});
            return to_py(to_json(verify_path_lemma(g, p, mode, seed)));
        },
        py::arg("g"), py::arg("p") = 3, py::arg("samples") = py::none(), py::arg("seed") = 0);
    m.def("verify_triangle_lemma", [](const Graph& g, int p) { return to_py(to_json(verify_triangle_lemma(g, p))); },
          py::arg("g"), py::arg("p") = 3);

    m.def(
        "scan",
        [](const std::string& input, int p, const std::vector<std::string>& checks, int workers, std::uint64_t seed,
           std::optional<int> n_min, std::optional<int> n_max, std::optional<std::uint64_t> path_samples,
           std::optional<std::filesystem::path> out, const std::string& emit,
           std::optional<std::filesystem::path> checkpoint, std::optional<std::uint64_t> max_records) {
            const ScanConfig cfg = make_config(p, checks, workers, seed, n_min, n_max, path_samples, std::move(out), emit,
                                               std::move(checkpoint), max_records);
            ScanReport r;
            {
                py::gil_scoped_release release;
                r = scan(input, cfg);
            }
            return to_py(to_json(r));
        },
        py::arg("input"), py::arg("p") = 3, py::arg("checks") = std::vector<std::string>{"theorem"},
        py::arg("workers") = 1, py::arg("seed") = 0, py::arg("n_min") = py::none(), py::arg("n_max") = py::none(),
        py::arg("path_samples") = py::none(), py::arg("out") = py::none(), py::arg("emit") = "all",
        py::arg("checkpoint") = py::none(), py::arg("max_records") = py::none());

    m.def(
        "probe_conjecture",
        [](int p, const std::string& input, int workers, std::optional<std::filesystem::path> out,
           std::optional<std::filesystem::path> checkpoint) {
            ScanConfig cfg;
            cfg.workers = workers;
            cfg.out = std::move(out);
            cfg.checkpoint = std::move(checkpoint);
            ScanReport r;
            {
                py::gil_scoped_release release;
                r = probe_conjecture(p, input, cfg);
            }
            return to_py(to_json(r));
        },
        py::arg("p"), py::arg("input"), py::arg("workers") = 1, py::arg("out") = py::none(),
        py::arg("checkpoint") = py::none());

    m.def(
        "resume",
        [](const std::filesystem::path& checkpoint, std::optional<int> workers) {
            ScanReport r;
            {
                py::gil_scoped_release release;
                r = resume(checkpoint, workers);
            }
            return to_py(to_json(r));
        },
        py::arg("checkpoint"), py::arg("workers") = py::none());
}
