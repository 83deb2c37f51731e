#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "soltes/analysis.hpp"
#include "soltes/edge_list.hpp"
#include "soltes/family.hpp"
#include "soltes/graph.hpp"
#include "soltes/search.hpp"

#include <sstream>

namespace py = pybind11;
using namespace soltes;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Wiener-index vertex-deletion toolkit: H(n,k,l,n0,t0) families, exact "
              "delta spectra, closed forms, and the parameter sweep";

    py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_ValueError);
    py::register_exception<CutVertexError>(m, "CutVertexError", PyExc_ValueError);
    py::register_exception<NonIntegralDeltaError>(m, "NonIntegralDeltaError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return Graph::from_edges(order, edges);
             }),
             py::arg("order"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 auto nb = g.neighbors(v);
                 return std::vector<Vertex>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(order=" << g.order() << ", edges=" << g.edge_count() << ")";
            return out.str();
        });

    m.def("bfs_distances",
          [](const Graph& g, Vertex source) { return bfs_distances(g, source).dist; },
          py::arg("graph"), py::arg("source"),
          "Hop distances from the source; -1 where unreachable.");
    m.def("transmission", &transmission, py::arg("graph"), py::arg("v"));
    m.def("all_transmissions", &all_transmissions, py::arg("graph"), py::arg("threads") = 1);
    m.def("wiener", &wiener, py::arg("graph"), py::arg("threads") = 1);
    m.def("delete_vertex", &delete_vertex, py::arg("graph"), py::arg("v"));
    m.def("is_connected", &is_connected, py::arg("graph"));

    py::class_<FSpec>(m, "FSpec")
        .def_static("empty", &FSpec::empty, py::arg("l"))
        .def_static("empty_plus_edges", &FSpec::empty_plus_edges, py::arg("l"),
                    py::arg("extra"))
        .def_static("perfect_matching", &FSpec::perfect_matching, py::arg("l"))
        .def_static("star_path", &FSpec::star_path, py::arg("k"))
        .def_static("star_cycle", &FSpec::star_cycle, py::arg("k"))
        .def_static("path_center3", &FSpec::path_center3)
        .def_static("custom", &FSpec::custom, py::arg("n0"), py::arg("edges"),
                    py::arg("attachments"))
        .def_static("parse", &FSpec::parse, py::arg("text"))
        .def("with_extra_edges", &FSpec::with_extra_edges, py::arg("extra"))
        .def_readonly("order", &FSpec::order)
        .def_readonly("edges", &FSpec::edges)
        .def_readonly("attachments", &FSpec::attachments)
        .def_property_readonly("l", &FSpec::l)
        .def("__str__", &FSpec::to_string)
        .def("__repr__", [](const FSpec& f) { return "FSpec(" + f.to_string() + ")"; })
        .def(py::self == py::self);

    m.def("t0_of", &t0_of, py::arg("fspec"));

    py::class_<HParams>(m, "HParams")
        .def(py::init<int, int, FSpec>(), py::arg("n"), py::arg("k"), py::arg("fspec"))
        .def_readonly("n", &HParams::n)
        .def_readonly("k", &HParams::k)
        .def_readonly("fspec", &HParams::fspec)
        .def_property_readonly("n0", &HParams::n0)
        .def_property_readonly("l", &HParams::l)
        .def_property_readonly("order", &HParams::order)
        .def("__repr__", [](const HParams& p) { return selector_string(p); });

    py::class_<HGraph>(m, "HGraph")
        .def_readonly("graph", &HGraph::graph)
        .def_readonly("params", &HGraph::params)
        .def_readonly("t0", &HGraph::t0)
        .def("cycle_vertices", &HGraph::cycle_vertices)
        .def("is_cycle_vertex", &HGraph::is_cycle_vertex, py::arg("v"))
        .def("position_of", &HGraph::position_of, py::arg("v"))
        .def("f_index", &HGraph::f_index, py::arg("v"))
        .def("gadget_vertex", &HGraph::gadget_vertex, py::arg("position"), py::arg("f"))
        .def("to_edge_list",
             [](const HGraph& h) {
                 std::ostringstream out;
                 write_h_graph(out, h);
                 return out.str();
             });

    m.def("build_h", &build_H, py::arg("params"));
    m.def("parse_selector", &parse_selector, py::arg("selector"));
    m.def("selector_string", &selector_string, py::arg("params"));
    m.def("tr_closed_form", &tr_closed_form, py::arg("n"), py::arg("k"), py::arg("n0"),
          py::arg("t0"));
    m.def("delta_closed_form", &delta_closed_form, py::arg("n"), py::arg("k"), py::arg("n0"),
          py::arg("t0"));
    m.def("case_sums",
          [](std::int64_t n, std::int64_t n0) {
              CaseSums s = case_sums(n, n0);
              return py::make_tuple(s.case1, s.case2, s.case3);
          },
          py::arg("n"), py::arg("n0"));

    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
        .def("decimal3", &Rational::to_decimal3)
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<DeltaSpectrum>(m, "DeltaSpectrum")
        .def_readonly("counts", &DeltaSpectrum::counts)
        .def_readonly("disconnecting", &DeltaSpectrum::disconnecting)
        .def_readonly("order", &DeltaSpectrum::order)
        .def("total", &DeltaSpectrum::total)
        .def(py::self == py::self);

    m.def("delta_of_vertex", &delta_of_vertex, py::arg("graph"), py::arg("v"),
          py::arg("threads") = 1);
    m.def("delta_spectrum", &delta_spectrum, py::arg("graph"), py::arg("threads") = 1);
    m.def("delta_spectrum_orbit", &delta_spectrum_orbit, py::arg("hgraph"),
          py::arg("threads") = 1);
    m.def("r_m", &r_m, py::arg("spectrum"), py::arg("m"));

    py::class_<InstanceReport>(m, "InstanceReport")
        .def_readonly("selector", &InstanceReport::selector)
        .def_readonly("order", &InstanceReport::order)
        .def_readonly("wiener_bfs", &InstanceReport::wiener_bfs)
        .def_readonly("tr_bfs", &InstanceReport::tr_bfs)
        .def_readonly("tr_formula", &InstanceReport::tr_formula)
        .def_readonly("delta_bfs", &InstanceReport::delta_bfs)
        .def_readonly("delta_formula", &InstanceReport::delta_formula)
        .def_readonly("spectrum", &InstanceReport::spectrum)
        .def_readonly("r_at_delta", &InstanceReport::r_at_delta)
        .def_readonly("orbit_bound", &InstanceReport::orbit_bound)
        .def_readonly("failures", &InstanceReport::failures)
        .def("passed", &InstanceReport::passed)
        .def("__repr__", &InstanceReport::summary);

    m.def("verify_instance", &verify_instance, py::arg("hgraph"), py::arg("threads") = 1,
          py::arg("cap") = 5000);

    py::class_<Range>(m, "Range")
        .def(py::init<int, int>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &Range::lo)
        .def_readwrite("hi", &Range::hi);

    py::class_<SweepHit>(m, "SweepHit")
        .def_readonly("n", &SweepHit::n)
        .def_readonly("k", &SweepHit::k)
        .def_readonly("n0", &SweepHit::n0)
        .def_readonly("t0", &SweepHit::t0)
        .def_readonly("m", &SweepHit::m)
        .def_readonly("bound", &SweepHit::bound)
        .def_readonly("realization", &SweepHit::realization)
        .def_property_readonly("order", &SweepHit::order)
        .def("__repr__", [](const SweepHit& h) { return sweep_csv_row(h); });

    py::class_<SweepSkip>(m, "SweepSkip")
        .def_readonly("n", &SweepSkip::n)
        .def_readonly("k", &SweepSkip::k)
        .def_readonly("n0", &SweepSkip::n0)
        .def_readonly("t0", &SweepSkip::t0)
        .def_readonly("reason", &SweepSkip::reason);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("hits", &SweepResult::hits)
        .def_readonly("skipped", &SweepResult::skipped);

    m.def("sweep", &sweep, py::arg("m"), py::arg("n_range"), py::arg("k_range"),
          py::arg("n0_range"), py::arg("max_l") = 0);
    m.def("realize_gadget",
          [](int n0, int l, std::int64_t t0) {
              RealizeResult r = realize_gadget(n0, l, t0);
              return py::make_tuple(r.gadget, r.note);
          },
          py::arg("n0"), py::arg("l"), py::arg("t0"));

    py::class_<HitReport>(m, "HitReport")
        .def_readonly("hit", &HitReport::hit)
        .def_readonly("realized_t0", &HitReport::realized_t0)
        .def_readonly("instance", &HitReport::instance)
        .def_readonly("failures", &HitReport::failures)
        .def("passed", &HitReport::passed);

    m.def("verify_hit", &verify_hit, py::arg("hit"), py::arg("threads") = 1,
          py::arg("cap") = 5000);

    m.def("load_edge_list",
          [](const std::string& path) {
              EdgeListData data = load_edge_list(path);
              return py::make_tuple(data.graph, data.cycle_marks, data.construct_selector);
          },
          py::arg("path"), "Returns (graph, cycle_marks, construct_selector).");
    m.def("to_edge_list_string",
          [](const Graph& g) { return to_edge_list_string(g); }, py::arg("graph"));
}
