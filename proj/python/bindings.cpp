#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domgame/catalog.hpp"
#include "domgame/enumeration.hpp"
#include "domgame/gamesolver.hpp"
#include "domgame/graph6.hpp"
#include "domgame/perfection.hpp"

namespace py = pybind11;
using namespace domgame;

namespace {

GameVariant variant_of(const std::string& name) {
    if (name == "dom" || name == "domination") return GameVariant::Domination;
    if (name == "total") return GameVariant::TotalDomination;
    throw PreconditionError("variant must be 'dom' or 'total'");
}

Mover mover_of(const std::string& name) {
    if (name == "d" || name == "dominator") return Mover::Dominator;
    if (name == "s" || name == "staller") return Mover::Staller;
    throw PreconditionError("mover must be 'd' or 's'");
}

std::vector<int> set_to_list(VertexSet s) { return s.to_vector(); }

py::dict classify_dict(const Graph& g) {
    ClassificationReport r = classify(g);
    py::dict out;
    out["gg_perfect"] = r.gg_perfect;
    out["two_gg_perfect"] = r.two_gg_perfect;
    out["staller_perfect"] = r.staller_perfect;
    out["total_perfect"] = r.total_perfect ? py::cast(*r.total_perfect) : py::none();
    out["staller_total_perfect"] = r.staller_total_perfect ? py::cast(*r.staller_total_perfect) : py::none();
    out["minimally_imperfect"] = r.minimally_imperfect;
    out["witness"] = r.witness ? py::cast(r.witness->describe()) : py::none();
    out["script"] = r.script ? py::cast(format_build_script(*r.script)) : py::none();
    out["build_order"] = r.build_order;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact domination game solver and perfect-graph recognizer";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::order)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, int v) { return set_to_list(g.neighbors(v)); })
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("from_graph6", [](const std::string& line) { return parse_graph6(line); });
    m.def("from_edge_list", &parse_edge_list);
    m.def("named_graph", &named_graph);
    m.def("kc_graph", &kc_graph, py::arg("m"), py::arg("n"));
    m.def("recognize_kc", [](const Graph& g) -> py::object {
        auto kc = recognize_kc(g);
        return kc ? py::cast(*kc) : py::none();
    });

    m.def("complement", &complement);
    m.def("disjoint_union", &disjoint_union);
    m.def("join", &join);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return induced_subgraph(g, s);
    });
    m.def("is_connected", &is_connected);
    m.def("is_triangle_free", &is_triangle_free);

    m.def("domination_number", &domination_number);
    m.def("total_domination_number", &total_domination_number);
    m.def(
        "game_value",
        [](const Graph& g, const std::string& variant, const std::string& mover) {
            return game_value(g, variant_of(variant), mover_of(mover));
        },
        py::arg("g"), py::arg("variant") = "dom", py::arg("mover") = "d");
    m.def(
        "optimal_first_moves",
        [](const Graph& g, const std::string& variant, const std::string& mover) {
            return set_to_list(optimal_first_moves(g, variant_of(variant), mover_of(mover)));
        },
        py::arg("g"), py::arg("variant") = "dom", py::arg("mover") = "d");

    m.def("mhc_contraction", [](const Graph& g) {
        ContractionMap cm = mhc_contraction(g);
        return py::make_tuple(cm.contracted, cm.class_of);
    });
    m.def("recognize_gg_perfect", [](const Graph& g) {
        RecognitionResult r = recognize_gg_perfect(g);
        py::dict out;
        out["perfect"] = r.perfect;
        out["script"] = r.script ? py::cast(format_build_script(*r.script)) : py::none();
        out["build_order"] = r.build_order;
        out["witness"] = r.witness ? py::cast(r.witness->describe()) : py::none();
        return out;
    });
    m.def("is_gg_graph", &is_gg_graph);
    m.def("brute_force_gg_perfect", &brute_force_gg_perfect);
    m.def("is_minimally_gg_imperfect", &is_minimally_gg_imperfect);
    m.def("classify", &classify_dict);
    m.def("build_script", [](const std::string& text) { return build(parse_build_script(text)); });

    m.def("are_isomorphic", &are_isomorphic);
    m.def("canonical_graph6", [](const Graph& g) { return write_graph6(canonical_graph(g)); });
    m.def("enumerate_nonisomorphic", &enumerate_nonisomorphic);
    m.def(
        "table1",
        [](int n, const std::string& path, int jobs) {
            CountsRow row = table1(path.empty() ? GraphSource::builtin(n) : GraphSource::file(path), jobs);
            return py::make_tuple(row.perfect_all, row.perfect_connected, row.min_imperfect);
        },
        py::arg("n") = 0, py::arg("path") = "", py::arg("jobs") = 1);
    m.def(
        "find_min_imperfect",
        [](int n, const std::string& path, int jobs) {
            return find_min_imperfect(path.empty() ? GraphSource::builtin(n) : GraphSource::file(path), jobs);
        },
        py::arg("n") = 0, py::arg("path") = "", py::arg("jobs") = 1);
}
