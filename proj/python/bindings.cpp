#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "equidom/decide.hpp"
#include "equidom/generate.hpp"
#include "equidom/graph.hpp"
#include "equidom/hereditary.hpp"
#include "equidom/oracle.hpp"
#include "equidom/pseudo_classes.hpp"
#include "equidom/solver.hpp"
#include "equidom/twin.hpp"
#include "equidom/weights.hpp"

namespace py = pybind11;
using namespace equidom;

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& ids) {
    return VertexSet::of(g.vertex_count(), ids);
}

py::dict decision_dict(const Decision& d) {
    py::dict out;
    out["yes"] = d.yes;
    if (d.yes) {
        out["weights"] = d.structure->weights;
        out["t"] = d.structure->target;
    } else {
        out["reason"] = d.reason;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_equidom, m) {
    m.doc() = "equidominating graph toolkit (vertex ids are 0-based here; the "
              "file formats stay 1-based)";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
    m.def("serialize_graph", &serialize_graph);

    m.def("is_dominating",
          [](const Graph& g, const std::vector<int>& d) { return is_dominating(g, to_set(g, d)); });
    m.def("is_mds",
          [](const Graph& g, const std::vector<int>& d) { return is_mds(g, to_set(g, d)); });

    m.def("twin_classes", [](const Graph& g) {
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const TwinClass& c : twin_partition(g).classes)
            out.emplace_back(to_string(c.kind), c.members);
        return out;
    });
    m.def("pseudo_classes", [](const Graph& g) {
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const PseudoClass& c : pseudo_class_partition(g).classes)
            out.emplace_back(to_string(c.kind), c.members);
        return out;
    });

    m.def("decide_k", [](const Graph& g, Weight k) {
        return decision_dict(decide_k_equidomination(g, k));
    });
    m.def("decide_target", [](const Graph& g, Weight t) {
        return decision_dict(decide_target_t(g, t));
    });

    m.def("is_hereditarily_equidominating",
          [](const Graph& g) { return recognize_hereditary(g).hereditary; });
    m.def("forbidden_subgraph", [](const Graph& g) -> py::object {
        auto w = forbidden_subgraph_search(g);
        if (!w) return py::none();
        return py::make_tuple(w->name, w->vertices);
    });
    m.def("hereditary_structure", [](const Graph& g) -> py::object {
        auto s = construct_structure_hereditary(g);
        if (!s) return py::none();
        py::dict out;
        out["weights"] = s->weights;
        out["t"] = s->target;
        return out;
    });

    m.def("verify_structure",
          [](const Graph& g, const std::vector<Weight>& weights, Weight t) {
              return verify_structure(g, WeightStructure{weights, t});
          });
    m.def("enumerate_mds", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (const VertexSet& d : enumerate_mds(g)) out.push_back(d.to_vector());
        return out;
    });

    m.def("complete", &make_complete);
    m.def("edgeless", &make_edgeless);
    m.def("path", &make_path);
    m.def("cycle", &make_cycle);
    m.def("k2n_minus_ne", &make_k2n_minus_ne);
    m.def("corona", &make_corona);
    m.def("random_graph", &make_random, py::arg("n"), py::arg("m"), py::arg("seed"));
}
