#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitham/config_patterns.hpp"
#include "splitham/errors.hpp"
#include "splitham/patterns.hpp"
#include "splitham/verify.hpp"

namespace py = pybind11;
using namespace splitham;

namespace {

py::dict cover_dict(const PseudoICover& q) {
    py::list paths, cycles;
    for (const auto& p : q.paths) paths.append(p.seq);
    for (const auto& c : q.cycles) cycles.append(c.seq);
    py::dict d;
    d["paths"] = paths;
    d["cycles"] = cycles;
    return d;
}

py::dict cover_dict(const ICover& c) { return cover_dict(PseudoICover{c.paths, {}}); }

ICover cover_from_paths(const std::vector<std::vector<int>>& paths) {
    ICover c;
    for (const auto& seq : paths) c.paths.push_back(AlternatingPath{seq});
    return c;
}

SplitPartition partition_from_lists(std::vector<int> s_side, std::vector<int> i_side) {
    SplitPartition p;
    p.clique = std::move(s_side);
    p.independent = std::move(i_side);
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());
    return p;
}

}  // namespace

PYBIND11_MODULE(splitham, m) {
    m.doc() = "Split-graph Hamilton-connectivity toolkit";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<InvalidSpec>(m, "InvalidSpecError", PyExc_ValueError);
    py::register_exception<PreconditionViolated>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<IllegalSurgery>(m, "IllegalSurgeryError", PyExc_ValueError);
    py::register_exception<ExistenceFailure>(m, "ExistenceFailureError", PyExc_RuntimeError);
    py::register_exception<ConstructionFailure>(m, "ConstructionFailureError", PyExc_RuntimeError);
    py::register_exception<OrderCapExceeded>(m, "OrderCapError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def_property_readonly("order", &Graph::order)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(graph6='" + to_graph6(g) + "')"; });

    m.def("is_connected", &is_connected);
    m.def("is_k_connected", &is_k_connected, py::arg("g"), py::arg("k"));

    m.def(
        "find_induced",
        [](const Graph& g, const std::string& pattern) -> py::object {
            PatternId id = pattern == "K13"    ? PatternId::K13
                           : pattern == "K14"  ? PatternId::K14
                           : pattern == "K14E" ? PatternId::K14E
                                               : throw InvalidSpec("unknown pattern id");
            auto w = find_induced(g, id);
            if (!w) return py::none();
            return py::cast(w->mapping);
        },
        py::arg("g"), py::arg("pattern"));

    m.def("is_free", [](const Graph& g, const std::vector<std::string>& patterns) {
        for (const auto& name : patterns) {
            PatternId id = name == "K13"    ? PatternId::K13
                           : name == "K14"  ? PatternId::K14
                           : name == "K14E" ? PatternId::K14E
                                            : throw InvalidSpec("unknown pattern id");
            if (find_induced(g, id)) return false;
        }
        return true;
    });

    m.def("split_partition", [](const Graph& g) -> py::object {
        auto p = split_partition(g);
        if (!p) return py::none();
        return py::make_tuple(p->clique, p->independent);
    });

    m.def(
        "find_config",
        [](const Graph& g, std::vector<int> s_side, std::vector<int> i_side,
           const std::string& which) -> py::object {
            SplitPartition p = partition_from_lists(std::move(s_side), std::move(i_side));
            auto w = which == "A"   ? find_config_A(g, p)
                     : which == "B" ? find_config_B(g, p)
                                    : throw InvalidSpec("config must be 'A' or 'B'");
            if (!w) return py::none();
            return py::make_tuple(w->centers, w->leaves);
        },
        py::arg("g"), py::arg("S"), py::arg("I"), py::arg("which"));

    m.def("build_pseudo_icover",
          [](const Graph& g, std::vector<int> s_side, std::vector<int> i_side) {
              return cover_dict(build_pseudo_icover(
                  g, partition_from_lists(std::move(s_side), std::move(i_side))));
          });
    m.def("build_icover", [](const Graph& g, std::vector<int> s_side, std::vector<int> i_side) {
        return cover_dict(build_icover(g, partition_from_lists(std::move(s_side), std::move(i_side))));
    });
    m.def("bound_lengths", [](const Graph& g, std::vector<int> s_side, std::vector<int> i_side,
                              const std::vector<std::vector<int>>& paths) {
        SplitPartition p = partition_from_lists(std::move(s_side), std::move(i_side));
        return cover_dict(bound_lengths(g, p, cover_from_paths(paths)));
    });
    m.def("build_icover_avoiding", [](const Graph& g, std::vector<int> s_side,
                                      std::vector<int> i_side, int u, int v) {
        SplitPartition p = partition_from_lists(std::move(s_side), std::move(i_side));
        return cover_dict(build_icover_avoiding(g, p, u, v));
    });

    m.def("ham_path", [](const Graph& g, std::vector<int> s_side, std::vector<int> i_side, int u,
                         int v) {
        SplitPartition p = partition_from_lists(std::move(s_side), std::move(i_side));
        ICover c = build_icover_avoiding(g, p, u, v);
        return ham_path_from_icover(g, p, c, u, v).seq;
    });

    m.def(
        "verify_certificate",
        [](const Graph& g, const std::vector<int>& seq, int u, int v) {
            return verify_certificate(g, HamPathCertificate{seq}, u, v);
        },
        py::arg("g"), py::arg("sequence"), py::arg("u"), py::arg("v"));

    m.def(
        "hamilton_connected",
        [](const Graph& g, int cap) {
            auto rep = hamilton_connected_oracle(g, cap);
            return py::make_tuple(rep.connected, rep.failing_pairs);
        },
        py::arg("g"), py::arg("oracle_cap") = kDefaultOracleCap);

    m.def(
        "complete_split",
        [](int s, int i_count) { return gen_family_complete_split(s, i_count); },
        py::arg("s"), py::arg("i_count"));

    m.def(
        "verify",
        [](const Graph& g, int r) {
            VerifyOptions opts;
            opts.r = r;
            return verify_theorem(g, opts).to_json().dump();
        },
        py::arg("g"), py::arg("r") = 3, "run the full verdict; returns a JSON report string");
}
