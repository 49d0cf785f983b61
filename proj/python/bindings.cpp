// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mbg/conditions.hpp"
#include "mbg/cover.hpp"
#include "mbg/error.hpp"
#include "mbg/io.hpp"
#include "mbg/matroid.hpp"
#include "mbg/reconstruct.hpp"

namespace py = pybind11;
using namespace mbg;

namespace {

PYBIND11_CONSTINIT py::gil_safe_call_once_and_store<py::object> error_storage;
PYBIND11_CONSTINIT py::gil_safe_call_once_and_store<py::object> reconstruction_storage;

void raise(const py::object& type, const Error& e) {
  py::object inst = type(e.what());
  inst.attr("code") = std::string(error_code_name(e.code()));
  inst.attr("witness") = e.witness();
  if (const auto* re = dynamic_cast<const ReconstructionError*>(&e)) inst.attr("stage") = re->stage();
  PyErr_SetObject(type.ptr(), inst.ptr());
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string format_bases(const SetSystem& ss) {
  std::ostringstream out;
  write_bases(out, ss);
  return out.str();
}

SetSystem parse_bases(const std::string& text) {
  std::istringstream in(text);
  return read_bases(in);
}

py::dict witness_dict(const ConditionWitness& w) {
  py::dict d;
  py::dict roles;
  for (const auto& [name, v] : w.roles) roles[py::str(name)] = v;
  d["roles"] = roles;
  if (w.pattern) {
    d["pattern"] = py::dict(py::arg("kind") = std::string(pattern_name(w.pattern->kind)),
                            py::arg("vertices") = w.pattern->vertices);
  }
  d["reason"] = w.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mbg, m) {
  m.doc() = "Matroid basis graph toolkit";

  error_storage.call_once_and_store_result(
      [&]() { return py::object(py::reinterpret_borrow<py::object>(py::exception<Error>(m, "Error"))); });
  reconstruction_storage.call_once_and_store_result([&]() {
    return py::object(py::reinterpret_borrow<py::object>(
        py::exception<ReconstructionError>(m, "ReconstructionError", error_storage.get_stored().ptr())));
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ReconstructionError& e) {
      raise(reconstruction_storage.get_stored(), e);
    } catch (const Error& e) {
      raise(error_storage.get_stored(), e);
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v < 0 || v >= g.size()) throw Error(ErrorCode::kVertexOutOfRange, "vertex out of range", {v});
             auto n = g.neighbors(v);
             return std::vector<Vertex>(n.begin(), n.end());
           })
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("__len__", &Graph::size)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def("parse_graph", &parse_graph);
  m.def("format_graph", &format_graph);
  m.def("is_connected", &is_connected);

  py::class_<SetSystem>(m, "SetSystem")
      .def(py::init<int, std::vector<Mask>>(), py::arg("ground_size"), py::arg("bases"))
      .def_property_readonly("ground_size", &SetSystem::ground_size)
      .def_property_readonly("bases", &SetSystem::bases)
      .def("__len__", &SetSystem::size)
      .def("__contains__", &SetSystem::contains)
      .def("__eq__", [](const SetSystem& a, const SetSystem& b) { return a == b; });

  m.def("parse_bases", &parse_bases);
  m.def("format_bases", &format_bases);
  m.def("uniform_matroid", [](int m_, int k) { return uniform_matroid(m_, k); }, py::arg("m"), py::arg("k"));
  m.def("complete_matroid", [](int n) { return complete_matroid(n); }, py::arg("n"));
  m.def("even_subsets", [](int m_) { return even_subsets(m_); }, py::arg("m"));
  m.def("graphic_matroid", [](const Graph& g) {
    const auto edges = g.edges();
    return graphic_matroid(g.size(), edges);
  });
  m.def("verify_matroid", [](const SetSystem& ss) {
    const auto v = verify_matroid(ss);
    return py::make_tuple(v.holds, v.reason);
  });
  m.def("verify_even_delta_matroid", [](const SetSystem& ss) {
    const auto v = verify_even_delta_matroid(ss);
    return py::make_tuple(v.holds, v.reason);
  });
  m.def("basis_graph", [](const SetSystem& ss) {
    auto r = basis_graph(ss);
    return py::make_tuple(std::move(r.graph), std::move(r.vertex_to_basis));
  });
  m.def("antipodal_quotient", [](int n) { return quotient(antipodal_action(n)).graph; }, py::arg("n"));

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_property_readonly("condition", [](const ConditionReport& r) { return std::string(condition_name(r.id)); })
      .def_readonly("basepoint", &ConditionReport::basepoint)
      .def_readonly("passed", &ConditionReport::pass)
      .def_readonly("exhaustive", &ConditionReport::exhaustive)
      .def_readonly("seed", &ConditionReport::seed)
      .def_property_readonly("witnesses",
                             [](const ConditionReport& r) {
                               py::list out;
                               for (const auto& w : r.witnesses) out.append(witness_dict(w));
                               return out;
                             })
      .def_property_readonly("stats", [](const ConditionReport& r) {
        py::dict d;
        for (const auto& [k, v] : r.stats) d[py::str(k)] = v;
        return d;
      });

  py::class_<AggregateReport>(m, "AggregateReport")
      .def_property_readonly("mode", [](const AggregateReport& r) { return std::string(maurer_mode_name(r.mode)); })
      .def_readonly("passed", &AggregateReport::pass)
      .def_readonly("min_degree", &AggregateReport::min_degree)
      .def_readonly("reports", &AggregateReport::reports);

  m.def(
      "maurer_check",
      [](const Graph& g, const std::string& mode, uint64_t seed, std::optional<int64_t> sample) {
        if (mode != "matroid" && mode != "even-delta") {
          throw Error(ErrorCode::kInvalidArgument, "mode must be 'matroid' or 'even-delta'");
        }
        CheckOptions o;
        o.seed = seed;
        if (sample) {
          o.force_sampling = true;
          o.pair_samples = *sample;
          o.vertex_samples = std::min(o.vertex_samples, *sample);
        }
        return maurer_check(g, mode == "matroid" ? MaurerMode::kMatroid : MaurerMode::kEvenDelta, o);
      },
      py::arg("graph"), py::arg("mode") = "matroid", py::arg("seed") = 0, py::arg("sample") = py::none());
  m.def("check_positioning",
        [](const Graph& g, std::optional<Vertex> v) { return check_positioning(g, v); }, py::arg("graph"),
        py::arg("basepoint") = py::none());
  m.def("check_link_condition",
        [](const Graph& g, std::optional<Vertex> v) { return check_link_condition(g, v); }, py::arg("graph"),
        py::arg("vertex") = py::none());

  py::class_<CoverVerdict>(m, "CoverVerdict")
      .def_readonly("sheets", &CoverVerdict::sheets)
      .def_readonly("simply_connected", &CoverVerdict::simply_connected)
      .def_readonly("vertices", &CoverVerdict::vertices)
      .def_readonly("edges", &CoverVerdict::edges)
      .def_readonly("triangles", &CoverVerdict::triangles)
      .def_readonly("squares", &CoverVerdict::squares)
      .def_readonly("level_sizes", &CoverVerdict::level_sizes);

  m.def(
      "universal_cover",
      [](const Graph& g, Vertex basepoint, std::optional<int64_t> budget, bool checked) {
        CoverOptions o;
        o.budget = budget;
        o.checked = checked;
        return summarize(build_universal_cover(build_complex(g), basepoint, o));
      },
      py::arg("graph"), py::arg("basepoint") = 0, py::arg("budget") = py::none(), py::arg("checked") = false);

  m.def(
      "reconstruct_matroid",
      [](const Graph& g, Vertex basepoint) {
        ReconstructOptions o;
        o.basepoint = basepoint;
        return reconstruct_matroid(g, o).matroid;
      },
      py::arg("graph"), py::arg("basepoint") = 0);
}
