#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyform/census.hpp"
#include "polyform/complexaudit.hpp"
#include "polyform/external.hpp"
#include "polyform/feasibility.hpp"
#include "polyform/internal.hpp"
#include "polyform/json_io.hpp"
#include "polyform/replay.hpp"
#include "polyform/typesolver.hpp"

namespace py = pybind11;

namespace {

using namespace polyform;

// route structured reports through their canonical wire form so the
// python view matches the CLI byte for byte
py::object to_py(const OrderedJson& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ big_to_py(const BigInt& n) {
  return py::module_::import("builtins").attr("int")(n.str());
}

py::tuple config_tuple(const InternalConfig& c) {
  return py::make_tuple(c.tetrahedra, c.gluing_triangles,
                        c.interior_segments);
}

}  // namespace

PYBIND11_MODULE(_polyform, m) {
  m.doc() = "exact combinatorial structure counts for genus-0 polyhedra";

  py::register_exception<Error>(m, "PolyformError", PyExc_ValueError);

  m.def(
      "check",
      [](const std::map<Int, Int>& polygons) {
        return to_py(canonical_json(check_enclosure(PolygonMultiset{polygons})));
      },
      py::arg("polygons"),
      "Run the enclosure worksheet on a {degree: count} face multiset.");

  m.def("vertex_estimate", &vertex_estimate, py::arg("angle_units"),
        "Vertex count forced by an even angle-unit total: N/2 + 2.");

  m.def(
      "external_bounds",
      [](Int v) {
        ExternalBounds b = external_bounds(v);
        py::dict d;
        d["e_min"] = b.e_min;
        d["e_max"] = b.e_max;
        d["f_min"] = b.f_min;
        d["f_max"] = b.f_max;
        d["s_max"] = b.s_max;
        d["combination_count"] = b.combo_count;
        FullnessBounds mb = m_bounds(v);
        d["m_min"] = mb.m_min;
        d["m_max"] = mb.m_max;
        return d;
      },
      py::arg("vertex_count"),
      "Edge, face, flatness, and fullness ranges at a vertex count.");

  m.def(
      "flatness_series",
      [](Int v) {
        py::list rows;
        for (const FlatnessStep& s : flatness_series(v))
          rows.append(py::make_tuple(s.flatness, s.edge_count, s.face_count));
        return rows;
      },
      py::arg("vertex_count"),
      "All (S, E, F) rows at a vertex count, flattest first.");

  m.def(
      "internal_ranges",
      [](Int v) {
        InternalRanges r = internal_ranges(v);
        py::dict d;
        d["t_min"] = r.t_min;
        d["t_max"] = r.t_max;
        d["n_i_min"] = r.n_i_min;
        d["n_i_max"] = r.n_i_max;
        d["s_i_max"] = r.s_i_max;
        d["config_count"] = r.config_count;
        return d;
      },
      py::arg("vertex_count"),
      "Interior decomposition ranges at a vertex count.");

  m.def(
      "salt_ladder",
      [](Int v) {
        py::list rows;
        for (const InternalConfig& c : salt_ladder(v))
          rows.append(config_tuple(c));
        return rows;
      },
      py::arg("vertex_count"),
      "All (T, N_i, S_i) ladder rungs, minimal decomposition first.");

  m.def(
      "heuristic_prune",
      [](Int v, Int s) {
        PrunedLadder p = heuristic_prune(v, s);
        py::list rows;
        for (const InternalConfig& c : p.configs) rows.append(config_tuple(c));
        py::dict d;
        d["configs"] = rows;
        d["heuristic"] = p.heuristic;
        d["caveat"] = p.caveat;
        return d;
      },
      py::arg("vertex_count"), py::arg("flatness"),
      "Ladder truncated by the flatness exclusion rule (heuristic).");

  m.def(
      "boundary_from_interior",
      [](Int t, Int n_i, Int s, Int s_i) {
        BoundaryCounts b = boundary_from_interior(t, n_i, s, s_i);
        return py::make_tuple(b.vertex_count, b.edge_count, b.face_count);
      },
      py::arg("tetrahedra"), py::arg("gluing_triangles"), py::arg("flatness"),
      py::arg("interior_segments"),
      "(V, E, F) of the boundary recovered from an interior decomposition.");

  m.def("extended_euler", &extended_euler, py::arg("tetrahedra"),
        py::arg("gluing_triangles"), py::arg("interior_segments"),
        "2(T - N_i + S_i); equals 2 exactly when the decomposition "
        "identity holds.");

  m.def("enumerate_face_types", &enumerate_face_types, py::arg("vertex_count"),
        py::arg("flatness"), py::arg("edge_count"), py::arg("face_count"),
        py::arg("allow_inconsistent") = false,
        "All face-degree count vectors over degrees 3..V-1, sorted "
        "descending.");

  m.def("enumerate_vertex_types", &enumerate_vertex_types,
        py::arg("vertex_count"), py::arg("edge_count"),
        "All valency count vectors over valencies 3..V-1, sorted "
        "descending.");

  m.def("pair_combination_count", &pair_combination_count,
        py::arg("vertex_count"),
        "Number of admissible (S, S_i) range pairings at a vertex count.");

  m.def(
      "partition_count", [](Int n) { return big_to_py(partition_count(n)); },
      py::arg("n"), "Unrestricted partition count p(n).");

  m.def(
      "restricted_partition_count",
      [](Int n, Int max_part) {
        return big_to_py(restricted_partition_count(n, max_part));
      },
      py::arg("n"), py::arg("max_part"),
      "Partitions of n into parts of size at most max_part.");

  m.def(
      "census",
      [](Int from_vertices, Int to_vertices) {
        py::list rows;
        for (const CensusRow& r : census(from_vertices, to_vertices)) {
          py::dict d;
          d["vertex_count"] = r.vertex_count;
          d["s_max"] = r.s_max;
          d["pair_count"] = r.pair_count;
          d["face_combo_upper"] = big_to_py(r.face_combo_upper);
          rows.append(d);
        }
        return rows;
      },
      py::arg("from_vertices"), py::arg("to_vertices"),
      "Census rows for an inclusive vertex-count range.");

  m.def(
      "audit",
      [](Int vertices, const std::vector<std::array<Int, 4>>& tets,
         Int merges) {
        TetComplex c{vertices, tets, std::nullopt};
        AuditReport r = audit(c);
        r.accounting_modes = accounting_table(c, merges);
        return to_py(canonical_json(r));
      },
      py::arg("vertices"), py::arg("tets"), py::arg("merges") = 0,
      "Audit a tetrahedral complex given inline.");

  m.def(
      "audit_file",
      [](const std::string& path, Int merges) {
        TetComplex c = load_complex(path);
        AuditReport r = audit(c);
        r.accounting_modes = accounting_table(c, merges);
        return to_py(canonical_json(r));
      },
      py::arg("path"), py::arg("merges") = 0,
      "Audit a tetrahedral complex loaded from a JSON file.");

  m.def(
      "replay",
      [](const std::string& set_name) {
        ReplayReport r = replay_fixture_set(set_name, fixture_directory());
        py::list rows;
        for (const RowResult& row : r.rows) {
          py::dict d;
          d["label"] = row.label;
          d["pass"] = row.pass;
          d["detail"] = row.detail;
          rows.append(d);
        }
        py::dict d;
        d["set"] = r.set_name;
        d["passed"] = r.passed();
        d["total"] = static_cast<Int>(r.rows.size());
        d["rows"] = rows;
        return d;
      },
      py::arg("set_name"),
      "Re-derive a bundled reference table and report per-row agreement.");

  m.def("fixture_sets", [] { return fixture_set_names(); },
        "Names accepted by replay().");
}
