#include "polyform/json_io.hpp"

#include <fstream>

namespace polyform {

namespace {

OrderedJson opt_field(const std::optional<Int>& v) {
  return v ? OrderedJson(*v) : OrderedJson(nullptr);
}

}  // namespace

OrderedJson canonical_json(const PolygonMultiset& m) {
  OrderedJson polygons = OrderedJson::object();
  for (auto& [k, n] : m.counts) polygons[std::to_string(k)] = n;
  return OrderedJson{{"polygons", polygons}};
}

OrderedJson canonical_json(const FeasibilityReport& r) {
  OrderedJson j;
  j["input"] = canonical_json(r.input);
  OrderedJson steps;
  steps["N"] = r.angle_units;
  steps["V"] = opt_field(r.vertex_count);
  steps["S"] = r.flatness;
  steps["F"] = r.face_count;
  steps["E"] = opt_field(r.edge_count);
  steps["M"] = r.fullness;
  j["steps"] = steps;
  j["euler"] = opt_field(r.euler_value);
  j["s_max"] = opt_field(r.s_max);
  j["s_difference"] = opt_field(r.s_difference);
  j["verdict"] = to_string(r.verdict);
  j["caveats"] = r.caveats;
  OrderedJson checks = OrderedJson::object();
  for (auto& [name, ok] : r.cross_checks) checks[name] = ok;
  j["cross_checks"] = checks;
  return j;
}

OrderedJson canonical_json(const AccountingRow& row) {
  OrderedJson j;
  j["mode"] = row.mode;
  j["V"] = row.vertex_count;
  j["E"] = row.edge_count;
  j["F"] = row.face_count;
  j["T"] = row.tetrahedra;
  j["N_i"] = row.gluing_triangles;
  j["S_i"] = row.interior_segments;
  j["E_minus_F"] = row.edge_count - row.face_count;
  j["two_T_minus_N_i"] = 2 * row.tetrahedra - row.gluing_triangles;
  j["V_minus_E_plus_F"] = row.euler;
  j["T_minus_N_i_plus_S_i"] = row.decomposition_link;
  return j;
}

OrderedJson canonical_json(const AuditReport& r) {
  OrderedJson j;
  OrderedJson counts;
  counts["T"] = r.counts.tetrahedra;
  counts["N_i"] = r.counts.gluing_triangles;
  counts["E_i"] = r.counts.interior_edges;
  counts["V_i"] = r.counts.interior_vertices;
  counts["V_b"] = r.counts.boundary_vertices;
  counts["E_b"] = r.counts.boundary_edges;
  counts["F_b"] = r.counts.boundary_triangles;
  j["counts"] = counts;
  j["exact_link_value"] = r.exact_link_value;
  j["boundary_euler"] = r.boundary_euler;
  j["normal_form"] = r.normal_form;
  OrderedJson modes = OrderedJson::array();
  for (const AccountingRow& row : r.accounting_modes)
    modes.push_back(canonical_json(row));
  j["accounting_modes"] = modes;
  return j;
}

PolygonMultiset multiset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("polygons") || !j["polygons"].is_object())
    throw Error(ErrorCode::ParseError,
                "expected {\"polygons\": {\"<degree>\": <count>, ...}}");
  std::map<Int, Int> raw;
  for (auto& [key, value] : j["polygons"].items()) {
    Int degree = 0;
    try {
      size_t pos = 0;
      degree = std::stoll(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError,
                  "polygon degree '" + key + "' is not an integer");
    }
    if (!value.is_number_integer())
      throw Error(ErrorCode::ParseError,
                  "count for degree " + key + " is not an integer");
    raw[degree] += value.get<Int>();
  }
  return validate_multiset(raw);
}

PolygonMultiset parse_multiset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return multiset_from_json(j);
}

TetComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("tets") ||
      !j["vertices"].is_number_integer() || !j["tets"].is_array())
    throw Error(ErrorCode::ParseError,
                "expected {\"vertices\": <n>, \"tets\": [[i,j,k,l], ...]}");
  TetComplex c;
  c.vertex_count = j["vertices"].get<Int>();
  for (const auto& t : j["tets"]) {
    if (!t.is_array() || t.size() != 4)
      throw Error(ErrorCode::ParseError,
                  "each tetrahedron needs exactly 4 vertex indices");
    std::array<Int, 4> tet{};
    for (size_t i = 0; i < 4; ++i) {
      if (!t[i].is_number_integer())
        throw Error(ErrorCode::ParseError, "vertex index is not an integer");
      tet[i] = t[i].get<Int>();
    }
    c.tets.push_back(tet);
  }
  if (j.contains("boundary_vertex_flags")) {
    std::vector<bool> flags;
    for (const auto& f : j["boundary_vertex_flags"]) {
      if (!f.is_boolean())
        throw Error(ErrorCode::ParseError, "boundary flag is not a boolean");
      flags.push_back(f.get<bool>());
    }
    c.boundary_vertex_flags = std::move(flags);
  }
  return validate_complex(std::move(c));
}

nlohmann::json load_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw Error(ErrorCode::ParseError,
                "cannot open " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, file.string() + ": " + e.what());
  }
}

TetComplex load_complex(const std::filesystem::path& file) {
  return complex_from_json(load_json_file(file));
}

}  // namespace polyform
