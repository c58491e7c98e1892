#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polyform/census.hpp"
#include "polyform/complexaudit.hpp"
#include "polyform/external.hpp"
#include "polyform/feasibility.hpp"
#include "polyform/internal.hpp"
#include "polyform/json_io.hpp"
#include "polyform/replay.hpp"
#include "polyform/typesolver.hpp"

namespace {

using namespace polyform;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return Format::Text;
}

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void csv_row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    std::cout << (i ? "," : "") << csv_cell(cells[i]);
  std::cout << "\n";
}

std::string opt_cell(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : "";
}

void emit_json(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

// degree/valency count vectors as rows over columns 3..V-1
void emit_count_vectors(Format format, const char* column_prefix, Int low,
                        const std::vector<CountVector>& rows) {
  if (format == Format::Json) {
    OrderedJson j = OrderedJson::array();
    for (const CountVector& row : rows) j.push_back(row);
    emit_json(j);
    return;
  }
  if (rows.empty()) {
    if (format == Format::Text) std::cout << "no solutions\n";
    return;
  }
  std::vector<std::string> header;
  for (size_t i = 0; i < rows[0].size(); ++i)
    header.push_back(std::string(column_prefix) +
                     std::to_string(low + static_cast<Int>(i)));
  if (format == Format::Csv) {
    csv_row(header);
    for (const CountVector& row : rows) {
      std::vector<std::string> cells;
      for (Int n : row) cells.push_back(std::to_string(n));
      csv_row(cells);
    }
    return;
  }
  for (const CountVector& row : rows) {
    bool first = true;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] > 0) {
        std::cout << (first ? "" : " ") << header[i] << "=" << row[i];
        first = false;
      }
    std::cout << "\n";
  }
  std::cout << rows.size() << " solution" << (rows.size() == 1 ? "" : "s")
            << "\n";
}

PolygonMultiset read_multiset(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_multiset(arg);
  return multiset_from_json(load_json_file(arg));
}

int run_check(const std::string& arg, Format format) {
  FeasibilityReport r = check_enclosure(read_multiset(arg));
  switch (format) {
    case Format::Json:
      emit_json(canonical_json(r));
      break;
    case Format::Csv:
      csv_row({"N", "V", "S", "F", "E", "M", "V_minus_E_plus_F", "s_max",
               "s_difference", "verdict"});
      csv_row({std::to_string(r.angle_units), opt_cell(r.vertex_count),
               std::to_string(r.flatness), std::to_string(r.face_count),
               opt_cell(r.edge_count), std::to_string(r.fullness),
               opt_cell(r.euler_value), opt_cell(r.s_max),
               opt_cell(r.s_difference), to_string(r.verdict)});
      break;
    case Format::Text:
      std::cout << "angle units (N): " << r.angle_units << "\n";
      if (r.vertex_count)
        std::cout << "vertices (V):    " << *r.vertex_count << "\n";
      std::cout << "flatness (S):    " << r.flatness << "\n"
                << "faces (F):       " << r.face_count << "\n";
      if (r.edge_count)
        std::cout << "edges (E):       " << *r.edge_count << "\n";
      std::cout << "fullness (M):    " << r.fullness << "\n";
      if (r.euler_value)
        std::cout << "V - E + F:       " << *r.euler_value << "\n";
      if (r.s_max) std::cout << "flatness cap:    " << *r.s_max << "\n";
      if (r.s_difference)
        std::cout << "margin:          " << *r.s_difference << "\n";
      else if (r.s_max)
        std::cout << "margin:          0\n";
      for (const auto& [name, ok] : r.cross_checks)
        std::cout << "cross-check " << name << ": " << (ok ? "ok" : "FAILED")
                  << "\n";
      std::cout << "verdict: " << to_string(r.verdict) << "\n";
      for (const std::string& c : r.caveats)
        std::cout << "caveat: " << c << "\n";
      break;
  }
  return r.verdict == Verdict::SymbolicallyFeasible ? 0 : 1;
}

int run_external_range(Int v, Format format) {
  ExternalBounds b = external_bounds(v);
  FullnessBounds m = m_bounds(v);
  auto series = flatness_series(v);
  switch (format) {
    case Format::Json: {
      OrderedJson j;
      j["V"] = v;
      j["e_min"] = b.e_min;
      j["e_max"] = b.e_max;
      j["f_min"] = b.f_min;
      j["f_max"] = b.f_max;
      j["s_max"] = b.s_max;
      j["combination_count"] = b.combo_count;
      j["m_min"] = m.m_min;
      j["m_max"] = m.m_max;
      OrderedJson rows = OrderedJson::array();
      for (const FlatnessStep& step : series)
        rows.push_back(OrderedJson{{"S", step.flatness},
                                   {"E", step.edge_count},
                                   {"F", step.face_count}});
      j["series"] = rows;
      emit_json(j);
      break;
    }
    case Format::Csv:
      csv_row({"S", "E", "F"});
      for (const FlatnessStep& step : series)
        csv_row({std::to_string(step.flatness),
                 std::to_string(step.edge_count),
                 std::to_string(step.face_count)});
      break;
    case Format::Text:
      std::cout << "V = " << v << ": E in [" << b.e_min << ", " << b.e_max
                << "], F in [" << b.f_min << ", " << b.f_max << "], S in [0, "
                << b.s_max << "], M in [" << m.m_min << ", " << m.m_max
                << "], " << b.combo_count << " combinations\n"
                << "  S   E   F\n";
      for (const FlatnessStep& step : series)
        std::cout << std::setw(3) << step.flatness << " " << std::setw(3)
                  << step.edge_count << " " << std::setw(3)
                  << step.face_count << "\n";
      break;
  }
  return 0;
}

int run_internal_range(Int v, Format format) {
  InternalRanges r = internal_ranges(v);
  switch (format) {
    case Format::Json: {
      OrderedJson j;
      j["V"] = v;
      j["T_min"] = r.t_min;
      j["T_max"] = r.t_max;
      j["N_i_min"] = r.n_i_min;
      j["N_i_max"] = r.n_i_max;
      j["S_i_max"] = r.s_i_max;
      j["config_count"] = r.config_count;
      emit_json(j);
      break;
    }
    case Format::Csv:
      csv_row({"T_min", "T_max", "N_i_min", "N_i_max", "S_i_max",
               "config_count"});
      csv_row({std::to_string(r.t_min), std::to_string(r.t_max),
               std::to_string(r.n_i_min), std::to_string(r.n_i_max),
               std::to_string(r.s_i_max), std::to_string(r.config_count)});
      break;
    case Format::Text:
      std::cout << "V = " << v << ": T in [" << r.t_min << ", " << r.t_max
                << "], N_i in [" << r.n_i_min << ", " << r.n_i_max
                << "], S_i in [0, " << r.s_i_max << "], " << r.config_count
                << " configurations\n";
      break;
  }
  return 0;
}

void emit_configs(Format format, const std::vector<InternalConfig>& configs) {
  switch (format) {
    case Format::Json: {
      OrderedJson rows = OrderedJson::array();
      for (const InternalConfig& c : configs)
        rows.push_back(OrderedJson{{"T", c.tetrahedra},
                                   {"N_i", c.gluing_triangles},
                                   {"S_i", c.interior_segments}});
      emit_json(rows);
      break;
    }
    case Format::Csv:
      csv_row({"T", "N_i", "S_i"});
      for (const InternalConfig& c : configs)
        csv_row({std::to_string(c.tetrahedra),
                 std::to_string(c.gluing_triangles),
                 std::to_string(c.interior_segments)});
      break;
    case Format::Text:
      std::cout << "  T N_i S_i\n";
      for (const InternalConfig& c : configs)
        std::cout << std::setw(3) << c.tetrahedra << " " << std::setw(3)
                  << c.gluing_triangles << " " << std::setw(3)
                  << c.interior_segments << "\n";
      break;
  }
}

int run_ladder(Int v, std::optional<Int> flatness, bool heuristics,
               Format format) {
  if (flatness) {
    if (!heuristics)
      throw Error(ErrorCode::InconsistentInputs,
                  "--flatness prunes by a heuristic rule; pass "
                  "--heuristics on to accept that");
    PrunedLadder pruned = heuristic_prune(v, *flatness);
    if (format == Format::Json) {
      OrderedJson j;
      j["V"] = v;
      j["S"] = *flatness;
      j["heuristic"] = pruned.heuristic;
      j["caveat"] = pruned.caveat;
      OrderedJson rows = OrderedJson::array();
      for (const InternalConfig& c : pruned.configs)
        rows.push_back(OrderedJson{{"T", c.tetrahedra},
                                   {"N_i", c.gluing_triangles},
                                   {"S_i", c.interior_segments}});
      j["configs"] = rows;
      emit_json(j);
    } else {
      emit_configs(format, pruned.configs);
      std::cerr << "heuristic: " << pruned.caveat << "\n";
    }
    return 0;
  }
  emit_configs(format, salt_ladder(v));
  return 0;
}

int run_census(Int from, Int to, Format format) {
  auto rows = census(from, to);
  switch (format) {
    case Format::Json: {
      OrderedJson out = OrderedJson::array();
      for (const CensusRow& r : rows)
        out.push_back(OrderedJson{{"V", r.vertex_count},
                                  {"s_max", r.s_max},
                                  {"pair_count", r.pair_count},
                                  {"face_combo_upper",
                                   r.face_combo_upper.str()}});
      emit_json(out);
      break;
    }
    case Format::Csv:
      csv_row({"V", "s_max", "pair_count", "face_combo_upper"});
      for (const CensusRow& r : rows)
        csv_row({std::to_string(r.vertex_count), std::to_string(r.s_max),
                 std::to_string(r.pair_count), r.face_combo_upper.str()});
      break;
    case Format::Text:
      std::cout << "  V s_max pairs face-combo-upper\n";
      for (const CensusRow& r : rows)
        std::cout << std::setw(3) << r.vertex_count << " " << std::setw(5)
                  << r.s_max << " " << std::setw(5) << r.pair_count << " "
                  << r.face_combo_upper << "\n";
      break;
  }
  return 0;
}

int run_partitions(Int n, std::optional<Int> max_part, Format format) {
  BigInt value =
      max_part ? restricted_partition_count(n, *max_part) : partition_count(n);
  switch (format) {
    case Format::Json: {
      OrderedJson j;
      j["n"] = n;
      if (max_part) j["max_part"] = *max_part;
      j["count"] = value.str();
      emit_json(j);
      break;
    }
    case Format::Csv:
      csv_row({"n", "max_part", "count"});
      csv_row({std::to_string(n), max_part ? std::to_string(*max_part) : "",
               value.str()});
      break;
    case Format::Text:
      std::cout << value << "\n";
      break;
  }
  return 0;
}

int run_audit(const std::string& file, Int merges, Format format) {
  TetComplex c = load_complex(file);
  AuditReport r = audit(c);
  r.accounting_modes = accounting_table(c, merges);
  switch (format) {
    case Format::Json:
      emit_json(canonical_json(r));
      break;
    case Format::Csv:
      csv_row({"mode", "V", "E", "F", "T", "N_i", "S_i", "E_minus_F",
               "two_T_minus_N_i", "V_minus_E_plus_F", "T_minus_N_i_plus_S_i"});
      for (const AccountingRow& row : r.accounting_modes)
        csv_row({row.mode, std::to_string(row.vertex_count),
                 std::to_string(row.edge_count),
                 std::to_string(row.face_count),
                 std::to_string(row.tetrahedra),
                 std::to_string(row.gluing_triangles),
                 std::to_string(row.interior_segments),
                 std::to_string(row.edge_count - row.face_count),
                 std::to_string(2 * row.tetrahedra - row.gluing_triangles),
                 std::to_string(row.euler),
                 std::to_string(row.decomposition_link)});
      break;
    case Format::Text:
      std::cout << "T=" << r.counts.tetrahedra
                << " N_i=" << r.counts.gluing_triangles
                << " E_i=" << r.counts.interior_edges
                << " V_i=" << r.counts.interior_vertices
                << " V_b=" << r.counts.boundary_vertices
                << " E_b=" << r.counts.boundary_edges
                << " F_b=" << r.counts.boundary_triangles << "\n"
                << "T - N_i + E_i - V_i = " << r.exact_link_value << "\n"
                << "boundary V - E + F  = " << r.boundary_euler << "\n"
                << "normal form: " << (r.normal_form ? "yes" : "no") << "\n"
                << "accounting (boundary merges = " << merges << "):\n";
      for (const AccountingRow& row : r.accounting_modes)
        std::cout << "  " << row.mode << ": V=" << row.vertex_count
                  << " E=" << row.edge_count << " F=" << row.face_count
                  << " V-E+F=" << row.euler
                  << " T-N_i+S_i=" << row.decomposition_link << "\n";
      break;
  }
  return 0;
}

int run_replay(const std::string& set_name, Format format) {
  ReplayReport r = replay_fixture_set(set_name, fixture_directory());
  switch (format) {
    case Format::Json: {
      OrderedJson j;
      j["set"] = r.set_name;
      j["passed"] = r.passed();
      j["total"] = static_cast<Int>(r.rows.size());
      OrderedJson rows = OrderedJson::array();
      for (const RowResult& row : r.rows)
        rows.push_back(OrderedJson{{"label", row.label},
                                   {"pass", row.pass},
                                   {"detail", row.detail}});
      j["rows"] = rows;
      emit_json(j);
      break;
    }
    case Format::Csv:
      csv_row({"label", "pass", "detail"});
      for (const RowResult& row : r.rows)
        csv_row({row.label, row.pass ? "1" : "0", row.detail});
      break;
    case Format::Text:
      for (const RowResult& row : r.rows) {
        std::cout << (row.pass ? "[PASS] " : "[FAIL] ") << row.label;
        if (!row.pass) std::cout << ": " << row.detail;
        std::cout << "\n";
      }
      std::cout << r.passed() << "/" << r.rows.size() << " rows pass\n";
      break;
  }
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coordinate-free feasibility and structure counts for "
               "genus-0 polyhedra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  std::string heuristics = "off";
  app.add_option("--heuristics", heuristics,
                 "enable heuristic pruning and filters")
      ->check(CLI::IsMember({"on", "off"}));

  std::string multiset_arg;
  auto* cmd_check = app.add_subcommand(
      "check", "run the enclosure worksheet on a polygon multiset");
  cmd_check
      ->add_option("multiset", multiset_arg,
                   "inline JSON or a path to a multiset file")
      ->required();

  Int range_v = 0;
  auto* cmd_external =
      app.add_subcommand("external-range", "edge/face/flatness ranges");
  cmd_external->add_option("V", range_v, "vertex count")->required();

  Int internal_v = 0;
  auto* cmd_internal = app.add_subcommand(
      "internal-range", "tetrahedron/gluing/segment ranges");
  cmd_internal->add_option("V", internal_v, "vertex count")->required();

  Int ladder_v = 0;
  std::optional<Int> ladder_s;
  auto* cmd_ladder =
      app.add_subcommand("ladder", "interior decomposition ladder");
  cmd_ladder->add_option("V", ladder_v, "vertex count")->required();
  cmd_ladder->add_option("--flatness", ladder_s,
                         "prune by external flatness (heuristic)");

  Int ft_v = 0, ft_s = 0, ft_e = 0, ft_f = 0;
  bool override_consistency = false;
  auto* cmd_faces =
      app.add_subcommand("face-types", "face degree count vectors");
  cmd_faces->add_option("V", ft_v, "vertex count")->required();
  cmd_faces->add_option("S", ft_s, "flatness")->required();
  cmd_faces->add_option("E", ft_e, "edge count")->required();
  cmd_faces->add_option("F", ft_f, "face count")->required();
  cmd_faces->add_flag("--override-consistency", override_consistency,
                      "solve the system even if E,F do not match V,S");

  Int vt_v = 0, vt_e = 0;
  std::optional<Int> valency_cap, high_threshold, high_budget;
  auto* cmd_vertices =
      app.add_subcommand("vertex-types", "valency count vectors");
  cmd_vertices->add_option("V", vt_v, "vertex count")->required();
  cmd_vertices->add_option("E", vt_e, "edge count")->required();
  cmd_vertices->add_option("--valency-cap", valency_cap,
                           "drop solutions with any valency above the cap");
  cmd_vertices->add_option("--high-valency-threshold", high_threshold,
                           "valency counted as high");
  cmd_vertices->add_option("--max-high-valency", high_budget,
                           "most high-valency vertices allowed");

  Int census_from = 0, census_to = 0;
  auto* cmd_census = app.add_subcommand("census", "per-vertex-count tallies");
  cmd_census->add_option("--from", census_from, "first vertex count")
      ->required();
  cmd_census->add_option("--to", census_to, "last vertex count")->required();

  Int part_n = 0;
  std::optional<Int> part_max;
  auto* cmd_partitions =
      app.add_subcommand("partitions", "integer partition counts");
  cmd_partitions->add_option("n", part_n, "number to partition")->required();
  cmd_partitions->add_option("--max-part", part_max, "largest part allowed");

  std::string complex_file;
  Int merges = 0;
  auto* cmd_audit =
      app.add_subcommand("audit", "audit a tetrahedral complex file");
  cmd_audit->add_option("complex", complex_file, "path to a complex file")
      ->required();
  cmd_audit->add_option("--merges", merges,
                        "boundary flatness for the accounting table");

  std::string set_name;
  auto* cmd_replay =
      app.add_subcommand("replay", "re-derive a bundled reference table");
  cmd_replay->add_option("set", set_name, "fixture set name")
      ->required()
      ->check(CLI::IsMember(fixture_set_names()));

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Format format = parse_format(format_name);
  bool heuristics_on = heuristics == "on";
  try {
    if (cmd_check->parsed()) return run_check(multiset_arg, format);
    if (cmd_external->parsed()) return run_external_range(range_v, format);
    if (cmd_internal->parsed()) return run_internal_range(internal_v, format);
    if (cmd_ladder->parsed())
      return run_ladder(ladder_v, ladder_s, heuristics_on, format);
    if (cmd_faces->parsed()) {
      emit_count_vectors(
          format, "n_", 3,
          enumerate_face_types(ft_v, ft_s, ft_e, ft_f, override_consistency));
      return 0;
    }
    if (cmd_vertices->parsed()) {
      RealizabilityFilters filters;
      if (valency_cap || high_threshold || high_budget) {
        if (!heuristics_on)
          throw Error(ErrorCode::InconsistentInputs,
                      "valency filters are heuristic screens; pass "
                      "--heuristics on to accept that");
        filters.valency_cap = valency_cap;
        filters.high_valency_threshold = high_threshold;
        filters.max_high_valency_vertices = high_budget;
      }
      emit_count_vectors(
          format, "m_", 3,
          filter_vertex_types(enumerate_vertex_types(vt_v, vt_e), filters));
      return 0;
    }
    if (cmd_census->parsed())
      return run_census(census_from, census_to, format);
    if (cmd_partitions->parsed())
      return run_partitions(part_n, part_max, format);
    if (cmd_audit->parsed()) return run_audit(complex_file, merges, format);
    if (cmd_replay->parsed()) return run_replay(set_name, format);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
