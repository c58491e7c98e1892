#include "polyform/replay.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "polyform/census.hpp"
#include "polyform/complexaudit.hpp"
#include "polyform/external.hpp"
#include "polyform/feasibility.hpp"
#include "polyform/internal.hpp"
#include "polyform/json_io.hpp"
#include "polyform/typesolver.hpp"

#ifndef POLYFORM_DEFAULT_FIXTURE_DIR
#define POLYFORM_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace polyform {

namespace {

class RowChecker {
 public:
  explicit RowChecker(std::string label) : label_(std::move(label)) {}

  void expect(const std::string& what, Int got, Int want) {
    if (got != want)
      detail_ << (detail_.tellp() > 0 ? "; " : "") << what << ": got "
              << got << ", expected " << want;
  }

  void expect_true(const std::string& what, bool ok) {
    if (!ok) detail_ << (detail_.tellp() > 0 ? "; " : "") << what;
  }

  RowResult result() const {
    std::string d = detail_.str();
    return {label_, d.empty(), d};
  }

 private:
  std::string label_;
  std::ostringstream detail_;
};

CountVector vector_field(const nlohmann::json& row, const char* key) {
  CountVector v;
  for (const auto& n : row.at(key)) v.push_back(n.get<Int>());
  return v;
}

ReplayReport replay_small_census(const nlohmann::json& fixture) {
  ReplayReport report{"appendix-a", {}};
  Int index = 0;
  for (const auto& row : fixture.at("rows")) {
    ++index;
    Int v = row.at("V").get<Int>();
    Int s = row.at("S").get<Int>();
    RowChecker check("row " + std::to_string(index) + " (V=" +
                     std::to_string(v) + " S=" + std::to_string(s) + ")");

    ExternalProfile p = external_profile(v, s);
    check.expect("E", p.edge_count, row.at("E").get<Int>());
    check.expect("F", p.face_count, row.at("F").get<Int>());
    check.expect("N", p.angle_units, row.at("N").get<Int>());
    check.expect("V-E+F", v - p.edge_count + p.face_count, 2);

    Int t = row.at("T").get<Int>();
    Int n_i = row.at("N_i").get<Int>();
    Int s_i = row.at("S_i").get<Int>();
    check.expect("T-N_i+S_i", t - n_i + s_i, 1);
    check.expect("N_i from T", gluing_triangle_count(t, v), n_i);

    auto faces = vector_field(row, "faces");
    auto face_solutions =
        enumerate_face_types(v, s, p.edge_count, p.face_count);
    check.expect_true("face vector not produced by the type solver",
                      std::find(face_solutions.begin(), face_solutions.end(),
                                faces) != face_solutions.end());

    auto valencies = vector_field(row, "valencies");
    auto vertex_solutions = enumerate_vertex_types(v, p.edge_count);
    check.expect_true("valency vector not produced by the type solver",
                      std::find(vertex_solutions.begin(),
                                vertex_solutions.end(),
                                valencies) != vertex_solutions.end());

    report.rows.push_back(check.result());
  }
  return report;
}

ReplayReport replay_accounting(const nlohmann::json& fixture,
                               const std::filesystem::path& dir) {
  ReplayReport report{"appendix-b", {}};
  Int merges = fixture.at("boundary_merges").get<Int>();
  for (const auto& row : fixture.at("rows")) {
    RowChecker check(row.at("label").get<std::string>());
    TetComplex c = load_complex(dir / row.at("complex").get<std::string>());
    AccountingMode mode =
        parse_accounting_mode(row.at("mode").get<std::string>());
    AccountingRow got = apply_accounting_mode(c, mode, merges);
    const auto& want = row.at("expected");
    check.expect("V", got.vertex_count, want.at("V").get<Int>());
    check.expect("E", got.edge_count, want.at("E").get<Int>());
    check.expect("F", got.face_count, want.at("F").get<Int>());
    check.expect("T", got.tetrahedra, want.at("T").get<Int>());
    check.expect("N_i", got.gluing_triangles, want.at("N_i").get<Int>());
    check.expect("S_i", got.interior_segments, want.at("S_i").get<Int>());
    check.expect("E-F", got.edge_count - got.face_count,
                 want.at("E_minus_F").get<Int>());
    check.expect("2T-N_i", 2 * got.tetrahedra - got.gluing_triangles,
                 want.at("two_T_minus_N_i").get<Int>());
    check.expect("V-E+F", got.euler, want.at("V_minus_E_plus_F").get<Int>());
    check.expect("T-N_i+S_i", got.decomposition_link,
                 want.at("T_minus_N_i_plus_S_i").get<Int>());
    report.rows.push_back(check.result());
  }
  return report;
}

ReplayReport replay_worksheets(const nlohmann::json& fixture) {
  ReplayReport report{"appendix-d", {}};
  for (const auto& row : fixture.at("rows")) {
    RowChecker check(row.at("label").get<std::string>());
    PolygonMultiset m = multiset_from_json(
        nlohmann::json{{"polygons", row.at("polygons")}});
    FeasibilityReport r = check_enclosure(m);
    const auto& want = row.at("expected");
    check.expect("N", r.angle_units, want.at("N").get<Int>());
    check.expect("S", r.flatness, want.at("S").get<Int>());
    check.expect("F", r.face_count, want.at("F").get<Int>());
    check.expect_true("V missing", r.vertex_count.has_value());
    if (r.vertex_count)
      check.expect("V", *r.vertex_count, want.at("V").get<Int>());
    if (r.edge_count)
      check.expect("E", *r.edge_count, want.at("E").get<Int>());
    if (r.s_max) check.expect("s_max", *r.s_max, want.at("s_max").get<Int>());
    if (r.s_difference)
      check.expect("s_difference", *r.s_difference,
                   want.at("s_difference").get<Int>());
    check.expect_true(
        "verdict mismatch: got " + std::string(to_string(r.verdict)),
        to_string(r.verdict) == want.at("verdict").get<std::string>());
    check.expect_true("realizability caveat missing", !r.caveats.empty());
    report.rows.push_back(check.result());
  }
  return report;
}

ReplayReport replay_census_tables(const nlohmann::json& fixture) {
  ReplayReport report{"census-tables", {}};
  {
    RowChecker check("partition head");
    const auto& head = fixture.at("partition_head");
    for (size_t n = 0; n < head.size(); ++n)
      check.expect_true("p(" + std::to_string(n) + ")",
                        partition_count(static_cast<Int>(n)) ==
                            BigInt(head[n].get<Int>()));
    report.rows.push_back(check.result());
  }
  for (const auto& row : fixture.at("rows")) {
    Int v = row.at("V").get<Int>();
    RowChecker check("V=" + std::to_string(v));
    CensusRow got = face_combo_upper_bound(v);
    check.expect("s_max", got.s_max, row.at("s_max").get<Int>());
    check.expect("pair_count", got.pair_count,
                 row.at("pair_count").get<Int>());
    check.expect_true(
        "face_combo_upper mismatch (got " + got.face_combo_upper.str() + ")",
        got.face_combo_upper == BigInt(row.at("face_combo_upper").get<Int>()));
    report.rows.push_back(check.result());
  }
  return report;
}

}  // namespace

Int ReplayReport::passed() const {
  return static_cast<Int>(
      std::count_if(rows.begin(), rows.end(),
                    [](const RowResult& r) { return r.pass; }));
}

bool ReplayReport::all_pass() const {
  return passed() == static_cast<Int>(rows.size());
}

const std::vector<std::string>& fixture_set_names() {
  static const std::vector<std::string> names{
      "appendix-a", "appendix-b", "appendix-d", "census-tables"};
  return names;
}

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("POLYFORM_FIXTURES"); env && *env)
    return env;
  return POLYFORM_DEFAULT_FIXTURE_DIR;
}

ReplayReport replay_fixture_set(const std::string& set_name,
                                const std::filesystem::path& fixture_dir) {
  nlohmann::json fixture = load_json_file(fixture_dir / (set_name + ".json"));
  if (set_name == "appendix-a") return replay_small_census(fixture);
  if (set_name == "appendix-b") return replay_accounting(fixture, fixture_dir);
  if (set_name == "appendix-d") return replay_worksheets(fixture);
  if (set_name == "census-tables") return replay_census_tables(fixture);
  throw Error(ErrorCode::ParseError, "unknown fixture set: " + set_name);
}

}  // namespace polyform
