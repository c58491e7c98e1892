#include <doctest.h>

#include <random>
#include <string>

#include "polyform/external.hpp"
#include "polyform/feasibility.hpp"
#include "polyform/json_io.hpp"

using namespace polyform;

namespace {

PolygonMultiset make(std::initializer_list<std::pair<Int, Int>> entries) {
  PolygonMultiset m;
  for (auto [degree, count] : entries) m.counts[degree] = count;
  return m;
}

bool has_check(const FeasibilityReport& r, const std::string& key) {
  for (const auto& [name, ok] : r.cross_checks)
    if (name == key) return ok;
  return false;
}

}  // namespace

TEST_CASE("vertex count from the angle budget") {
  CHECK(vertex_estimate(12) == 8);
  CHECK(vertex_estimate(6) == 5);
  CHECK(vertex_estimate(4) == 4);
  CHECK_THROWS_AS(vertex_estimate(7), Error);
  CHECK_THROWS_AS(vertex_estimate(0), Error);
}

TEST_CASE("worksheet, square pyramid") {
  auto r = check_enclosure(make({{3, 4}, {4, 1}}));
  CHECK(r.angle_units == 6);
  CHECK(r.flatness == 1);
  CHECK(r.face_count == 5);
  CHECK(r.fullness == 26);
  REQUIRE(r.vertex_count.has_value());
  CHECK(*r.vertex_count == 5);
  CHECK(*r.edge_count == 8);
  CHECK(*r.euler_value == 2);
  CHECK(*r.s_max == 2);
  CHECK(*r.s_difference == 1);
  CHECK(r.verdict == Verdict::SymbolicallyFeasible);
  CHECK(has_check(r, "M_minus_5N_equals_minus_4S"));
  CHECK(has_check(r, "edge_incidence_2E_equals_3F_plus_S"));
  CHECK(!r.caveats.empty());
}

TEST_CASE("worksheet, cube") {
  auto r = check_enclosure(make({{4, 6}}));
  CHECK(r.angle_units == 12);
  CHECK(r.flatness == 6);
  CHECK(r.face_count == 6);
  CHECK(r.fullness == 36);
  CHECK(*r.vertex_count == 8);
  CHECK(*r.edge_count == 12);
  CHECK(*r.s_max == 6);
  CHECK(*r.s_difference == 0);
  CHECK(r.verdict == Verdict::SymbolicallyFeasible);
}

TEST_CASE("worksheet, dodecahedron") {
  auto r = check_enclosure(make({{5, 12}}));
  CHECK(r.angle_units == 36);
  CHECK(r.flatness == 24);
  CHECK(*r.vertex_count == 20);
  CHECK(*r.edge_count == 30);
  CHECK(*r.s_max == 24);
  CHECK(*r.s_difference == 0);
  CHECK(r.verdict == Verdict::SymbolicallyFeasible);
}

TEST_CASE("worksheet, parity failure") {
  auto r = check_enclosure(make({{3, 1}}));
  CHECK(r.angle_units == 1);
  CHECK(r.verdict == Verdict::InfeasibleOddAngleUnits);
  CHECK(!r.vertex_count.has_value());
  CHECK(!r.s_max.has_value());
  CHECK(std::string(to_string(r.verdict)) == "Infeasible(OddAngleUnits)");

  auto odd = check_enclosure(make({{4, 2}, {5, 1}}));
  CHECK(odd.angle_units == 7);
  CHECK(odd.verdict == Verdict::InfeasibleOddAngleUnits);
}

TEST_CASE("worksheet, too flat") {
  // 36 hexagons carry far more flatness than 74 vertices admit
  auto r = check_enclosure(make({{6, 36}}));
  CHECK(r.angle_units == 144);
  CHECK(r.flatness == 108);
  CHECK(*r.vertex_count == 74);
  CHECK(*r.s_max == 105);
  CHECK(*r.s_difference == -3);
  CHECK(r.verdict == Verdict::InfeasibleTooFlat);
  CHECK(std::string(to_string(r.verdict)) == "Infeasible(TooFlat)");
}

TEST_CASE("worksheet passes a known unrealizable multiset") {
  // two hexagons and four triangles satisfy every identity yet bound
  // nothing; the symbolic check alone cannot see that
  auto r = check_enclosure(make({{6, 2}, {3, 4}}));
  CHECK(r.verdict == Verdict::SymbolicallyFeasible);
  CHECK(*r.vertex_count == 8);
  CHECK(*r.s_difference == 0);
  bool mentions_realizability = false;
  for (const std::string& c : r.caveats)
    if (c.find("realiz") != std::string::npos) mentions_realizability = true;
  CHECK(mentions_realizability);
}

TEST_CASE("flatness cap sits one above the range-table bound at odd V") {
  // four pentagons and two triangles: N=14, V=9, S=8.  The worksheet
  // cap for V=9 is ceil(27/2)-6 = 8, so this squeaks through, while the
  // external range table caps flatness at 7.
  auto r = check_enclosure(make({{5, 4}, {3, 2}}));
  CHECK(*r.vertex_count == 9);
  CHECK(r.flatness == 8);
  CHECK(*r.s_max == 8);
  CHECK(*r.s_difference == 0);
  CHECK(r.verdict == Verdict::SymbolicallyFeasible);
  CHECK(external_bounds(9).s_max == 7);
}

TEST_CASE("flatness just past the cap at even V") {
  // {6:2, 4:1, 3:2} has N=12, V=8, S=7 against a cap of 6
  auto r = check_enclosure(make({{6, 2}, {4, 1}, {3, 2}}));
  CHECK(*r.vertex_count == 8);
  CHECK(r.flatness == 7);
  CHECK(*r.s_max == 6);
  CHECK(*r.s_difference == -1);
  CHECK(r.verdict == Verdict::InfeasibleTooFlat);
}

TEST_CASE("report serialization is byte stable") {
  auto r = check_enclosure(make({{3, 4}, {4, 1}}));
  std::string once = canonical_json(r).dump();
  std::string twice = canonical_json(check_enclosure(make({{4, 1}, {3, 4}}))).dump();
  CHECK(once == twice);
  CHECK(once.find("\"verdict\":\"SymbolicallyFeasible\"") != std::string::npos);

  auto parity = check_enclosure(make({{3, 1}}));
  std::string text = canonical_json(parity).dump();
  CHECK(text.find("\"V\":null") != std::string::npos);
}

TEST_CASE("random multisets never break the closed identities") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<Int> degree(3, 12);
  std::uniform_int_distribution<Int> count(1, 9);
  std::uniform_int_distribution<Int> kinds(1, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    PolygonMultiset m;
    Int k = kinds(rng);
    for (Int i = 0; i < k; ++i) m.counts[degree(rng)] += count(rng);
    auto r = check_enclosure(m);
    CHECK(r.fullness == 5 * r.angle_units - 4 * r.flatness);
    if (r.angle_units % 2 == 1) {
      CHECK(r.verdict == Verdict::InfeasibleOddAngleUnits);
      continue;
    }
    REQUIRE(r.vertex_count.has_value());
    Int v = *r.vertex_count;
    CHECK(r.angle_units == 2 * (v - 2));
    CHECK(*r.edge_count == 3 * (v - 2) - r.flatness);
    CHECK(v - *r.edge_count + r.face_count == 2);
    CHECK(*r.euler_value == 2);
    CHECK(*r.s_difference == *r.s_max - r.flatness);
    for (const auto& [name, ok] : r.cross_checks) CHECK(ok);
    bool too_flat = r.flatness > *r.s_max;
    CHECK((r.verdict == Verdict::InfeasibleTooFlat) == too_flat);
  }
}
