#include <doctest.h>

#include <vector>

#include "polyform/complexaudit.hpp"
#include "polyform/json_io.hpp"
#include "polyform/replay.hpp"

using namespace polyform;

namespace {

TetComplex fixture(const char* name) {
  return load_complex(fixture_directory() / "complexes" /
                      (std::string(name) + ".json"));
}

ErrorCode code_of(const TetComplex& c) {
  try {
    audit(c);
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("audit unexpectedly succeeded");
}

}  // namespace

TEST_CASE("audit of the bundled complexes") {
  AuditReport tet = audit(fixture("single_tet"));
  CHECK(tet.counts == AuditCounts{1, 0, 0, 0, 4, 6, 4});
  CHECK(tet.exact_link_value == 1);
  CHECK(tet.boundary_euler == 2);
  CHECK(tet.normal_form);

  AuditReport bi = audit(fixture("bipyramid"));
  CHECK(bi.counts == AuditCounts{2, 1, 0, 0, 5, 9, 6});
  CHECK(bi.exact_link_value == 1);
  CHECK(bi.boundary_euler == 2);
  CHECK(bi.normal_form);

  AuditReport oct = audit(fixture("octahedron_4tet"));
  CHECK(oct.counts == AuditCounts{4, 4, 1, 0, 6, 12, 8});
  CHECK(oct.exact_link_value == 1);
  CHECK(oct.boundary_euler == 2);
  CHECK(oct.normal_form);

  AuditReport c5 = audit(fixture("cube_5tet"));
  CHECK(c5.counts == AuditCounts{5, 4, 0, 0, 8, 18, 12});
  CHECK(c5.exact_link_value == 1);
  CHECK(c5.boundary_euler == 2);
  CHECK(c5.normal_form);

  AuditReport c6 = audit(fixture("cube_6tet"));
  CHECK(c6.counts == AuditCounts{6, 6, 1, 0, 8, 18, 12});
  CHECK(c6.exact_link_value == 1);
  CHECK(c6.boundary_euler == 2);
  CHECK(c6.normal_form);

  AuditReport center = audit(fixture("cube_12tet_center"));
  CHECK(center.counts == AuditCounts{12, 18, 8, 1, 8, 18, 12});
  CHECK(center.exact_link_value == 1);
  CHECK(center.boundary_euler == 2);
  CHECK(!center.normal_form);

  for (const char* name : {"steiner_tet_cut_a", "steiner_tet_cut_b"}) {
    AuditReport cut = audit(fixture(name));
    CHECK(cut.counts == AuditCounts{4, 3, 0, 0, 7, 15, 10});
    CHECK(cut.exact_link_value == 1);
    CHECK(cut.boundary_euler == 2);
    CHECK(cut.normal_form);
  }
}

TEST_CASE("audit rejects malformed complexes") {
  CHECK(code_of({4, {}, {}}) == ErrorCode::InvalidComplex);
  CHECK(code_of({4, {{0, 1, 2, 7}}, {}}) == ErrorCode::InvalidComplex);
  CHECK(code_of({4, {{0, 1, 2, 2}}, {}}) == ErrorCode::InvalidComplex);
  CHECK(code_of({4, {{0, 1, 2, 3}, {3, 2, 1, 0}}, {}}) ==
        ErrorCode::InvalidComplex);
  CHECK(code_of({5, {{0, 1, 2, 3}}, {}}) == ErrorCode::InvalidComplex);
  CHECK(code_of({5, {{0, 1, 2, 3}},
                 std::vector<bool>{true, true, true}}) ==
        ErrorCode::InvalidComplex);

  // three tetrahedra through one triangle cannot bound a solid
  CHECK(code_of({6, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}}, {}}) ==
        ErrorCode::NonManifoldTriangle);

  // two tetrahedra sharing only an edge are not facet-connected
  CHECK(code_of({6, {{0, 1, 2, 3}, {0, 1, 4, 5}}, {}}) ==
        ErrorCode::DisconnectedComplex);
}

TEST_CASE("explicit boundary flags override the inference") {
  TetComplex c = fixture("bipyramid");
  c.boundary_vertex_flags = std::vector<bool>{true, true, true, true, false};
  AuditReport r = audit(c);
  CHECK(r.counts.boundary_vertices == 4);
  CHECK(r.counts.interior_vertices == 1);
  // edge and triangle classification is untouched
  CHECK(r.counts.boundary_edges == 9);
  CHECK(r.counts.boundary_triangles == 6);
  CHECK(!r.normal_form);
  CHECK(r.exact_link_value == 0);
  CHECK(r.boundary_euler == 1);
}

TEST_CASE("accounting mode names") {
  CHECK(parse_accounting_mode("standard") == AccountingMode::Standard);
  CHECK(parse_accounting_mode("steiner-uncounted") ==
        AccountingMode::SteinerIgnored);
  CHECK(parse_accounting_mode("steiner-counted") ==
        AccountingMode::SteinerAsVertex);
  CHECK(parse_accounting_mode("steiner-counted-edges") ==
        AccountingMode::SteinerVertexEdges);
  CHECK(parse_accounting_mode("steiner-counted-edges-faces") ==
        AccountingMode::SteinerVertexEdgesFaces);
  for (AccountingMode mode :
       {AccountingMode::Standard, AccountingMode::SteinerIgnored,
        AccountingMode::SteinerAsVertex, AccountingMode::SteinerVertexEdges,
        AccountingMode::SteinerVertexEdgesFaces})
    CHECK(parse_accounting_mode(to_string(mode)) == mode);
  CHECK_THROWS_AS(parse_accounting_mode("marching"), Error);
}

TEST_CASE("accounting rows for the two cube decompositions") {
  AccountingRow minimal =
      apply_accounting_mode(fixture("cube_5tet"), AccountingMode::Standard, 6);
  CHECK(minimal ==
        AccountingRow{"standard", 8, 12, 6, 5, 4, 0, 2, 1});

  AccountingRow marching =
      apply_accounting_mode(fixture("cube_6tet"), AccountingMode::Standard, 6);
  CHECK(marching ==
        AccountingRow{"standard", 8, 12, 6, 6, 6, 1, 2, 1});
}

TEST_CASE("accounting rows for the centered decomposition") {
  TetComplex c = fixture("cube_12tet_center");

  AccountingRow uncounted =
      apply_accounting_mode(c, AccountingMode::SteinerIgnored, 6);
  CHECK(uncounted == AccountingRow{"steiner-uncounted", 8, 12, 6, 12, 18, 0, 2,
                                   -6});

  AccountingRow counted =
      apply_accounting_mode(c, AccountingMode::SteinerAsVertex, 6);
  CHECK(counted ==
        AccountingRow{"steiner-counted", 9, 12, 6, 12, 18, 0, 3, -6});

  AccountingRow edges =
      apply_accounting_mode(c, AccountingMode::SteinerVertexEdges, 6);
  CHECK(edges ==
        AccountingRow{"steiner-counted-edges", 9, 20, 6, 12, 18, 0, -5, -6});

  AccountingRow faces =
      apply_accounting_mode(c, AccountingMode::SteinerVertexEdgesFaces, 6);
  CHECK(faces == AccountingRow{"steiner-counted-edges-faces", 9, 20, 18, 12, 6,
                               0, 7, 6});

  // only the honest ledger keeps both invariants at once
  AccountingRow standard =
      apply_accounting_mode(c, AccountingMode::Standard, 6);
  CHECK(standard.euler == 3);  // the interior vertex is real and counted
  CHECK(standard.decomposition_link == 2);

  auto table = accounting_table(c, 6);
  REQUIRE(table.size() == 5);
  CHECK(table[0] == standard);
  CHECK(table[1] == uncounted);
  CHECK(table[4] == faces);

  // without enough gluing triangles the promotion mode drops out
  auto corner = accounting_table(fixture("cube_5tet"), 6);
  REQUIRE(corner.size() == 4);
  for (const AccountingRow& row : corner)
    CHECK(row.mode != "steiner-counted-edges-faces");
}

TEST_CASE("interior chords survive when Steiner vertices are dropped") {
  // the four-tet octahedron has one interior edge between two boundary
  // vertices; ignoring Steiner vertices must not erase it
  TetComplex c = fixture("octahedron_4tet");
  AccountingRow r =
      apply_accounting_mode(c, AccountingMode::SteinerIgnored, 0);
  CHECK(r.vertex_count == 6);
  CHECK(r.edge_count == 12);
  CHECK(r.face_count == 8);
  CHECK(r.interior_segments == 1);
  CHECK(r.decomposition_link == 1);
  CHECK(r.euler == 2);
}

TEST_CASE("merge parameter validation") {
  TetComplex tet = fixture("single_tet");
  CHECK_THROWS_AS(apply_accounting_mode(tet, AccountingMode::Standard, -1),
                  Error);
  CHECK_THROWS_AS(apply_accounting_mode(tet, AccountingMode::Standard, 7),
                  Error);
  CHECK_THROWS_AS(
      apply_accounting_mode(tet, AccountingMode::SteinerVertexEdgesFaces, 1),
      Error);
}
