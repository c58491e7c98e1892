#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyform/core.hpp"

namespace polyform {

// Explicit tetrahedral complex: vertex indices 0..vertex_count-1, one
// 4-element set per tetrahedron.  Boundary/interior status is inferred
// from triangle multiplicity unless flags are given.
struct TetComplex {
  Int vertex_count = 0;
  std::vector<std::array<Int, 4>> tets;
  std::optional<std::vector<bool>> boundary_vertex_flags;
};

// Checks index range, distinctness, duplicates, and that every vertex
// is used; returns the complex with each tet sorted.
TetComplex validate_complex(TetComplex c);

// Alternate bookkeeping conventions for the same complex, kept apart
// from the exact audit.  They exist to show how the decomposition
// identity T - N_i + S_i degrades when interior cells are miscounted:
//   Standard                 boundary counts only, interior edges -> S_i
//   SteinerIgnored           interior vertices and their edges dropped
//   SteinerAsVertex          interior vertices in V, their edges dropped
//   SteinerVertexEdges       interior edges moved into E, S_i left at 0
//   SteinerVertexEdgesFaces  gluing triangles over original polygon
//                            edges promoted to faces (N_i shrinks to the
//                            diagonal count)
enum class AccountingMode {
  Standard,
  SteinerIgnored,
  SteinerAsVertex,
  SteinerVertexEdges,
  SteinerVertexEdgesFaces,
};

AccountingMode parse_accounting_mode(std::string_view name);
const char* to_string(AccountingMode mode);

struct AccountingRow {
  std::string mode;
  Int vertex_count = 0;
  Int edge_count = 0;
  Int face_count = 0;
  Int tetrahedra = 0;
  Int gluing_triangles = 0;
  Int interior_segments = 0;
  Int euler = 0;             // V - E + F
  Int decomposition_link = 0;  // T - N_i + S_i

  bool operator==(const AccountingRow&) const = default;
};

struct AuditReport {
  AuditCounts counts;
  Int exact_link_value = 0;  // T - N_i + E_i - V_i, 1 for any 3-ball
  Int boundary_euler = 0;    // Vb - Eb + Fb, 2 for a genus-0 boundary
  bool normal_form = false;  // no interior vertices
  std::vector<AccountingRow> accounting_modes;
};

AuditReport audit(const TetComplex& c);

// One accounting-table row.  boundary_merges is the flatness
// S of the original (untriangulated) boundary: how many boundary edges
// are triangulation diagonals rather than polygon edges.  It cannot be
// inferred from the complex, so callers supply it (0 for a simplicial
// boundary taken at face value).
AccountingRow apply_accounting_mode(const TetComplex& c, AccountingMode mode,
                                    Int boundary_merges = 0);

// All five modes in declaration order, omitting any that cannot be
// formed for this complex (promotion needs N_i >= boundary_merges).
std::vector<AccountingRow> accounting_table(const TetComplex& c,
                                            Int boundary_merges = 0);

}  // namespace polyform
