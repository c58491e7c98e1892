#pragma once

#include <string>
#include <vector>

#include "polyform/core.hpp"

namespace polyform {

// Range of interior decompositions of a normal-form polyhedron with V
// boundary vertices.  Configurations form a ladder indexed by the
// interior segment count S_i = 0 .. V-5.
struct InternalRanges {
  Int t_min = 0;         // V - 3
  Int t_max = 0;         // 2(V - 4)
  Int n_i_min = 0;       // V - 4
  Int n_i_max = 0;       // 3(V - 4) - 2
  Int s_i_max = 0;       // V - 5
  Int config_count = 0;  // V - 4

  bool operator==(const InternalRanges&) const = default;
};

// N_i = 2T - V + 2 when the decomposition has no interior vertices.
Int gluing_triangle_count(Int tetrahedra, Int vertex_count);

// Ladder rung at a given interior segment count:
// T = V - 3 + S_i, N_i = V - 4 + 2 S_i.
InternalConfig config_from_segments(Int vertex_count, Int interior_segments);

InternalRanges internal_ranges(Int vertex_count);

// All rungs, minimal decomposition first.
std::vector<InternalConfig> salt_ladder(Int vertex_count);

// The flatness exclusion rule: keep the first max(V-4-S, 1) rungs.
// Unreliable; a nine-vertex shape realizes a rung the rule drops, so
// every result carries the heuristic flag and caveat below.
struct PrunedLadder {
  std::vector<InternalConfig> configs;
  bool heuristic = true;
  std::string caveat;
};

PrunedLadder heuristic_prune(Int vertex_count, Int flatness);

// Boundary counts recovered from an interior decomposition of a shape
// with flatness S.  All three outputs must be nonnegative.
struct BoundaryCounts {
  Int vertex_count = 0;  // 4T - 3 N_i + 2 S_i
  Int edge_count = 0;    // 6T - 3 N_i - S
  Int face_count = 0;    // 4T - 2 N_i - S

  bool operator==(const BoundaryCounts&) const = default;
};

BoundaryCounts boundary_from_interior(Int tetrahedra, Int gluing_triangles,
                                      Int flatness, Int interior_segments);

// V - E + F of the recovered boundary equals 2 (T - N_i + S_i); the
// value is 2 exactly when the decomposition identity holds.
Int extended_euler(Int tetrahedra, Int gluing_triangles,
                   Int interior_segments);

}  // namespace polyform
