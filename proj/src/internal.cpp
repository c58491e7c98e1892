#include "polyform/internal.hpp"

#include <algorithm>

#include "polyform/external.hpp"

namespace polyform {

Int gluing_triangle_count(Int tetrahedra, Int vertex_count) {
  Int n_i = 2 * tetrahedra - vertex_count + 2;
  if (n_i < 0)
    throw Error(ErrorCode::InconsistentPair,
                "T=" + std::to_string(tetrahedra) + " with V=" +
                    std::to_string(vertex_count) +
                    " gives a negative gluing count");
  return n_i;
}

InternalConfig config_from_segments(Int vertex_count, Int interior_segments) {
  if (vertex_count < 4)
    throw Error(ErrorCode::VertexCountTooSmall,
                "vertex count " + std::to_string(vertex_count) +
                    " is below 4");
  if (interior_segments < 0)
    throw Error(ErrorCode::NegativeCount, "interior segment count negative");
  InternalConfig c;
  c.tetrahedra = vertex_count - 3 + interior_segments;
  c.gluing_triangles = gluing_triangle_count(c.tetrahedra, vertex_count);
  c.interior_segments = interior_segments;
  return c;
}

InternalRanges internal_ranges(Int vertex_count) {
  if (vertex_count < 4)
    throw Error(ErrorCode::VertexCountTooSmall,
                "vertex count " + std::to_string(vertex_count) +
                    " is below 4");
  InternalRanges r;
  r.t_min = vertex_count - 3;
  r.t_max = 2 * (vertex_count - 4);
  r.n_i_min = vertex_count - 4;
  r.n_i_max = 3 * (vertex_count - 4) - 2;
  r.s_i_max = vertex_count - 5;
  r.config_count = vertex_count - 4;
  if (vertex_count == 4) {
    // The tetrahedron itself: one rung, no gluing.  The closed forms
    // above only hold from V=5 up.
    r.t_max = r.t_min;
    r.n_i_max = r.n_i_min;
    r.s_i_max = 0;
    r.config_count = 1;
  }
  return r;
}

std::vector<InternalConfig> salt_ladder(Int vertex_count) {
  InternalRanges r = internal_ranges(vertex_count);
  std::vector<InternalConfig> ladder;
  ladder.reserve(static_cast<size_t>(r.config_count));
  for (Int k = 0; k <= r.s_i_max; ++k)
    ladder.push_back(config_from_segments(vertex_count, k));
  return ladder;
}

PrunedLadder heuristic_prune(Int vertex_count, Int flatness) {
  ExternalBounds b = external_bounds(vertex_count);
  if (flatness < 0 || flatness > b.s_max)
    throw Error(ErrorCode::FlatnessOutOfRange,
                "flatness " + std::to_string(flatness) + " outside 0.." +
                    std::to_string(b.s_max) + " for V=" +
                    std::to_string(vertex_count));
  std::vector<InternalConfig> ladder = salt_ladder(vertex_count);
  Int keep = std::max<Int>(vertex_count - 4 - flatness, 1);
  keep = std::min<Int>(keep, static_cast<Int>(ladder.size()));
  ladder.resize(static_cast<size_t>(keep));
  PrunedLadder pruned;
  pruned.configs = std::move(ladder);
  pruned.heuristic = true;
  pruned.caveat =
      "heuristic: the flatness exclusion rule can drop realizable "
      "configurations (a nine-vertex, flatness-5 shape realizes the rung "
      "after the cut); treat the omitted rungs as unverified, not ruled out";
  return pruned;
}

BoundaryCounts boundary_from_interior(Int tetrahedra, Int gluing_triangles,
                                      Int flatness, Int interior_segments) {
  if (tetrahedra < 0 || gluing_triangles < 0 || flatness < 0 ||
      interior_segments < 0)
    throw Error(ErrorCode::NegativeCount, "interior counts must be >= 0");
  BoundaryCounts bc;
  bc.vertex_count =
      4 * tetrahedra - 3 * gluing_triangles + 2 * interior_segments;
  bc.edge_count = 6 * tetrahedra - 3 * gluing_triangles - flatness;
  bc.face_count = 4 * tetrahedra - 2 * gluing_triangles - flatness;
  if (bc.vertex_count < 0 || bc.edge_count < 0 || bc.face_count < 0)
    throw Error(ErrorCode::NegativeCount,
                "interior configuration yields a negative boundary count");
  return bc;
}

Int extended_euler(Int tetrahedra, Int gluing_triangles,
                   Int interior_segments) {
  return 2 * (tetrahedra - gluing_triangles + interior_segments);
}

}  // namespace polyform
