#pragma once

#include <optional>
#include <vector>

#include "polyform/core.hpp"

namespace polyform {

// Dense count vector over degrees (or valencies) 3 .. V-1:
// counts[i] is the number of faces of degree 3+i, or of vertices of
// valency 3+i.  Size is always V-3.
using CountVector = std::vector<Int>;

// All face-degree assignments for a shape with the given counts:
//   sum n_k = F,  sum k n_k = 2E,  sum (k-3) n_k = S,  3 <= k <= V-1.
// Inputs must satisfy E = 3V-6-S and F = 2V-4-S unless
// allow_inconsistent is set (then any system is solved as given,
// possibly yielding no solutions).  Output is sorted descending, most
// triangles first.
std::vector<CountVector> enumerate_face_types(Int vertex_count, Int flatness,
                                              Int edge_count, Int face_count,
                                              bool allow_inconsistent = false);

// All vertex-valency assignments:
//   sum m_d = V,  sum d m_d = 2E,  3 <= d <= V-1,
// for e_min(V) <= E <= 3V-6.  Output sorted descending, most trivalent
// vertices first.
std::vector<CountVector> enumerate_vertex_types(Int vertex_count,
                                                Int edge_count);

// Optional realizability screens, all off by default.  These are
// heuristics: they can drop solutions that are in fact realizable.
// high_valency_threshold and max_high_valency_vertices only act when
// both are set.
struct RealizabilityFilters {
  std::optional<Int> valency_cap;
  std::optional<Int> high_valency_threshold;
  std::optional<Int> max_high_valency_vertices;

  bool active() const {
    return valency_cap.has_value() ||
           (high_valency_threshold.has_value() &&
            max_high_valency_vertices.has_value());
  }
};

std::vector<CountVector> filter_vertex_types(
    const std::vector<CountVector>& solutions,
    const RealizabilityFilters& filters);

}  // namespace polyform
