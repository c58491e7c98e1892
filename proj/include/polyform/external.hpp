#pragma once

#include <vector>

#include "polyform/core.hpp"

namespace polyform {

// Range of external structures available at a fixed vertex count.
// Both endpoints are attained: S = 0 gives the fully triangulated
// sphere (e_max, f_max), S = s_max gives the flattest closed shape a
// trivalent-minimum vertex budget permits.
struct ExternalBounds {
  Int e_min = 0;
  Int e_max = 0;       // 3V - 6
  Int f_min = 0;
  Int f_max = 0;       // 2V - 4
  Int s_max = 0;       // e_max - e_min
  Int combo_count = 0; // s_max + 1 admissible (V,S) pairs

  bool operator==(const ExternalBounds&) const = default;
};

// Least edge count over all genus-0 polyhedra with V vertices; every
// vertex needs valency >= 3, so E >= ceil(3V/2).
Int e_min(Int vertex_count);

ExternalProfile external_profile(Int vertex_count, Int flatness);

ExternalBounds external_bounds(Int vertex_count);

// All (S, E, F) rows for a vertex count, flattest first, one row per
// unit of flatness: (s_max - k, e_min + k, f_min + k).
struct FlatnessStep {
  Int flatness = 0;
  Int edge_count = 0;
  Int face_count = 0;

  bool operator==(const FlatnessStep&) const = default;
};

std::vector<FlatnessStep> flatness_series(Int vertex_count);

// Fullness M = 5N - 4S is maximal on the simplicial sphere (S = 0)
// and minimal at maximum flatness.
struct FullnessBounds {
  Int m_min = 0;
  Int m_max = 0;  // 10(V - 2)

  bool operator==(const FullnessBounds&) const = default;
};

FullnessBounds m_bounds(Int vertex_count);

}  // namespace polyform
