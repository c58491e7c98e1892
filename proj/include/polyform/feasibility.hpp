#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyform/core.hpp"

namespace polyform {

// Vertex count forced by the angle budget: V = N/2 + 2.  Odd N admits
// no closed genus-0 surface at all.
Int vertex_estimate(Int angle_units);

enum class Verdict {
  SymbolicallyFeasible,
  InfeasibleOddAngleUnits,
  InfeasibleTooFlat,
};

const char* to_string(Verdict v);

// Full worksheet for the enclosure pre-check.  V-dependent fields stay
// empty when N is odd (the worksheet stops at the parity rule but the
// multiset-only steps are still filled in).
struct FeasibilityReport {
  PolygonMultiset input;
  Int angle_units = 0;  // N
  Int flatness = 0;     // S_total
  Int face_count = 0;   // F
  Int fullness = 0;     // M
  std::optional<Int> vertex_count;   // V
  std::optional<Int> edge_count;     // E = 3(V-2) - S_total
  std::optional<Int> euler_value;    // always 2 when computed
  std::optional<Int> s_max;          // worksheet flatness cap
  std::optional<Int> s_difference;   // s_max - S_total
  Verdict verdict = Verdict::SymbolicallyFeasible;
  std::vector<std::string> caveats;
  std::vector<std::pair<std::string, bool>> cross_checks;
};

// Runs all eight worksheet steps on a validated multiset.  Never
// throws for infeasible inputs; parity and flatness failures land in
// the verdict.  A symbolic pass never promises an embedding, so every
// report carries that caveat.
FeasibilityReport check_enclosure(const PolygonMultiset& m);

}  // namespace polyform
