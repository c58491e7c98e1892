#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "polyform/core.hpp"

namespace polyform {

using BigInt = boost::multiprecision::cpp_int;

// Number of admissible (S, S_i) range pairings at a vertex count:
// (V^2 - 6V + 10)/2 for even V, (V - 3)^2 / 2 for odd V.
Int pair_combination_count(Int vertex_count);

// Unrestricted partition count p(n).  Memoized; thread-safe;
// behaves as a pure function.
BigInt partition_count(Int n);

// Partitions of n into parts of size at most max_part.
BigInt restricted_partition_count(Int n, Int max_part);

// Census row for one vertex count: every admissible flatness S admits
// at most p(S) face multisets (each non-triangle face contributes its
// degree excess k-3 as a part), so sum p(0..s_max) bounds the number
// of face-type combinations from above.
struct CensusRow {
  Int vertex_count = 0;
  Int s_max = 0;
  Int pair_count = 0;
  BigInt face_combo_upper;
};

CensusRow face_combo_upper_bound(Int vertex_count);

std::vector<CensusRow> census(Int from_vertices, Int to_vertices);

}  // namespace polyform
