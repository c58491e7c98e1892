#include "polyform/census.hpp"

#include <mutex>

#include "polyform/external.hpp"

namespace polyform {

Int pair_combination_count(Int vertex_count) {
  if (vertex_count < 4)
    throw Error(ErrorCode::VertexCountTooSmall,
                "vertex count " + std::to_string(vertex_count) +
                    " is below 4");
  Int v = vertex_count;
  // Sum over S of the rungs the exclusion rule keeps, in closed form.
  return v % 2 == 0 ? (v * v - 6 * v + 10) / 2 : (v - 3) * (v - 3) / 2;
}

/*
 * p(n) by the pentagonal number recurrence
 *
 *   p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
 *
 * with p(0) = 1 and p(m) = 0 for m < 0.  O(n sqrt n) adds on big
 * integers.  The cache only ever grows, so readers past the warmed
 * prefix never see a partial value.
 */
BigInt partition_count(Int n) {
  if (n < 0)
    throw Error(ErrorCode::NegativeCount, "partition argument negative");
  static std::mutex mu;
  static std::vector<BigInt> cache{1};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<Int>(cache.size()) <= n) {
    Int m = static_cast<Int>(cache.size());
    BigInt total = 0;
    for (Int k = 1;; ++k) {
      Int g1 = k * (3 * k - 1) / 2;
      Int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      BigInt term = cache[static_cast<size_t>(m - g1)];
      if (g2 <= m) term += cache[static_cast<size_t>(m - g2)];
      if (k % 2 == 1)
        total += term;
      else
        total -= term;
    }
    cache.push_back(total);
  }
  return cache[static_cast<size_t>(n)];
}

BigInt restricted_partition_count(Int n, Int max_part) {
  if (n < 0)
    throw Error(ErrorCode::NegativeCount, "partition argument negative");
  if (max_part < 0)
    throw Error(ErrorCode::NegativeCount, "part bound negative");
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  std::vector<BigInt> ways(static_cast<size_t>(n) + 1);
  ways[0] = 1;
  for (Int part = 1; part <= max_part; ++part)
    for (Int total = part; total <= n; ++total)
      ways[static_cast<size_t>(total)] +=
          ways[static_cast<size_t>(total - part)];
  return ways[static_cast<size_t>(n)];
}

CensusRow face_combo_upper_bound(Int vertex_count) {
  CensusRow row;
  row.vertex_count = vertex_count;
  row.s_max = external_bounds(vertex_count).s_max;
  row.pair_count = pair_combination_count(vertex_count);
  row.face_combo_upper = 0;
  for (Int s = 0; s <= row.s_max; ++s) row.face_combo_upper += partition_count(s);
  return row;
}

std::vector<CensusRow> census(Int from_vertices, Int to_vertices) {
  if (from_vertices < 4)
    throw Error(ErrorCode::VertexCountTooSmall,
                "census starts at vertex count 4");
  if (to_vertices < from_vertices)
    throw Error(ErrorCode::InconsistentPair, "census range is inverted");
  std::vector<CensusRow> rows;
  for (Int v = from_vertices; v <= to_vertices; ++v)
    rows.push_back(face_combo_upper_bound(v));
  return rows;
}

}  // namespace polyform
