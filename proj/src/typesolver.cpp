#include "polyform/typesolver.hpp"

#include <algorithm>
#include <functional>

#include "polyform/external.hpp"

namespace polyform {

namespace {

// Assign counts to degrees 4..V-1 so the excesses (k-3) sum to
// `excess` using at most `slots` entries; whatever remains becomes the
// degree-3 count.  Works for faces (slots = F) and vertices (slots = V)
// alike since both systems reduce to this once the linear dependency
// is removed.
std::vector<CountVector> solve_excess_system(Int vertex_count, Int excess,
                                             Int slots) {
  std::vector<CountVector> out;
  if (excess < 0 || slots < 0) return out;
  Int width = vertex_count - 3;  // entries for 3..V-1
  CountVector current(static_cast<size_t>(width), 0);
  std::function<void(Int, Int, Int)> place = [&](Int degree, Int left,
                                                 Int used) {
    if (degree >= vertex_count) {
      if (left == 0 && used <= slots) {
        current[0] = slots - used;
        out.push_back(current);
      }
      return;
    }
    Int step = degree - 3;
    for (Int n = 0; n * step <= left && used + n <= slots; ++n) {
      current[static_cast<size_t>(degree - 3)] = n;
      place(degree + 1, left - n * step, used + n);
    }
    current[static_cast<size_t>(degree - 3)] = 0;
  };
  place(4, excess, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<CountVector> enumerate_face_types(Int vertex_count, Int flatness,
                                              Int edge_count, Int face_count,
                                              bool allow_inconsistent) {
  if (vertex_count < 4)
    throw Error(ErrorCode::VertexCountTooSmall,
                "vertex count " + std::to_string(vertex_count) +
                    " is below 4");
  if (!allow_inconsistent) {
    if (flatness < 0 ||
        edge_count != 3 * vertex_count - 6 - flatness ||
        face_count != 2 * vertex_count - 4 - flatness)
      throw Error(ErrorCode::InconsistentInputs,
                  "E and F do not match V and S; pass the override to solve "
                  "the system as given");
  }
  // With n_3 eliminated the system is: excesses sum to S, entries fit
  // in F faces.  The edge equation is then equivalent to 2E = 3F + S;
  // when that fails the system has no solutions at all.
  if (2 * edge_count != 3 * face_count + flatness) return {};
  return solve_excess_system(vertex_count, flatness, face_count);
}

std::vector<CountVector> enumerate_vertex_types(Int vertex_count,
                                                Int edge_count) {
  if (vertex_count < 4)
    throw Error(ErrorCode::VertexCountTooSmall,
                "vertex count " + std::to_string(vertex_count) +
                    " is below 4");
  if (edge_count < e_min(vertex_count) || edge_count > 3 * vertex_count - 6)
    throw Error(ErrorCode::EdgeCountOutOfRange,
                "edge count " + std::to_string(edge_count) + " outside " +
                    std::to_string(e_min(vertex_count)) + ".." +
                    std::to_string(3 * vertex_count - 6) + " for V=" +
                    std::to_string(vertex_count));
  std::vector<CountVector> out = solve_excess_system(
      vertex_count, 2 * edge_count - 3 * vertex_count, vertex_count);
  // The handshake identity sum (d-2) m_d = 2E - 2V is implied by the
  // two solved equations; keep a cheap guard against regressions.
  for (const CountVector& m : out) {
    Int lhs = 0;
    for (size_t i = 0; i < m.size(); ++i)
      lhs += (static_cast<Int>(i) + 1) * m[i];
    if (lhs != 2 * edge_count - 2 * vertex_count)
      throw std::logic_error("vertex type system lost its dependency");
  }
  return out;
}

std::vector<CountVector> filter_vertex_types(
    const std::vector<CountVector>& solutions,
    const RealizabilityFilters& filters) {
  if (!filters.active()) return solutions;
  std::vector<CountVector> kept;
  for (const CountVector& m : solutions) {
    bool ok = true;
    if (filters.valency_cap) {
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && static_cast<Int>(i) + 3 > *filters.valency_cap)
          ok = false;
    }
    if (ok && filters.high_valency_threshold &&
        filters.max_high_valency_vertices) {
      Int high = 0;
      for (size_t i = 0; i < m.size(); ++i)
        if (static_cast<Int>(i) + 3 >= *filters.high_valency_threshold)
          high += m[i];
      if (high > *filters.max_high_valency_vertices) ok = false;
    }
    if (ok) kept.push_back(m);
  }
  return kept;
}

}  // namespace polyform
