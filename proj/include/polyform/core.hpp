#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace polyform {

using Int = std::int64_t;

enum class ErrorCode {
  EmptyMultiset,
  DegreeBelowThree,
  NonPositiveCount,
  VertexCountTooSmall,
  FlatnessOutOfRange,
  InconsistentPair,
  NegativeCount,
  OddAngleUnits,
  InconsistentInputs,
  EdgeCountOutOfRange,
  NonManifoldTriangle,
  DisconnectedComplex,
  InvalidComplex,
  UnknownMode,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Face multiset of a closed surface: degree k (>= 3) -> number of k-gons.
struct PolygonMultiset {
  std::map<Int, Int> counts;

  Int face_count() const;
  bool operator==(const PolygonMultiset&) const = default;
};

PolygonMultiset validate_multiset(const std::map<Int, Int>& raw);

// Exact counts that depend only on the face multiset, not on vertex count.
//   angle_units  N = sum (k-2) P_k   (triangles once every face is fanned)
//   flatness     S = sum (k-3) P_k   (diagonals a triangulation would add)
//   face_count   F = sum P_k
//   fullness     M = sum (k+2) P_k
// N = S + F and M = 5N - 4S hold for every multiset.
struct DerivedCounts {
  Int angle_units = 0;
  Int flatness = 0;
  Int face_count = 0;
  Int fullness = 0;

  bool operator==(const DerivedCounts&) const = default;
};

DerivedCounts derived_counts(const PolygonMultiset& m);

// External structure of a normal-form genus-0 polyhedron at a given
// vertex count and flatness.
struct ExternalProfile {
  Int vertex_count = 0;        // V
  Int flatness = 0;            // S
  Int edge_count = 0;          // E = 3V - 6 - S
  Int face_count = 0;          // F = 2V - 4 - S
  Int angle_units = 0;         // N = 2(V - 2)
  Int triangulated_faces = 0;  // F + S = 2V - 4
  Int fullness = 0;            // M = 5N - 4S

  bool operator==(const ExternalProfile&) const = default;
};

// One interior decomposition: T tetrahedra glued along N_i triangles,
// meeting the boundary everywhere (no interior vertices), with S_i
// interior segments.  T - N_i + S_i = 1 for every valid decomposition.
struct InternalConfig {
  Int tetrahedra = 0;         // T
  Int gluing_triangles = 0;   // N_i
  Int interior_segments = 0;  // S_i

  bool operator==(const InternalConfig&) const = default;
};

// Raw counts extracted from a tetrahedral complex by the auditor.
struct AuditCounts {
  Int tetrahedra = 0;         // T
  Int gluing_triangles = 0;   // triangles shared by two tets (N_i)
  Int interior_edges = 0;     // edges on no boundary triangle (E_i)
  Int interior_vertices = 0;  // vertices on no boundary triangle (V_i)
  Int boundary_vertices = 0;
  Int boundary_edges = 0;
  Int boundary_triangles = 0;

  bool operator==(const AuditCounts&) const = default;
};

}  // namespace polyform
