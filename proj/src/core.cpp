#include "polyform/core.hpp"

namespace polyform {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyMultiset: return "EmptyMultiset";
    case ErrorCode::DegreeBelowThree: return "DegreeBelowThree";
    case ErrorCode::NonPositiveCount: return "NonPositiveCount";
    case ErrorCode::VertexCountTooSmall: return "VertexCountTooSmall";
    case ErrorCode::FlatnessOutOfRange: return "FlatnessOutOfRange";
    case ErrorCode::InconsistentPair: return "InconsistentPair";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::OddAngleUnits: return "OddAngleUnits";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
    case ErrorCode::EdgeCountOutOfRange: return "EdgeCountOutOfRange";
    case ErrorCode::NonManifoldTriangle: return "NonManifoldTriangle";
    case ErrorCode::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::UnknownMode: return "UnknownMode";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Int PolygonMultiset::face_count() const {
  Int f = 0;
  for (auto& [k, n] : counts) f += n;
  return f;
}

PolygonMultiset validate_multiset(const std::map<Int, Int>& raw) {
  if (raw.empty())
    throw Error(ErrorCode::EmptyMultiset, "polygon multiset is empty");
  for (auto& [k, n] : raw) {
    if (k < 3)
      throw Error(ErrorCode::DegreeBelowThree,
                  "polygon degree " + std::to_string(k) + " is below 3");
    if (n <= 0)
      throw Error(ErrorCode::NonPositiveCount,
                  "count for degree " + std::to_string(k) +
                      " must be positive, got " + std::to_string(n));
  }
  return PolygonMultiset{raw};
}

DerivedCounts derived_counts(const PolygonMultiset& m) {
  DerivedCounts d;
  for (auto& [k, n] : m.counts) {
    d.angle_units += (k - 2) * n;
    d.flatness += (k - 3) * n;
    d.face_count += n;
    d.fullness += (k + 2) * n;
  }
  return d;
}

}  // namespace polyform
