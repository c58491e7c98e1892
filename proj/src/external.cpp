#include "polyform/external.hpp"

namespace polyform {

namespace {

void require_vertices(Int v, Int least) {
  if (v < least)
    throw Error(ErrorCode::VertexCountTooSmall,
                "vertex count " + std::to_string(v) + " is below " +
                    std::to_string(least));
}

}  // namespace

Int e_min(Int vertex_count) {
  require_vertices(vertex_count, 4);
  // ceil(3V/2), branched on parity to stay in integers
  return vertex_count % 2 == 0 ? 3 * vertex_count / 2
                               : (3 * vertex_count + 1) / 2;
}

ExternalBounds external_bounds(Int vertex_count) {
  require_vertices(vertex_count, 4);
  ExternalBounds b;
  b.e_max = 3 * vertex_count - 6;
  b.f_max = 2 * vertex_count - 4;
  b.e_min = e_min(vertex_count);
  b.s_max = b.e_max - b.e_min;
  b.f_min = b.f_max - b.s_max;
  b.combo_count = b.s_max + 1;
  return b;
}

ExternalProfile external_profile(Int vertex_count, Int flatness) {
  ExternalBounds b = external_bounds(vertex_count);
  if (flatness < 0 || flatness > b.s_max)
    throw Error(ErrorCode::FlatnessOutOfRange,
                "flatness " + std::to_string(flatness) + " outside 0.." +
                    std::to_string(b.s_max) + " for V=" +
                    std::to_string(vertex_count));
  ExternalProfile p;
  p.vertex_count = vertex_count;
  p.flatness = flatness;
  p.edge_count = 3 * vertex_count - 6 - flatness;
  p.face_count = 2 * vertex_count - 4 - flatness;
  p.angle_units = 2 * (vertex_count - 2);
  p.triangulated_faces = p.face_count + flatness;
  p.fullness = 5 * p.angle_units - 4 * flatness;
  return p;
}

std::vector<FlatnessStep> flatness_series(Int vertex_count) {
  ExternalBounds b = external_bounds(vertex_count);
  std::vector<FlatnessStep> series;
  series.reserve(static_cast<size_t>(b.combo_count));
  for (Int k = 0; k <= b.s_max; ++k)
    series.push_back({b.s_max - k, b.e_min + k, b.f_min + k});
  return series;
}

FullnessBounds m_bounds(Int vertex_count) {
  require_vertices(vertex_count, 4);
  FullnessBounds mb;
  mb.m_max = 10 * (vertex_count - 2);
  mb.m_min = vertex_count % 2 == 0 ? 4 * vertex_count + 4
                                   : 4 * vertex_count + 6;
  return mb;
}

}  // namespace polyform
