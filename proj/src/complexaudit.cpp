#include "polyform/complexaudit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyform {

namespace {

using Triangle = std::array<Int, 3>;
using Edge = std::array<Int, 2>;

std::array<Triangle, 4> faces_of(const std::array<Int, 4>& t) {
  return {Triangle{t[1], t[2], t[3]}, Triangle{t[0], t[2], t[3]},
          Triangle{t[0], t[1], t[3]}, Triangle{t[0], t[1], t[2]}};
}

}  // namespace

TetComplex validate_complex(TetComplex c) {
  if (c.tets.empty())
    throw Error(ErrorCode::InvalidComplex, "complex has no tetrahedra");
  if (c.boundary_vertex_flags &&
      static_cast<Int>(c.boundary_vertex_flags->size()) != c.vertex_count)
    throw Error(ErrorCode::InvalidComplex,
                "boundary flag list does not cover every vertex");
  std::vector<bool> used(static_cast<size_t>(c.vertex_count), false);
  std::set<std::array<Int, 4>> seen;
  for (auto& t : c.tets) {
    std::sort(t.begin(), t.end());
    for (Int v : t)
      if (v < 0 || v >= c.vertex_count)
        throw Error(ErrorCode::InvalidComplex,
                    "vertex index " + std::to_string(v) + " out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3])
      throw Error(ErrorCode::InvalidComplex,
                  "tetrahedron with repeated vertex");
    if (!seen.insert(t).second)
      throw Error(ErrorCode::InvalidComplex, "duplicate tetrahedron");
    for (Int v : t) used[static_cast<size_t>(v)] = true;
  }
  for (Int v = 0; v < c.vertex_count; ++v)
    if (!used[static_cast<size_t>(v)])
      throw Error(ErrorCode::InvalidComplex,
                  "vertex " + std::to_string(v) +
                      " appears in no tetrahedron");
  return c;
}

AuditReport audit(const TetComplex& raw) {
  TetComplex c = validate_complex(raw);

  std::map<Triangle, std::vector<size_t>> triangle_tets;
  for (size_t i = 0; i < c.tets.size(); ++i)
    for (const Triangle& tri : faces_of(c.tets[i]))
      triangle_tets[tri].push_back(i);

  for (auto& [tri, owners] : triangle_tets)
    if (owners.size() > 2)
      throw Error(ErrorCode::NonManifoldTriangle,
                  "triangle {" + std::to_string(tri[0]) + "," +
                      std::to_string(tri[1]) + "," + std::to_string(tri[2]) +
                      "} shared by " + std::to_string(owners.size()) +
                      " tetrahedra");

  // Facet connectivity: a decomposition of one solid must be walkable
  // through shared triangles.
  std::vector<bool> reached(c.tets.size(), false);
  std::vector<size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    size_t i = queue.back();
    queue.pop_back();
    for (const Triangle& tri : faces_of(c.tets[i]))
      for (size_t j : triangle_tets[tri])
        if (!reached[j]) {
          reached[j] = true;
          queue.push_back(j);
        }
  }
  if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
    throw Error(ErrorCode::DisconnectedComplex,
                "tetrahedra do not form one facet-connected complex");

  AuditReport r;
  r.counts.tetrahedra = static_cast<Int>(c.tets.size());

  std::set<Edge> all_edges, boundary_edges;
  std::vector<bool> on_boundary(static_cast<size_t>(c.vertex_count), false);
  for (const auto& t : c.tets)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) all_edges.insert({t[a], t[b]});

  for (auto& [tri, owners] : triangle_tets) {
    if (owners.size() == 2) {
      ++r.counts.gluing_triangles;
    } else {
      ++r.counts.boundary_triangles;
      boundary_edges.insert({tri[0], tri[1]});
      boundary_edges.insert({tri[0], tri[2]});
      boundary_edges.insert({tri[1], tri[2]});
      for (Int v : tri) on_boundary[static_cast<size_t>(v)] = true;
    }
  }

  if (c.boundary_vertex_flags) {
    on_boundary.assign(c.boundary_vertex_flags->begin(),
                       c.boundary_vertex_flags->end());
  }
  for (bool b : on_boundary)
    b ? ++r.counts.boundary_vertices : ++r.counts.interior_vertices;

  r.counts.boundary_edges = static_cast<Int>(boundary_edges.size());
  r.counts.interior_edges =
      static_cast<Int>(all_edges.size() - boundary_edges.size());

  r.exact_link_value = r.counts.tetrahedra - r.counts.gluing_triangles +
                       r.counts.interior_edges - r.counts.interior_vertices;
  r.boundary_euler = r.counts.boundary_vertices - r.counts.boundary_edges +
                     r.counts.boundary_triangles;
  r.normal_form = r.counts.interior_vertices == 0;
  return r;
}

AccountingMode parse_accounting_mode(std::string_view name) {
  if (name == "standard") return AccountingMode::Standard;
  if (name == "steiner-uncounted") return AccountingMode::SteinerIgnored;
  if (name == "steiner-counted") return AccountingMode::SteinerAsVertex;
  if (name == "steiner-counted-edges")
    return AccountingMode::SteinerVertexEdges;
  if (name == "steiner-counted-edges-faces")
    return AccountingMode::SteinerVertexEdgesFaces;
  throw Error(ErrorCode::UnknownMode,
              "unknown accounting mode '" + std::string(name) + "'");
}

const char* to_string(AccountingMode mode) {
  switch (mode) {
    case AccountingMode::Standard: return "standard";
    case AccountingMode::SteinerIgnored: return "steiner-uncounted";
    case AccountingMode::SteinerAsVertex: return "steiner-counted";
    case AccountingMode::SteinerVertexEdges: return "steiner-counted-edges";
    case AccountingMode::SteinerVertexEdgesFaces:
      return "steiner-counted-edges-faces";
  }
  return "unknown";
}

AccountingRow apply_accounting_mode(const TetComplex& raw, AccountingMode mode,
                                    Int boundary_merges) {
  TetComplex c = validate_complex(raw);
  AuditReport a = audit(c);
  Int s = boundary_merges;
  if (s < 0 || s > a.counts.boundary_edges || s > a.counts.boundary_triangles)
    throw Error(ErrorCode::FlatnessOutOfRange,
                "boundary merge count " + std::to_string(s) +
                    " exceeds the boundary");

  // Interior edges that run between boundary vertices survive even
  // when interior (Steiner) vertices are struck from the books.
  std::set<Edge> all_edges, boundary_edge_set;
  std::map<Triangle, int> tri_count;
  for (const auto& t : c.tets) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) all_edges.insert({t[i], t[j]});
    for (const Triangle& tri : faces_of(t)) ++tri_count[tri];
  }
  std::vector<bool> on_boundary(static_cast<size_t>(c.vertex_count), false);
  for (auto& [tri, n] : tri_count)
    if (n == 1) {
      boundary_edge_set.insert({tri[0], tri[1]});
      boundary_edge_set.insert({tri[0], tri[2]});
      boundary_edge_set.insert({tri[1], tri[2]});
      for (Int v : tri) on_boundary[static_cast<size_t>(v)] = true;
    }
  Int surface_chords = 0;
  for (const Edge& e : all_edges)
    if (!boundary_edge_set.contains(e) &&
        on_boundary[static_cast<size_t>(e[0])] &&
        on_boundary[static_cast<size_t>(e[1])])
      ++surface_chords;

  AccountingRow row;
  row.mode = to_string(mode);
  row.tetrahedra = a.counts.tetrahedra;
  row.gluing_triangles = a.counts.gluing_triangles;
  // Un-triangulate the boundary for the ledger: merges collapse S
  // diagonal edges and S faces back into the original polygons.
  row.vertex_count = a.counts.boundary_vertices;
  row.edge_count = a.counts.boundary_edges - s;
  row.face_count = a.counts.boundary_triangles - s;

  switch (mode) {
    case AccountingMode::Standard:
      row.interior_segments = a.counts.interior_edges;
      row.vertex_count += a.counts.interior_vertices;
      break;
    case AccountingMode::SteinerIgnored:
      row.interior_segments = surface_chords;
      break;
    case AccountingMode::SteinerAsVertex:
      row.vertex_count += a.counts.interior_vertices;
      row.interior_segments = surface_chords;
      break;
    case AccountingMode::SteinerVertexEdges:
      row.vertex_count += a.counts.interior_vertices;
      row.edge_count += a.counts.interior_edges;
      row.interior_segments = 0;
      break;
    case AccountingMode::SteinerVertexEdgesFaces: {
      row.vertex_count += a.counts.interior_vertices;
      row.edge_count += a.counts.interior_edges;
      Int promoted = a.counts.gluing_triangles - s;
      if (promoted < 0)
        throw Error(ErrorCode::NegativeCount,
                    "fewer gluing triangles than boundary merges");
      row.face_count += promoted;
      row.gluing_triangles = s;
      row.interior_segments = 0;
      break;
    }
  }
  row.euler = row.vertex_count - row.edge_count + row.face_count;
  row.decomposition_link =
      row.tetrahedra - row.gluing_triangles + row.interior_segments;
  return row;
}

std::vector<AccountingRow> accounting_table(const TetComplex& c,
                                            Int boundary_merges) {
  std::vector<AccountingRow> rows;
  for (AccountingMode mode :
       {AccountingMode::Standard, AccountingMode::SteinerIgnored,
        AccountingMode::SteinerAsVertex, AccountingMode::SteinerVertexEdges,
        AccountingMode::SteinerVertexEdgesFaces}) {
    try {
      rows.push_back(apply_accounting_mode(c, mode, boundary_merges));
    } catch (const Error& e) {
      // a mode can be inapplicable (fewer gluing triangles than
      // merges); the table just omits it
      if (e.code() != ErrorCode::NegativeCount) throw;
    }
  }
  return rows;
}

}  // namespace polyform
