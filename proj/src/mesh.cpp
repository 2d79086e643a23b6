#include "knotplate/mesh.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "knotplate/errors.hpp"
#include "knotplate/version.hpp"

namespace knotplate {

namespace {

double shortest_quadrant_edge(const MedialGraph& m, const PlanarLayout& pl) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < 4 * m.crossings; ++e) {
    const auto [a, b] = m.graph.ends[e];
    best = std::min(best, (pl.position[a] - pl.position[b]).norm());
  }
  return best;
}

MeshGroup group_of(PolygonClass c) {
  switch (c) {
    case PolygonClass::wall_internal: return MeshGroup::walls;
    case PolygonClass::wall_ring: return MeshGroup::ring;
    case PolygonClass::saddle_square:
    case PolygonClass::saddle_flap: return MeshGroup::saddles;
    case PolygonClass::lid_facet: return MeshGroup::lids;
  }
  return MeshGroup::walls;
}

}  // namespace

ResolvedMeshParams resolve(const MeshParams& p, const MedialGraph& m, const PlanarLayout& pl) {
  const double shortest = shortest_quadrant_edge(m, pl);
  ResolvedMeshParams r;
  r.height = p.height.value_or(1.0);
  r.saddle_radius = p.saddle_radius.value_or(0.15 * shortest);
  r.ring_radius = p.ring_radius.value_or(1.25 * pl.radius);
  if (!(r.height > 0.0) || !std::isfinite(r.height)) throw UsageError("--height must be positive");
  if (!(r.saddle_radius > 0.0) || !(r.saddle_radius < shortest / 2)) {
    std::ostringstream msg;
    msg << "--saddle-radius must lie in (0, " << shortest / 2 << ") for this layout";
    throw UsageError(msg.str());
  }
  if (!(r.ring_radius >= pl.radius) || !std::isfinite(r.ring_radius)) {
    std::ostringstream msg;
    msg << "--ring-radius must be at least the layout radius " << pl.radius;
    throw UsageError(msg.str());
  }
  return r;
}

Mesh build_mesh(const TemplateComplex& tc, const MedialGraph& m, const PlanarLayout& pl, const MeshParams& params) {
  const ResolvedMeshParams r = resolve(params, m, pl);
  const double ring_scale = r.ring_radius / pl.radius;
  auto planar = [&](int v) -> Point2 {
    return m.kind[v] == VertexKind::circle ? Point2(pl.position[v] * ring_scale) : pl.position[v];
  };

  Mesh mesh;
  mesh.vertices.reserve(tc.vertices.size());
  for (const CellVertex& cv : tc.vertices) {
    Point2 xy;
    if (cv.kind == CellVertexKind::corner) {
      const Point2 center = pl.position[m.fourfold(cv.a)];
      const Point2 dir = (pl.position[m.quadrant_target(cv.a, cv.b)] - center).normalized();
      xy = center + r.saddle_radius * dir;
    } else {
      xy = planar(cv.a);
    }
    mesh.vertices.emplace_back(xy.x(), xy.y(), cv.level * r.height);
  }
  mesh.faces.reserve(tc.polygons.size());
  for (const Polygon& p : tc.polygons) mesh.faces.push_back({polygon_vertices(tc, p), group_of(p.cls)});
  return mesh;
}

const char* to_string(MeshGroup g) {
  switch (g) {
    case MeshGroup::walls: return "walls";
    case MeshGroup::ring: return "ring";
    case MeshGroup::saddles: return "saddles";
    case MeshGroup::lids: return "lids";
  }
  return "?";
}

std::string export_obj(const Mesh& mesh) {
  std::ostringstream out;
  out.precision(9);
  out << "# knotplate " << version << " template mesh\n";
  out << "# " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " faces\n";
  for (const Point3& v : mesh.vertices) out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (MeshGroup g : {MeshGroup::walls, MeshGroup::ring, MeshGroup::saddles, MeshGroup::lids}) {
    out << "g " << to_string(g) << '\n';
    for (const MeshFace& f : mesh.faces) {
      if (f.group != g) continue;
      out << 'f';
      for (int v : f.vertices) out << ' ' << v + 1;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace knotplate
