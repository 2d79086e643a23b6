#include "knotplate/complex.hpp"

#include <map>
#include <string>

namespace knotplate {

namespace {

class Builder {
 public:
  Builder(const MedialGraph& m, const Diagram& d) : m_(m), d_(d), C_(static_cast<int>(m.crossings)) {}

  TemplateComplex build() {
    tc_.crossings = m_.crossings;
    tc_.ring = m_.circle;
    find_bigons();
    add_vertices();
    add_saddle_edges();
    add_walls();
    add_ring();
    add_lid(skein_graph(m_, d_, Side::upper), +1);
    add_lid(skein_graph(m_, d_, Side::lower), -1);
    return std::move(tc_);
  }

 private:
  int corner(int c, int q, int level) const { return 3 * (4 * c + (q & 3)) + level + 1; }
  int square_edge(int c, int q) const { return 4 * c + (q & 3); }
  int vertical_edge(int c, int q, int level) const { return 4 * C_ + 2 * (4 * c + (q & 3)) + (level > 0 ? 1 : 0); }
  int flap_edge(int c, int s) const { return 12 * C_ + 4 * c + (s & 3); }

  int add_edge(int a, int b, CellEdgeKind k) {
    tc_.edges.push_back({{a, b}, k});
    return static_cast<int>(tc_.edges.size()) - 1;
  }

  void find_bigons() {
    partner_.assign(4 * C_, -1);
    std::map<int, std::vector<int>> at_star;
    for (int e = 0; e < 4 * C_; ++e) at_star[m_.graph.ends[e][1]].push_back(e);
    for (std::size_t f = 0; f < m_.faces.size(); ++f) {
      if (f == m_.faces.outer || m_.faces.faces[f].size() != 2) continue;
      const auto& es = at_star[m_.star_of_face(f)];
      partner_[es[0]] = es[1];
      partner_[es[1]] = es[0];
      ++tc_.bigons;
    }
  }

  void add_vertices() {
    for (int c = 0; c < C_; ++c)
      for (int q = 0; q < 4; ++q)
        for (int level = -1; level <= 1; ++level) tc_.vertices.push_back({CellVertexKind::corner, c, q, level});
    vertical_bottom_.assign(m_.graph.vertex_count, -1);
    for (std::size_t v = C_; v < m_.graph.vertex_count; ++v) {
      const bool circle = m_.kind[v] == VertexKind::circle;
      if (!circle && m_.faces.faces[m_.source[v]].size() == 2) continue;
      vertical_bottom_[v] = static_cast<int>(tc_.vertices.size());
      const auto kind = circle ? CellVertexKind::circle : CellVertexKind::star;
      tc_.vertices.push_back({kind, static_cast<int>(v), -1, -1});
      tc_.vertices.push_back({kind, static_cast<int>(v), -1, 1});
    }
  }

  void add_saddle_edges() {
    for (int c = 0; c < C_; ++c)
      for (int q = 0; q < 4; ++q) add_edge(corner(c, q, 0), corner(c, q + 1, 0), CellEdgeKind::square);
    for (int c = 0; c < C_; ++c)
      for (int q = 0; q < 4; ++q)
        for (int level : {-1, 1}) add_edge(corner(c, q, 0), corner(c, q, level), CellEdgeKind::vertical);
    for (int c = 0; c < C_; ++c) {
      for (int s = 0; s < 4; ++s) {
        const int z = flap_level(c, s);
        add_edge(corner(c, s - 1, z), corner(c, s, z), CellEdgeKind::flap_top);
      }
    }
    for (int c = 0; c < C_; ++c) {
      Polygon sq{PolygonClass::saddle_square, {}, 4, 0, {c}};
      for (int q = 0; q < 4; ++q) sq.boundary.push_back({square_edge(c, q), false});
      saddles_.push_back(std::move(sq));
      for (int s = 0; s < 4; ++s) {
        const int z = flap_level(c, s);
        saddles_.push_back({PolygonClass::saddle_flap,
                            {{square_edge(c, s - 1), false},
                             {vertical_edge(c, s, z), false},
                             {flap_edge(c, s), true},
                             {vertical_edge(c, s - 1, z), true}},
                            4,
                            z,
                            {c, s}});
      }
    }
  }

  // Flaps over the under-strand fold up, over the over-strand fold down.
  int flap_level(int c, int s) const { return d_.is_under_canonical(c, s & 3) ? 1 : -1; }

  void add_walls() {
    std::vector<int> vertical(m_.graph.vertex_count, -1);
    for (std::size_t v = C_; v < m_.graph.vertex_count; ++v) {
      if (vertical_bottom_[v] < 0) continue;
      const bool circle = m_.kind[v] == VertexKind::circle;
      vertical[v] = add_edge(vertical_bottom_[v], vertical_bottom_[v] + 1,
                             circle ? CellEdgeKind::circle_vertical : CellEdgeKind::star_vertical);
    }
    circle_vertical_ = vertical;

    wall_top_.assign(4 * C_, -1);
    wall_bottom_.assign(4 * C_, -1);
    for (int e = 0; e < 4 * C_; ++e) {
      const int c = e / 4, q = e % 4;
      const int p = partner_[e];
      if (p >= 0 && p < e) continue;
      Polygon w{PolygonClass::wall_internal, {}, 4, 0, {e}};
      w.boundary = {{vertical_edge(c, q, -1), true}, {vertical_edge(c, q, 1), false}};
      if (p >= 0) {
        const int pc = p / 4, pq = p % 4;
        const int top = add_edge(corner(c, q, 1), corner(pc, pq, 1), CellEdgeKind::wall_top);
        const int bottom = add_edge(corner(c, q, -1), corner(pc, pq, -1), CellEdgeKind::wall_bottom);
        wall_top_[e] = wall_top_[p] = top;
        wall_bottom_[e] = wall_bottom_[p] = bottom;
        w.boundary.insert(w.boundary.end(), {{top, false},
                                             {vertical_edge(pc, pq, 1), true},
                                             {vertical_edge(pc, pq, -1), false},
                                             {bottom, true}});
        w.source.push_back(p);
      } else {
        const int t = m_.graph.ends[e][1];
        const int top = add_edge(corner(c, q, 1), vertical_bottom_[t] + 1, CellEdgeKind::wall_top);
        const int bottom = add_edge(corner(c, q, -1), vertical_bottom_[t], CellEdgeKind::wall_bottom);
        wall_top_[e] = top;
        wall_bottom_[e] = bottom;
        w.boundary.insert(w.boundary.end(), {{top, false}, {vertical[t], true}, {bottom, true}});
      }
      tc_.polygons.push_back(std::move(w));
    }
  }

  void add_ring() {
    const int E = static_cast<int>(m_.circle);
    ring_top_.resize(E);
    ring_bottom_.resize(E);
    for (int k = 0; k < E; ++k) {
      const int a = m_.circle_vertex(k), b = m_.circle_vertex((k + 1) % E);
      ring_top_[k] = add_edge(vertical_bottom_[a] + 1, vertical_bottom_[b] + 1, CellEdgeKind::ring_top);
      ring_bottom_[k] = add_edge(vertical_bottom_[a], vertical_bottom_[b], CellEdgeKind::ring_bottom);
    }
    for (int k = 0; k < E; ++k) {
      const int a = m_.circle_vertex(k), b = m_.circle_vertex((k + 1) % E);
      tc_.polygons.push_back({PolygonClass::wall_ring,
                              {{circle_vertical_[a], false},
                               {ring_top_[k], false},
                               {circle_vertical_[b], true},
                               {ring_bottom_[k], true}},
                              4,
                              0,
                              {k}});
    }
    for (auto& s : saddles_) tc_.polygons.push_back(std::move(s));
  }

  void add_lid(const SkeinGraph& sk, int level) {
    const auto& wall = level > 0 ? wall_top_ : wall_bottom_;
    const auto& ring = level > 0 ? ring_top_ : ring_bottom_;
    for (std::size_t f = 0; f < sk.bounded_faces.size(); ++f) {
      Polygon lid{PolygonClass::lid_facet, {}, 0, level, {static_cast<int>(f)}};
      for (const HalfEdge& h : sk.bounded_faces[f]) {
        if (sk.crossing[h.edge] < 0) {
          lid.boundary.push_back({ring[h.edge - static_cast<int>(sk.merged_edges)], h.end == 1});
          continue;
        }
        const auto& path = sk.medial_path[h.edge];
        const int e1 = path[0].edge, e2 = path[1].edge;
        const int in = h.end == 0 ? e1 : e2, out = h.end == 0 ? e2 : e1;
        // A merged bigon wall is emitted once, when leaving the corner.
        if (partner_[in] < 0) lid.boundary.push_back({wall[in], true});
        lid.boundary.push_back({flap_edge(e2 / 4, e2 % 4), h.end == 1});
        lid.boundary.push_back({wall[out], partner_[out] >= 0 && partner_[out] < out});
      }
      lid.sides = lid.boundary.size();
      tc_.polygons.push_back(std::move(lid));
    }
  }

  const MedialGraph& m_;
  const Diagram& d_;
  const int C_;
  TemplateComplex tc_;
  std::vector<int> partner_;
  std::vector<int> vertical_bottom_;
  std::vector<int> circle_vertical_;
  std::vector<int> wall_top_, wall_bottom_;
  std::vector<int> ring_top_, ring_bottom_;
  std::vector<Polygon> saddles_;
};

int edge_start(const TemplateComplex& tc, SignedEdge s) { return tc.edges[s.edge].ends[s.reversed ? 1 : 0]; }
int edge_end(const TemplateComplex& tc, SignedEdge s) { return tc.edges[s.edge].ends[s.reversed ? 0 : 1]; }

}  // namespace

TemplateComplex build_complex(const MedialGraph& m, const Diagram& d) { return Builder(m, d).build(); }

ComplexCounts complex_counts(const TemplateComplex& tc) {
  ComplexCounts k;
  std::size_t lid_sides = 0;
  for (const Polygon& p : tc.polygons) {
    switch (p.cls) {
      case PolygonClass::wall_internal: ++k.internal_walls; break;
      case PolygonClass::wall_ring: ++k.ring_walls; break;
      case PolygonClass::saddle_square: ++k.saddle_squares; break;
      case PolygonClass::saddle_flap: ++k.saddle_flaps; break;
      case PolygonClass::lid_facet:
        ++k.lid_facets;
        lid_sides += p.sides;
        break;
    }
    if (p.sides == 4) ++k.four_sided;
    k.side_incidences += p.sides;
    k.edge_incidences += p.boundary.size();
  }
  k.saddles = k.saddle_squares + k.saddle_flaps;
  k.polygons = tc.polygons.size();
  k.vertices = tc.vertices.size();
  k.edges = tc.edges.size();
  k.euler = static_cast<long long>(k.vertices) - static_cast<long long>(k.edges) + static_cast<long long>(k.polygons);
  if (k.lid_facets) k.lid_average_sides = static_cast<double>(lid_sides) / static_cast<double>(k.lid_facets);
  return k;
}

std::string check_complex(const TemplateComplex& tc) {
  const auto nv = static_cast<int>(tc.vertices.size());
  for (std::size_t i = 0; i < tc.edges.size(); ++i)
    for (int v : tc.edges[i].ends)
      if (v < 0 || v >= nv) return "edge " + std::to_string(i) + " has a missing vertex";
  for (std::size_t i = 0; i < tc.polygons.size(); ++i) {
    const auto& b = tc.polygons[i].boundary;
    if (b.size() < 2) return "polygon " + std::to_string(i) + " has fewer than two edges";
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].edge < 0 || static_cast<std::size_t>(b[j].edge) >= tc.edges.size())
        return "polygon " + std::to_string(i) + " references a missing edge";
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (edge_end(tc, b[j]) != edge_start(tc, b[(j + 1) % b.size()]))
        return "polygon " + std::to_string(i) + " boundary is not a closed walk";
    }
  }
  return {};
}

std::vector<int> polygon_vertices(const TemplateComplex& tc, const Polygon& p) {
  std::vector<int> out;
  out.reserve(p.boundary.size());
  for (const SignedEdge& s : p.boundary) out.push_back(edge_start(tc, s));
  return out;
}

std::string_view to_string(CellVertexKind k) {
  switch (k) {
    case CellVertexKind::corner: return "corner";
    case CellVertexKind::star: return "star";
    case CellVertexKind::circle: return "circle";
  }
  return "?";
}

std::string_view to_string(CellEdgeKind k) {
  switch (k) {
    case CellEdgeKind::square: return "square";
    case CellEdgeKind::vertical: return "vertical";
    case CellEdgeKind::flap_top: return "flap-top";
    case CellEdgeKind::wall_top: return "wall-top";
    case CellEdgeKind::wall_bottom: return "wall-bottom";
    case CellEdgeKind::star_vertical: return "star-vertical";
    case CellEdgeKind::circle_vertical: return "circle-vertical";
    case CellEdgeKind::ring_top: return "ring-top";
    case CellEdgeKind::ring_bottom: return "ring-bottom";
  }
  return "?";
}

std::string_view to_string(PolygonClass k) {
  switch (k) {
    case PolygonClass::wall_internal: return "wall-internal";
    case PolygonClass::wall_ring: return "wall-ring";
    case PolygonClass::saddle_square: return "saddle-square";
    case PolygonClass::saddle_flap: return "saddle-flap";
    case PolygonClass::lid_facet: return "lid-facet";
  }
  return "?";
}

}  // namespace knotplate
