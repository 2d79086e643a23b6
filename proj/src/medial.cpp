#include "knotplate/medial.hpp"

#include <algorithm>

#include "knotplate/errors.hpp"

namespace knotplate {

MedialGraph build_medial(const Diagram& d, const FaceSet& fs) {
  MedialGraph m;
  const int C = static_cast<int>(d.crossing_count());
  m.faces = fs;
  m.crossings = d.crossing_count();
  m.stars = fs.size() - 1;
  const auto& outer = fs.faces[fs.outer];
  m.circle = outer.size();
  const int E = static_cast<int>(m.circle);

  auto& g = m.graph;
  g.vertex_count = m.crossings + m.stars + m.circle;
  m.kind.resize(g.vertex_count);
  m.source.resize(g.vertex_count);
  m.face_star.assign(fs.size(), -1);
  for (int c = 0; c < C; ++c) {
    m.kind[c] = VertexKind::fourfold;
    m.source[c] = c;
  }
  int next = C;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (f == fs.outer) continue;
    m.kind[next] = VertexKind::star;
    m.source[next] = static_cast<int>(f);
    m.face_star[f] = next++;
  }
  std::vector<int> outer_pos(4 * C, -1);
  for (int k = 0; k < E; ++k) {
    const Corner& cr = outer[k];
    outer_pos[4 * cr.crossing + cr.quadrant] = k;
    m.kind[m.circle_vertex(k)] = VertexKind::circle;
    m.source[m.circle_vertex(k)] = k;
  }

  g.ends.reserve(4 * C + E);
  for (int c = 0; c < C; ++c) {
    for (int q = 0; q < 4; ++q) {
      const int f = fs.face_of({c, q});
      const int far = f == static_cast<int>(fs.outer) ? m.circle_vertex(outer_pos[4 * c + q]) : m.face_star[f];
      g.ends.push_back({c, far});
    }
  }
  for (int k = 0; k < E; ++k) g.ends.push_back({m.circle_vertex(k), m.circle_vertex((k + 1) % E)});

  g.rotation.assign(g.vertex_count, {});
  for (int c = 0; c < C; ++c)
    for (int q = 0; q < 4; ++q) g.rotation[c].push_back({m.quadrant_edge(c, q), 0});
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (f == fs.outer) continue;
    auto& rot = g.rotation[m.face_star[f]];
    // The face walk is clockwise around the star.
    for (auto it = fs.faces[f].rbegin(); it != fs.faces[f].rend(); ++it)
      rot.push_back({m.quadrant_edge(it->crossing, it->quadrant), 1});
  }
  for (int k = 0; k < E; ++k) {
    const Corner& cr = outer[k];
    g.rotation[m.circle_vertex(k)] = {
        {m.arc_edge(k), 0},
        {m.quadrant_edge(cr.crossing, cr.quadrant), 1},
        {m.arc_edge((k + E - 1) % E), 1},
    };
  }
  return m;
}

GraphCounts graph_counts(const MedialGraph& m) {
  GraphCounts c;
  c.vertices = m.graph.vertex_count;
  c.edges = m.graph.edge_count();
  c.cycle_rank = static_cast<long long>(c.edges) - static_cast<long long>(c.vertices) +
                 static_cast<long long>(component_count(static_cast<const Graph&>(m.graph)));
  c.fourfolds = m.crossings;
  c.stars = m.stars;
  c.circle_vertices = m.circle;
  return c;
}

MedialCheck check_medial(const MedialGraph& m) {
  MedialCheck r;
  const int first_circle = static_cast<int>(m.crossings + m.stars);
  Graph contracted;
  contracted.vertex_count = static_cast<std::size_t>(first_circle) + 1;
  for (std::size_t e = 0; e < m.graph.edge_count(); ++e) {
    if (m.is_arc(static_cast<int>(e))) continue;
    auto [a, b] = m.graph.ends[e];
    contracted.ends.push_back({std::min(a, first_circle), std::min(b, first_circle)});
  }
  r.bipartite = is_bipartite(contracted);

  // Faces of the bounded medial graph: drop the walk outside the circle and
  // count only non-arc sides (the circle stands for one outer star).
  r.four_sided = true;
  for (const auto& face : trace_faces(m.graph)) {
    const auto sides = std::count_if(face.begin(), face.end(), [&](HalfEdge h) { return !m.is_arc(h.edge); });
    if (sides == 0) continue;
    ++r.faces;
    if (sides != 4) r.four_sided = false;
  }
  return r;
}

const char* to_string(Side s) { return s == Side::upper ? "upper" : "lower"; }

std::vector<std::array<int, 2>> merged_quadrants(const Diagram& d, int c, Side side) {
  std::vector<std::array<int, 2>> out;
  for (int s = 0; s < 4; ++s)
    if (d.is_under_canonical(c, s) == (side == Side::upper)) out.push_back({(s + 3) % 4, s});
  return out;
}

SkeinGraph skein_graph(const MedialGraph& m, const Diagram& d, Side side) {
  SkeinGraph sk;
  sk.side = side;
  const int C = static_cast<int>(m.crossings);
  const int E = static_cast<int>(m.circle);
  sk.crossings = m.crossings;
  auto& g = sk.graph;
  g.vertex_count = m.stars + m.circle;

  // medial quadrant edge -> skein half-edge leaving its star
  std::vector<HalfEdge> lift(4 * C);
  for (int c = 0; c < C; ++c) {
    for (const auto& [q1, q2] : merged_quadrants(d, c, side)) {
      const int id = static_cast<int>(g.ends.size());
      const int e1 = m.quadrant_edge(c, q1), e2 = m.quadrant_edge(c, q2);
      g.ends.push_back({m.graph.ends[e1][1] - C, m.graph.ends[e2][1] - C});
      sk.medial_path.push_back({{e1, 1}, {e2, 0}});
      sk.crossing.push_back(c);
      lift[e1] = {id, 0};
      lift[e2] = {id, 1};
    }
  }
  sk.merged_edges = g.ends.size();
  for (int k = 0; k < E; ++k) {
    const int e = m.arc_edge(k);
    g.ends.push_back({m.graph.ends[e][0] - C, m.graph.ends[e][1] - C});
    sk.medial_path.push_back({{e, 0}});
    sk.crossing.push_back(-1);
  }

  g.rotation.assign(g.vertex_count, {});
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    for (const HalfEdge& h : m.graph.rotation[v + C]) {
      if (m.is_arc(h.edge)) g.rotation[v].push_back({static_cast<int>(sk.merged_edges) + (h.edge - 4 * C), h.end});
      else g.rotation[v].push_back(lift[h.edge]);
    }
  }

  if (component_count(static_cast<const Graph&>(g)) != 1) {
    throw UnsupportedDiagram(std::string(to_string(side)) +
                             " skein graph is disconnected: some link component stays on one side at every crossing");
  }

  const int first_arc = static_cast<int>(sk.merged_edges);
  for (auto& face : trace_faces(g)) {
    const bool outside = std::all_of(face.begin(), face.end(), [&](HalfEdge h) { return h.edge >= first_arc && h.end == 1; });
    if (!outside) sk.bounded_faces.push_back(std::move(face));
  }
  return sk;
}

}  // namespace knotplate
