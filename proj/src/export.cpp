#include "knotplate/export.hpp"

#include <sstream>

#include "knotplate/errors.hpp"

namespace knotplate {

namespace {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::fourfold: return "fourfold";
    case VertexKind::star: return "star";
    case VertexKind::circle: return "circle";
  }
  return "?";
}

Json half_edges(const std::vector<HalfEdge>& hs) {
  Json out = Json::array();
  for (const HalfEdge& h : hs) out.push_back({h.edge, h.end});
  return out;
}

template <typename Enum, std::size_t N>
Enum enum_from(const Json& j, const Enum (&all)[N]) {
  const auto s = j.get<std::string>();
  for (Enum e : all)
    if (to_string(e) == s) return e;
  throw ParseError("unknown tag '" + s + "'", 0);
}

constexpr CellVertexKind all_vertex_kinds[] = {CellVertexKind::corner, CellVertexKind::star, CellVertexKind::circle};
constexpr CellEdgeKind all_edge_kinds[] = {
    CellEdgeKind::square,         CellEdgeKind::vertical,        CellEdgeKind::flap_top,
    CellEdgeKind::wall_top,       CellEdgeKind::wall_bottom,     CellEdgeKind::star_vertical,
    CellEdgeKind::circle_vertical, CellEdgeKind::ring_top,       CellEdgeKind::ring_bottom};
constexpr PolygonClass all_classes[] = {PolygonClass::wall_internal, PolygonClass::wall_ring,
                                        PolygonClass::saddle_square, PolygonClass::saddle_flap,
                                        PolygonClass::lid_facet};

}  // namespace

Json to_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues) issues.push_back({{"kind", to_string(i.kind)}, {"message", i.message}});
  return {{"ok", r.ok},
          {"components", r.components},
          {"crossings", r.crossings},
          {"exterior", r.exterior},
          {"bigons", r.bigons},
          {"issues", issues}};
}

Json to_json(const MedialGraph& m) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < m.graph.vertex_count; ++v)
    vertices.push_back({{"id", v}, {"kind", kind_name(m.kind[v])}, {"source", m.source[v]}});
  Json edges = Json::array();
  for (std::size_t e = 0; e < m.graph.edge_count(); ++e) {
    const int id = static_cast<int>(e);
    Json edge = {{"id", e},
                 {"kind", m.is_arc(id) ? "arc" : "quadrant"},
                 {"from", m.graph.ends[e][0]},
                 {"to", m.graph.ends[e][1]}};
    if (!m.is_arc(id)) {
      edge["crossing"] = id / 4;
      edge["quadrant"] = id % 4;
    }
    edges.push_back(std::move(edge));
  }
  Json rotation = Json::array();
  for (const auto& r : m.graph.rotation) rotation.push_back(half_edges(r));
  const auto counts = graph_counts(m);
  return {{"graph", "medial"},
          {"counts",
           {{"vertices", counts.vertices},
            {"edges", counts.edges},
            {"cycle_rank", counts.cycle_rank},
            {"fourfolds", counts.fourfolds},
            {"stars", counts.stars},
            {"circle_vertices", counts.circle_vertices}}},
          {"vertices", vertices},
          {"edges", edges},
          {"rotation", rotation}};
}

Json to_json(const SkeinGraph& s) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < s.graph.edge_count(); ++e) {
    Json edge = {{"id", e},
                 {"from", s.medial_vertex(s.graph.ends[e][0])},
                 {"to", s.medial_vertex(s.graph.ends[e][1])},
                 {"medial_path", half_edges(s.medial_path[e])}};
    if (s.crossing[e] >= 0) edge["crossing"] = s.crossing[e];
    edges.push_back(std::move(edge));
  }
  Json faces = Json::array();
  for (const auto& f : s.bounded_faces) faces.push_back(half_edges(f));
  return {{"graph", to_string(s.side)},
          {"merged_edges", s.merged_edges},
          {"edges", edges},
          {"bounded_faces", faces}};
}

Json to_json(const SpanningTree& t) {
  Json tree = Json::array(), rest = Json::array();
  for (std::size_t e = 0; e < t.in_tree.size(); ++e) (t.in_tree[e] ? tree : rest).push_back(e);
  return {{"root", t.root}, {"tree_edges", tree}, {"non_tree_edges", rest}};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Json letters = Json::array();
    for (const Letter& l : p.relators[i]) letters.push_back({l.generator, l.power});
    rels.push_back({{"word", format_word(p.relators[i], p.generators)},
                    {"letters", letters},
                    {"length", p.relators[i].size()},
                    {"provenance", i < p.provenance.size() ? p.provenance[i] : std::string()}});
  }
  return {{"generators", p.generators}, {"relators", rels}};
}

Presentation presentation_from_json(const Json& j) {
  try {
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) {
      Word w;
      for (const auto& l : r.at("letters")) w.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
      p.relators.push_back(std::move(w));
      p.provenance.push_back(r.value("provenance", std::string()));
    }
    if (!p.well_formed()) throw ParseError("relator letter out of range", 0);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what(), 0);
  }
}

Json to_json(const ComplexityReport& r) {
  Json out = {{"lengths", r.lengths}};
  out["geometric_mean"] = r.geometric_mean ? Json(*r.geometric_mean) : Json(nullptr);
  out["arithmetic_mean"] = r.arithmetic_mean;
  out["zero_length"] = r.zero_length;
  return out;
}

Json to_json(const AbelianInvariants& a) {
  return {{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"group", a.to_string()}};
}

Json to_json(const TietzeResult& r) {
  return {{"final", r.final}, {"steps", r.steps}, {"presentation", to_json(r.presentation)}};
}

Json to_json(const TemplateComplex& tc) {
  Json vertices = Json::array();
  for (const auto& v : tc.vertices) vertices.push_back({to_string(v.kind), v.a, v.b, v.level});
  Json edges = Json::array();
  for (const auto& e : tc.edges) edges.push_back({to_string(e.kind), e.ends[0], e.ends[1]});
  Json polygons = Json::array();
  for (const auto& p : tc.polygons) {
    Json boundary = Json::array();
    for (const auto& s : p.boundary) boundary.push_back(s.reversed ? -(s.edge + 1) : s.edge + 1);
    polygons.push_back({{"class", to_string(p.cls)},
                        {"sides", p.sides},
                        {"level", p.level},
                        {"source", p.source},
                        {"boundary", boundary}});
  }
  return {{"crossings", tc.crossings},
          {"ring", tc.ring},
          {"bigons", tc.bigons},
          {"counts", to_json(complex_counts(tc))},
          {"vertices", vertices},
          {"edges", edges},
          {"polygons", polygons}};
}

TemplateComplex complex_from_json(const Json& j) {
  try {
    TemplateComplex tc;
    tc.crossings = j.at("crossings").get<std::size_t>();
    tc.ring = j.at("ring").get<std::size_t>();
    tc.bigons = j.at("bigons").get<std::size_t>();
    for (const auto& v : j.at("vertices"))
      tc.vertices.push_back({enum_from(v.at(0), all_vertex_kinds), v.at(1).get<int>(), v.at(2).get<int>(), v.at(3).get<int>()});
    for (const auto& e : j.at("edges"))
      tc.edges.push_back({{e.at(1).get<int>(), e.at(2).get<int>()}, enum_from(e.at(0), all_edge_kinds)});
    for (const auto& p : j.at("polygons")) {
      Polygon poly;
      poly.cls = enum_from(p.at("class"), all_classes);
      poly.sides = p.at("sides").get<std::size_t>();
      poly.level = p.at("level").get<int>();
      poly.source = p.at("source").get<std::vector<int>>();
      for (const auto& s : p.at("boundary")) {
        const int x = s.get<int>();
        if (x == 0) throw ParseError("boundary entry 0 is not a signed edge id", 0);
        poly.boundary.push_back({x > 0 ? x - 1 : -x - 1, x < 0});
      }
      tc.polygons.push_back(std::move(poly));
    }
    if (const auto problem = check_complex(tc); !problem.empty()) throw ParseError("complex JSON: " + problem, 0);
    return tc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what(), 0);
  }
}

Json to_json(const ComplexCounts& k) {
  return {{"internal_walls", k.internal_walls},
          {"ring_walls", k.ring_walls},
          {"saddle_squares", k.saddle_squares},
          {"saddle_flaps", k.saddle_flaps},
          {"saddles", k.saddles},
          {"lid_facets", k.lid_facets},
          {"polygons", k.polygons},
          {"four_sided", k.four_sided},
          {"vertices", k.vertices},
          {"edges", k.edges},
          {"euler", k.euler},
          {"side_incidences", k.side_incidences},
          {"edge_incidences", k.edge_incidences},
          {"lid_average_sides", k.lid_average_sides}};
}

std::string to_dot(const MedialGraph& m) {
  std::ostringstream out;
  out << "graph medial {\n";
  for (std::size_t v = 0; v < m.graph.vertex_count; ++v) {
    const char* shape = m.kind[v] == VertexKind::fourfold ? "box" : m.kind[v] == VertexKind::star ? "star" : "circle";
    out << "  v" << v << " [label=\"" << kind_name(m.kind[v]) << ' ' << m.source[v] << "\", shape=" << shape
        << "];\n";
  }
  for (std::size_t e = 0; e < m.graph.edge_count(); ++e) {
    out << "  v" << m.graph.ends[e][0] << " -- v" << m.graph.ends[e][1] << " [label=\"" << e << "\""
        << (m.is_arc(static_cast<int>(e)) ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SkeinGraph& s) {
  std::ostringstream out;
  out << "graph " << to_string(s.side) << " {\n";
  for (std::size_t v = 0; v < s.graph.vertex_count; ++v)
    out << "  v" << s.medial_vertex(static_cast<int>(v)) << ";\n";
  for (std::size_t e = 0; e < s.graph.edge_count(); ++e) {
    out << "  v" << s.medial_vertex(s.graph.ends[e][0]) << " -- v" << s.medial_vertex(s.graph.ends[e][1])
        << " [label=\"" << e;
    if (s.crossing[e] >= 0) out << " @" << s.crossing[e];
    out << "\"" << (s.crossing[e] < 0 ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace knotplate
