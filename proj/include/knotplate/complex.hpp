#pragma once

// Combinatorial polygon complex of the template: vertical walls over the
// medial quadrant edges, the ring wall over the unravelled outer circle, a
// five-piece saddle at every crossing, and the top/bottom lids cut into
// facets by the upper/lower skein graphs.
//
// Cells. At crossing c and canonical quadrant q there is a saddle corner at
// heights -H, 0, +H. Every non-bigon bounded star and every circle vertex
// carries a vertical segment. Walls run between verticals; the two walls
// meeting at a bounded bigon star are merged into one.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotplate/diagram.hpp"
#include "knotplate/medial.hpp"

namespace knotplate {

enum class CellVertexKind { corner, star, circle };

struct CellVertex {
  CellVertexKind kind = CellVertexKind::corner;
  // corner: crossing and canonical quadrant; star/circle: medial vertex and -1
  int a = 0;
  int b = -1;
  int level = 0;  // -1 bottom, 0 middle, +1 top
  friend bool operator==(const CellVertex&, const CellVertex&) = default;
};

enum class CellEdgeKind {
  square,           // saddle square side, corner q -> q+1
  vertical,         // corner middle -> top or bottom
  flap_top,         // outer edge of a flap, corner s-1 -> s
  wall_top,
  wall_bottom,
  star_vertical,    // bottom -> top
  circle_vertical,  // bottom -> top
  ring_top,         // circle vertex k -> k+1
  ring_bottom,
};

struct CellEdge {
  std::array<int, 2> ends{};
  CellEdgeKind kind = CellEdgeKind::square;
  friend bool operator==(const CellEdge&, const CellEdge&) = default;
};

struct SignedEdge {
  int edge = 0;
  bool reversed = false;
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

enum class PolygonClass { wall_internal, wall_ring, saddle_square, saddle_flap, lid_facet };

struct Polygon {
  PolygonClass cls = PolygonClass::wall_internal;
  // Closed boundary walk; consecutive edges share a vertex.
  std::vector<SignedEdge> boundary;
  // Geometric side count: 4 for walls and saddle pieces (a corner vertical
  // split at the saddle is one side), the edge count for lid facets.
  std::size_t sides = 0;
  int level = 0;  // flaps and lids: +1 up/top, -1 down/bottom
  // wall_internal: medial quadrant edges; wall_ring: circle arc;
  // saddle pieces: crossing (and slot for flaps); lid_facet: skein face.
  std::vector<int> source;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct TemplateComplex {
  std::size_t crossings = 0;
  std::size_t ring = 0;    // E
  std::size_t bigons = 0;  // T
  std::vector<CellVertex> vertices;
  std::vector<CellEdge> edges;
  std::vector<Polygon> polygons;
  friend bool operator==(const TemplateComplex&, const TemplateComplex&) = default;
};

TemplateComplex build_complex(const MedialGraph& m, const Diagram& d);

struct ComplexCounts {
  std::size_t internal_walls = 0;
  std::size_t ring_walls = 0;
  std::size_t saddle_squares = 0;
  std::size_t saddle_flaps = 0;
  std::size_t saddles = 0;  // squares + flaps
  std::size_t lid_facets = 0;
  std::size_t polygons = 0;
  std::size_t four_sided = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  long long euler = 0;
  std::size_t side_incidences = 0;
  std::size_t edge_incidences = 0;  // every subdivided cell edge counted
  double lid_average_sides = 0.0;
};

ComplexCounts complex_counts(const TemplateComplex& tc);

// Every polygon boundary is a closed walk over existing edges; returns an
// empty string or the first problem found.
std::string check_complex(const TemplateComplex& tc);

// Boundary of polygon p as a vertex cycle.
std::vector<int> polygon_vertices(const TemplateComplex& tc, const Polygon& p);

std::string_view to_string(CellVertexKind k);
std::string_view to_string(CellEdgeKind k);
std::string_view to_string(PolygonClass k);

}  // namespace knotplate
