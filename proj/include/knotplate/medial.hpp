#pragma once

// Bounded medial graph and the upper/lower skein graphs derived from it.
//
// Vertex numbering: fourfolds [0, C), stars [C, C+S) in ascending order of
// their bounded diagram face, circle vertices [C+S, C+S+E) in the order of
// the outer face walk. Edge numbering: quadrant edge 4c+q for crossing c and
// canonical quadrant q (oriented fourfold -> star/circle), then circle arc k
// from circle vertex k to k+1 (counterclockwise).

#include <cstddef>
#include <vector>

#include "knotplate/diagram.hpp"
#include "knotplate/graph.hpp"

namespace knotplate {

enum class VertexKind { fourfold, star, circle };

struct MedialGraph {
  EmbeddedGraph graph;
  FaceSet faces;
  std::size_t crossings = 0;
  std::size_t stars = 0;
  std::size_t circle = 0;
  std::vector<VertexKind> kind;
  // fourfold -> crossing, star -> diagram face, circle -> index along the outer face
  std::vector<int> source;

  int fourfold(int c) const { return c; }
  int circle_vertex(int k) const { return static_cast<int>(crossings + stars) + k; }
  int quadrant_edge(int c, int q) const { return 4 * c + q; }
  int arc_edge(int k) const { return static_cast<int>(4 * crossings) + k; }
  bool is_arc(int edge) const { return edge >= static_cast<int>(4 * crossings); }
  // Star (or circle vertex) at the far end of a quadrant edge.
  int quadrant_target(int c, int q) const { return graph.ends[quadrant_edge(c, q)][1]; }
  // Star vertex of a bounded diagram face, -1 for the outer face.
  int star_of_face(std::size_t face) const { return face_star[face]; }
  std::vector<int> face_star;
};

MedialGraph build_medial(const Diagram& d, const FaceSet& fs);
inline MedialGraph build_medial(const Diagram& d, OuterFacePolicy policy = {}) {
  return build_medial(d, faces(d, policy));
}

struct GraphCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  long long cycle_rank = 0;  // E - V + 1 for a connected graph
  std::size_t fourfolds = 0;
  std::size_t stars = 0;
  std::size_t circle_vertices = 0;
};

GraphCounts graph_counts(const MedialGraph& m);

// Validity of the medial structure. With all circle vertices contracted to a
// single outer star and arcs dropped: bipartite, and every face 4-sided.
struct MedialCheck {
  bool bipartite = false;
  bool four_sided = false;
  std::size_t faces = 0;  // bounded faces, expected 2C
};

MedialCheck check_medial(const MedialGraph& m);

enum class Side { upper, lower };

const char* to_string(Side s);

// Skein graph: fourfolds smoothed. Upper joins the quadrant pairs flanking each
// under-strand end, lower those flanking each over-strand end. Vertex v here
// is medial vertex v + C.
struct SkeinGraph {
  Side side = Side::upper;
  EmbeddedGraph graph;
  std::size_t crossings = 0;
  std::size_t merged_edges = 0;
  // Per skein edge: the medial half-edges it stands for, from ends[0] to ends[1].
  std::vector<std::vector<HalfEdge>> medial_path;
  // Per skein edge: smoothed crossing, -1 for circle arcs.
  std::vector<int> crossing;
  // Bounded faces, counterclockwise, in trace order.
  std::vector<std::vector<HalfEdge>> bounded_faces;

  int medial_vertex(int v) const { return v + static_cast<int>(crossings); }
};

// Throws UnsupportedDiagram if the skein graph is disconnected (a link
// component that stays on one side at every crossing it meets).
SkeinGraph skein_graph(const MedialGraph& m, const Diagram& d, Side side);

// Quadrant pairs (q, q+1 mod 4) merged at crossing c, as canonical quadrants.
std::vector<std::array<int, 2>> merged_quadrants(const Diagram& d, int c, Side side);

}  // namespace knotplate
