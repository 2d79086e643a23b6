#pragma once

// Small embedded-graph toolkit shared by the medial and skein graphs.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace knotplate {

// Directed use of an edge: end 0 leaves ends[edge][0], end 1 leaves ends[edge][1].
struct HalfEdge {
  int edge = 0;
  int end = 0;
  HalfEdge twin() const { return {edge, 1 - end}; }
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::array<int, 2>> ends;

  std::size_t edge_count() const noexcept { return ends.size(); }
  int source(HalfEdge h) const { return ends[h.edge][h.end]; }
  int target(HalfEdge h) const { return ends[h.edge][1 - h.end]; }
};

// A graph with a counterclockwise rotation of outgoing half-edges per vertex.
struct EmbeddedGraph : Graph {
  std::vector<std::vector<HalfEdge>> rotation;
};

// Faces as closed half-edge walks with the face on the left, so bounded faces
// come out counterclockwise. Every half-edge lies on exactly one face.
std::vector<std::vector<HalfEdge>> trace_faces(const EmbeddedGraph& g);

struct SpanningTree {
  int root = 0;
  std::vector<char> in_tree;  // per edge
  std::size_t tree_edges = 0;
  std::size_t reached = 0;  // vertices reached from the root
};

// BFS from `root`; at each vertex incident edges are explored in ascending
// id. Edges rejected by `usable` are never tree edges.
SpanningTree bfs_spanning_tree(const Graph& g, int root, const std::function<bool(int)>& usable = {});

// Number of connected components.
std::size_t component_count(const Graph& g);

// Proper 2-colouring if one exists.
bool is_bipartite(const Graph& g);

}  // namespace knotplate
