#include <doctest.h>

#include "knotplate/graph.hpp"

using namespace knotplate;

namespace {

// Square 0-1-2-3 drawn counterclockwise with a chord 0-2.
EmbeddedGraph square_with_chord() {
  EmbeddedGraph g;
  g.vertex_count = 4;
  g.ends = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  g.rotation = {
      {{0, 0}, {4, 0}, {3, 1}},
      {{1, 0}, {0, 1}},
      {{2, 0}, {4, 1}, {1, 1}},
      {{3, 0}, {2, 1}},
  };
  return g;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("half-edge twins") {
    const HalfEdge h{3, 0};
    CHECK(h.twin() == HalfEdge{3, 1});
    CHECK(h.twin().twin() == h);
  }

  TEST_CASE("trace_faces finds every face once") {
    const auto g = square_with_chord();
    const auto faces = trace_faces(g);
    CHECK(faces.size() == 3);  // V - E + F = 2
    std::size_t total = 0;
    for (const auto& f : faces) total += f.size();
    CHECK(total == 2 * g.edge_count());
    for (const auto& f : faces)
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(g.target(f[i]) == g.source(f[(i + 1) % f.size()]));
  }

  TEST_CASE("spanning tree of a tree leaves no generators") {
    Graph path;
    path.vertex_count = 5;
    path.ends = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    const auto t = bfs_spanning_tree(path, 2);
    CHECK(t.tree_edges == 4);
    CHECK(t.reached == 5);
    CHECK(std::count(t.in_tree.begin(), t.in_tree.end(), 0) == 0);
  }

  TEST_CASE("spanning tree respects the usable filter") {
    const auto g = square_with_chord();
    const auto t = bfs_spanning_tree(g, 0, [](int e) { return e != 4; });
    CHECK(t.tree_edges == 3);
    CHECK_FALSE(t.in_tree[4]);
    const auto all = bfs_spanning_tree(g, 0);
    CHECK(all.tree_edges == 3);
    CHECK(all.in_tree[0]);
    CHECK(all.in_tree[4]);
    CHECK(all.in_tree[3]);
  }

  TEST_CASE("components and bipartiteness") {
    Graph g;
    g.vertex_count = 5;
    g.ends = {{0, 1}, {1, 2}, {3, 4}};
    CHECK(component_count(g) == 2);
    CHECK(is_bipartite(g));
    g.ends.push_back({2, 0});
    CHECK_FALSE(is_bipartite(g));
    CHECK(is_bipartite(static_cast<const Graph&>(square_with_chord())) == false);
  }
}
