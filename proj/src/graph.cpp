#include "knotplate/graph.hpp"

#include <deque>
#include <stdexcept>

namespace knotplate {

std::vector<std::vector<HalfEdge>> trace_faces(const EmbeddedGraph& g) {
  // pos[2*edge+end] = index of that half-edge in its source's rotation
  std::vector<int> pos(2 * g.edge_count(), -1);
  for (std::size_t v = 0; v < g.rotation.size(); ++v) {
    const auto& rot = g.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (g.source(rot[i]) != static_cast<int>(v)) throw std::logic_error("rotation lists a half-edge at the wrong vertex");
      pos[2 * rot[i].edge + rot[i].end] = static_cast<int>(i);
    }
  }
  std::vector<char> seen(2 * g.edge_count(), 0);
  std::vector<std::vector<HalfEdge>> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      HalfEdge h{static_cast<int>(e), end};
      if (seen[2 * h.edge + h.end]) continue;
      std::vector<HalfEdge> face;
      while (!seen[2 * h.edge + h.end]) {
        seen[2 * h.edge + h.end] = 1;
        face.push_back(h);
        const HalfEdge back = h.twin();
        const auto& rot = g.rotation[g.source(back)];
        const int p = pos[2 * back.edge + back.end];
        h = rot[(p + static_cast<int>(rot.size()) - 1) % rot.size()];
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

SpanningTree bfs_spanning_tree(const Graph& g, int root, const std::function<bool(int)>& usable) {
  if (root < 0 || static_cast<std::size_t>(root) >= g.vertex_count) throw std::out_of_range("spanning tree root out of range");
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (usable && !usable(static_cast<int>(e))) continue;
    const auto [a, b] = g.ends[e];
    adj[a].push_back({static_cast<int>(e), b});
    if (a != b) adj[b].push_back({static_cast<int>(e), a});
  }
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.edge_count(), 0);
  std::vector<char> seen(g.vertex_count, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  t.reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [e, v] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      ++t.reached;
      t.in_tree[e] = 1;
      ++t.tree_edges;
      queue.push_back(v);
    }
  }
  return t;
}

std::size_t component_count(const Graph& g) {
  std::vector<int> parent(g.vertex_count);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = g.vertex_count;
  for (const auto& [a, b] : g.ends) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[rb] = ra;
      --parts;
    }
  }
  return parts;
}

bool is_bipartite(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& [a, b] : g.ends) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(g.vertex_count, -1);
  for (std::size_t s = 0; s < g.vertex_count; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace knotplate
