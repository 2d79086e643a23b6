#include "knotplate/layout.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <cmath>
#include <numbers>

#include "knotplate/errors.hpp"

namespace knotplate {

std::vector<Point2> tutte_layout(const Graph& g, const std::vector<std::optional<Point2>>& fixed) {
  const std::size_t n = g.vertex_count;
  std::vector<int> slot(n, -1);
  int free_count = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!fixed[v]) slot[v] = free_count++;

  std::vector<Eigen::Triplet<double>> entries;
  Eigen::MatrixX2d rhs = Eigen::MatrixX2d::Zero(free_count, 2);
  for (const auto& [a, b] : g.ends) {
    if (a == b) continue;
    for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
      if (slot[u] < 0) continue;
      entries.emplace_back(slot[u], slot[u], 1.0);
      if (slot[w] >= 0) entries.emplace_back(slot[u], slot[w], -1.0);
      else rhs.row(slot[u]) += fixed[w]->transpose();
    }
  }
  std::vector<Point2> out(n);
  for (std::size_t v = 0; v < n; ++v)
    if (fixed[v]) out[v] = *fixed[v];
  if (free_count == 0) return out;

  Eigen::SparseMatrix<double> lap(free_count, free_count);
  lap.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
  if (solver.info() != Eigen::Success) throw InvalidDiagram("layout system is singular (a part is not anchored)");
  const Eigen::MatrixX2d x = solver.solve(rhs);
  for (std::size_t v = 0; v < n; ++v)
    if (slot[v] >= 0) out[v] = x.row(slot[v]).transpose();
  return out;
}

namespace {

double cross(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Segments pq and rs meet anywhere other than at a shared endpoint.
bool segments_clash(const Point2& p, const Point2& q, const Point2& r, const Point2& s, bool share_p, bool share_q) {
  constexpr double eps = 1e-12;
  const Point2 d1 = q - p, d2 = s - r;
  const double den = cross(d1, d2);
  if (std::abs(den) < eps) {
    // Parallel: clash only if collinear and overlapping beyond a shared point.
    if (std::abs(cross(d1, r - p)) > eps) return false;
    const double len = d1.squaredNorm();
    if (len < eps) return true;
    double t0 = (r - p).dot(d1) / len, t1 = (s - p).dot(d1) / len;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(t0, 0.0), hi = std::min(t1, 1.0);
    return hi - lo > eps || (hi - lo >= -eps && !share_p && !share_q);
  }
  const double t = cross(r - p, d2) / den, u = cross(r - p, d1) / den;
  if (t < -eps || t > 1 + eps || u < -eps || u > 1 + eps) return false;
  const bool at_p = t < eps, at_q = t > 1 - eps;
  return !((at_p && share_p) || (at_q && share_q));
}

}  // namespace

bool has_crossing(const MedialGraph& m, const PlanarLayout& pl) {
  const auto& pos = pl.position;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if ((pos[i] - pos[j]).norm() < 1e-9) return true;
  const int n = static_cast<int>(4 * m.crossings);
  for (int e = 0; e < n; ++e) {
    const auto [a, b] = m.graph.ends[e];
    for (int f = e + 1; f < n; ++f) {
      const auto [c, d] = m.graph.ends[f];
      const bool share_a = a == c || a == d, share_b = b == c || b == d;
      if (segments_clash(pos[a], pos[b], pos[c], pos[d], share_a, share_b)) return true;
    }
  }
  return false;
}

PlanarLayout layout(const MedialGraph& m, const Diagram& d, double radius) {
  const auto C = static_cast<int>(m.crossings);
  const auto E = static_cast<int>(m.circle);
  const auto V = static_cast<int>(m.graph.vertex_count);
  const auto& fs = m.faces;

  Graph aug;
  aug.vertex_count = static_cast<std::size_t>(V) + d.arc_count();
  for (int e = 0; e < 4 * C; ++e) aug.ends.push_back(m.graph.ends[e]);
  // Medial vertex standing for the face at corner (c, q) of the diagram.
  auto corner_vertex = [&](int c, int q) { return m.quadrant_target(c, q & 3); };
  std::vector<char> arc_seen(d.arc_count(), 0);
  for (int c = 0; c < C; ++c) {
    for (int s = 0; s < 4; ++s) {
      const int arc = d.arc_index_at({c, d.pd_slot(c, s)});
      const int av = V + arc;
      aug.ends.push_back({c, av});
      if (arc_seen[arc]++) continue;
      // Faces on both sides of the arc, seen from this end.
      for (int q : {s - 1, s}) {
        const int face = fs.face_of({c, q & 3});
        if (static_cast<std::size_t>(face) != fs.outer) aug.ends.push_back({corner_vertex(c, q), av});
      }
    }
  }

  std::vector<std::optional<Point2>> fixed(aug.vertex_count);
  auto on_circle = [&](double k) {
    const double t = 2.0 * std::numbers::pi * k / E;
    return Point2(radius * std::cos(t), radius * std::sin(t));
  };
  const auto& outer = fs.faces[fs.outer];
  for (int k = 0; k < E; ++k) {
    fixed[m.circle_vertex(k)] = on_circle(k);
    const Corner cn = outer[k];
    const int arc = d.arc_index_at({cn.crossing, d.pd_slot(cn.crossing, cn.quadrant + 1)});
    fixed[V + arc] = on_circle(k + 0.5);
  }
  const auto all = tutte_layout(aug, fixed);

  PlanarLayout pl;
  pl.radius = radius;
  pl.position.assign(all.begin(), all.begin() + V);
  if (has_crossing(m, pl)) {
    throw UnsupportedDiagram(
        "straight-line layout of the medial graph has crossings; try another outer face (--outer)");
  }
  return pl;
}

}  // namespace knotplate
