#pragma once

// Barycentric (Tutte) straight-line drawing of the medial graph.

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <vector>

#include "knotplate/diagram.hpp"
#include "knotplate/graph.hpp"
#include "knotplate/medial.hpp"

namespace knotplate {

using Point2 = Eigen::Vector2d;

// Places every vertex without a fixed position at the average of its
// neighbours (sparse Laplacian solve). Every free vertex must be connected
// to some fixed vertex.
std::vector<Point2> tutte_layout(const Graph& g, const std::vector<std::optional<Point2>>& fixed);

struct PlanarLayout {
  std::vector<Point2> position;  // per medial vertex
  double radius = 1.0;           // circle vertices lie on this circle
};

// Circle vertices sit uniformly on the circle of the given radius. The solve
// runs on the medial graph plus one vertex per diagram arc (the arc is
// joined to its two crossings and its two faces), which keeps bigon stars
// apart. Throws UnsupportedDiagram if the drawing has a crossing or
// coincident vertices.
PlanarLayout layout(const MedialGraph& m, const Diagram& d, double radius = 1.0);

// Proper crossings or overlaps among the straight quadrant edges.
bool has_crossing(const MedialGraph& m, const PlanarLayout& pl);

}  // namespace knotplate
