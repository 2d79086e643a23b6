#pragma once

// 3D realization of the template complex over a planar layout.

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotplate/complex.hpp"
#include "knotplate/layout.hpp"

namespace knotplate {

using Point3 = Eigen::Vector3d;

// Unset fields take defaults: height 1, saddle radius 0.15 x the shortest
// quadrant edge, ring radius 1.25 x the layout radius.
struct MeshParams {
  std::optional<double> height;
  std::optional<double> saddle_radius;
  std::optional<double> ring_radius;
};

struct ResolvedMeshParams {
  double height = 1.0;
  double saddle_radius = 0.0;
  double ring_radius = 0.0;
};

// Fills defaults and checks H > 0, 0 < r < shortest quadrant edge / 2 and
// R >= layout radius. Throws UsageError.
ResolvedMeshParams resolve(const MeshParams& p, const MedialGraph& m, const PlanarLayout& pl);

enum class MeshGroup { walls, ring, saddles, lids };

struct MeshFace {
  std::vector<int> vertices;  // 0-based
  MeshGroup group = MeshGroup::walls;
};

struct Mesh {
  std::vector<Point3> vertices;  // one per complex vertex
  std::vector<MeshFace> faces;   // one per complex polygon, same order
};

Mesh build_mesh(const TemplateComplex& tc, const MedialGraph& m, const PlanarLayout& pl, const MeshParams& params = {});

const char* to_string(MeshGroup g);

// Wavefront OBJ: a version comment, v records, then one g block per group
// with 1-based f records.
std::string export_obj(const Mesh& mesh);

}  // namespace knotplate
