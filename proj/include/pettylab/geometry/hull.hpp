#pragma once

#include "pettylab/geometry/types.hpp"

#include <span>
#include <vector>

namespace pettylab::hull {

/// Relative tolerance under which points are treated as coplanar/collinear.
inline constexpr double kCoplanarTolerance = 1e-10;

/// Counter-clockwise extreme points of a planar point set (xy-plane). Collinear
/// boundary points are dropped. Throws DegenerateInput for fewer than three
/// affinely independent points.
std::vector<Vec> convex_hull_2d(std::span<const Vec> points);

/// Facet of a 3D hull: outward unit normal plus a counter-clockwise (seen from
/// outside) cycle of indices into the returned vertex list.
struct HullFacet {
  Vec normal;
  std::vector<int> cycle;
};

struct Hull3 {
  std::vector<Vec> vertices;
  std::vector<HullFacet> facets;
};

/// Incremental hull with conflict lists; coplanar triangles are merged into
/// polygonal facets and only extreme points are kept as vertices.
Hull3 convex_hull_3d(std::span<const Vec> points);

}  // namespace pettylab::hull
