#pragma once

// Strange-attractor parameter checks, the trapping triangle of the classical
// Lozi map, and point-cloud sampling utilities.

#include <cstddef>
#include <utility>
#include <vector>

#include "lozimax/core_maps.hpp"

namespace lozimax {

struct MisiurewiczReport {
  bool c1 = false;  // 0 < b < 1
  bool c2 = false;  // a > b + 1
  bool c3 = false;  // 2a + b < 4
  bool c4 = false;  // b < (a^2 - 1)/(2a + 1)
  bool c5 = false;  // sqrt(2) a > b + 2
  bool overall = false;
};

MisiurewiczReport misiurewicz_check(double a, double b);

/// Triangle I, F(I), F^2(I) for F(x,y) = (1 - a|x| + y, b x).
struct TrappingTriangle {
  PlanarPoint fixed_point;
  PlanarPoint I;
  PlanarPoint FI;
  PlanarPoint FFI;
};

/// Throws DegenerateParameters when 1 + a - b = 0 (or a^2 + 4b < 0).
TrappingTriangle trapping_triangle(double a, double b);

struct TrappingCheck {
  bool inside = true;
  double max_violation = 0;  // largest signed distance outside the triangle (<= 0 inside)
  PlanarPoint witness{};     // image attaining max_violation
};

/// Signed distance of p from the closed triangle: max over edges of the
/// outward distance to the edge line. 0 for degenerate triangles.
double triangle_violation(const TrappingTriangle& tri, const PlanarPoint& p);

/// Barycentric grid point (i, j) of a density x density grid.
PlanarPoint barycentric_grid_point(const TrappingTriangle& tri, std::size_t i, std::size_t j,
                                   std::size_t density);

/// Maps every grid point and measures how far its image leaves the triangle.
/// Evaluated in exact arithmetic on the (exactly representable) parameters,
/// so boundary points mapped onto an edge report 0, not rounding noise.
TrappingCheck verify_trapping(const TrappingTriangle& tri, const LoziParams& params,
                              std::size_t density, bool parallel = true);

struct PointCloud {
  FloatMap map;
  std::size_t burn_in = 0;
  std::vector<PlanarPoint> points;
  bool bounded = true;
};

/// Iterates `burn` steps and records the next `samples` states; stops early
/// with bounded = false if the guard trips. Throws DomainError (max-type
/// maps) for a non-positive state.
PointCloud sample_attractor(const FloatMap& map, const PlanarPoint& initial, std::size_t burn,
                            std::size_t samples, double guard = kDefaultGuard);

/// Number of grid_size x grid_size boxes hit.
std::size_t box_count(const std::vector<PlanarPoint>& points, double grid_size);

/// Every `count`-th point spread evenly over the cloud (at most `count` points).
std::vector<PlanarPoint> subsample(const std::vector<PlanarPoint>& points, std::size_t count);

/// Symmetric Hausdorff distance (Euclidean).
double hausdorff_distance(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q,
                          bool parallel = true);

}  // namespace lozimax
