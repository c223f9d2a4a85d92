#pragma once

// Exact convex polygons over the rationals. Degenerate polygons (segments,
// single points) are first-class: the verifier pushes segments through the map.

#include <vector>

#include "lozimax/core_maps.hpp"

namespace lozimax {

/// Closed half-plane {(x,y) : nx*x + ny*y <= c}.
struct HalfPlane {
  Rational nx, ny, c;

  bool contains(const RationalPoint& p) const { return nx * p.x + ny * p.y <= c; }
  /// The closure of the complement.
  HalfPlane opposite() const { return {-nx, -ny, -c}; }
};

class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Convex hull of arbitrary points (duplicates and collinear points dropped).
  static ConvexPolygon hull(std::vector<RationalPoint> points);

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  /// -1 empty, 0 point, 1 segment, 2 proper polygon.
  int dimension() const { return static_cast<int>(std::min<std::size_t>(size(), 3)) - 1; }

  /// Counterclockwise, convex, no repeated or collinear consecutive vertices.
  bool satisfies_invariants() const;

  bool contains(const RationalPoint& p) const;
  /// Edge half-planes of a proper polygon (inside = contained).
  std::vector<HalfPlane> edge_half_planes() const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<RationalPoint> v) : vertices_(std::move(v)) {}
  std::vector<RationalPoint> vertices_;
};

Rational cross(const RationalPoint& o, const RationalPoint& p, const RationalPoint& q);

/// Shoelace area; 0 for segments and points.
Rational area(const ConvexPolygon& poly);

/// Largest squared distance between two vertices.
Rational diameter_squared(const ConvexPolygon& poly);

inline Rational squared_distance(const RationalPoint& p, const RationalPoint& q) {
  return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
}

/// poly intersected with the closed half-plane; crossing points are exact.
ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h);

/// Closure of poly minus a convex target, as convex pieces of the same
/// dimension as poly (lower-dimensional slivers are covered by the rest).
std::vector<ConvexPolygon> subtract(const ConvexPolygon& poly, const ConvexPolygon& target);

/// Every vertex of `inner` lies in the closed convex `outer`.
bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner);

/// Image under (x,y) -> (m11 x + m12 y + t1, m21 x + m22 y + t2).
struct Affine2 {
  Rational m11, m12, m21, m22, t1, t2;
  RationalPoint operator()(const RationalPoint& p) const {
    return {m11 * p.x + m12 * p.y + t1, m21 * p.x + m22 * p.y + t2};
  }
};

ConvexPolygon affine_image(const Affine2& f, const ConvexPolygon& poly);

/// Total order used to make piece lists deterministic.
bool lexicographic_less(const ConvexPolygon& l, const ConvexPolygon& r);

}  // namespace lozimax
