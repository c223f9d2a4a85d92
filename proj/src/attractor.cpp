#include "lozimax/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "lozimax/kernels.hpp"

namespace lozimax {

MisiurewiczReport misiurewicz_check(double a, double b) {
  MisiurewiczReport r;
  r.c1 = 0 < b && b < 1;
  r.c2 = a > b + 1;
  r.c3 = 2 * a + b < 4;
  r.c4 = b < (a * a - 1) / (2 * a + 1);
  r.c5 = std::numbers::sqrt2 * a > b + 2;
  r.overall = r.c1 && r.c2 && r.c3 && r.c4 && r.c5;
  return r;
}

TrappingTriangle trapping_triangle(double a, double b) {
  const double den = 1 + a - b;
  if (den == 0) throw DegenerateParameters("1 + a - b = 0");
  const double disc = a * a + 4 * b;
  if (disc < 0) throw DegenerateParameters("a^2 + 4b < 0");
  const LoziParams p{a, b};
  TrappingTriangle t;
  t.fixed_point = {1 / den, b / den};
  t.I = {(2 + a + std::sqrt(disc)) / (2 * den), 0};
  // The part of edge I-F(I) left of x = 0 folds onto edge F^2(I)-I, meeting the
  // x-axis at 1 + y*. Round I outward until that fold point is not past I, so
  // the floating triangle still contains its exact image along that edge.
  const RationalLoziParams exact{Rational(a), Rational(b)};
  for (int nudge = 0; nudge < 16; ++nudge) {
    const RationalPoint i0{Rational(t.I.x), Rational(0)};
    const RationalPoint i1 = lozi_step(exact, Formulation::Sys1, i0);
    if (!(i0.x > 0 && i1.x < 0)) break;
    const Rational fold = 1 + i1.y * i0.x / (i0.x - i1.x);
    if (fold <= i0.x) break;
    t.I.x = std::nextafter(t.I.x, std::numeric_limits<double>::infinity());
  }
  t.FI = lozi_step(p, Formulation::Sys1, t.I);
  t.FFI = lozi_step(p, Formulation::Sys1, t.FI);
  return t;
}

double triangle_violation(const TrappingTriangle& tri, const PlanarPoint& p) {
  const PlanarPoint v[3] = {tri.I, tri.FI, tri.FFI};
  const double orient = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x);
  if (orient == 0) return 0;
  const double s = orient > 0 ? 1 : -1;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const PlanarPoint& e0 = v[i];
    const PlanarPoint& e1 = v[(i + 1) % 3];
    const double len = std::hypot(e1.x - e0.x, e1.y - e0.y);
    // positive cross means left of the edge; inside is left for CCW triangles
    const double c = (e1.x - e0.x) * (p.y - e0.y) - (e1.y - e0.y) * (p.x - e0.x);
    worst = std::max(worst, -s * c / len);
  }
  return worst;
}

PlanarPoint barycentric_grid_point(const TrappingTriangle& tri, std::size_t i, std::size_t j,
                                   std::size_t density) {
  // u along I->FI, v along I->FFI, folded back into the triangle when u + v > 1.
  double u = static_cast<double>(i) / static_cast<double>(density - 1);
  double v = static_cast<double>(j) / static_cast<double>(density - 1);
  if (u + v > 1) {
    u = 1 - u;
    v = 1 - v;
  }
  const double w = 1 - u - v;
  return {w * tri.I.x + u * tri.FI.x + v * tri.FFI.x, w * tri.I.y + u * tri.FI.y + v * tri.FFI.y};
}

TrappingCheck verify_trapping(const TrappingTriangle& tri, const LoziParams& params,
                              std::size_t density, bool parallel) {
  if (density < 2) throw InvalidParameters("grid density must be at least 2");
  return parallel ? kernels::trapping_violation(tri, params, density)
                  : kernels::reference::trapping_violation(tri, params, density);
}

PointCloud sample_attractor(const FloatMap& map, const PlanarPoint& initial, std::size_t burn,
                            std::size_t samples, double guard) {
  PointCloud cloud;
  cloud.map = map;
  cloud.burn_in = burn;
  Orbit orbit = iterate(map, initial, burn + samples, guard);
  cloud.bounded = orbit.termination.kind == TerminationKind::Completed;
  if (orbit.termination.kind == TerminationKind::DomainError) {
    throw DomainError("orbit left the positive quadrant at step " + std::to_string(orbit.termination.step));
  }
  if (orbit.points.size() > burn + 1) {
    cloud.points.assign(orbit.points.begin() + static_cast<std::ptrdiff_t>(burn + 1), orbit.points.end());
  }
  // A guard trip during burn-in still reports where the orbit escaped.
  if (!cloud.bounded && cloud.points.empty() && !orbit.points.empty()) {
    cloud.points.push_back(orbit.points.back());
  }
  return cloud;
}

std::size_t box_count(const std::vector<PlanarPoint>& points, double grid_size) {
  if (!(grid_size > 0)) throw InvalidParameters("grid size must be positive");
  std::set<std::pair<long long, long long>> boxes;
  for (const auto& p : points) {
    boxes.emplace(static_cast<long long>(std::floor(p.x / grid_size)),
                  static_cast<long long>(std::floor(p.y / grid_size)));
  }
  return boxes.size();
}

std::vector<PlanarPoint> subsample(const std::vector<PlanarPoint>& points, std::size_t count) {
  if (count == 0 || points.size() <= count) return points;
  std::vector<PlanarPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(points[i * points.size() / count]);
  return out;
}

double hausdorff_distance(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q,
                          bool parallel) {
  if (p.empty() || q.empty()) throw InvalidParameters("Hausdorff distance of an empty cloud");
  return parallel ? kernels::hausdorff_distance(p, q) : kernels::reference::hausdorff_distance(p, q);
}

}  // namespace lozimax
