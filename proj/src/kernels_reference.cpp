// Serial kernels: the oracle the OpenMP versions are tested against.

#include <algorithm>
#include <cmath>
#include <limits>

#include "lozimax/kernels.hpp"
#include "lozimax/polygon.hpp"

namespace lozimax::kernels {

namespace detail {

Orbit orbit_tail(const FloatMap& map, const PlanarPoint& start, std::size_t steps, double guard) {
  Orbit orbit = iterate(map, start, steps, guard);
  orbit.points.erase(orbit.points.begin(), orbit.points.end() - 1);
  return orbit;
}

CycleSearch cycle_search(const FloatMap& map, const PlanarPoint& start, std::size_t burn,
                         std::size_t window, double epsilon, double guard) {
  CycleSearch out;
  try {
    out.cycle = detect_asymptotic_cycle(map, start, burn, window, epsilon, guard);
  } catch (const Diverged&) {
    out.diverged = true;
  }
  return out;
}

double directed_distance(const PlanarPoint& p, const std::vector<PlanarPoint>& q) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : q) {
    const double dx = p.x - r.x, dy = p.y - r.y;
    best = std::min(best, dx * dx + dy * dy);
  }
  return std::sqrt(best);
}

std::vector<ConvexPolygon> piece_successors(const Rational& a, const ConvexPolygon& piece,
                                            const RegionSpec& target) {
  std::vector<ConvexPolygon> out;
  for (const auto& image : poly_image(a, piece)) {
    auto rest = region_difference(target, image);
    out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  }
  return out;
}

void canonicalize(std::vector<ConvexPolygon>& pieces) {
  std::sort(pieces.begin(), pieces.end(), lexicographic_less);
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
}

namespace {
RationalPoint exact(const PlanarPoint& p) { return {Rational(p.x), Rational(p.y)}; }

// The stored vertex when it is not the rounding of the exact image.
RationalPoint image_or_stored(const RationalPoint& image, const PlanarPoint& stored) {
  const PlanarPoint rounded = to_double(image);
  const double scale = 1 + std::max(sup_norm(rounded), sup_norm(stored));
  const double gap = std::max(std::abs(rounded.x - stored.x), std::abs(rounded.y - stored.y));
  return gap <= 1e-12 * scale ? image : exact(stored);
}
}  // namespace

ExactTriangle exact_triangle(const TrappingTriangle& tri, const LoziParams& params) {
  ExactTriangle t;
  t.params = {Rational(params.a), Rational(params.b)};
  t.v[0] = exact(tri.I);
  t.v[1] = image_or_stored(lozi_step(t.params, Formulation::Sys1, t.v[0]), tri.FI);
  t.v[2] = image_or_stored(lozi_step(t.params, Formulation::Sys1, t.v[1]), tri.FFI);
  t.orientation = sgn(cross(t.v[0], t.v[1], t.v[2]));
  for (int i = 0; i < 3; ++i) {
    const PlanarPoint d = to_double(RationalPoint{t.v[(i + 1) % 3].x - t.v[i].x, t.v[(i + 1) % 3].y - t.v[i].y});
    t.edge_length[i] = std::hypot(d.x, d.y);
  }
  return t;
}

std::pair<double, PlanarPoint> exact_grid_violation(const ExactTriangle& t, std::size_t i, std::size_t j,
                                                    std::size_t density) {
  const long last = static_cast<long>(density) - 1;
  Rational u = ratio(static_cast<long>(i), last), v = ratio(static_cast<long>(j), last);
  if (u + v > 1) {
    u = 1 - u;
    v = 1 - v;
  }
  const Rational w = 1 - u - v;
  const RationalPoint p{w * t.v[0].x + u * t.v[1].x + v * t.v[2].x, w * t.v[0].y + u * t.v[1].y + v * t.v[2].y};
  const RationalPoint image = lozi_step(t.params, Formulation::Sys1, p);
  double worst = -std::numeric_limits<double>::infinity();
  for (int e = 0; e < 3; ++e) {
    // outward distance; the sign is exact, only the magnitude is rounded
    const Rational c = -t.orientation * cross(t.v[e], t.v[(e + 1) % 3], image);
    worst = std::max(worst, c.get_d() / t.edge_length[e]);
  }
  return {worst, to_double(image)};
}

}  // namespace detail

namespace reference {

std::vector<Orbit> orbit_tails(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                               std::size_t steps, double guard) {
  std::vector<Orbit> out;
  out.reserve(starts.size());
  for (const auto& s : starts) out.push_back(detail::orbit_tail(map, s, steps, guard));
  return out;
}

std::vector<double> conjugacy_residuals(const GenLoziParams& gl, const MaxEqParams& mp,
                                        const ChangeOfVariables& cov,
                                        const std::vector<PlanarPoint>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(conjugacy_residual(gl, mp, cov, z));
  return out;
}

std::vector<CycleSearch> asymptotic_cycles(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                                           std::size_t burn, std::size_t window, double epsilon,
                                           double guard) {
  std::vector<CycleSearch> out;
  out.reserve(starts.size());
  for (const auto& s : starts) out.push_back(detail::cycle_search(map, s, burn, window, epsilon, guard));
  return out;
}

TrappingCheck trapping_violation(const TrappingTriangle& tri, const LoziParams& params,
                                 std::size_t density) {
  const detail::ExactTriangle t = detail::exact_triangle(tri, params);
  TrappingCheck out;
  if (t.orientation == 0) return out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < density; ++i) {
    for (std::size_t j = 0; j < density; ++j) {
      const auto [v, image] = detail::exact_grid_violation(t, i, j, density);
      if (v > out.max_violation) {
        out.max_violation = v;
        out.witness = image;
      }
    }
  }
  out.inside = out.max_violation <= 0;
  return out;
}

double hausdorff_distance(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q) {
  double worst = 0;
  for (const auto& x : p) worst = std::max(worst, detail::directed_distance(x, q));
  for (const auto& y : q) worst = std::max(worst, detail::directed_distance(y, p));
  return worst;
}

std::vector<ConvexPolygon> advance_pieces(const Rational& a, const std::vector<ConvexPolygon>& pieces,
                                          const RegionSpec& target) {
  std::vector<ConvexPolygon> out;
  for (const auto& piece : pieces) {
    auto next = detail::piece_successors(a, piece, target);
    out.insert(out.end(), std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
  }
  detail::canonicalize(out);
  return out;
}

}  // namespace reference

}  // namespace lozimax::kernels
