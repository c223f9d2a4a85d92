// OpenMP kernels. Every loop writes into a pre-sized slot per item and any
// reduction is finished serially in index order, so results match the
// serial reference bit for bit.

#include <algorithm>
#include <cmath>
#include <limits>

#include "lozimax/kernels.hpp"

namespace lozimax::kernels {

namespace {
long long signed_size(std::size_t n) { return static_cast<long long>(n); }
}  // namespace

std::vector<Orbit> orbit_tails(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                               std::size_t steps, double guard) {
  std::vector<Orbit> out(starts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < signed_size(starts.size()); ++i) {
    out[i] = detail::orbit_tail(map, starts[i], steps, guard);
  }
  return out;
}

std::vector<double> conjugacy_residuals(const GenLoziParams& gl, const MaxEqParams& mp,
                                        const ChangeOfVariables& cov,
                                        const std::vector<PlanarPoint>& points) {
  std::vector<double> out(points.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < signed_size(points.size()); ++i) {
    out[i] = conjugacy_residual(gl, mp, cov, points[i]);
  }
  return out;
}

std::vector<CycleSearch> asymptotic_cycles(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                                           std::size_t burn, std::size_t window, double epsilon,
                                           double guard) {
  std::vector<CycleSearch> out(starts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < signed_size(starts.size()); ++i) {
    out[i] = detail::cycle_search(map, starts[i], burn, window, epsilon, guard);
  }
  return out;
}

TrappingCheck trapping_violation(const TrappingTriangle& tri, const LoziParams& params,
                                 std::size_t density) {
  const detail::ExactTriangle t = detail::exact_triangle(tri, params);
  if (t.orientation == 0) return TrappingCheck{};
  std::vector<double> row_worst(density, -std::numeric_limits<double>::infinity());
  std::vector<PlanarPoint> row_witness(density);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < signed_size(density); ++i) {
    for (std::size_t j = 0; j < density; ++j) {
      const auto [v, image] = detail::exact_grid_violation(t, static_cast<std::size_t>(i), j, density);
      if (v > row_worst[i]) {
        row_worst[i] = v;
        row_witness[i] = image;
      }
    }
  }
  TrappingCheck out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < density; ++i) {
    if (row_worst[i] > out.max_violation) {
      out.max_violation = row_worst[i];
      out.witness = row_witness[i];
    }
  }
  out.inside = out.max_violation <= 0;
  return out;
}

double hausdorff_distance(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q) {
  std::vector<double> dp(p.size()), dq(q.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < signed_size(p.size()); ++i) dp[i] = detail::directed_distance(p[i], q);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < signed_size(q.size()); ++i) dq[i] = detail::directed_distance(q[i], p);
  double worst = 0;
  for (double d : dp) worst = std::max(worst, d);
  for (double d : dq) worst = std::max(worst, d);
  return worst;
}

std::vector<ConvexPolygon> advance_pieces(const Rational& a, const std::vector<ConvexPolygon>& pieces,
                                          const RegionSpec& target) {
  std::vector<std::vector<ConvexPolygon>> slots(pieces.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < signed_size(pieces.size()); ++i) {
    slots[i] = detail::piece_successors(a, pieces[i], target);
  }
  std::vector<ConvexPolygon> out;
  for (auto& slot : slots) {
    out.insert(out.end(), std::make_move_iterator(slot.begin()), std::make_move_iterator(slot.end()));
  }
  detail::canonicalize(out);
  return out;
}

}  // namespace lozimax::kernels
