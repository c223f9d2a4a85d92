#pragma once

// Batch kernels. Each function in `kernels` is OpenMP-parallel over
// independent items; `kernels::reference` holds the serial twin used as the
// test oracle. Both produce identical output for identical input.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lozimax/analysis.hpp"
#include "lozimax/attractor.hpp"
#include "lozimax/conjugation.hpp"
#include "lozimax/region.hpp"

namespace lozimax::kernels {

/// Outcome of detect_asymptotic_cycle for one start; `diverged` replaces the
/// exception so it can cross the parallel region.
struct CycleSearch {
  std::optional<Cycle> cycle;
  bool diverged = false;
};

/// Each orbit truncated to its final stored state, with its termination.
std::vector<Orbit> orbit_tails(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                               std::size_t steps, double guard);
std::vector<double> conjugacy_residuals(const GenLoziParams& gl, const MaxEqParams& mp,
                                        const ChangeOfVariables& cov,
                                        const std::vector<PlanarPoint>& points);
std::vector<CycleSearch> asymptotic_cycles(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                                           std::size_t burn, std::size_t window, double epsilon,
                                           double guard);
TrappingCheck trapping_violation(const TrappingTriangle& tri, const LoziParams& params,
                                 std::size_t density);
double hausdorff_distance(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q);
std::vector<ConvexPolygon> advance_pieces(const Rational& a, const std::vector<ConvexPolygon>& pieces,
                                          const RegionSpec& target);

namespace reference {
std::vector<Orbit> orbit_tails(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                               std::size_t steps, double guard);
std::vector<double> conjugacy_residuals(const GenLoziParams& gl, const MaxEqParams& mp,
                                        const ChangeOfVariables& cov,
                                        const std::vector<PlanarPoint>& points);
std::vector<CycleSearch> asymptotic_cycles(const FloatMap& map, const std::vector<PlanarPoint>& starts,
                                           std::size_t burn, std::size_t window, double epsilon,
                                           double guard);
TrappingCheck trapping_violation(const TrappingTriangle& tri, const LoziParams& params,
                                 std::size_t density);
double hausdorff_distance(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q);
std::vector<ConvexPolygon> advance_pieces(const Rational& a, const std::vector<ConvexPolygon>& pieces,
                                          const RegionSpec& target);
}  // namespace reference

namespace detail {
// Shared per-item bodies.
Orbit orbit_tail(const FloatMap& map, const PlanarPoint& start, std::size_t steps, double guard);
CycleSearch cycle_search(const FloatMap& map, const PlanarPoint& start, std::size_t burn,
                         std::size_t window, double epsilon, double guard);
double directed_distance(const PlanarPoint& p, const std::vector<PlanarPoint>& q);
std::vector<ConvexPolygon> piece_successors(const Rational& a, const ConvexPolygon& piece,
                                            const RegionSpec& target);
void canonicalize(std::vector<ConvexPolygon>& pieces);

/// The trapping triangle in exact arithmetic. FI and FFI are recomputed from I
/// when the stored values are their roundings, so images of boundary points
/// that land on an edge give a violation of exactly 0.
struct ExactTriangle {
  RationalLoziParams params;
  std::array<RationalPoint, 3> v;
  std::array<double, 3> edge_length{};
  int orientation = 0;  // sign of the exact orientation, 0 when degenerate
};

ExactTriangle exact_triangle(const TrappingTriangle& tri, const LoziParams& params);
/// Violation and image of grid point (i, j).
std::pair<double, PlanarPoint> exact_grid_violation(const ExactTriangle& t, std::size_t i, std::size_t j,
                                                    std::size_t density);
}  // namespace detail

}  // namespace lozimax::kernels
