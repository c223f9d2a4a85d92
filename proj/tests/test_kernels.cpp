#include <doctest.h>

#include "lozimax/kernels.hpp"
#include "lozimax/random.hpp"

using namespace lozimax;

namespace {
std::vector<PlanarPoint> random_points(std::uint64_t seed, std::size_t n, double lo, double hi) {
  SeededRng rng(seed);
  std::vector<PlanarPoint> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({rng.uniform(lo, hi), rng.uniform(lo, hi)});
  return out;
}

bool same(const Orbit& l, const Orbit& r) {
  return l.points == r.points && l.termination.kind == r.termination.kind && l.termination.step == r.termination.step;
}
}  // namespace

TEST_CASE("orbit_tails: parallel equals reference") {
  const FloatMap m = LoziMap<double>{{1.4, 0.3}, Formulation::Sys1};
  const auto starts = random_points(1, 300, -2, 2);
  const auto par = kernels::orbit_tails(m, starts, 500, 1e6);
  const auto ref = kernels::reference::orbit_tails(m, starts, 500, 1e6);
  REQUIRE(par.size() == ref.size());
  for (std::size_t i = 0; i < par.size(); ++i) REQUIRE(same(par[i], ref[i]));
}

TEST_CASE("conjugacy_residuals: parallel equals reference") {
  const GenLoziParams gl(1.5, 0.5, -1, 0);
  const ChangeOfVariables cov(2, 0.3, 1);
  const MaxEqParams mp = derive_max_params(gl, cov);
  const auto pts = random_points(2, 500, 0.01, 10);
  CHECK(kernels::conjugacy_residuals(gl, mp, cov, pts) == kernels::reference::conjugacy_residuals(gl, mp, cov, pts));
}

TEST_CASE("asymptotic_cycles: parallel equals reference") {
  const FloatMap m = LoziMap<double>{{0.5, 0.5}, Formulation::Sys3};
  const auto starts = random_points(3, 100, -50, 50);
  const auto par = kernels::asymptotic_cycles(m, starts, 200, 200, 1e-8, 1e12);
  const auto ref = kernels::reference::asymptotic_cycles(m, starts, 200, 200, 1e-8, 1e12);
  REQUIRE(par.size() == ref.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    REQUIRE(par[i].diverged == ref[i].diverged);
    REQUIRE(par[i].cycle.has_value() == ref[i].cycle.has_value());
    if (par[i].cycle) REQUIRE(par[i].cycle->points == ref[i].cycle->points);
  }
  const FloatMap escape = LoziMap<double>{{-1.2, -1.2}, Formulation::Sys3};
  const auto div = kernels::asymptotic_cycles(escape, starts, 10'000, 10, 1e-8, 1e6);
  for (const auto& d : div) CHECK(d.diverged);
}

TEST_CASE("trapping_violation: parallel equals reference") {
  for (auto [a, b] : {std::pair{1.7, 0.3}, std::pair{3.0, 0.9}, std::pair{1.4, 0.3}}) {
    const TrappingTriangle tri = trapping_triangle(a, b);
    const auto par = kernels::trapping_violation(tri, {a, b}, 60);
    const auto ref = kernels::reference::trapping_violation(tri, {a, b}, 60);
    CHECK(par.inside == ref.inside);
    CHECK(par.max_violation == ref.max_violation);
    CHECK(par.witness == ref.witness);
  }
}

TEST_CASE("hausdorff_distance: parallel equals reference") {
  const auto p = random_points(5, 700, -1, 1);
  const auto q = random_points(6, 500, -1, 1.2);
  CHECK(kernels::hausdorff_distance(p, q) == kernels::reference::hausdorff_distance(p, q));
}

TEST_CASE("advance_pieces: parallel equals reference") {
  std::vector<ConvexPolygon> pieces;
  for (long i = -3; i <= 3; ++i) {
    for (long j = -3; j <= 3; ++j) pieces.push_back(square_polygon(i, j));
  }
  const Rational a(1, 2);
  const auto target = RegionSpec::level(1);
  CHECK(kernels::advance_pieces(a, pieces, target) == kernels::reference::advance_pieces(a, pieces, target));
}
