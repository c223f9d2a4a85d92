// Wall-clock comparison of the OpenMP kernels against their serial references.
// Usage: bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <omp.h>

#include "lozimax/kernels.hpp"
#include "lozimax/random.hpp"

using namespace lozimax;

namespace {

double seconds(const std::function<void()>& body, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-22s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  SeededRng rng(42);
  std::vector<PlanarPoint> starts(1000);
  for (auto& s : starts) s = {rng.uniform(-50, 50), rng.uniform(-50, 50)};
  const FloatMap half = LoziMap<double>{{0.5, 0.5}};
  row("asymptotic_cycles",
      seconds([&] { kernels::reference::asymptotic_cycles(half, starts, 200, 200, 1e-8, 1e12); }, repeats),
      seconds([&] { kernels::asymptotic_cycles(half, starts, 200, 200, 1e-8, 1e12); }, repeats));

  const FloatMap eqlex = GenLoziMap<double>{eqlex_params()};
  row("orbit_tails", seconds([&] { kernels::reference::orbit_tails(eqlex, starts, 20000, 1e6); }, repeats),
      seconds([&] { kernels::orbit_tails(eqlex, starts, 20000, 1e6); }, repeats));

  std::vector<PlanarPoint> points(20000);
  for (auto& p : points) p = {rng.uniform(1e-3, 1e3), rng.uniform(1e-3, 1e3)};
  const GenLoziParams gl(1, 0, -1, -1);
  const ChangeOfVariables cov = canonical_change(gl);
  const MaxEqParams mp = derive_max_params(gl, cov);
  row("conjugacy_residuals", seconds([&] { kernels::reference::conjugacy_residuals(gl, mp, cov, points); }, repeats),
      seconds([&] { kernels::conjugacy_residuals(gl, mp, cov, points); }, repeats));

  const TrappingTriangle tri = trapping_triangle(1.7, 0.3);
  row("trapping_violation", seconds([&] { kernels::reference::trapping_violation(tri, {1.7, 0.3}, 300); }, repeats),
      seconds([&] { kernels::trapping_violation(tri, {1.7, 0.3}, 300); }, repeats));

  std::vector<PlanarPoint> cloud_a(points.begin(), points.begin() + 3000);
  std::vector<PlanarPoint> cloud_b(points.begin() + 3000, points.begin() + 6000);
  row("hausdorff_distance", seconds([&] { kernels::reference::hausdorff_distance(cloud_a, cloud_b); }, repeats),
      seconds([&] { kernels::hausdorff_distance(cloud_a, cloud_b); }, repeats));

  const Rational a(1, 2);
  const RegionSpec target = RegionSpec::square(0, 0);
  auto advance_all = [&](bool parallel) {
    std::vector<ConvexPolygon> work{square_polygon(1, 1)};
    for (int s = 0; s < 27 && !work.empty(); ++s) {
      work = parallel ? kernels::advance_pieces(a, work, target) : kernels::reference::advance_pieces(a, work, target);
    }
  };
  row("advance_pieces", seconds([&] { advance_all(false); }, repeats), seconds([&] { advance_all(true); }, repeats));
  return 0;
}
