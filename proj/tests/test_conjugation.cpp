#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lozimax/analysis.hpp"
#include "lozimax/conjugation.hpp"
#include "lozimax/random.hpp"

using namespace lozimax;
using doctest::Approx;

TEST_CASE("forward and inverse change") {
  CHECK(ChangeOfVariables(2, 0, 1).forward(8) == Approx(3).epsilon(1e-15));
  CHECK(ChangeOfVariables(2, 1, -1).forward(2) == Approx(0).epsilon(1e-15));
  CHECK(ChangeOfVariables(10, 0, 2).forward(10) == Approx(2).epsilon(1e-15));
  CHECK(ChangeOfVariables(2, 0, 1).inverse(3) == Approx(8).epsilon(1e-15));
  CHECK(ChangeOfVariables(2, 1, -1).inverse(0) == Approx(2).epsilon(1e-15));
  CHECK(ChangeOfVariables(3.7, -1.25, 0.5).inverse(-1.25) == 1.0);
  CHECK_THROWS_AS(ChangeOfVariables(2, 0, 1).forward(0), DomainError);
  CHECK_THROWS_AS(ChangeOfVariables(2, 0, 1).forward(-3), DomainError);
  CHECK_THROWS_AS(ChangeOfVariables(1, 0, 1), InvalidParameters);
  CHECK_THROWS_AS(ChangeOfVariables(-2, 0, 1), InvalidParameters);
  CHECK_THROWS_AS(ChangeOfVariables(2, 0, 0), InvalidParameters);
}

TEST_CASE("round trip") {
  SeededRng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const ChangeOfVariables cov(rng.uniform(0.1, 10), rng.uniform(-3, 3), rng.uniform(0.2, 3));
    const double z = std::exp(rng.uniform(-10, 10));
    REQUIRE(std::abs(cov.inverse(cov.forward(z)) - z) <= 1e-12 * z);
  }
}

TEST_CASE("derive_max_params: worked examples") {
  const MaxEqParams a = derive_max_params(GenLoziParams(1.5, 0.5, -1, 0), ChangeOfVariables(2, 0, 1));
  CHECK(a.k == 3);
  CHECK(a.l == 1);
  CHECK(a.m == 1);
  CHECK(a.M == 1);
  CHECK(a.c == 1);

  const MaxEqParams b = derive_max_params(GenLoziParams(0.5, -0.5, -2, 1), ChangeOfVariables(2, 0, 1));
  CHECK(b.k == 1);
  CHECK(b.l == 1);
  CHECK(b.m == 2);
  CHECK(b.M == 1);
  CHECK(b.c == 2);

  // The third worked example evaluates to M = e^{-1}, c = 1 under the stated formula.
  const GenLoziParams gl(-0.5, 0, 0.5, 1);
  const ChangeOfVariables cov(std::numbers::e, 1, -1);
  const MaxEqParams c = derive_max_params(gl, cov);
  CHECK(c.k == -1);
  CHECK(c.l == -0.5);
  CHECK(c.m == -0.5);
  CHECK(c.M == Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(c.c == Approx(1).epsilon(1e-15));
  for (double x : {0.1, 0.5, 1.0, 2.0, 7.0}) {
    for (double y : {0.2, 1.0, 3.0}) CHECK(conjugacy_residual(gl, c, cov, {x, y}) < 1e-12);
  }
}

TEST_CASE("derive_max_params: sign condition") {
  CHECK_THROWS_AS(derive_max_params(GenLoziParams(1.5, 0.5, -1, 0), ChangeOfVariables(0.5, 0, 1)), IncompatibleChange);
  CHECK_THROWS_AS(derive_max_params(GenLoziParams(1.5, 0.5, -1, 0), ChangeOfVariables(2, 0, -1)), IncompatibleChange);
  CHECK_NOTHROW(derive_max_params(GenLoziParams(1.5, 0.5, -1, 0), ChangeOfVariables(0.5, 0, -1)));
  CHECK(ChangeOfVariables(0.5, 0, 1).compatible_with(-1));
}

TEST_CASE("classify_family") {
  CHECK(classify_family(GenLoziParams(1.5, 0.5, -1, 0)) == FamilyCase::Delta0Sum1AnyB);
  CHECK(classify_family(GenLoziParams(1, 0, -1, 0)) == FamilyCase::Delta0AnyB);
  // alpha + beta + gamma = 0 here, so the ratio branch applies: 1/(0-1) < 0.
  CHECK(classify_family(GenLoziParams(-0.5, 0, 0.5, 1)) == FamilyCase::RatioNegCLt1);
  CHECK(classify_family(GenLoziParams(1, 0, -1, -1)) == FamilyCase::RatioPosBGt1);
  CHECK(classify_family(GenLoziParams(1, 0.5, -0.5, 2)) == FamilyCase::Sum1ScaleBGt1);
  CHECK(classify_family(GenLoziParams(1, 0.5, -0.5, -2)) == FamilyCase::Sum1ScaleCLt1);
  CHECK(to_string(FamilyCase::Delta0Sum1AnyB) == "DELTA0_SUM1_ANY_B");
}

TEST_CASE("residual examples") {
  const GenLoziParams gl(1.5, 0.5, -1, 0);
  const ChangeOfVariables cov(2, 0, 1);
  const MaxEqParams mp = derive_max_params(gl, cov);
  CHECK(conjugacy_residual(gl, mp, cov, {2, 3}) < 1e-15);
  // equilibria correspond
  const GenLoziParams lozi = GenLoziParams::from_lozi({0.3, 0.3});
  const ChangeOfVariables c2(0.5, 0.25, 1);
  const MaxEqParams m2 = derive_max_params(lozi, c2);
  const double e = c2.inverse(1.0);
  CHECK(conjugacy_residual(lozi, m2, c2, {e, e}) < 1e-15);
  CHECK(max_eq_step(m2, {e, e}).y == Approx(e).epsilon(1e-14));
}

namespace {
struct Pair {
  GenLoziParams gl;
  ChangeOfVariables cov;
};

Pair random_pair(SeededRng& rng) {
  for (;;) {
    double alpha = rng.uniform(-2, 2);
    if (std::abs(alpha) < 0.1) continue;
    const GenLoziParams gl(alpha, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double base = rng.unit() < 0.5 ? rng.uniform(1.2, 5) : rng.uniform(0.2, 0.8);
    double scale = rng.uniform(0.5, 2);
    if ((base > 1) != (alpha / scale > 0)) scale = -scale;
    return {gl, ChangeOfVariables(base, rng.uniform(-1, 1), scale)};
  }
}
}  // namespace

TEST_CASE("residual vanishes on random admissible pairs") {
  SeededRng rng(20);
  for (int pair = 0; pair < 20; ++pair) {
    const auto [gl, cov] = random_pair(rng);
    const MaxEqParams mp = derive_max_params(gl, cov);
    for (int i = 0; i < 1000; ++i) {
      const PlanarPoint z{rng.uniform(1e-3, 10), rng.uniform(1e-3, 10)};
      REQUIRE(conjugacy_residual(gl, mp, cov, z) < 1e-9);
    }
  }
}

TEST_CASE("family invariance: M sweeps (0, inf) with fixed exponents") {
  const GenLoziParams gl(1.5, 0.5, -1, 0);
  double last = 0;
  for (double p = -3; p <= 3; p += 0.5) {
    const MaxEqParams mp = derive_max_params(gl, ChangeOfVariables(2, p, 1));
    CHECK(mp.k == 3);
    CHECK(mp.l == 1);
    CHECK(mp.m == 1);
    CHECK(mp.c == Approx(1).epsilon(1e-15));
    if (p > -3) CHECK(mp.M < last);  // strictly monotone in p
    last = mp.M;
  }
}

TEST_CASE("canonical change") {
  const GenLoziParams ratio_pos(1, 0, -1, -1);
  const ChangeOfVariables cov = canonical_change(ratio_pos);
  CHECK(cov.shift() == Approx(-1));
  const MaxEqParams mp = derive_max_params(ratio_pos, cov);
  CHECK(mp.M > 1);
  CHECK(mp.c == Approx(1).epsilon(1e-15));
  const ChangeOfVariables neg = canonical_change(GenLoziParams(-0.5, 0, 0.5, 1));
  CHECK(neg.compatible_with(-0.5));
}

TEST_CASE("lozi_form inverts derive_max_params") {
  const MaxEqParams abu(2, 1, 1, 2.3, 1);
  const LoziForm form = lozi_form(abu);
  const MaxEqParams back = derive_max_params(form.params, form.cov);
  CHECK(back.k == Approx(2));
  CHECK(back.l == Approx(1));
  CHECK(back.m == Approx(1));
  CHECK(back.M == Approx(2.3).epsilon(1e-14));
  CHECK(back.c == Approx(1).epsilon(1e-14));
  CHECK_THROWS_AS(lozi_form(MaxEqParams(0, 1, 1, 1, 1)), InvalidParameters);
}

TEST_CASE("orbit transport over 100 steps") {
  SeededRng rng(31);
  int compared = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto [gl, cov] = random_pair(rng);
    const MaxEqParams mp = derive_max_params(gl, cov);
    const PlanarPoint z0{rng.uniform(0.5, 2), rng.uniform(0.5, 2)};
    const Orbit tilde = iterate(FloatMap{MaxEqMap{mp}}, z0, 100);
    const Orbit plain = iterate(FloatMap{GenLoziMap<double>{gl}}, cov.forward(z0), 100);
    if (tilde.termination.kind != TerminationKind::Completed ||
        plain.termination.kind != TerminationKind::Completed) {
      continue;
    }
    // only bounded, non-expanding orbits keep 1e-7 after 100 steps
    double span = 0;
    for (const auto& w : plain.points) span = std::max(span, sup_norm(w));
    if (span > 50) continue;
    bool close = true;
    for (std::size_t n = 0; n < tilde.points.size(); ++n) {
      const PlanarPoint w = cov.forward(tilde.points[n]);
      close = close && std::abs(w.y - plain.points[n].y) < 1e-7;
    }
    if (close) ++compared;
  }
  CHECK(compared > 0);
}

TEST_CASE("orbit transport: Crampin and its max-type form") {
  // y_{n+1} = |y_n| - y_{n-1} is 9-periodic; so is its conjugate.
  const GenLoziParams crampin(1, 0, -1, 0);
  const ChangeOfVariables cov(2, 0, 1);
  const MaxEqParams mp = derive_max_params(crampin, cov);
  const PlanarPoint z0 = cov.inverse(PlanarPoint{1, 0});
  const Orbit tilde = iterate(FloatMap{MaxEqMap{mp}}, z0, 100);
  const Orbit plain = iterate(FloatMap{GenLoziMap<double>{crampin}}, {1, 0}, 100);
  for (std::size_t n = 0; n <= 100; ++n) {
    CHECK(std::abs(cov.forward(tilde.points[n]).y - plain.points[n].y) < 1e-7);
  }
  CHECK(detect_period(tilde, 1e-9) == std::optional<std::size_t>(9));
}
