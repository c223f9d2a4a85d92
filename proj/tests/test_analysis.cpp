#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lozimax/analysis.hpp"
#include "lozimax/random.hpp"

using namespace lozimax;
using doctest::Approx;

namespace {
Rational q(long n, long d = 1) { return ratio(n, d); }
}  // namespace

TEST_CASE("equilibria: Lozi a = b") {
  CHECK(equilibria(LoziParams{0.3, 0.3}).isolated == std::vector<double>{1});
  CHECK(equilibria(LoziParams{0.5, 0.5}).isolated == std::vector<double>{1});
  CHECK(equilibria(LoziParams{1, 1}).isolated == std::vector<double>{-1, 1});
  CHECK(equilibria(LoziParams{-0.7, -0.7}).isolated == std::vector<double>{1});
  CHECK(equilibria(LoziParams{1, 1}).is_finite());
}

TEST_CASE("equilibria: half-lines") {
  const EquilibriumSet eq = equilibria(GenLoziParams(1.5, 0.5, -1, 0));
  REQUIRE(eq.half_line.has_value());
  CHECK(eq.half_line->endpoint == 0);
  CHECK(eq.half_line->direction == HalfLine::Direction::Up);
  CHECK(eq.contains(5));
  CHECK_FALSE(eq.contains(-1));

  const EquilibriumSet mx = equilibria(MaxEqParams(3, 1, 1, 8, 1));
  REQUIRE(mx.half_line.has_value());
  CHECK(mx.half_line->endpoint == Approx(2).epsilon(1e-14));
  CHECK(mx.half_line->direction == HalfLine::Direction::Up);

  // the x <= 0 branch can be the one identically satisfied
  const EquilibriumSet down = equilibria(GenLoziParams(1, 1, 1, 0));
  REQUIRE(down.half_line.has_value());
  CHECK(down.half_line->direction == HalfLine::Direction::Down);
  CHECK(down.contains(-3));
}

TEST_CASE("equilibria are fixed states, exactly") {
  SeededRng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto r = [&] { return q(static_cast<long>(rng.below(17)) - 8, 4); };
    Rational alpha = r();
    if (alpha == 0) alpha = 1;
    const RationalGenLoziParams gl(alpha, r(), r(), r());
    const RationalEquilibriumSet eq = equilibria(gl);
    for (const Rational& x : eq.isolated) {
      REQUIRE(gen_lozi_step(gl, RationalPoint{x, x}) == RationalPoint{x, x});
    }
    if (eq.half_line) {
      const Rational e = eq.half_line->endpoint;
      for (long step : {0L, 1L, 7L}) {
        const Rational x = eq.half_line->direction == BasicHalfLine<Rational>::Direction::Up ? Rational(e + step) : Rational(e - step);
        REQUIRE(gen_lozi_step(gl, RationalPoint{x, x}) == RationalPoint{x, x});
      }
    }
  }
}

TEST_CASE("two_cycles_lozi_ab") {
  const auto one = two_cycles_lozi_ab(q(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].period == 2);
  CHECK(one[0].points[0] == RationalPoint{q(1), q(-1)});
  CHECK(one[0].points[1] == RationalPoint{q(-1), q(1)});
  CHECK(two_cycles_lozi_ab(0.4).empty());
  CHECK(two_cycles_lozi_ab(0.5).empty());
  CHECK(two_cycles_lozi_ab(-0.8).empty());
  const auto three_quarters = two_cycles_lozi_ab(q(3, 4));
  REQUIRE(three_quarters.size() == 1);
  CHECK(three_quarters[0].points[0] == RationalPoint{q(8, 5), q(-4, 5)});
}

TEST_CASE("two-cycles satisfy F^2 = id, F != id") {
  for (long n = 51; n < 400; n += 7) {
    const Rational a = ratio(n, 100);
    const RationalLoziParams p{a, a};
    for (const auto& c : two_cycles_lozi_ab(a)) {
      const RationalPoint s = c.points[0];
      const RationalPoint f = lozi_step(p, Formulation::Sys3, s);
      REQUIRE(f != s);
      REQUIRE(f == c.points[1]);
      REQUIRE(lozi_step(p, Formulation::Sys3, f) == s);
    }
  }
}

TEST_CASE("cycle_stability") {
  // a = b = 1/2: the continuum of 2-cycles (v, 2 - v)
  const Cycle cont{2, {{0.5, 1.5}, {1.5, 0.5}}};
  const StabilityReport half = cycle_stability({0.5, 0.5}, cont);
  CHECK(half.classification == Stability::Nonhyperbolic);
  CHECK(half.eigenvalues[0].real() == Approx(1).epsilon(1e-14));
  CHECK(half.eigenvalues[1].real() == Approx(0.25).epsilon(1e-14));
  const RationalCycle exact{2, {{q(1, 2), q(3, 2)}, {q(3, 2), q(1, 2)}}};
  const auto ch = cycle_characteristic({q(1, 2), q(1, 2)}, exact);
  const auto roots = rational_roots(ch[0], ch[1]);
  REQUIRE(roots.has_value());
  CHECK((*roots)[0] == q(1, 4));
  CHECK((*roots)[1] == q(1));

  const auto c75 = two_cycles_lozi_ab(0.75);
  const StabilityReport r75 = cycle_stability({0.75, 0.75}, c75.at(0));
  CHECK(r75.classification == Stability::AsymptoticallyStable);
  CHECK(r75.schur_cohn_stable);
  const auto ch75 = cycle_characteristic({q(3, 4), q(3, 4)}, two_cycles_lozi_ab(q(3, 4)).at(0));
  CHECK(ch75[0] == q(9, 16) - q(3, 2));
  CHECK(ch75[1] == q(9, 16));

  const StabilityReport minus = cycle_stability({-0.5, -0.5}, Cycle{1, {{1, 1}}});
  CHECK(minus.classification == Stability::AsymptoticallyStable);
  CHECK(minus.spectral_radius == Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(minus.eigenvalues[0].real() == Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(minus.eigenvalues[0].imag()) == Approx(std::sqrt(7.0) / 4).epsilon(1e-12));

  CHECK_THROWS_AS(cycle_stability({1, 1}, Cycle{1, {{0, 0}}}), NonSmooth);
}

TEST_CASE("eigenvalues solve the characteristic polynomial") {
  for (double a = 0.51; a < 3; a += 0.07) {
    const auto cycles = two_cycles_lozi_ab(a);
    REQUIRE(cycles.size() == 1);
    const StabilityReport r = cycle_stability({a, a}, cycles[0]);
    for (const auto& l : r.eigenvalues) {
      const auto value = l * l + (a * a - 2 * a) * l + a * a;
      REQUIRE(std::abs(value) < 1e-12 * (1 + a * a));
    }
    if (a < 1) CHECK(r.classification == Stability::AsymptoticallyStable);
  }
}

TEST_CASE("Schur-Cohn chain") {
  CHECK(schur_cohn_stable(q(9, 16) - q(3, 2), q(9, 16)));
  // a = 6/5: |a^2 - 2a| = 24/25 < 1 + a^2 = 61/25, which is not < 2
  const Rational a(6, 5);
  CHECK_FALSE(schur_cohn_stable(a * a - 2 * a, a * a));
  CHECK_FALSE(schur_cohn_stable(q(-5, 4), q(1, 4)));  // root at 1 sits on the boundary
}

TEST_CASE("detect_period: exact") {
  const ExactMap crampin = GenLoziMap<Rational>{RationalGenLoziParams(q(1), q(0), q(-1), q(0))};
  CHECK(detect_period(iterate(crampin, RationalPoint{q(1), q(0)}, 30)) == std::optional<std::size_t>(9));
  const ExactMap one = LoziMap<Rational>{{q(1), q(1)}, Formulation::Sys3};
  CHECK(detect_period(iterate(one, RationalPoint{q(0), q(0)}, 40)) == std::optional<std::size_t>(12));
  const ExactMap fixed = LoziMap<Rational>{{q(1, 3), q(1, 3)}, Formulation::Sys3};
  CHECK(detect_period(iterate(fixed, RationalPoint{q(1), q(1)}, 5)) == std::optional<std::size_t>(1));
  CHECK_FALSE(detect_period(iterate(one, RationalPoint{q(0), q(0)}, 5)).has_value());
}

TEST_CASE("detect_period: tolerance") {
  const FloatMap p2 = GenLoziMap<double>{GenLoziParams(std::numbers::sqrt2, -2, -1, 0)};
  CHECK(detect_period(iterate(p2, {1, 0}, 100), 1e-9) == std::optional<std::size_t>(8));
  const FloatMap p3 = GenLoziMap<double>{GenLoziParams(1, -2, -1, 0)};
  CHECK(detect_period(iterate(p3, {1, 0}, 120), 1e-7) == std::optional<std::size_t>(12));
  const FloatMap fixed = LoziMap<double>{{0.3, 0.3}, Formulation::Sys3};
  CHECK(detect_period(iterate(fixed, {1, 1}, 10), 0) == std::optional<std::size_t>(1));
  // a slowly contracting spiral never repeats within 1e-12
  const FloatMap spiral = LoziMap<double>{{-0.5, -0.5}, Formulation::Sys3};
  CHECK_FALSE(detect_period(iterate(spiral, {1.5, 0.5}, 40), 1e-12).has_value());
}

TEST_CASE("detect_asymptotic_cycle") {
  const FloatMap half = LoziMap<double>{{0.5, 0.5}, Formulation::Sys3};
  const auto c = detect_asymptotic_cycle(half, {0, 0}, 200, 100, 1e-8);
  REQUIRE(c.has_value());
  CHECK(c->period == 2);
  double lo = std::min(c->points[0].y, c->points[1].y), hi = std::max(c->points[0].y, c->points[1].y);
  CHECK(lo == Approx(2.0 / 3).epsilon(1e-8));
  CHECK(hi == Approx(4.0 / 3).epsilon(1e-8));

  const FloatMap minus = LoziMap<double>{{-0.5, -0.5}, Formulation::Sys3};
  const auto m = detect_asymptotic_cycle(minus, {7, -3}, 500, 100, 1e-8);
  REQUIRE(m.has_value());
  CHECK(m->period == 1);
  CHECK(std::abs(m->points[0].y - 1) < 1e-8);

  const FloatMap near_one = LoziMap<double>{{0.99, 0.99}, Formulation::Sys3};
  const auto n = detect_asymptotic_cycle(near_one, {0, 0}, 100'000, 1000, 1e-8);
  REQUIRE(n.has_value());
  CHECK(n->period == 2);

  const FloatMap escape = LoziMap<double>{{-1.01, -1.01}, Formulation::Sys3};
  CHECK_THROWS_AS(detect_asymptotic_cycle(escape, {0, 0}, 100'000, 100, 1e-8, 1e6), Diverged);
}

TEST_CASE("closed forms") {
  for (long n = -1; n <= 60; ++n) {
    // (x_{-1}, x_0) = (0, 0)
    const Rational want = Rational(n % 2 == 0 ? -1 : 1, 3) -
                          Rational(4, 3) / Rational(mpz_class(1) << static_cast<unsigned>(n + 1)) + 1;
    REQUIRE(closed_form_a_half(q(0), q(0), n) == want);
  }
  CHECK(closed_form_a_half(q(0), q(0), 1) == 1);
  CHECK(closed_form_a_half(q(0), q(0), 2) == q(1, 2));
  for (double x : {-3.0, 0.25, 2.0}) {
    for (double y : {-1.0, 0.7, 5.0}) {
      CHECK(closed_form_solution(ClosedFormCase::AMinusHalf, x, y, -1) == Approx(x).epsilon(1e-12));
      CHECK(closed_form_solution(ClosedFormCase::AMinusHalf, x, y, 0) == Approx(y).epsilon(1e-12));
      CHECK(closed_form_solution(ClosedFormCase::AHalf, x, y, -1) == Approx(x).epsilon(1e-12));
      CHECK(closed_form_solution(ClosedFormCase::AHalf, x, y, 0) == Approx(y).epsilon(1e-12));
    }
  }
  // inside the lower triangle the linear regime holds from the start
  const FloatMap half = LoziMap<double>{{0.5, 0.5}, Formulation::Sys3};
  const Orbit o = iterate(half, {0.7, 1.3}, 50);
  for (long n = 0; n <= 50; ++n) {
    CHECK(std::abs(closed_form_solution(ClosedFormCase::AHalf, 0.7, 1.3, n) - o.points[n].y) < 1e-10);
  }
  const FloatMap minus = LoziMap<double>{{-0.5, -0.5}, Formulation::Sys3};
  const Orbit om = iterate(minus, {0.5, 0.5}, 50);
  for (long n = 0; n <= 50; ++n) {
    CHECK(std::abs(closed_form_solution(ClosedFormCase::AMinusHalf, 0.5, 0.5, n) - om.points[n].y) < 1e-10);
  }
}

TEST_CASE("closed form limits sum to 2") {
  const double x = 0.3, y = 1.1;
  const double even = closed_form_solution(ClosedFormCase::AHalf, x, y, 200);
  const double odd = closed_form_solution(ClosedFormCase::AHalf, x, y, 201);
  CHECK(even == Approx((2 * y - x + 2) / 3).epsilon(1e-12));
  CHECK(odd == Approx((-2 * y + x + 4) / 3).epsilon(1e-12));
  CHECK(even + odd == Approx(2).epsilon(1e-12));
}

TEST_CASE("classify_eqlex_orbit") {
  CHECK(classify_eqlex_orbit(0, 1).case_id == 1);
  CHECK(classify_eqlex_orbit(2, 2).equilibrium);
  CHECK(classify_eqlex_orbit(0, 0).equilibrium);
  CHECK_FALSE(classify_eqlex_orbit(-1, -1).equilibrium);
  const EqLexClass c = classify_eqlex_orbit(3, 1);
  CHECK(c.case_id == 4);
  CHECK(classify_eqlex_orbit(-1, 2).case_id == 2);
  CHECK(classify_eqlex_orbit(-3, -1).case_id == 3);
  CHECK(classify_eqlex_orbit(-1, -3).case_id == 5);
  CHECK(classify_eqlex_orbit(2, -1).case_id == 6);

  const FloatMap eqlex = GenLoziMap<double>{eqlex_params()};
  // (3,1) -> -1, 0, 1, then case 1 with slope 1: past 1e6 only after ~1e6 steps
  const Orbit o = iterate(eqlex, {3, 1}, 2'000'000, 1e6);
  CHECK(o.termination.kind == TerminationKind::DivergenceGuard);
}

TEST_CASE("eqlex regions partition the plane minus the ray") {
  SeededRng rng(12);
  const double grid[] = {-2, -1, 0, 1, 2};
  for (double a : grid) {
    for (double b : grid) {
      const EqLexClass c = classify_eqlex_orbit(a, b);
      CHECK(c.equilibrium == (a == b && a >= 0));
      CHECK((c.equilibrium ? c.case_id == 0 : (c.case_id >= 1 && c.case_id <= 6)));
    }
  }
  for (int i = 0; i < 2000; ++i) {
    const EqLexClass c = classify_eqlex_orbit(rng.uniform(-5, 5), rng.uniform(-5, 5));
    REQUIRE_FALSE(c.equilibrium);
    REQUIRE((c.case_id >= 1 && c.case_id <= 6));
  }
}

TEST_CASE("equilibrium orbits are constant with period 1") {
  const FloatMap eqlex = GenLoziMap<double>{eqlex_params()};
  for (double v : {0.0, 0.5, 3.0, 1e3}) {
    const Orbit o = iterate(eqlex, {v, v}, 50);
    for (const auto& p : o.points) REQUIRE(p == PlanarPoint{v, v});
    CHECK(detect_period(o, 0) == std::optional<std::size_t>(1));
  }
}
