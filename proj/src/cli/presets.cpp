// Reproduction presets: one entry per documented claim. Each preset states the
// claim it reproduces (anchor), the expected outcome, and what was observed.

#include <cmath>
#include <numbers>
#include <sstream>

#include "json_io.hpp"
#include "lozimax/cli.hpp"
#include "lozimax/conjugation.hpp"
#include "lozimax/kernels.hpp"
#include "lozimax/random.hpp"

namespace lozimax::cli {

namespace {

std::string period_text(const std::optional<std::size_t>& p) {
  return p ? "period " + std::to_string(*p) : "no period";
}

PresetOutcome exact_period(const ExactMap& map, const RationalPoint& start, std::size_t steps,
                           std::size_t expected) {
  const auto period = detect_period(iterate(map, start, steps));
  return {period == expected, period_text(period)};
}

PresetOutcome float_period(const FloatMap& map, const PlanarPoint& start, std::size_t steps, double eps,
                           std::size_t expected) {
  const auto period = detect_period(iterate(map, start, steps), eps);
  return {period == expected, period_text(period)};
}

LoziMap<Rational> exact_lozi(const Rational& a, const Rational& b) { return {{a, b}, Formulation::Sys3}; }
LoziMap<double> float_lozi(double a, double b) { return {{a, b}, Formulation::Sys3}; }

PresetOutcome crampin(std::uint64_t) {
  return exact_period(GenLoziMap<Rational>{RationalGenLoziParams(1, 0, -1, 0)}, {1, 0}, 40, 9);
}

PresetOutcome beardon(double alpha, double beta, std::size_t expected) {
  return float_period(GenLoziMap<double>{GenLoziParams(alpha, beta, -1, 0)}, {1, 0}, 240, 1e-7, expected);
}

PresetOutcome lozi_a1_two_cycle(std::uint64_t) {
  const ExactMap map = exact_lozi(1, 1);
  const auto cycles = two_cycles_lozi_ab(Rational(1));
  PresetOutcome o;
  if (cycles.size() != 1) {
    o.observed = "no cycle";
    return o;
  }
  bool ok = true;
  json pts = json::array();
  for (const auto& p : cycles[0].points) {
    const RationalPoint once = step(map, p);
    ok = ok && step(map, once) == p && !(once == p);
    pts.push_back(to_json(p));
  }
  o.pass = ok;
  o.observed = ok ? "F^2 fixes both points, F swaps them" : "not a 2-cycle";
  o.details["points"] = pts;
  return o;
}

PresetOutcome a_half_origin(std::uint64_t) {
  const RationalOrbit orbit = iterate(exact_lozi(Rational(1, 2), Rational(1, 2)), {0, 0}, 61);
  bool exact = true;
  // points[k] = (x_{k-1}, x_k); formula indexes x_n from n = 1.
  // x_n = (1/3)(-1)^{n+1} - (4/3)(1/2)^{n+1} + 1
  Rational half_pow(1, 2);
  for (long n = 1; n <= 60; ++n) {
    half_pow /= 2;
    const Rational sign = (n + 1) % 2 == 0 ? 1 : -1;
    const Rational expected = Rational(1, 3) * sign - Rational(4, 3) * half_pow + 1;
    exact = exact && orbit.points[static_cast<std::size_t>(n)].y == expected;
  }
  const PlanarPoint last = to_double(orbit.points[60]);
  const double dist = std::max(std::abs(last.x - 4.0 / 3), std::abs(last.y - 2.0 / 3));
  PresetOutcome o;
  o.pass = exact && dist <= 1e-8;
  std::ostringstream s;
  s << (exact ? "exact match n<=60" : "mismatch") << "; distance to {4/3, 2/3} at step 60 = " << dist;
  o.observed = s.str();
  return o;
}

PresetOutcome a_half_certificate(std::uint64_t seed) {
  SuiteOptions opts;
  opts.seed = seed;
  const auto reports = verify_global_attraction_a_half(opts);
  std::size_t certified = 0;
  std::size_t s10 = 0, s12 = 0;
  for (const auto& r : reports) {
    if (r.certified()) ++certified;
    if (r.lemma.rfind("S(1,0)", 0) == 0) s10 = r.steps_used;
    if (r.lemma.rfind("S(1,2)", 0) == 0) s12 = r.steps_used;
  }
  PresetOutcome o;
  o.pass = certified == reports.size() && s10 <= 10 && s12 <= 5;
  o.observed = std::to_string(certified) + "/" + std::to_string(reports.size()) + " certified; S(1,0) " +
               std::to_string(s10) + " steps, S(1,2) " + std::to_string(s12) + " steps";
  return o;
}

PresetOutcome a_half_random_starts(std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<PlanarPoint> starts(1000);
  for (auto& s : starts) s = {rng.uniform(-50, 50), rng.uniform(-50, 50)};
  const auto results = kernels::asymptotic_cycles(float_lozi(0.5, 0.5), starts, 200, 200, 1e-8, kDefaultGuard);
  std::size_t found = 0;
  for (const auto& r : results) {
    if (!r.cycle || r.cycle->period > 2) continue;
    bool on_line = true;
    for (const auto& p : r.cycle->points) on_line = on_line && std::abs(p.x + p.y - 2) <= 1e-8;
    if (on_line) ++found;
  }
  return {found == starts.size(), std::to_string(found) + "/1000 converge to a cycle (v, 2-v)"};
}

PresetOutcome a_half_stability(std::uint64_t) {
  const RationalLoziParams params{Rational(1, 2), Rational(1, 2)};
  const RationalCycle cycle{2, {RationalPoint{Rational(2, 3), Rational(4, 3)}, RationalPoint{Rational(4, 3), Rational(2, 3)}}};
  const auto poly = cycle_characteristic(params, cycle);
  const auto roots = rational_roots(poly[0], poly[1]);
  PresetOutcome o;
  o.pass = roots && (*roots)[0] == Rational(1, 4) && (*roots)[1] == 1;
  o.observed = roots ? "eigenvalues " + to_string((*roots)[0]) + ", " + to_string((*roots)[1]) : "irrational roots";
  return o;
}

PresetOutcome a_minus_half(std::uint64_t) {
  const RationalOrbit orbit = iterate(exact_lozi(Rational(-1, 2), Rational(-1, 2)), {Rational(1, 2), Rational(1, 2)}, 51);
  double worst = 0;
  for (long n = 0; n <= 50; ++n) {
    const double formula = closed_form_solution(ClosedFormCase::AMinusHalf, 0.5, 0.5, n);
    worst = std::max(worst, std::abs(formula - orbit.points[static_cast<std::size_t>(n)].y.get_d()));
  }
  const auto stab = cycle_stability({-0.5, -0.5}, Cycle{1, {PlanarPoint{1, 1}}});
  SuiteOptions opts;
  const auto reports = verify_a_minus_half(opts);
  std::size_t certified = 0;
  for (const auto& r : reports) certified += r.certified() ? 1 : 0;
  PresetOutcome o;
  o.pass = worst <= 1e-10 && std::abs(stab.spectral_radius - std::numbers::sqrt2 / 2) <= 1e-12 &&
           certified == reports.size();
  std::ostringstream s;
  s << "closed form error " << worst << "; |lambda| = " << stab.spectral_radius << "; " << certified << "/"
    << reports.size() << " region checks certified";
  o.observed = s.str();
  return o;
}

PresetOutcome stability_ledger(std::uint64_t seed) {
  SeededRng rng(seed);
  std::size_t stable = 0;
  for (int i = 0; i < 50; ++i) {
    // a = k / 2^20 strictly inside (1/2, 1)
    const long k = (1L << 19) + 1 + static_cast<long>(rng.below((1UL << 19) - 1));
    const Rational a = ratio(k, 1L << 20);
    const auto cycle = two_cycles_lozi_ab(a);
    const auto poly = cycle_characteristic({a, a}, cycle.at(0));
    stable += schur_cohn_stable(poly[0], poly[1]) ? 1 : 0;
  }
  const Rational a12(6, 5);
  const auto poly = cycle_characteristic({a12, a12}, two_cycles_lozi_ab(a12).at(0));
  const bool unstable = !schur_cohn_stable(poly[0], poly[1]);
  return {stable == 50 && unstable,
          std::to_string(stable) + "/50 stable in (1/2,1); a=6/5 " + (unstable ? "unstable" : "stable")};
}

PresetOutcome eqlex_case1(std::uint64_t) {
  const EqLexClass cls = classify_eqlex_orbit(0, 1);
  const Orbit orbit = iterate(GenLoziMap<double>{eqlex_params()}, {0, 1}, 2'000'000, 1e6);
  bool linear = true;
  for (std::size_t n = 0; n < 100 && n < orbit.points.size(); ++n) {
    linear = linear && orbit.points[n].y == static_cast<double>(n + 1);
  }
  const bool tripped = orbit.termination.kind == TerminationKind::DivergenceGuard;
  return {cls.case_id == 1 && linear && tripped,
          "case " + std::to_string(cls.case_id) + (linear ? ", y_n = n+1" : ", not linear") +
              (tripped ? ", guard 1e6 tripped at step " + std::to_string(orbit.termination.step) : ", bounded")};
}

PresetOutcome eqlex_half_line(std::uint64_t) {
  const auto gen = equilibria(eqlex_params());
  const auto max = equilibria(MaxEqParams(3, 1, 1, 8, 1));
  const bool ok = gen.half_line && gen.half_line->endpoint == 0 && gen.isolated.empty() && max.half_line &&
                  std::abs(max.half_line->endpoint - 2) <= 1e-12 && max.half_line->direction == HalfLine::Direction::Up;
  std::ostringstream s;
  s << "generalized: " << (gen.half_line ? "ray from " + std::to_string(gen.half_line->endpoint) : "finite")
    << "; max-type: " << (max.half_line ? "ray from " + std::to_string(max.half_line->endpoint) : "finite");
  return {ok, s.str()};
}

PresetOutcome lozi_two_cycle_099(std::uint64_t) {
  const auto cycle = detect_asymptotic_cycle(float_lozi(0.99, 0.99), {0, 0}, 100000, 1000, 1e-8);
  PresetOutcome o;
  o.pass = cycle && cycle->period == 2;
  o.observed = cycle ? "cycle of period " + std::to_string(cycle->period) : "no cycle";
  if (cycle) {
    json pts = json::array();
    for (const auto& p : cycle->points) pts.push_back(to_json(p));
    o.details["points"] = pts;
  }
  return o;
}

PresetOutcome spiral_escape(std::uint64_t) {
  const PointCloud cloud = sample_attractor(float_lozi(-1.01, -1.01), {0, 0}, 0, 100000, 1e6);
  return {!cloud.bounded, cloud.bounded ? "bounded" : "escaped past 1e6"};
}

PresetOutcome third_quadrant(std::uint64_t) {
  const PointCloud cloud = sample_attractor(float_lozi(5, 5), {0, 0}, 0, 100000, 1e6);
  const PlanarPoint last = cloud.points.empty() ? PlanarPoint{} : cloud.points.back();
  PresetOutcome o;
  o.pass = !cloud.bounded && last.x < 0 && last.y < 0;
  std::ostringstream s;
  s << (cloud.bounded ? "bounded" : "escaped") << " at (" << last.x << ", " << last.y << ")";
  o.observed = s.str();
  return o;
}

PresetOutcome equilibrium_minus_07(std::uint64_t) {
  const auto cycle = detect_asymptotic_cycle(float_lozi(-0.7, -0.7), {0, 0}, 20000, 200, 1e-8);
  PresetOutcome o;
  o.pass = cycle && cycle->period == 1 && std::abs(cycle->points[0].y - 1) <= 1e-8;
  o.observed = cycle ? "period " + std::to_string(cycle->period) + " at " + std::to_string(cycle->points[0].y)
                     : "no cycle";
  return o;
}

PresetOutcome misiurewicz(std::uint64_t) {
  const auto good = misiurewicz_check(1.7, 0.3);
  const auto classic = misiurewicz_check(1.7, 0.5);
  PresetOutcome o;
  o.pass = good.overall && !classic.overall && !classic.c4;
  o.observed = std::string("(1.7,0.3) ") + (good.overall ? "holds" : "fails") + "; (1.7,0.5) " +
               (classic.overall ? "holds" : std::string("fails") + (classic.c4 ? "" : " (fourth condition)"));
  o.details = {{"a1.7_b0.3", to_json(good)}, {"a1.7_b0.5", to_json(classic)}};
  return o;
}

PresetOutcome trapping(std::uint64_t) {
  const auto tri = trapping_triangle(1.7, 0.3);
  const auto check = verify_trapping(tri, {1.7, 0.3}, 100);
  PresetOutcome o;
  o.pass = check.inside;
  std::ostringstream s;
  s << "max violation " << check.max_violation;
  o.observed = s.str();
  o.details = to_json(tri);
  return o;
}

PresetOutcome abu_saris(std::uint64_t) {
  const PointCloud cloud = sample_attractor(MaxEqMap{MaxEqParams(2, 1, 1, 2.3, 1)}, {1, 1}, 1000, 100000);
  PresetOutcome o;
  o.pass = cloud.bounded && cloud.points.size() == 100000;
  o.observed = std::string(cloud.bounded ? "bounded" : "unbounded") + ", " + std::to_string(box_count(cloud.points, 0.01)) +
               " boxes at grid 0.01";
  return o;
}

PresetOutcome conjugacy_examples(std::uint64_t) {
  const MaxEqParams first = derive_max_params(GenLoziParams(1.5, 0.5, -1, 0), ChangeOfVariables(2, 0, 1));
  const MaxEqParams second = derive_max_params(GenLoziParams(0.5, -0.5, -2, 1), ChangeOfVariables(2, 0, 1));
  const bool ok1 = first.k == 3 && first.l == 1 && first.m == 1 && first.c == 1;
  const bool ok2 = second.k == 1 && second.l == 1 && second.m == 2 && second.M == 1 && second.c == 2;
  std::ostringstream s;
  s << "(k,l,m,M,c) = (" << first.k << "," << first.l << "," << first.m << "," << first.M << "," << first.c << ") and ("
    << second.k << "," << second.l << "," << second.m << "," << second.M << "," << second.c << ")";
  return {ok1 && ok2, s.str()};
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      {"crampin-period9", "x_{n+1} = |x_n| - x_{n-1} is globally periodic of period 9", "period 9 from (1,0)", crampin},
      {"beardon-p2-period8", "beta^2 - alpha^2 = 2(1 + cos(pi/p)), beta < 0 gives period 4p; p = 2",
       "period 8 (alpha = sqrt 2, beta = -2)",
       [](std::uint64_t) { return beardon(std::numbers::sqrt2, -2, 8); }},
      {"beardon-p3-period12", "beta^2 - alpha^2 = 2(1 + cos(pi/p)), beta < 0 gives period 4p; p = 3",
       "period 12 (alpha = 1, beta = -2)",
       [](std::uint64_t) { return beardon(1, -std::sqrt(2 * (1 + std::cos(std::numbers::pi / 3)) + 1), 12); }},
      {"gingerbread-period6", "a = b = -1 yields a 6-periodic orbit of the origin", "period 6",
       [](std::uint64_t) { return exact_period(exact_lozi(-1, -1), {0, 0}, 30, 6); }},
      {"lozi-a1-period12", "a = b = 1: the orbit of (0,0) is 12-periodic", "period 12",
       [](std::uint64_t) { return exact_period(exact_lozi(1, 1), {0, 0}, 40, 12); }},
      {"lozi-a1-two-cycle", "2-periodic solutions through (1/(2a^2-2a+1), (1-2a)/(2a^2-2a+1)) at a = 1",
       "{(1,-1), (-1,1)} is a 2-cycle", lozi_a1_two_cycle},
      {"a-half-origin", "a = b = 1/2: orbit of the origin 0,0,1,1/2,5/4,5/8,... tends to the 2-cycle {4/3, 2/3}",
       "closed form exact for n <= 60; cycle within 1e-8", a_half_origin},
      {"a-half-certificate", "a = b = 1/2: every orbit is asymptotically 2-periodic (invariant-region argument)",
       "all checks certified; S(1,0) <= 10 steps, S(1,2) <= 5 steps", a_half_certificate},
      {"a-half-random-starts", "a = b = 1/2: a continuum of attracting 2-periodic sequences on x + y = 2",
       "1000/1000 random starts converge", a_half_random_starts},
      {"a-half-stability", "a = b = 1/2: the 2-cycle multipliers are 1 and 1/4", "eigenvalues 1/4, 1", a_half_stability},
      {"a-minus-half", "a = b = -1/2: theta = arctan(sqrt 7) closed form; equilibrium 1 is a global attractor",
       "closed form within 1e-10, |lambda| = sqrt(2)/2, region checks certified", a_minus_half},
      {"stability-ledger", "2-cycles are locally asymptotically stable for 1/2 < a < 1 (|-a^2+2a| < 1+a^2 < 2)",
       "50/50 stable; a = 6/5 unstable", stability_ledger},
      {"eqlex-case1", "y_{n+1} = 3/2|y_n| + 1/2 y_n - y_{n-1}: non-equilibrium orbits diverge (case 1: y_n = n + 1)",
       "case 1, linear growth, guard tripped", eqlex_case1},
      {"eqlex-half-line", "infinitely many equilibria {x >= 0}; max-type form has every x >= cube root of A",
       "rays from 0 and from 2", eqlex_half_line},
      {"lozi-a099-two-cycle", "a = b = 0.99: the orbit of (0,0) goes to a 2-periodic orbit", "period 2",
       lozi_two_cycle_099},
      {"lozi-spiral-escape", "a = b = -1.01: the orbit of (0,0) tends to infinity in a spiral", "unbounded",
       spiral_escape},
      {"lozi-a5-third-quadrant", "a = b = 5: the orbit leaves by the third quadrant", "unbounded, last point x<0, y<0",
       third_quadrant},
      {"lozi-a-minus-0.7-equilibrium", "a = b = -0.7: the orbit of (0,0) goes to an equilibrium point",
       "period 1 at 1", equilibrium_minus_07},
      {"misiurewicz", "strange-attractor conditions 0<b<1; a>b+1; 2a+b<4; b<(a^2-1)/(2a+1); sqrt(2)a>b+2",
       "(1.7,0.3) holds, (1.7,0.5) fails the fourth", misiurewicz},
      {"trapping-triangle", "the triangle I, F(I), F^2(I) is a trapping region", "no violation at (1.7, 0.3)",
       trapping},
      {"abu-saris-bounded", "max{x_n^2, 2.3}/(x_n x_{n-1}) has a bounded attractor", "bounded over 1e5 steps",
       abu_saris},
      {"conjugacy-examples", "worked examples of the logarithmic change of variables",
       "(3,1,1,1,1) and (1,1,2,1,2)", conjugacy_examples},
  };
  return all;
}

}  // namespace lozimax::cli
