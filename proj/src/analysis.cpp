#include "lozimax/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "lozimax/conjugation.hpp"

namespace lozimax {

namespace {

constexpr double kCoefficientTolerance = 1e-12;

bool is_zero(double v) { return std::abs(v) <= kCoefficientTolerance; }
bool is_zero(const Rational& v) { return v == 0; }

// Fixed points of x = alpha|x| + (beta+gamma) x + delta on each sign branch.
template <class T>
BasicEquilibriumSet<T> solve_branches(const BasicGenLoziParams<T>& gl) {
  using Dir = typename BasicHalfLine<T>::Direction;
  BasicEquilibriumSet<T> out;
  const T up = gl.alpha + gl.beta + gl.gamma - T(1);     // x >= 0
  const T down = -gl.alpha + gl.beta + gl.gamma - T(1);  // x <= 0
  const bool delta_zero = is_zero(gl.delta);

  if (is_zero(up)) {
    if (delta_zero) out.half_line = BasicHalfLine<T>{T(0), Dir::Up};
  } else {
    T r = -gl.delta / up;
    if (r >= 0) out.isolated.push_back(r);
  }
  if (is_zero(down)) {
    // alpha != 0 means both branches cannot be identically satisfied.
    if (delta_zero) out.half_line = BasicHalfLine<T>{T(0), Dir::Down};
  } else {
    T r = -gl.delta / down;
    if (r <= 0) out.isolated.push_back(r);
  }

  std::sort(out.isolated.begin(), out.isolated.end());
  out.isolated.erase(std::unique(out.isolated.begin(), out.isolated.end()),
                     out.isolated.end());
  if (out.half_line) {
    const auto line = *out.half_line;
    std::erase_if(out.isolated, [&](const T& v) {
      return line.direction == Dir::Up ? v >= line.endpoint : v <= line.endpoint;
    });
  }
  return out;
}

struct Matrix2 {
  double a11, a12, a21, a22;
};

Matrix2 multiply(const Matrix2& l, const Matrix2& r) {
  return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
          l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

template <class T>
int sign_of_switching_coordinate(const Point2<T>& p) {
  if (p.y == 0) throw NonSmooth("cycle point lies on the switching line y = 0");
  return p.y > 0 ? 1 : -1;
}

Rational pow_half(long n) {
  // (1/2)^n for any integer n
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n < 0 ? -n : n));
  return n >= 0 ? Rational(mpz_class(1), two_pow) : Rational(two_pow);
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  const mpz_class& num = v.get_num();
  const mpz_class& den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

}  // namespace

EquilibriumSet equilibria(const GenLoziParams& gl) { return solve_branches(gl); }

RationalEquilibriumSet equilibria(const RationalGenLoziParams& gl) {
  return solve_branches(gl);
}

EquilibriumSet equilibria(const LoziParams& p) {
  return solve_branches(GenLoziParams::from_lozi(p));
}

EquilibriumSet equilibria(const MaxEqParams& mp) {
  const LoziForm form = lozi_form(mp);
  const EquilibriumSet source = equilibria(form.params);
  const bool increasing = std::log(form.cov.base()) / form.cov.scale() > 0;

  EquilibriumSet out;
  for (double w : source.isolated) out.isolated.push_back(form.cov.inverse(w));
  if (source.half_line) {
    HalfLine line = *source.half_line;
    line.endpoint = form.cov.inverse(line.endpoint);
    if (!increasing) {
      line.direction = line.direction == HalfLine::Direction::Up ? HalfLine::Direction::Down
                                                                 : HalfLine::Direction::Up;
    }
    // A down-ray in log coordinates maps to (0, endpoint], still reported as a ray.
    out.half_line = line;
  }
  std::sort(out.isolated.begin(), out.isolated.end());
  return out;
}

namespace {

template <class T>
std::vector<BasicCycle<T>> two_cycles_impl(const T& a) {
  if (!(a > T(1) / T(2))) return {};
  const T den = T(2) * a * a - T(2) * a + T(1);
  const T u = T(1) / den;
  const T v = (T(1) - T(2) * a) / den;
  BasicCycle<T> cycle;
  cycle.period = 2;
  cycle.points = {Point2<T>{u, v}, Point2<T>{v, u}};
  return {cycle};
}

}  // namespace

std::vector<Cycle> two_cycles_lozi_ab(double a) { return two_cycles_impl<double>(a); }

std::vector<RationalCycle> two_cycles_lozi_ab(const Rational& a) {
  return two_cycles_impl<Rational>(a);
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::AsymptoticallyStable: return "AsymptoticallyStable";
    case Stability::Unstable: return "Unstable";
    case Stability::Nonhyperbolic: return "Nonhyperbolic";
  }
  return "?";
}

bool schur_cohn_stable(const Rational& p1, const Rational& p2) {
  const Rational rhs = 1 + p2;
  return magnitude(p1) < rhs && rhs < 2;
}

bool schur_cohn_stable(double p1, double p2) {
  return std::abs(p1) < 1 + p2 && 1 + p2 < 2;
}

StabilityReport cycle_stability(const LoziParams& params, const Cycle& cycle) {
  if (cycle.points.empty()) throw InvalidParameters("cycle has no points");
  Matrix2 product{1, 0, 0, 1};
  for (const auto& p : cycle.points) {
    const int s = sign_of_switching_coordinate(p);
    const Matrix2 jac{0, 1, params.b, -params.a * s};
    product = multiply(jac, product);
  }
  const double trace = product.a11 + product.a22;
  const double det = product.a11 * product.a22 - product.a12 * product.a21;
  const std::complex<double> disc = std::sqrt(std::complex<double>(trace * trace - 4 * det));
  StabilityReport r;
  r.eigenvalues = {(trace + disc) / 2.0, (trace - disc) / 2.0};
  if (std::abs(r.eigenvalues[0]) < std::abs(r.eigenvalues[1])) {
    std::swap(r.eigenvalues[0], r.eigenvalues[1]);
  }
  r.spectral_radius = std::abs(r.eigenvalues[0]);
  const bool on_circle =
      std::abs(std::abs(r.eigenvalues[0]) - 1) <= kNonhyperbolicTolerance ||
      std::abs(std::abs(r.eigenvalues[1]) - 1) <= kNonhyperbolicTolerance;
  if (on_circle) {
    r.classification = Stability::Nonhyperbolic;
  } else {
    r.classification =
        r.spectral_radius < 1 ? Stability::AsymptoticallyStable : Stability::Unstable;
  }
  r.schur_cohn_stable = schur_cohn_stable(-trace, det);
  return r;
}

std::array<Rational, 2> cycle_characteristic(const RationalLoziParams& params,
                                             const RationalCycle& cycle) {
  if (cycle.points.empty()) throw InvalidParameters("cycle has no points");
  // [[m11, m12], [m21, m22]]
  Rational m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  for (const auto& p : cycle.points) {
    const int s = sign_of_switching_coordinate(p);
    const Rational j21 = params.b;
    const Rational j22 = s > 0 ? Rational(-params.a) : Rational(params.a);
    // [[0, 1], [j21, j22]] * M
    Rational n11 = m21, n12 = m22;
    Rational n21 = j21 * m11 + j22 * m21;
    Rational n22 = j21 * m12 + j22 * m22;
    m11 = n11; m12 = n12; m21 = n21; m22 = n22;
  }
  Rational trace = m11 + m22;
  Rational det = m11 * m22 - m12 * m21;
  return {Rational(-trace), det};
}

std::optional<std::array<Rational, 2>> rational_roots(const Rational& p1, const Rational& p2) {
  const Rational disc = p1 * p1 - 4 * p2;
  const auto root = rational_sqrt(disc);
  if (!root) return std::nullopt;
  Rational lo = (-p1 - *root) / 2;
  Rational hi = (-p1 + *root) / 2;
  return std::array<Rational, 2>{lo, hi};
}

std::optional<std::size_t> detect_period(const RationalOrbit& orbit) {
  auto less = [](const RationalPoint& l, const RationalPoint& r) {
    if (l.x != r.x) return l.x < r.x;
    return l.y < r.y;
  };
  std::map<RationalPoint, std::size_t, decltype(less)> seen(less);
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    const auto [it, inserted] = seen.emplace(orbit.points[i], i);
    if (!inserted) return i - it->second;
  }
  return std::nullopt;
}

std::optional<std::size_t> detect_period(const Orbit& orbit, double epsilon,
                                         std::size_t max_period) {
  if (orbit.termination.kind != TerminationKind::Completed) return std::nullopt;
  const auto& pts = orbit.points;
  const std::size_t n = pts.size();
  const std::size_t limit = max_period == 0 ? n / 3 : std::min(max_period, n / 3);
  for (std::size_t p = 1; p <= limit; ++p) {
    bool repeats = true;
    for (std::size_t i = n - 2 * p; i < n && repeats; ++i) {
      const PlanarPoint d{pts[i].x - pts[i - p].x, pts[i].y - pts[i - p].y};
      repeats = sup_norm(d) <= epsilon;
    }
    if (repeats) return p;
  }
  return std::nullopt;
}

std::optional<Cycle> detect_asymptotic_cycle(const FloatMap& map, const PlanarPoint& initial,
                                             std::size_t burn, std::size_t window,
                                             double epsilon, double guard) {
  if (!(epsilon > 0)) throw InvalidParameters("cycle tolerance must be positive");
  Orbit orbit = iterate(map, initial, burn + window, guard);
  if (orbit.termination.kind != TerminationKind::Completed) {
    if (orbit.termination.step <= burn) {
      throw Diverged("orbit left the guard region during burn-in", orbit.termination.step);
    }
    return std::nullopt;
  }
  Orbit tail;
  tail.points.assign(orbit.points.end() - static_cast<std::ptrdiff_t>(window + 1),
                     orbit.points.end());
  tail.initial = tail.points.front();
  const auto period = detect_period(tail, epsilon);
  if (!period) return std::nullopt;

  const std::size_t p = *period;
  const std::size_t n = tail.points.size();
  Cycle cycle;
  cycle.period = p;
  for (std::size_t r = 0; r < p; ++r) {
    const auto& first = tail.points[n - 2 * p + r];
    const auto& second = tail.points[n - p + r];
    cycle.points.push_back({(first.x + second.x) / 2, (first.y + second.y) / 2});
  }
  return cycle;
}

double closed_form_solution(ClosedFormCase which, double x, double y, long n) {
  if (n < -1) throw InvalidParameters("closed form is defined for n >= -1");
  if (which == ClosedFormCase::AHalf) {
    const double alt = (n % 2 == 0) ? 1.0 : -1.0;
    return (2 * y - x - 1) / 3 * alt + (x + y - 2) / 3 * std::pow(0.5, static_cast<double>(n)) + 1;
  }
  const double theta = std::atan(std::sqrt(7.0));
  const double k = static_cast<double>(n + 1);
  const double amplitude_sin = (y - 1) * std::numbers::sqrt2 / std::sin(theta) +
                               (1 - x) * std::cos(theta) / std::sin(theta);
  return std::pow(0.5, k / 2) * ((x - 1) * std::cos(k * theta) + amplitude_sin * std::sin(k * theta)) +
         1;
}

Rational closed_form_a_half(const Rational& x, const Rational& y, long n) {
  if (n < -1) throw InvalidParameters("closed form is defined for n >= -1");
  const Rational alt = (n % 2 == 0) ? 1 : -1;
  return Rational((2 * y - x - 1) / 3) * alt + Rational((x + y - 2) / 3) * pow_half(n) + 1;
}

EqLexClass classify_eqlex_orbit(double prev, double cur) {
  if (prev == cur && cur >= 0) return {true, 0};
  const bool both_zero = prev == 0 && cur == 0;
  if (0 <= prev && prev < cur) return {false, 1};
  if ((prev <= 0 && 0 < cur) || (prev < 0 && 0 <= cur)) return {false, 2};
  if (prev <= cur && cur <= 0 && !both_zero) return {false, 3};
  if (0 <= cur && cur < prev) return {false, 4};
  if (cur <= prev && prev <= 0 && !both_zero) return {false, 5};
  return {false, 6};
}

GenLoziParams eqlex_params() { return GenLoziParams(1.5, 0.5, -1.0, 0.0); }

}  // namespace lozimax
