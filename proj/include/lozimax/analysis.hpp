#pragma once

// Equilibria, 2-cycles, linearized stability, period detection, the
// divergence classification for y_{n+1} = 3/2|y_n| + 1/2 y_n - y_{n-1}, and
// the closed-form linear solutions at a = b = +-1/2.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lozimax/core_maps.hpp"

namespace lozimax {

template <class T>
struct BasicHalfLine {
  enum class Direction { Up, Down };
  T endpoint{};
  Direction direction = Direction::Up;  // Up: {x >= endpoint}; Down: {x <= endpoint}
};

/// Isolated equilibria (sorted, duplicate-free) plus at most one ray of
/// equilibria. A set with no ray is "Finite".
template <class T>
struct BasicEquilibriumSet {
  std::vector<T> isolated;
  std::optional<BasicHalfLine<T>> half_line;

  bool is_finite() const { return !half_line.has_value(); }
  bool contains(const T& x) const {
    if (half_line) {
      const bool up = half_line->direction == BasicHalfLine<T>::Direction::Up;
      if (up ? x >= half_line->endpoint : x <= half_line->endpoint) return true;
    }
    for (const auto& v : isolated) {
      if (v == x) return true;
    }
    return false;
  }
};

using HalfLine = BasicHalfLine<double>;
using EquilibriumSet = BasicEquilibriumSet<double>;
using RationalEquilibriumSet = BasicEquilibriumSet<Rational>;

EquilibriumSet equilibria(const GenLoziParams& gl);
RationalEquilibriumSet equilibria(const RationalGenLoziParams& gl);
/// Lozi map x_{n+1} = 1 - a|x_n| + b x_{n-1}.
EquilibriumSet equilibria(const LoziParams& p);
/// Transported from the generalized Lozi form through the inverse change.
EquilibriumSet equilibria(const MaxEqParams& mp);

template <class T>
struct BasicCycle {
  std::size_t period = 0;
  std::vector<Point2<T>> points;  // Sys3 states, in orbit order
};

using Cycle = BasicCycle<double>;
using RationalCycle = BasicCycle<Rational>;

/// The 2-cycle of x_{n+1} = 1 - a|x_n| + a x_{n-1} for a > 1/2, through
/// (1/(2a^2-2a+1), (1-2a)/(2a^2-2a+1)); empty otherwise.
std::vector<Cycle> two_cycles_lozi_ab(double a);
std::vector<RationalCycle> two_cycles_lozi_ab(const Rational& a);

enum class Stability { AsymptoticallyStable, Unstable, Nonhyperbolic };

std::string_view to_string(Stability s);

struct StabilityReport {
  std::array<std::complex<double>, 2> eigenvalues;
  double spectral_radius = 0;
  Stability classification = Stability::Unstable;
  /// |p1| < 1 + p2 < 2 for the characteristic polynomial l^2 + p1 l + p2.
  bool schur_cohn_stable = false;
};

inline constexpr double kNonhyperbolicTolerance = 1e-12;

/// Linearization of the Sys3 map (y, 1 - a|y| + b x) along the cycle.
/// Throws NonSmooth if a cycle point has y = 0.
StabilityReport cycle_stability(const LoziParams& params, const Cycle& cycle);

/// Coefficients (p1, p2) of l^2 + p1 l + p2 for the cycle's Jacobian product.
std::array<Rational, 2> cycle_characteristic(const RationalLoziParams& params,
                                             const RationalCycle& cycle);

bool schur_cohn_stable(const Rational& p1, const Rational& p2);
bool schur_cohn_stable(double p1, double p2);

/// Both roots of l^2 + p1 l + p2 when they are rational (ascending).
std::optional<std::array<Rational, 2>> rational_roots(const Rational& p1, const Rational& p2);

/// Period of the cycle an exact orbit falls into (first repeated state).
std::optional<std::size_t> detect_period(const RationalOrbit& orbit);

/// Smallest lag p <= max_period such that the final window of 2p states
/// repeats with lag p within `epsilon` (sup-norm). max_period = 0 means
/// points/3. epsilon = 0 requires exact repetition.
std::optional<std::size_t> detect_period(const Orbit& orbit, double epsilon,
                                         std::size_t max_period = 0);

/// Iterates `burn` steps, then searches the next `window` states for a cycle
/// to tolerance `epsilon`. Cycle points are averaged over the last two
/// repetitions. Throws Diverged if the guard trips during burn-in.
std::optional<Cycle> detect_asymptotic_cycle(const FloatMap& map, const PlanarPoint& initial,
                                             std::size_t burn, std::size_t window,
                                             double epsilon, double guard = kDefaultGuard);

enum class ClosedFormCase { AHalf, AMinusHalf };

/// Solution x_n (n >= -1) of the linear regime with (x_{-1}, x_0) = (x, y).
/// AHalf: ((2y-x-1)/3)(-1)^n + ((x+y-2)/3)(1/2)^n + 1.
/// AMinusHalf: damped oscillation with modulus (1/2)^{1/2}, theta = arctan(sqrt 7).
double closed_form_solution(ClosedFormCase which, double x, double y, long n);
Rational closed_form_a_half(const Rational& x, const Rational& y, long n);

/// Classification for y_{n+1} = 3/2|y_n| + 1/2 y_n - y_{n-1}: equilibrium iff
/// y_{-1} = y_0 >= 0, otherwise the divergence case 1..6 (first match).
struct EqLexClass {
  bool equilibrium = false;
  int case_id = 0;  // 0 for equilibria
};

EqLexClass classify_eqlex_orbit(double prev, double cur);

/// (3/2, 1/2, -1, 0)
GenLoziParams eqlex_params();

}  // namespace lozimax
