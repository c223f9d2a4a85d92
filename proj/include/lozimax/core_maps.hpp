#pragma once

// Parameter and state types for the three map families (Lozi, generalized
// Lozi, max-type) and their steppers, in floating and exact-rational modes.
//
// State convention: (x, y) = (previous, current), i.e. (x_{n-1}, x_n).

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lozimax/error.hpp"
#include "lozimax/rational.hpp"

namespace lozimax {

template <class T>
struct Point2 {
  T x{};
  T y{};
  friend bool operator==(const Point2&, const Point2&) = default;
};

using PlanarPoint = Point2<double>;
using RationalPoint = Point2<Rational>;

/// x_{n+1} = 1 - a|x_n| + b x_{n-1}
template <class T>
struct BasicLoziParams {
  T a{};
  T b{};
};

using LoziParams = BasicLoziParams<double>;
using RationalLoziParams = BasicLoziParams<Rational>;

/// y_{n+1} = alpha|y_n| + beta y_n + gamma y_{n-1} + delta, alpha != 0.
template <class T>
struct BasicGenLoziParams {
  T alpha{1};
  T beta{};
  T gamma{};
  T delta{};

  BasicGenLoziParams() = default;
  BasicGenLoziParams(T alpha_, T beta_, T gamma_, T delta_)
      : alpha(std::move(alpha_)),
        beta(std::move(beta_)),
        gamma(std::move(gamma_)),
        delta(std::move(delta_)) {
    if (alpha == 0) throw InvalidParameters("generalized Lozi map requires alpha != 0");
  }

  /// The Lozi map with coefficients (a, b) as a generalized Lozi map.
  static BasicGenLoziParams from_lozi(const BasicLoziParams<T>& p) {
    return BasicGenLoziParams(-p.a, T(0), p.b, T(1));
  }
};

using GenLoziParams = BasicGenLoziParams<double>;
using RationalGenLoziParams = BasicGenLoziParams<Rational>;

/// x_{n+1} = c * max{x_n^k, M} / (x_n^l * x_{n-1}^m) on positive reals.
struct MaxEqParams {
  double k = 1;
  double l = 0;
  double m = 0;
  double M = 1;
  double c = 1;

  MaxEqParams() = default;
  MaxEqParams(double k_, double l_, double m_, double M_, double c_ = 1.0);
};

enum class Formulation { Sys1, Sys2, Sys3 };

std::string_view to_string(Formulation f);

// -- steppers ---------------------------------------------------------------

/// Sys1: (1-a|x|+y, b x); Sys2: (1-a|x|+b y, x); Sys3: (y, 1-a|y|+b x).
template <class T>
Point2<T> lozi_step(const BasicLoziParams<T>& p, Formulation f, const Point2<T>& s) {
  switch (f) {
    case Formulation::Sys1:
      return {T(1) - p.a * magnitude(s.x) + s.y, p.b * s.x};
    case Formulation::Sys2:
      return {T(1) - p.a * magnitude(s.x) + p.b * s.y, s.x};
    case Formulation::Sys3:
      break;
  }
  return {s.y, T(1) - p.a * magnitude(s.y) + p.b * s.x};
}

template <class T>
Point2<T> gen_lozi_step(const BasicGenLoziParams<T>& p, const Point2<T>& s) {
  return {s.y, p.alpha * magnitude(s.y) + p.beta * s.y + p.gamma * s.x + p.delta};
}

/// Throws DomainError unless both coordinates are strictly positive.
PlanarPoint max_eq_step(const MaxEqParams& p, const PlanarPoint& s);

/// Transports a state between formulations using sigma(x,y) = (x, y/b)
/// (Sys1 -> Sys2) and tau(x,y) = (y,x) (Sys2 <-> Sys3). Throws
/// InvalidParameters when b = 0 and the route needs sigma.
template <class T>
Point2<T> formulation_transport(const Point2<T>& s, Formulation from, Formulation to,
                                const T& b) {
  if (from == to) return s;
  auto sigma = [&](const Point2<T>& q) -> Point2<T> {
    if (b == 0) throw InvalidParameters("formulation transport through sigma needs b != 0");
    return {q.x, q.y / b};
  };
  auto sigma_inv = [&](const Point2<T>& q) -> Point2<T> { return {q.x, q.y * b}; };
  auto tau = [](const Point2<T>& q) -> Point2<T> { return {q.y, q.x}; };

  // Route everything through Sys2.
  Point2<T> mid = s;
  if (from == Formulation::Sys1) mid = sigma(s);
  if (from == Formulation::Sys3) mid = tau(s);
  if (to == Formulation::Sys2) return mid;
  if (to == Formulation::Sys3) return tau(mid);
  if (b == 0) throw InvalidParameters("formulation transport through sigma needs b != 0");
  return sigma_inv(mid);
}

// -- map descriptors --------------------------------------------------------

template <class T>
struct LoziMap {
  BasicLoziParams<T> params;
  Formulation formulation = Formulation::Sys3;
};

template <class T>
struct GenLoziMap {
  BasicGenLoziParams<T> params;
};

struct MaxEqMap {
  MaxEqParams params;
};

using FloatMap = std::variant<LoziMap<double>, GenLoziMap<double>, MaxEqMap>;
using ExactMap = std::variant<LoziMap<Rational>, GenLoziMap<Rational>>;

PlanarPoint step(const FloatMap& map, const PlanarPoint& s);
RationalPoint step(const ExactMap& map, const RationalPoint& s);

/// Throws DomainError if `s` is outside the map's domain.
void check_domain(const FloatMap& map, const PlanarPoint& s);

// -- orbits -----------------------------------------------------------------

enum class TerminationKind { Completed, DivergenceGuard, DomainError };

std::string_view to_string(TerminationKind k);

struct Termination {
  TerminationKind kind = TerminationKind::Completed;
  std::size_t step = 0;  // index of the offending state when not Completed
};

template <class T>
struct BasicOrbit {
  Point2<T> initial;
  std::vector<Point2<T>> points;  // points[0] == initial
  Termination termination;
};

using Orbit = BasicOrbit<double>;
using RationalOrbit = BasicOrbit<Rational>;

inline constexpr double kDefaultGuard = 1e12;

/// Float mode. Stops at the first state whose sup-norm exceeds `guard`
/// (that state is kept as the last point).
Orbit iterate(const FloatMap& map, const PlanarPoint& initial, std::size_t steps,
              double guard = kDefaultGuard);

/// Exact mode; never rounds and has no guard.
RationalOrbit iterate(const ExactMap& map, const RationalPoint& initial, std::size_t steps);

inline double sup_norm(const PlanarPoint& p) {
  return std::max(magnitude(p.x), magnitude(p.y));
}

inline PlanarPoint to_double(const RationalPoint& p) {
  return {p.x.get_d(), p.y.get_d()};
}

}  // namespace lozimax
