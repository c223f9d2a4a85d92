#include "lozimax/core_maps.hpp"

#include <cmath>
#include <string>

namespace lozimax {

MaxEqParams::MaxEqParams(double k_, double l_, double m_, double M_, double c_)
    : k(k_), l(l_), m(m_), M(M_), c(c_) {
  if (!(M > 0) || !std::isfinite(M)) {
    throw InvalidParameters("max-equation constant M must be a positive real");
  }
  if (!(c > 0) || !std::isfinite(c)) {
    throw InvalidParameters("max-equation scale c must be a positive real");
  }
}

std::string_view to_string(Formulation f) {
  switch (f) {
    case Formulation::Sys1: return "SYS1";
    case Formulation::Sys2: return "SYS2";
    case Formulation::Sys3: return "SYS3";
  }
  return "?";
}

std::string_view to_string(TerminationKind k) {
  switch (k) {
    case TerminationKind::Completed: return "Completed";
    case TerminationKind::DivergenceGuard: return "DivergenceGuard";
    case TerminationKind::DomainError: return "DomainError";
  }
  return "?";
}

PlanarPoint max_eq_step(const MaxEqParams& p, const PlanarPoint& s) {
  if (!(s.x > 0) || !(s.y > 0)) {
    throw DomainError("max-type equations are defined on positive reals only, got (" +
                      std::to_string(s.x) + ", " + std::to_string(s.y) + ")");
  }
  const double top = std::max(std::pow(s.y, p.k), p.M);
  return {s.y, p.c * top / (std::pow(s.y, p.l) * std::pow(s.x, p.m))};
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

PlanarPoint step(const FloatMap& map, const PlanarPoint& s) {
  return std::visit(
      overloaded{
          [&](const LoziMap<double>& m) { return lozi_step(m.params, m.formulation, s); },
          [&](const GenLoziMap<double>& m) { return gen_lozi_step(m.params, s); },
          [&](const MaxEqMap& m) { return max_eq_step(m.params, s); },
      },
      map);
}

RationalPoint step(const ExactMap& map, const RationalPoint& s) {
  return std::visit(
      overloaded{
          [&](const LoziMap<Rational>& m) { return lozi_step(m.params, m.formulation, s); },
          [&](const GenLoziMap<Rational>& m) { return gen_lozi_step(m.params, s); },
      },
      map);
}

void check_domain(const FloatMap& map, const PlanarPoint& s) {
  if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
    throw DomainError("state must be finite");
  }
  if (std::holds_alternative<MaxEqMap>(map) && (!(s.x > 0) || !(s.y > 0))) {
    throw DomainError("max-type equations are defined on positive reals only");
  }
}

Orbit iterate(const FloatMap& map, const PlanarPoint& initial, std::size_t steps,
              double guard) {
  if (!(guard > 0)) throw InvalidParameters("divergence guard must be positive");
  check_domain(map, initial);

  Orbit orbit;
  orbit.initial = initial;
  orbit.points.reserve(steps + 1);
  orbit.points.push_back(initial);
  if (sup_norm(initial) > guard) {
    orbit.termination = {TerminationKind::DivergenceGuard, 0};
    return orbit;
  }
  const bool positive_domain = std::holds_alternative<MaxEqMap>(map);

  PlanarPoint state = initial;
  for (std::size_t n = 1; n <= steps; ++n) {
    state = step(map, state);
    if (std::isnan(state.x) || std::isnan(state.y) ||
        (positive_domain && (!(state.x > 0) || !(state.y > 0)))) {
      orbit.termination = {TerminationKind::DomainError, n};
      return orbit;
    }
    if (std::isinf(state.x) || std::isinf(state.y)) {
      orbit.termination = {TerminationKind::DivergenceGuard, n};
      return orbit;
    }
    orbit.points.push_back(state);
    if (sup_norm(state) > guard) {
      orbit.termination = {TerminationKind::DivergenceGuard, n};
      return orbit;
    }
  }
  return orbit;
}

RationalOrbit iterate(const ExactMap& map, const RationalPoint& initial, std::size_t steps) {
  RationalOrbit orbit;
  orbit.initial = initial;
  orbit.points.reserve(steps + 1);
  orbit.points.push_back(initial);
  RationalPoint state = initial;
  for (std::size_t n = 1; n <= steps; ++n) {
    state = step(map, state);
    orbit.points.push_back(state);
  }
  return orbit;
}

}  // namespace lozimax
