#pragma once

// JSON encodings shared by the subcommands and the presets.

#include <json.hpp>

#include "lozimax/analysis.hpp"
#include "lozimax/attractor.hpp"
#include "lozimax/region.hpp"

namespace lozimax::cli {

using nlohmann::json;

inline json to_json(const PlanarPoint& p) { return json::array({p.x, p.y}); }
inline json to_json(const RationalPoint& p) { return json::array({to_string(p.x), to_string(p.y)}); }

inline json to_json(const ConvexPolygon& poly) {
  json out = json::array();
  for (const auto& v : poly.vertices()) out.push_back(to_json(v));
  return out;
}

inline json to_json(const VerificationReport& r) {
  json pieces = json::array();
  for (const auto& p : r.residual_pieces) pieces.push_back(to_json(p));
  json out = {{"lemma", r.lemma},
              {"status", to_string(r.status)},
              {"steps_used", r.steps_used},
              {"residual_pieces", pieces},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

template <class T>
json to_json(const BasicEquilibriumSet<T>& eq) {
  json iso = json::array();
  for (const auto& v : eq.isolated) {
    if constexpr (std::is_same_v<T, Rational>) {
      iso.push_back(to_string(v));
    } else {
      iso.push_back(v);
    }
  }
  json half = nullptr;
  if (eq.half_line) {
    json endpoint;
    if constexpr (std::is_same_v<T, Rational>) {
      endpoint = to_string(eq.half_line->endpoint);
    } else {
      endpoint = eq.half_line->endpoint;
    }
    half = {{"endpoint", endpoint},
            {"direction", eq.half_line->direction == BasicHalfLine<T>::Direction::Up ? "up" : "down"}};
  }
  return {{"kind", eq.is_finite() ? "Finite" : "HalfLine"}, {"isolated", iso}, {"half_line", half}};
}

inline json to_json(const StabilityReport& s) {
  json eig = json::array();
  for (const auto& e : s.eigenvalues) eig.push_back({{"re", e.real()}, {"im", e.imag()}});
  return {{"eigenvalues", eig},
          {"spectral_radius", s.spectral_radius},
          {"classification", std::string(to_string(s.classification))},
          {"schur_cohn_stable", s.schur_cohn_stable}};
}

inline json to_json(const MisiurewiczReport& m) {
  return {{"c1", m.c1}, {"c2", m.c2}, {"c3", m.c3}, {"c4", m.c4}, {"c5", m.c5}, {"overall", m.overall}};
}

inline json to_json(const TrappingTriangle& t) {
  return {{"fixed_point", to_json(t.fixed_point)}, {"I", to_json(t.I)}, {"FI", to_json(t.FI)}, {"FFI", to_json(t.FFI)}};
}

}  // namespace lozimax::cli
