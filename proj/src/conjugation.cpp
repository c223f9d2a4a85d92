#include "lozimax/conjugation.hpp"

#include <cmath>
#include <string>

namespace lozimax {

namespace {

constexpr double kSumTolerance = 1e-12;

bool sums_to_one(const GenLoziParams& gl) {
  return std::abs(gl.alpha + gl.beta + gl.gamma - 1.0) <= kSumTolerance;
}

}  // namespace

ChangeOfVariables::ChangeOfVariables(double base, double shift, double scale)
    : base_(base), shift_(shift), scale_(scale), log_base_(std::log(base)) {
  if (!(base > 0) || !std::isfinite(base)) {
    throw InvalidParameters("change of variables needs a positive finite base");
  }
  if (base == 1.0) throw InvalidParameters("change of variables base must differ from 1");
  if (scale == 0.0 || !std::isfinite(scale)) {
    throw InvalidParameters("change of variables scale q must be nonzero");
  }
  const double P = std::pow(base, shift);
  if (!std::isfinite(shift) || !std::isfinite(P) || !(P > 0)) {
    throw InvalidParameters("A^p must be finite and positive");
  }
}

bool ChangeOfVariables::compatible_with(double alpha) const {
  const double ratio = alpha / scale_;
  return (base_ > 1 && ratio > 0) || (base_ < 1 && ratio < 0);
}

double ChangeOfVariables::forward(double z) const {
  if (!(z > 0)) throw DomainError("forward change needs z > 0, got " + std::to_string(z));
  return scale_ * std::log(z) / log_base_ + shift_;
}

double ChangeOfVariables::inverse(double w) const {
  return std::pow(base_, (w - shift_) / scale_);
}

std::string_view to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::Delta0AnyB: return "DELTA0_ANY_B";
    case FamilyCase::Delta0Sum1AnyB: return "DELTA0_SUM1_ANY_B";
    case FamilyCase::RatioPosBGt1: return "RATIO_POS_B_GT_1";
    case FamilyCase::RatioNegCLt1: return "RATIO_NEG_C_LT_1";
    case FamilyCase::Sum1ScaleBGt1: return "SUM1_SCALE_B_GT_1";
    case FamilyCase::Sum1ScaleCLt1: return "SUM1_SCALE_C_LT_1";
    case FamilyCase::General: return "GENERAL";
  }
  return "?";
}

FamilyCase classify_family(const GenLoziParams& gl) {
  const bool sum1 = sums_to_one(gl);
  if (gl.delta == 0.0) return sum1 ? FamilyCase::Delta0Sum1AnyB : FamilyCase::Delta0AnyB;
  if (!sum1) {
    const double ratio = gl.delta / (gl.alpha + gl.beta + gl.gamma - 1.0);
    if (ratio > 0) return FamilyCase::RatioPosBGt1;
    if (ratio < 0) return FamilyCase::RatioNegCLt1;
    return FamilyCase::General;
  }
  const double ratio = gl.delta / gl.alpha;
  if (ratio > 0) return FamilyCase::Sum1ScaleBGt1;
  if (ratio < 0) return FamilyCase::Sum1ScaleCLt1;
  return FamilyCase::General;
}

MaxEqParams derive_max_params(const GenLoziParams& gl, const ChangeOfVariables& cov) {
  if (!cov.compatible_with(gl.alpha)) {
    throw IncompatibleChange(
        "need A > 1 with alpha/q > 0, or 0 < A < 1 with alpha/q < 0");
  }
  const double A = cov.base(), p = cov.shift(), q = cov.scale();
  const double k = 2.0 * gl.alpha;
  const double l = gl.alpha - gl.beta;
  const double m = -gl.gamma;
  const double M = std::pow(A, -2.0 * gl.alpha * p / q);
  const double c = std::pow(A, (p * (gl.alpha + gl.beta + gl.gamma - 1.0) + gl.delta) / q);
  return MaxEqParams(k, l, m, M, c);
}

ChangeOfVariables canonical_change(const GenLoziParams& gl) {
  const double q = gl.alpha > 0 ? 1.0 : -1.0;
  double p = 0.0;
  if (gl.delta != 0.0 && !sums_to_one(gl)) {
    p = -gl.delta / (gl.alpha + gl.beta + gl.gamma - 1.0);
  }
  return ChangeOfVariables(2.0, p, q);
}

LoziForm lozi_form(const MaxEqParams& mp, double base) {
  if (mp.k == 0.0) {
    throw InvalidParameters("max-equation with k = 0 has no generalized Lozi form (alpha = 0)");
  }
  const double alpha = mp.k / 2.0;
  const double beta = alpha - mp.l;
  const double gamma = -mp.m;
  double q = alpha > 0 ? 1.0 : -1.0;
  if (base < 1.0) q = -q;
  const double log_base = std::log(base);
  const double p = -q * (std::log(mp.M) / log_base) / mp.k;
  const double delta = q * std::log(mp.c) / log_base - p * (alpha + beta + gamma - 1.0);
  return {GenLoziParams(alpha, beta, gamma, delta), ChangeOfVariables(base, p, q)};
}

double conjugacy_residual(const GenLoziParams& gl, const MaxEqParams& mp,
                          const ChangeOfVariables& cov, const PlanarPoint& z) {
  const PlanarPoint lhs = cov.forward(max_eq_step(mp, z));
  const PlanarPoint rhs = gen_lozi_step(gl, cov.forward(z));
  return sup_norm({lhs.x - rhs.x, lhs.y - rhs.y});
}

}  // namespace lozimax
