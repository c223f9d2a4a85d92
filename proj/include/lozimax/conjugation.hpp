#pragma once

// Logarithmic change of variables y = q log_A(z) + p linking a generalized
// Lozi map with a family of max-type equations.

#include <string_view>

#include "lozimax/core_maps.hpp"

namespace lozimax {

class ChangeOfVariables {
 public:
  /// Throws InvalidParameters unless base > 0, base != 1, scale != 0 and
  /// base^shift is finite and positive.
  ChangeOfVariables(double base, double shift, double scale);

  double base() const { return base_; }
  double shift() const { return shift_; }
  double scale() const { return scale_; }

  /// (A > 1 and alpha/q > 0) or (0 < A < 1 and alpha/q < 0).
  bool compatible_with(double alpha) const;

  /// q log_A(z) + p; throws DomainError for z <= 0.
  double forward(double z) const;
  /// A^{(w - p)/q}
  double inverse(double w) const;

  PlanarPoint forward(const PlanarPoint& z) const { return {forward(z.x), forward(z.y)}; }
  PlanarPoint inverse(const PlanarPoint& w) const { return {inverse(w.x), inverse(w.y)}; }

 private:
  double base_;
  double shift_;
  double scale_;
  double log_base_;
};

inline double forward_change(const ChangeOfVariables& cov, double z) { return cov.forward(z); }
inline double inverse_change(const ChangeOfVariables& cov, double w) { return cov.inverse(w); }

enum class FamilyCase {
  Delta0AnyB,
  Delta0Sum1AnyB,
  RatioPosBGt1,
  RatioNegCLt1,
  Sum1ScaleBGt1,
  Sum1ScaleCLt1,
  General,
};

/// Upper-case tag, e.g. "DELTA0_SUM1_ANY_B".
std::string_view to_string(FamilyCase c);

FamilyCase classify_family(const GenLoziParams& gl);

/// k = 2 alpha, l = alpha - beta, m = -gamma, M = A^{-2 alpha p/q},
/// c = A^{(p(alpha+beta+gamma-1) + delta)/q}. Throws IncompatibleChange.
MaxEqParams derive_max_params(const GenLoziParams& gl, const ChangeOfVariables& cov);

/// A = 2, q = sign(alpha); p = 0 when delta = 0 or alpha+beta+gamma = 1,
/// otherwise p = -delta/(alpha+beta+gamma-1) so that c = 1.
ChangeOfVariables canonical_change(const GenLoziParams& gl);

struct LoziForm {
  GenLoziParams params;
  ChangeOfVariables cov;
};

/// Inverse of derive_max_params: a generalized Lozi map and change of
/// variables (with the given base) whose max-equation is `mp`. Needs k != 0.
LoziForm lozi_form(const MaxEqParams& mp, double base = 2.0);

/// Sup-norm of phi(F~(z)) - F(phi(z)); zero for an exact conjugacy.
double conjugacy_residual(const GenLoziParams& gl, const MaxEqParams& mp,
                          const ChangeOfVariables& cov, const PlanarPoint& z);

}  // namespace lozimax
