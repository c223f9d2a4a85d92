#pragma once

// Machine form of the invariant-region argument for x_{n+1} = 1 - a|x_n| + a x_{n-1}:
// exact images of convex polygons, containment, worklist advancement with
// eta-certification near the 2-cycle endpoints, and the square-transition
// lemma tables.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lozimax/polygon.hpp"

namespace lozimax {

struct RegionSpec {
  enum class Kind { Square, TriangleLower, TriangleUpper, Rect, Union };

  Kind kind = Kind::Square;
  long m = 0, n = 0;                  // Square
  Rational x0, x1, y0, y1;            // Rect [x0,x1]x[y0,y1]
  std::vector<RegionSpec> members;    // Union

  /// C_{m,n} = [2m,2m+2] x [2n,2n+2]
  static RegionSpec square(long m, long n);
  /// {0 <= x,y <= 2, x + y <= 2}
  static RegionSpec triangle_lower();
  /// {0 <= x,y <= 2, x + y >= 2}
  static RegionSpec triangle_upper();
  static RegionSpec rect(Rational x0, Rational x1, Rational y0, Rational y1);
  /// R_t = union of C_{i,j}, |i|,|j| <= t, i.e. [-2t, 2t+2]^2.
  static RegionSpec level(long t);
  static RegionSpec union_of(std::vector<RegionSpec> members);

  std::string describe() const;
  /// Convex members only; throws InvalidParameters for unions.
  ConvexPolygon polygon() const;
};

ConvexPolygon square_polygon(long m, long n);

/// Split along y = 0 and map each part by its affine branch:
/// y >= 0: (y, 1 - a y + a x); y <= 0: (y, 1 + a y + a x). At most two pieces.
std::vector<ConvexPolygon> poly_image(const Rational& a, const ConvexPolygon& poly);

Rational poly_area(const ConvexPolygon& poly);

/// The closure of poly minus region, as convex pieces.
std::vector<ConvexPolygon> region_difference(const RegionSpec& region, const ConvexPolygon& poly);

bool region_contains(const RegionSpec& region, const ConvexPolygon& poly);

enum class ReportStatus { Certified, Failed };

struct VerificationReport {
  std::string lemma;
  ReportStatus status = ReportStatus::Failed;
  std::size_t steps_used = 0;
  std::vector<ConvexPolygon> residual_pieces;
  std::optional<ConvexPolygon> witness;  // set when Failed
  std::string note;

  bool certified() const { return status == ReportStatus::Certified; }
};

/// Called once per surviving piece after every step (step 0 = the start).
using TraceSink = std::function<void(std::size_t step, std::size_t index, const ConvexPolygon&)>;

struct AdvanceOptions {
  std::size_t max_steps = 64;
  Rational eta = Rational(1, 1 << 20);
  /// Residual pieces must cling to one of these; empty disables eta-certification.
  std::vector<RationalPoint> limit_points = {RationalPoint{0, 2}, RationalPoint{2, 0}};
  bool parallel = true;
  TraceSink trace;
};

VerificationReport advance_until_contained(const Rational& a, const ConvexPolygon& start,
                                           const RegionSpec& target, const AdvanceOptions& opts,
                                           std::string lemma = "advance");

/// One step of the worklist: images of every piece minus the target, in a
/// canonical order. Serial and parallel variants live in kernels.
std::vector<ConvexPolygon> advance_pieces(const Rational& a, const std::vector<ConvexPolygon>& pieces,
                                          const RegionSpec& target, bool parallel);

/// Every piece has diameter < eta and all its vertices within eta of one limit point.
bool eta_small(const std::vector<ConvexPolygon>& pieces, const Rational& eta,
               const std::vector<RationalPoint>& limit_points);

/// Governing lemma for a frame square of level max(|m|,|n|) >= 2 (precedence
/// A(a), A-B, A(b), B, C, D, E, F); level 1 squares use the initial
/// proposition. Throws OutOfFrame for C_{0,0}, or when `level` is given and the
/// square is interior to R_{level-1}.
VerificationReport square_transition_check(long m, long n, const Rational& a = Rational(1, 2),
                                           std::optional<long> level = std::nullopt);

/// Checks one lemma's prediction for F(square) irrespective of precedence.
/// lemma is one of "A(a)", "A(b)", "A-B", "B", "C", "D", "E"; j as in the lemma.
VerificationReport lemma_prediction_check(const std::string& lemma, long m, long j,
                                          const Rational& a = Rational(1, 2));

/// Predicted target squares for a lemma (one or two stacked squares).
std::vector<std::pair<long, long>> lemma_prediction(const std::string& lemma, long m, long j);

struct SuiteOptions {
  long levels = 3;
  std::size_t max_steps = 64;
  Rational eta = Rational(1, 1 << 20);
  std::uint64_t seed = 20240601;
  bool parallel = true;
  TraceSink trace;  // receives pieces of the advance-style checks
};

std::vector<VerificationReport> verify_global_attraction_a_half(const SuiteOptions& opts);

/// a = -1/2: invariance of C_{0,0} and descent R_t -> R_{t-1} for t <= levels (<= 3).
std::vector<VerificationReport> verify_a_minus_half(const SuiteOptions& opts);

std::string to_string(ReportStatus s);
std::string format_polygon(const ConvexPolygon& poly);

}  // namespace lozimax
