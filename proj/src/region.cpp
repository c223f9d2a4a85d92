#include "lozimax/region.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lozimax/kernels.hpp"

namespace lozimax {

// -- regions ----------------------------------------------------------------

RegionSpec RegionSpec::square(long m, long n) {
  RegionSpec r;
  r.kind = Kind::Square;
  r.m = m;
  r.n = n;
  return r;
}

RegionSpec RegionSpec::triangle_lower() {
  RegionSpec r;
  r.kind = Kind::TriangleLower;
  return r;
}

RegionSpec RegionSpec::triangle_upper() {
  RegionSpec r;
  r.kind = Kind::TriangleUpper;
  return r;
}

RegionSpec RegionSpec::rect(Rational x0, Rational x1, Rational y0, Rational y1) {
  if (x0 > x1 || y0 > y1) throw InvalidParameters("rectangle bounds are reversed");
  RegionSpec r;
  r.kind = Kind::Rect;
  r.x0 = std::move(x0);
  r.x1 = std::move(x1);
  r.y0 = std::move(y0);
  r.y1 = std::move(y1);
  return r;
}

RegionSpec RegionSpec::level(long t) {
  return rect(Rational(-2 * t), Rational(2 * t + 2), Rational(-2 * t), Rational(2 * t + 2));
}

RegionSpec RegionSpec::union_of(std::vector<RegionSpec> members) {
  RegionSpec r;
  r.kind = Kind::Union;
  r.members = std::move(members);
  return r;
}

std::string RegionSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Square: out << "C(" << m << "," << n << ")"; break;
    case Kind::TriangleLower: out << "TriangleLower"; break;
    case Kind::TriangleUpper: out << "TriangleUpper"; break;
    case Kind::Rect:
      out << "[" << to_string(x0) << "," << to_string(x1) << "]x[" << to_string(y0) << ","
          << to_string(y1) << "]";
      break;
    case Kind::Union:
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << " u ";
        out << members[i].describe();
      }
      break;
  }
  return out.str();
}

ConvexPolygon square_polygon(long m, long n) {
  const Rational x0 = 2 * m, y0 = 2 * n;
  return ConvexPolygon::hull({{x0, y0}, {x0 + 2, y0}, {x0 + 2, y0 + 2}, {x0, y0 + 2}});
}

ConvexPolygon RegionSpec::polygon() const {
  switch (kind) {
    case Kind::Square: return square_polygon(m, n);
    case Kind::TriangleLower: return ConvexPolygon::hull({{0, 0}, {2, 0}, {0, 2}});
    case Kind::TriangleUpper: return ConvexPolygon::hull({{2, 0}, {2, 2}, {0, 2}});
    case Kind::Rect: return ConvexPolygon::hull({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
    case Kind::Union: break;
  }
  throw InvalidParameters("a union region has no single polygon");
}

// -- image and containment --------------------------------------------------

std::vector<ConvexPolygon> poly_image(const Rational& a, const ConvexPolygon& poly) {
  const Affine2 upper{0, 1, a, -a, 0, 1};
  const Affine2 lower{0, 1, a, a, 0, 1};
  const auto& v = poly.vertices();
  if (v.empty()) return {};
  const bool all_up = std::all_of(v.begin(), v.end(), [](const RationalPoint& p) { return p.y >= 0; });
  const bool all_down = std::all_of(v.begin(), v.end(), [](const RationalPoint& p) { return p.y <= 0; });
  if (all_up) return {affine_image(upper, poly)};
  if (all_down) return {affine_image(lower, poly)};
  // Crossing: both halves are full-dimensional and share the crossing points.
  const ConvexPolygon up = clip(poly, HalfPlane{0, -1, 0});
  const ConvexPolygon down = clip(poly, HalfPlane{0, 1, 0});
  return {affine_image(upper, up), affine_image(lower, down)};
}

Rational poly_area(const ConvexPolygon& poly) { return area(poly); }

std::vector<ConvexPolygon> region_difference(const RegionSpec& region, const ConvexPolygon& poly) {
  if (region.kind != RegionSpec::Kind::Union) return subtract(poly, region.polygon());
  std::vector<ConvexPolygon> rest{poly};
  for (const auto& member : region.members) {
    std::vector<ConvexPolygon> next;
    for (const auto& piece : rest) {
      auto parts = region_difference(member, piece);
      next.insert(next.end(), std::make_move_iterator(parts.begin()),
                  std::make_move_iterator(parts.end()));
    }
    rest = std::move(next);
    if (rest.empty()) break;
  }
  return rest;
}

bool region_contains(const RegionSpec& region, const ConvexPolygon& poly) {
  if (poly.empty()) return true;
  if (region.kind != RegionSpec::Kind::Union) return contains(region.polygon(), poly);
  return region_difference(region, poly).empty();
}

// -- worklist ---------------------------------------------------------------

bool eta_small(const std::vector<ConvexPolygon>& pieces, const Rational& eta,
               const std::vector<RationalPoint>& limit_points) {
  if (limit_points.empty()) return pieces.empty();
  const Rational eta2 = eta * eta;
  for (const auto& piece : pieces) {
    if (!(diameter_squared(piece) < eta2)) return false;
    const bool clings = std::any_of(limit_points.begin(), limit_points.end(), [&](const RationalPoint& c) {
      return std::all_of(piece.vertices().begin(), piece.vertices().end(),
                         [&](const RationalPoint& p) { return squared_distance(p, c) < eta2; });
    });
    if (!clings) return false;
  }
  return true;
}

std::vector<ConvexPolygon> advance_pieces(const Rational& a, const std::vector<ConvexPolygon>& pieces,
                                          const RegionSpec& target, bool parallel) {
  return parallel ? kernels::advance_pieces(a, pieces, target)
                  : kernels::reference::advance_pieces(a, pieces, target);
}

namespace {

void emit(const TraceSink& trace, std::size_t step, const std::vector<ConvexPolygon>& pieces) {
  if (!trace) return;
  for (std::size_t i = 0; i < pieces.size(); ++i) trace(step, i, pieces[i]);
}

ConvexPolygon largest(const std::vector<ConvexPolygon>& pieces) {
  return *std::max_element(pieces.begin(), pieces.end(), [](const auto& l, const auto& r) {
    return diameter_squared(l) < diameter_squared(r);
  });
}

VerificationReport certified(std::string lemma, std::size_t steps,
                             std::vector<ConvexPolygon> residual = {}) {
  VerificationReport r;
  r.lemma = std::move(lemma);
  r.status = ReportStatus::Certified;
  r.steps_used = steps;
  r.residual_pieces = std::move(residual);
  return r;
}

VerificationReport failed(std::string lemma, std::size_t steps, ConvexPolygon witness,
                          std::string note = {}) {
  VerificationReport r;
  r.lemma = std::move(lemma);
  r.status = ReportStatus::Failed;
  r.steps_used = steps;
  r.witness = std::move(witness);
  r.note = std::move(note);
  return r;
}

}  // namespace

VerificationReport advance_until_contained(const Rational& a, const ConvexPolygon& start,
                                           const RegionSpec& target, const AdvanceOptions& opts,
                                           std::string lemma) {
  if (!(opts.eta > 0)) throw InvalidParameters("smallness eta must be positive");
  std::vector<ConvexPolygon> work = region_difference(target, start);
  emit(opts.trace, 0, work);
  for (std::size_t step = 0;; ++step) {
    if (work.empty()) return certified(std::move(lemma), step);
    if (!opts.limit_points.empty() && eta_small(work, opts.eta, opts.limit_points)) {
      return certified(std::move(lemma), step, std::move(work));
    }
    if (step == opts.max_steps) {
      auto r = failed(std::move(lemma), step, largest(work), "step budget exhausted");
      r.residual_pieces = std::move(work);
      return r;
    }
    work = advance_pieces(a, work, target, opts.parallel);
    emit(opts.trace, step + 1, work);
  }
}

// -- lemma tables -----------------------------------------------------------

namespace {

long half(long v) { return v / 2; }  // callers only pass even values
bool odd(long v) { return v % 2 != 0; }

std::vector<std::pair<long, long>> stacked(long col, long row_even_or_lo, std::optional<long> row_hi) {
  if (row_hi) return {{col, row_even_or_lo}, {col, *row_hi}};
  return {{col, row_even_or_lo}};
}

RegionSpec squares_region(const std::vector<std::pair<long, long>>& squares) {
  std::vector<RegionSpec> members;
  for (auto [i, j] : squares) members.push_back(RegionSpec::square(i, j));
  return members.size() == 1 ? members.front() : RegionSpec::union_of(std::move(members));
}

std::pair<long, long> lemma_square(const std::string& lemma, long m, long j) {
  if (lemma == "A(a)") return {m - j, m};
  if (lemma == "A(b)") return {m, j};
  if (lemma == "A-B") return {-j, m};
  if (lemma == "B") return {m, -j};
  if (lemma == "C") return {j, -m};
  if (lemma == "D") return {-m, j};
  if (lemma == "E") return {-m, -j};
  throw InvalidParameters("unknown lemma " + lemma);
}

std::string lemma_label(const std::string& lemma, long m, long j) {
  auto [i, k] = lemma_square(lemma, m, j);
  std::ostringstream out;
  out << "Lemma " << lemma << " m=" << m << " j=" << j << " C(" << i << "," << k << ")";
  return out.str();
}

VerificationReport one_step_check(const std::string& label, const Rational& a,
                                  const ConvexPolygon& start, const RegionSpec& target) {
  for (const auto& piece : poly_image(a, start)) {
    auto outside = region_difference(target, piece);
    if (!outside.empty()) {
      return failed(label, 1, piece, "image leaves " + target.describe());
    }
  }
  return certified(label, 1);
}

VerificationReport lemma_f_check(long m, const Rational& a) {
  std::ostringstream label;
  label << "Lemma F m=" << m << " C(" << -m << "," << -m << ")";
  const Rational corner = -2 * m;
  const auto first = poly_image(a, square_polygon(-m, -m));
  const RegionSpec stage1 =
      RegionSpec::union_of({RegionSpec::square(-m, -m), RegionSpec::square(-m, -m + 1)});
  for (const auto& piece : first) {
    if (!region_contains(stage1, piece)) return failed(label.str(), 1, piece, "F(C) not in " + stage1.describe());
  }

  std::vector<ConvexPolygon> second;
  for (const auto& piece : first) {
    auto img = poly_image(a, piece);
    second.insert(second.end(), img.begin(), img.end());
  }
  const RegionSpec stage2 = RegionSpec::union_of(
      {RegionSpec::square(-m, -m), RegionSpec::square(-m, -m + 1), RegionSpec::square(-m + 1, -m + 1)});
  std::vector<ConvexPolygon> triangles;
  for (const auto& piece : second) {
    if (!region_contains(stage2, piece)) return failed(label.str(), 2, piece, "F^2(C) not in " + stage2.describe());
    // T_m: the part of F^2(C) left of x = -2m+2.
    auto t = clip(piece, HalfPlane{1, 0, corner + 2});
    if (t.dimension() == 2) triangles.push_back(std::move(t));
  }

  const RegionSpec stage3 = RegionSpec::union_of({RegionSpec::square(-m, -m + 1), RegionSpec::level(m - 1)});
  for (const auto& t : triangles) {
    for (const auto& piece : poly_image(a, t)) {
      if (!region_contains(stage3, piece)) return failed(label.str(), 3, piece, "F(T_m) not in " + stage3.describe());
    }
  }
  auto r = certified(label.str(), 3);
  r.residual_pieces = triangles;
  r.note = "T_m recorded in residual_pieces";
  return r;
}

}  // namespace

std::vector<std::pair<long, long>> lemma_prediction(const std::string& lemma, long m, long j) {
  if (lemma == "A(a)") {
    return odd(j) ? stacked(m, half(-j - 1), half(-j + 1)) : stacked(m, half(-j), std::nullopt);
  }
  if (lemma == "A(b)") {
    return odd(m - j) ? stacked(j, half(m - j - 1), half(m - j + 1)) : stacked(j, half(m - j), std::nullopt);
  }
  if (lemma == "A-B") {
    return odd(m + j) ? stacked(m, half(-m - j - 1), half(-m - j + 1)) : stacked(m, half(-m - j), std::nullopt);
  }
  if (lemma == "B") {
    return odd(m - j) ? stacked(-j, half(m - j + 1), std::nullopt) : stacked(-j, half(m - j), half(m - j + 2));
  }
  if (lemma == "C") {
    return odd(m - j) ? stacked(-m, half(-m + j + 1), std::nullopt) : stacked(-m, half(-m + j), half(-m + j + 2));
  }
  if (lemma == "D") {
    return odd(m + j) ? stacked(j, half(-m - j - 1), half(-m - j + 1)) : stacked(j, half(-m - j), std::nullopt);
  }
  if (lemma == "E") {
    return odd(m + j) ? stacked(-j, half(-m - j + 1), std::nullopt) : stacked(-j, half(-m - j), half(-m - j + 2));
  }
  throw InvalidParameters("unknown lemma " + lemma);
}

VerificationReport lemma_prediction_check(const std::string& lemma, long m, long j, const Rational& a) {
  auto [i, k] = lemma_square(lemma, m, j);
  return one_step_check(lemma_label(lemma, m, j), a, square_polygon(i, k),
                        squares_region(lemma_prediction(lemma, m, j)));
}

VerificationReport square_transition_check(long m, long n, const Rational& a, std::optional<long> level) {
  const long t = std::max(std::labs(m), std::labs(n));
  if (t == 0) throw OutOfFrame("C(0,0) is the invariant core, not a frame square");
  if (level && t < *level) {
    throw OutOfFrame("square C(" + std::to_string(m) + "," + std::to_string(n) + ") is interior to R_" +
                     std::to_string(*level - 1));
  }
  if (t == 1) {
    AdvanceOptions opts;
    if (m == 1 && n == 1) {
      return one_step_check("Initial proposition C(1,1) -> C(1,0)", a, square_polygon(1, 1),
                            RegionSpec::square(1, 0));
    }
    return advance_until_contained(a, square_polygon(m, n), RegionSpec::square(0, 0), opts,
                                   "Initial proposition C(" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  if (n == t) return m >= 0 ? lemma_prediction_check("A(a)", t, t - m, a) : lemma_prediction_check("A-B", t, -m, a);
  if (m == t) return n >= 0 ? lemma_prediction_check("A(b)", t, n, a) : lemma_prediction_check("B", t, -n, a);
  if (n == -t) return m == -t ? lemma_f_check(t, a) : lemma_prediction_check("C", t, m, a);
  return n >= 0 ? lemma_prediction_check("D", t, n, a) : lemma_prediction_check("E", t, -n, a);
}

// -- suites -----------------------------------------------------------------

namespace {

std::vector<std::pair<long, long>> frame_squares(long t) {
  std::vector<std::pair<long, long>> out;
  for (long i = -t; i <= t; ++i) {
    for (long j = -t; j <= t; ++j) {
      if (std::max(std::labs(i), std::labs(j)) == t) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string square_name(long i, long j) {
  return "C(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Random proper polygon with dyadic coordinates in [-8, 8].
ConvexPolygon random_polygon(std::mt19937_64& gen) {
  for (;;) {
    const std::size_t count = 3 + gen() % 6;
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < count; ++i) {
      const long nx = static_cast<long>(gen() % 257) - 128;
      const long ny = static_cast<long>(gen() % 257) - 128;
      pts.push_back({ratio(nx, 16), ratio(ny, 16)});
    }
    auto poly = ConvexPolygon::hull(std::move(pts));
    if (poly.dimension() == 2) return poly;
  }
}

AdvanceOptions advance_options(const SuiteOptions& opts) {
  AdvanceOptions a;
  a.max_steps = opts.max_steps;
  a.eta = opts.eta;
  a.parallel = opts.parallel;
  return a;
}

}  // namespace

std::vector<VerificationReport> verify_global_attraction_a_half(const SuiteOptions& opts) {
  if (opts.levels < 1) throw InvalidParameters("levels must be at least 1");
  const Rational a(1, 2);
  std::vector<VerificationReport> reports;
  AdvanceOptions adv = advance_options(opts);

  reports.push_back(advance_until_contained(a, square_polygon(0, 0), RegionSpec::square(0, 0), adv,
                                            "C(0,0) contained in C(0,0)"));

  // Triangle invariance (one step each).
  for (auto [name, spec] : {std::pair{"F(TriangleLower) in TriangleLower", RegionSpec::triangle_lower()},
                            std::pair{"F(TriangleUpper) in TriangleUpper", RegionSpec::triangle_upper()}}) {
    if (opts.max_steps == 0) {
      reports.push_back(failed(name, 0, spec.polygon(), "no iteration allowed"));
    } else {
      reports.push_back(one_step_check(name, a, spec.polygon(), spec));
    }
  }

  // Area halving on random rational polygons.
  {
    std::mt19937_64 gen(opts.seed);
    std::optional<ConvexPolygon> bad;
    std::optional<ConvexPolygon> first;
    for (int i = 0; i < 100; ++i) {
      auto poly = random_polygon(gen);
      if (!first) first = poly;
      Rational total = 0;
      for (const auto& piece : poly_image(a, poly)) total += area(piece);
      if (total != a * area(poly) && !bad) bad = poly;
    }
    const std::string name = "area halving on 100 random polygons";
    if (opts.max_steps == 0) {
      reports.push_back(failed(name, 0, *first, "no iteration allowed"));
    } else if (bad) {
      reports.push_back(failed(name, 1, *bad, "area not halved"));
    } else {
      reports.push_back(certified(name, 1));
    }
  }

  const auto segment = [](long x0, long y0, long x1, long y1) {
    return ConvexPolygon::hull({{x0, y0}, {x1, y1}});
  };
  reports.push_back(advance_until_contained(a, segment(2, 0, 3, 0), RegionSpec::square(0, 0), adv,
                                            "S(1,0) enters C(0,0)"));
  reports.push_back(advance_until_contained(a, segment(-1, 2, 0, 2), RegionSpec::square(0, 0), adv,
                                            "S(1,2) enters C(0,0)"));

  AdvanceOptions traced = adv;
  traced.trace = opts.trace;
  for (auto [i, j] : frame_squares(1)) {
    reports.push_back(advance_until_contained(a, square_polygon(i, j), RegionSpec::square(0, 0), traced,
                                              square_name(i, j) + " enters C(0,0)"));
  }

  for (long t = 2; t <= opts.levels; ++t) {
    for (auto [i, j] : frame_squares(t)) {
      if (opts.max_steps == 0) {
        reports.push_back(failed("frame " + square_name(i, j), 0, square_polygon(i, j), "no iteration allowed"));
      } else {
        reports.push_back(square_transition_check(i, j, a));
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_a_minus_half(const SuiteOptions& opts) {
  if (opts.levels < 1 || opts.levels > 3) throw InvalidParameters("a = -1/2 preset supports levels 1..3");
  const Rational a(-1, 2);
  std::vector<VerificationReport> reports;
  AdvanceOptions adv = advance_options(opts);
  adv.limit_points.clear();
  adv.trace = opts.trace;

  if (opts.max_steps == 0) {
    reports.push_back(failed("F(C(0,0)) in C(0,0)", 0, square_polygon(0, 0), "no iteration allowed"));
  } else {
    reports.push_back(one_step_check("F(C(0,0)) in C(0,0)", a, square_polygon(0, 0), RegionSpec::square(0, 0)));
  }
  for (long t = 1; t <= opts.levels; ++t) {
    const RegionSpec target = t == 1 ? RegionSpec::square(0, 0) : RegionSpec::level(t - 1);
    for (auto [i, j] : frame_squares(t)) {
      reports.push_back(advance_until_contained(a, square_polygon(i, j), target, adv,
                                                square_name(i, j) + " enters R_" + std::to_string(t - 1)));
    }
  }
  return reports;
}

std::string to_string(ReportStatus s) { return s == ReportStatus::Certified ? "Certified" : "Failed"; }

std::string format_polygon(const ConvexPolygon& poly) {
  std::string out;
  for (const auto& v : poly.vertices()) {
    if (!out.empty()) out += ' ';
    out += to_string(v.x) + ":" + to_string(v.y);
  }
  return out;
}

}  // namespace lozimax
