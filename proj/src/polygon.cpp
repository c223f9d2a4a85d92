#include "lozimax/polygon.hpp"

#include <algorithm>

namespace lozimax {

namespace {

bool point_less(const RationalPoint& l, const RationalPoint& r) {
  if (l.x != r.x) return l.x < r.x;
  return l.y < r.y;
}

}  // namespace

Rational cross(const RationalPoint& o, const RationalPoint& p, const RationalPoint& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

// Andrew's monotone chain; strict turns only, so collinear points vanish.
ConvexPolygon ConvexPolygon::hull(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return ConvexPolygon(std::move(pts));

  std::vector<RationalPoint> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0) {
      lower.pop_back();
    }
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0) {
      upper.pop_back();
    }
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  // All collinear: the chains are the two extreme points, each listed twice.
  if (lower.size() == 2 && lower[0] == lower[1]) lower.pop_back();
  return ConvexPolygon(std::move(lower));
}

bool ConvexPolygon::satisfies_invariants() const {
  const std::size_t n = vertices_.size();
  if (n <= 1) return true;
  if (n == 2) return !(vertices_[0] == vertices_[1]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = vertices_[i];
    const auto& p = vertices_[(i + 1) % n];
    const auto& q = vertices_[(i + 2) % n];
    if (o == p || cross(o, p, q) <= 0) return false;
  }
  return true;
}

bool ConvexPolygon::contains(const RationalPoint& p) const {
  const std::size_t n = vertices_.size();
  if (n == 0) return false;
  if (n == 1) return vertices_[0] == p;
  if (n == 2) {
    const auto& s = vertices_[0];
    const auto& t = vertices_[1];
    if (cross(s, t, p) != 0) return false;
    return std::min(s.x, t.x) <= p.x && p.x <= std::max(s.x, t.x) &&
           std::min(s.y, t.y) <= p.y && p.y <= std::max(s.y, t.y);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

std::vector<HalfPlane> ConvexPolygon::edge_half_planes() const {
  std::vector<HalfPlane> out;
  const std::size_t n = vertices_.size();
  if (n < 3) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % n];
    // inside: cross(p, q, r) >= 0  <=>  (q.y-p.y) x - (q.x-p.x) y <= (q.y-p.y) p.x - (q.x-p.x) p.y
    Rational nx = q.y - p.y;
    Rational ny = p.x - q.x;
    Rational c = nx * p.x + ny * p.y;
    out.push_back({nx, ny, c});
  }
  return out;
}

Rational area(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return magnitude(twice) / 2;
}

Rational diameter_squared(const ConvexPolygon& poly) {
  Rational best = 0;
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Rational d = squared_distance(v[i], v[j]);
      if (d > best) best = d;
    }
  }
  return best;
}

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h) {
  const auto& v = poly.vertices();
  if (v.empty()) return poly;
  if (v.size() == 1) return h.contains(v[0]) ? poly : ConvexPolygon{};

  std::vector<RationalPoint> kept;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    const Rational fp = h.c - (h.nx * p.x + h.ny * p.y);  // >= 0 inside
    const Rational fq = h.c - (h.nx * q.x + h.ny * q.y);
    if (fp >= 0) kept.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      const Rational t = fp / (fp - fq);
      kept.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return ConvexPolygon::hull(std::move(kept));
}

std::vector<ConvexPolygon> subtract(const ConvexPolygon& poly, const ConvexPolygon& target) {
  std::vector<ConvexPolygon> pieces;
  if (poly.empty()) return pieces;
  if (target.dimension() < 2) {
    // A lower-dimensional target only removes measure zero from a proper polygon.
    if (poly.dimension() == 2 || !contains(target, poly)) pieces.push_back(poly);
    return pieces;
  }
  ConvexPolygon rest = poly;
  for (const auto& h : target.edge_half_planes()) {
    ConvexPolygon outside = clip(rest, h.opposite());
    if (outside.dimension() == poly.dimension() && !contains(target, outside)) {
      pieces.push_back(std::move(outside));
    }
    rest = clip(rest, h);
    if (rest.empty()) break;
  }
  return pieces;
}

bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const RationalPoint& p) { return outer.contains(p); });
}

ConvexPolygon affine_image(const Affine2& f, const ConvexPolygon& poly) {
  std::vector<RationalPoint> image;
  image.reserve(poly.size());
  for (const auto& p : poly.vertices()) image.push_back(f(p));
  return ConvexPolygon::hull(std::move(image));
}

bool lexicographic_less(const ConvexPolygon& l, const ConvexPolygon& r) {
  return std::lexicographical_compare(l.vertices().begin(), l.vertices().end(),
                                      r.vertices().begin(), r.vertices().end(), point_less);
}

}  // namespace lozimax
