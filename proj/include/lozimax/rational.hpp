#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lozimax {

/// Exact rational number. GMP keeps arithmetic results in lowest terms, but
/// the two-integer constructor does not reduce: build fractions with ratio().
using Rational = mpq_class;

inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "num/den" or an integer literal. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "num/den", with "k/1" for integers.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// |z| written as max{z, -z}.
inline double magnitude(double z) { return z < -z ? -z : z; }
inline Rational magnitude(const Rational& z) {
  Rational neg = -z;
  return z < neg ? neg : z;
}

inline bool is_finite_value(double v) { return v - v == 0.0; }
inline bool is_finite_value(const Rational&) { return true; }

}  // namespace lozimax
