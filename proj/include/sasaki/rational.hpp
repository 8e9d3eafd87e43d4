#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace sasaki {

// Exact arbitrary-precision rational scalar. Always canonical: lowest
// terms, denominator > 0.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts a decimal integer or "p/q" with q > 0. Anything else throws.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q",
// sign on the numerator only.
std::string format_rational(const Rational& q);

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace sasaki
