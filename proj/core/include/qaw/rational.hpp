#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qaw {

// Exact arbitrary-precision rational. mpq_class keeps gcd(num,den)=1 and den>0
// after every arithmetic operation, which is exactly the canonical form we need.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses "num", "-num" or "num/den" (den > 0 after canonicalization).
inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(s));
  r.canonicalize();
  return r;
}

/// "num" if integral, otherwise "num/den".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// r^e for any integer exponent; throws on 0^negative.
inline Rational pow_int(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(r)) {
    if (e < 0) throw std::domain_error("pow_int: zero base, negative exponent");
    return Rational(0);
  }
  Rational base = e > 0 ? r : Rational(1) / r;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace qaw
