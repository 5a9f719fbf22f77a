#pragma once

#include <cstdint>

#include "qaw/xpoly.hpp"

namespace qaw {

/// splitmix64; small, seedable, reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Coefficient-sized rational: numerator in [-9, 9], denominator in [1, 9].
  Rational rational() {
    Rational r(range(-9, 9), range(1, 9));
    r.canonicalize();  // mpq_class(num, den) does not reduce on its own
    return r;
  }

  XPoly xpoly(int max_degree) {
    std::vector<Rational> c;
    const int d = static_cast<int>(range(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational());
    return XPoly(std::move(c));
  }

 private:
  std::uint64_t state_;
};

}  // namespace qaw
