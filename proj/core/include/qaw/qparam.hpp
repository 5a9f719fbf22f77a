#pragma once

#include <stdexcept>

#include "qaw/rational.hpp"

namespace qaw {

// Lattice parameter. q is stored through its exact square root t = q^{1/2},
// so that alpha, gamma_n, alpha_n and both operators stay rational.
struct QParam {
  Rational t;      // q^{1/2}, 0 < t < 1
  Rational q;      // t^2
  Rational alpha;  // (t + 1/t)/2, > 1

  explicit QParam(Rational t_) : t(std::move(t_)) {
    if (!(t > 0 && t < 1))
      throw std::domain_error("QParam: t must satisfy 0 < t < 1");
    q = t * t;
    alpha = (t + Rational(1) / t) / 2;
  }
};

}  // namespace qaw
