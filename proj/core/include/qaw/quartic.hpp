#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qaw/qparam.hpp"
#include "qaw/rational.hpp"

namespace qaw {

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One root of the quartic, as decimal strings at the working precision.
struct QuarticRoot {
  std::string re;
  std::string im;
};

struct QuarticSolution {
  std::vector<QuarticRoot> roots;          // 4, sorted by (re, im)
  std::vector<std::string> vieta_residuals;  // |e1-R|, |e2-T|, |e3-S|, |e4+1/q| (relative)
  bool vieta_ok = false;                   // all residuals <= 2^{-bits/2}
  unsigned precision_bits = 0;
};

/// Roots of Z^4 - R Z^3 + T Z^2 - S Z - 1/q by simultaneous (Aberth-style)
/// iteration at the requested binary precision. Throws ConvergenceError after
/// the sweep cap (200).
QuarticSolution solve_quartic(const Rational& R, const Rational& T, const Rational& S,
                              const QParam& qp, unsigned precision_bits = 256);

}  // namespace qaw
