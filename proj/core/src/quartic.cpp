#include "qaw/quartic.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <array>

namespace qaw {

namespace {

using BF = boost::multiprecision::mpfr_float;

struct CF {
  BF re, im;
  CF operator+(const CF& o) const { return {re + o.re, im + o.im}; }
  CF operator-(const CF& o) const { return {re - o.re, im - o.im}; }
  CF operator*(const CF& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CF operator/(const CF& o) const {
    BF d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
};

BF cabs(const CF& z) { return sqrt(z.re * z.re + z.im * z.im); }

BF to_bf(const Rational& r) {
  return BF(r.get_num().get_str()) / BF(r.get_den().get_str());
}

std::string bf_str(const BF& v, unsigned digits) {
  return v.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace

QuarticSolution solve_quartic(const Rational& R, const Rational& T, const Rational& S,
                              const QParam& qp, unsigned precision_bits) {
  if (precision_bits < 64)
    throw std::invalid_argument("solve_quartic: precision_bits must be >= 64");
  const unsigned work_bits = precision_bits + 32;
  const unsigned digits = static_cast<unsigned>(work_bits * 0.30103) + 2;
  BF::default_precision(digits);

  // Monic quartic coefficients: Z^4 + c3 Z^3 + c2 Z^2 + c1 Z + c0.
  const std::array<BF, 4> c = {-to_bf(Rational(1) / qp.q), -to_bf(S), to_bf(T), -to_bf(R)};
  auto eval = [&](const CF& z) {
    CF acc{BF(1), BF(0)};
    for (int k = 3; k >= 0; --k) acc = acc * z + CF{c[static_cast<size_t>(k)], BF(0)};
    return acc;
  };

  // Durand-Kerner from the usual rotated seeds scaled by a root bound.
  BF radius(1);
  for (const auto& ck : c) radius = std::max(radius, BF(1 + abs(ck)));
  std::array<CF, 4> z;
  const CF seed{BF("0.4"), BF("0.9")};
  CF p{BF(1), BF(0)};
  for (auto& zi : z) {
    p = p * seed;
    zi = CF{p.re * radius, p.im * radius};
  }

  const BF eps = pow(BF(2), -static_cast<int>(precision_bits));
  bool converged = false;
  for (int sweep = 0; sweep < 200 && !converged; ++sweep) {
    BF worst(0);
    for (size_t i = 0; i < 4; ++i) {
      CF denom{BF(1), BF(0)};
      for (size_t j = 0; j < 4; ++j)
        if (j != i) denom = denom * (z[i] - z[j]);
      const CF delta = eval(z[i]) / denom;
      z[i] = z[i] - delta;
      worst = std::max(worst, BF(cabs(delta) / (1 + cabs(z[i]))));
    }
    converged = worst <= eps;
  }
  if (!converged) throw ConvergenceError("solve_quartic: no convergence in 200 sweeps");

  std::sort(z.begin(), z.end(), [](const CF& a, const CF& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });

  // Vieta residuals, relative to max(1, |target|).
  const CF e1 = z[0] + z[1] + z[2] + z[3];
  const CF e2 = z[0] * z[1] + z[0] * z[2] + z[0] * z[3] + z[1] * z[2] + z[1] * z[3] + z[2] * z[3];
  const CF e3 = z[0] * z[1] * z[2] + z[0] * z[1] * z[3] + z[0] * z[2] * z[3] + z[1] * z[2] * z[3];
  const CF e4 = z[0] * z[1] * z[2] * z[3];
  const std::array<std::pair<CF, BF>, 4> targets = {{
      {e1, to_bf(R)},
      {e2, to_bf(T)},
      {e3, to_bf(S)},
      {e4, -to_bf(Rational(1) / qp.q)},
  }};

  QuarticSolution sol;
  sol.precision_bits = precision_bits;
  const unsigned out_digits = static_cast<unsigned>(precision_bits * 0.30103);
  for (const auto& zi : z)
    sol.roots.push_back({bf_str(zi.re, out_digits), bf_str(zi.im, out_digits)});
  const BF tol = pow(BF(2), -static_cast<int>(precision_bits / 2));
  sol.vieta_ok = true;
  for (const auto& [e, target] : targets) {
    const BF resid = cabs(e - CF{target, BF(0)}) / std::max(BF(1), BF(abs(target)));
    if (resid > tol) sol.vieta_ok = false;
    sol.vieta_residuals.push_back(bf_str(resid, 8));
  }
  return sol;
}

}  // namespace qaw
