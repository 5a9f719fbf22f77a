#include "qaw/qops.hpp"

#include <stdexcept>
#include <vector>

namespace qaw {

Rational gamma_n(const QParam& qp, long n) {
  return (pow_int(qp.t, n) - pow_int(qp.t, -n)) / (qp.t - Rational(1) / qp.t);
}

Rational alpha_n(const QParam& qp, long n) {
  return (pow_int(qp.t, n) + pow_int(qp.t, -n)) / 2;
}

Rational gamma_factorial(const QParam& qp, long n) {
  Rational acc(1);
  for (long k = 1; k <= n; ++k) acc *= gamma_n(qp, k);
  return acc;
}

namespace {

// Full Laurent coefficient vector of p-hat(t z) - p-hat(z / t), exponents
// -d..d stored at index e + d. Antisymmetric in z -> 1/z.
std::vector<Rational> shifted_difference(const SymLaurent& L, const QParam& qp) {
  const int d = L.degree();
  std::vector<Rational> full(static_cast<size_t>(2 * d) + 1, Rational(0));
  for (int k = 1; k <= d; ++k) {
    const Rational tk = pow_int(qp.t, k), tmk = pow_int(qp.t, -k);
    full[static_cast<size_t>(d + k)] += L.coeff(k) * (tk - tmk);
    full[static_cast<size_t>(d - k)] += L.coeff(k) * (tmk - tk);
  }
  return full;
}

}  // namespace

XPoly dq(const XPoly& p, const QParam& qp) {
  if (p.degree() <= 0) return XPoly::zero();
  const SymLaurent L = x_to_laurent(p);
  const int d = L.degree();
  std::vector<Rational> num = shifted_difference(L, qp);

  // Divide by (z - 1/z): multiply by z, then divide by z^2 - 1 as an ordinary
  // polynomial in z. num * z has exponents -d+1 .. d+1; quotient -d+1 .. d-1.
  // num[i] holds exponent i - d; after the shift, poly[i] holds z^i of z^... :
  // treat num*z as coefficients a_0..a_{2d+1} of z^{-d+1+i}.
  const int n = 2 * d;  // num has n+1 entries
  std::vector<Rational> a(num.begin(), num.end());  // a[i] ~ z^{i - d + 1} after *z
  std::vector<Rational> quot(static_cast<size_t>(n) - 1, Rational(0));
  // Long division of sum a_i y^i by y^2 - 1 (y = z, exponent offset handled below).
  for (int i = n; i >= 2; --i) {
    Rational c = a[static_cast<size_t>(i)];
    if (qaw::is_zero(c)) continue;
    quot[static_cast<size_t>(i - 2)] = c;
    a[static_cast<size_t>(i)] = 0;
    a[static_cast<size_t>(i - 2)] += c;
  }
  if (!qaw::is_zero(a[0]) || !qaw::is_zero(a[1]))
    throw std::logic_error("dq: Laurent division left a remainder");

  // quot[i] is the coefficient of z^{i - d + 1}, i = 0..2d-2, symmetric.
  const Rational scale = Rational(1) / (Rational(1, 2) * (qp.t - Rational(1) / qp.t));
  std::vector<Rational> l(static_cast<size_t>(d), Rational(0));  // degrees 0..d-1
  for (int e = 0; e <= d - 1; ++e) {
    const Rational pos = quot[static_cast<size_t>(e + d - 1)];
    const Rational neg = quot[static_cast<size_t>(-e + d - 1)];
    if (e > 0 && pos != neg)
      throw std::logic_error("dq: quotient is not z <-> 1/z symmetric");
    l[static_cast<size_t>(e)] = pos * scale;
  }
  return laurent_to_x(SymLaurent(std::move(l)));
}

XPoly sq(const XPoly& p, const QParam& qp) {
  const SymLaurent L = x_to_laurent(p);
  const int d = L.degree();
  std::vector<Rational> l(static_cast<size_t>(d) + 1, Rational(0));
  for (int k = 0; k <= d; ++k) l[static_cast<size_t>(k)] = L.coeff(k) * alpha_n(qp, k);
  return laurent_to_x(SymLaurent(std::move(l)));
}

XPoly aux_u1(const QParam& qp) {
  const Rational c = qp.alpha * qp.alpha - 1;
  return XPoly({Rational(0), c});
}

XPoly aux_u2(const QParam& qp) {
  const Rational c = qp.alpha * qp.alpha - 1;
  return XPoly({-c, Rational(0), c});
}

}  // namespace qaw
