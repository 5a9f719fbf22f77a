#pragma once

#include "qaw/qparam.hpp"
#include "qaw/xpoly.hpp"

namespace qaw {

/// gamma_n = (t^n - t^{-n})/(t - 1/t). Valid for any integer n; the usual
/// conventions gamma_{-1} = -1, alpha_{-1} = alpha are what the closed forms
/// give at n = -1.
Rational gamma_n(const QParam& qp, long n);

/// alpha_n = (t^n + t^{-n})/2.
Rational alpha_n(const QParam& qp, long n);

/// gamma_n! = gamma_1 gamma_2 ... gamma_n (empty product for n <= 0).
Rational gamma_factorial(const QParam& qp, long n);

/// Askey-Wilson divided-difference operator, computed in the Laurent image by
/// the shift z -> t^{+/-1} z. The interior division is exact; a nonzero
/// remainder indicates a bug and throws std::logic_error.
XPoly dq(const XPoly& p, const QParam& qp);

/// Averaging operator, same Laurent-image route.
XPoly sq(const XPoly& p, const QParam& qp);

/// U1(z) = (alpha^2 - 1) z.
XPoly aux_u1(const QParam& qp);

/// U2(z) = (alpha^2 - 1)(z^2 - 1).
XPoly aux_u2(const QParam& qp);

}  // namespace qaw
