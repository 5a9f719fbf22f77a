#include "qaw/awfamily.hpp"

namespace qaw {

Rational AWParams::sigma(int j) const {
  const auto& [a1, a2, a3, a4] = a;
  switch (j) {
    case 1:
      return a1 + a2 + a3 + a4;
    case 2:
      return a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + a3 * a4;
    case 3:
      return a1 * a2 * a3 + a1 * a2 * a4 + a1 * a3 * a4 + a2 * a3 * a4;
    case 4:
      return a1 * a2 * a3 * a4;
    default:
      throw std::invalid_argument("AWParams::sigma: j must be 1..4");
  }
}

namespace {

void check_restrictions(const AWParams& p, int n) {
  const auto& [a1, a2, a3, a4] = p.a;
  const Rational qn = pow_int(p.qp.q, n);
  const struct {
    const char* name;
    Rational value;
  } factors[] = {
      {"1 - a1a2a3a4 q^n", 1 - p.sigma(4) * qn}, {"1 - a1a2 q^n", 1 - a1 * a2 * qn},
      {"1 - a1a3 q^n", 1 - a1 * a3 * qn},        {"1 - a1a4 q^n", 1 - a1 * a4 * qn},
      {"1 - a2a3 q^n", 1 - a2 * a3 * qn},        {"1 - a2a4 q^n", 1 - a2 * a4 * qn},
      {"1 - a3a4 q^n", 1 - a3 * a4 * qn},
  };
  for (const auto& f : factors)
    if (is_zero(f.value))
      throw RestrictionViolated(std::string(f.name) + " = 0 at n = " + std::to_string(n));
}

}  // namespace

std::pair<Rational, Rational> aw_recurrence(const AWParams& p, int n) {
  const auto& [a1, a2, a3, a4] = p.a;
  if (is_zero(a1)) throw ZeroParameter("aw_recurrence: a1 = 0");
  check_restrictions(p, n);
  const Rational& q = p.qp.q;
  const Rational s4 = p.sigma(4);
  const Rational qn = pow_int(q, n);
  auto s4q = [&](int off) -> Rational { return 1 - s4 * pow_int(q, 2 * n + off); };
  for (int off : {-2, -1, 0, 1})
    if (is_zero(s4q(off)))
      throw RestrictionViolated("1 - a1a2a3a4 q^" + std::to_string(2 * n + off) + " = 0");

  const Rational An = (1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) * (1 - a1 * a4 * qn) *
                      (1 - s4 * pow_int(q, n - 1)) / (a1 * s4q(-1) * s4q(0));
  const Rational Cn = a1 * (1 - qn) * (1 - a2 * a3 * pow_int(q, n - 1)) *
                      (1 - a2 * a4 * pow_int(q, n - 1)) * (1 - a3 * a4 * pow_int(q, n - 1)) /
                      (s4q(-1) * s4q(-2));
  const Rational Bn = (a1 + Rational(1) / a1 - An - Cn) / 2;
  const Rational Cn1 = (1 - pow_int(q, n + 1)) * (1 - s4 * pow_int(q, n - 1)) *
                       (1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) * (1 - a1 * a4 * qn) *
                       (1 - a2 * a3 * qn) * (1 - a2 * a4 * qn) * (1 - a3 * a4 * qn) /
                       (4 * s4q(-1) * s4q(0) * s4q(0) * s4q(1));
  return {Bn, Cn1};
}

IsmailCoeffs ismail_coeffs(const AWParams& p) {
  const Rational s1 = p.sigma(1), s2 = p.sigma(2), s3 = p.sigma(3), s4 = p.sigma(4);
  if (s4 == 1) throw DegeneratePsi("ismail_coeffs: sigma_4 = 1 degenerates psi");
  const Rational& q = p.qp.q;
  const Rational qinvhalf = Rational(1) / p.qp.t;  // q^{-1/2}
  XPoly phi({-(Rational(-1) + s2 - s4), s1 + s3, -2 * (1 + s4)});
  phi = phi.scale(qinvhalf);
  // phi above is -q^{-1/2}(2(1+s4)z^2 - (s1+s3)z - 1 + s2 - s4) with the sign
  // folded into the coefficient list: constant -(-1+s2-s4), linear +(s1+s3).
  XPoly psi({s1 - s3, 2 * (s4 - 1)});
  psi = psi.scale(Rational(2) / (1 - q));
  auto lambda = [q, s4](int n) -> Rational {
    return 4 * q * (1 - pow_int(q, -n)) * (1 - s4 * pow_int(q, n - 1)) /
           ((1 - q) * (1 - q));
  };
  return IsmailCoeffs{std::move(phi), std::move(psi), std::move(lambda)};
}

namespace {

Rational d_k(const PearsonPair& pp, const QParam& qp, long k) {
  return pp.phi.coeff(2) * gamma_n(qp, k) + pp.psi.coeff(1) * alpha_n(qp, k);
}

Rational e_k(const PearsonPair& pp, const QParam& qp, long k) {
  return pp.phi.coeff(1) * gamma_n(qp, k) + pp.psi.coeff(0) * alpha_n(qp, k);
}

Rational d_k_checked(const PearsonPair& pp, const QParam& qp, long k) {
  Rational v = d_k(pp, qp, k);
  if (is_zero(v))
    throw AdmissibilityError("pearson_recurrence: d_" + std::to_string(k) + " = 0");
  return v;
}

}  // namespace

std::pair<Rational, Rational> pearson_recurrence(const PearsonPair& pp, const QParam& qp, int n) {
  if (n < 0) throw std::invalid_argument("pearson_recurrence: n < 0");
  const Rational a = pp.phi.coeff(2), b = pp.phi.coeff(1), c = pp.phi.coeff(0);
  const Rational d = pp.psi.coeff(1), e = pp.psi.coeff(0);
  const Rational& al = qp.alpha;

  Rational Bn(0);
  if (n >= 1)
    Bn = gamma_n(qp, n) * e_k(pp, qp, n - 1) / d_k_checked(pp, qp, 2 * n - 2);
  Bn -= gamma_n(qp, n + 1) * e_k(pp, qp, n) / d_k_checked(pp, qp, 2 * n);

  const Rational zstar = -e_k(pp, qp, n) / d_k(pp, qp, 2 * n);
  const Rational phin = (d * (al * al - 1) * gamma_n(qp, 2 * n) + a * alpha_n(qp, 2 * n)) *
                            (zstar * zstar - Rational(1, 2)) +
                        (b * alpha_n(qp, n) + e * (al * al - 1) * gamma_n(qp, n)) * zstar +
                        c + a / 2;
  const Rational Cn1 = -gamma_n(qp, n + 1) * d_k(pp, qp, n - 1) /
                       (d_k_checked(pp, qp, 2 * n - 1) * d_k_checked(pp, qp, 2 * n + 1)) * phin;
  return {Bn, Cn1};
}

PearsonReport pearson_check(const PearsonPair& pp, const MomentFunctional& u,
                            const QParam& qp, int N) {
  if (u.order() < N + 2)
    throw OrderExceeded("pearson_check: moment order must be >= N + 2");
  PearsonReport rep;
  rep.pass = true;
  for (int n = 0; n <= N; ++n) {
    const XPoly xn = XPoly::monomial(n);
    // <Dq(phi u), x^n> = -<u, phi Dq x^n>; <Sq(psi u), x^n> = <u, psi Sq x^n>.
    const Rational res = -u.pair(pp.phi * dq(xn, qp)) - u.pair(pp.psi * sq(xn, qp));
    if (!is_zero(res)) rep.pass = false;
    rep.residuals.push_back(res);
  }
  return rep;
}

}  // namespace qaw
