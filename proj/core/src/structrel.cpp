#include "qaw/structrel.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <cassert>

namespace qaw {

std::pair<Rational, Rational> structure_coeffs(const Rational& a, const Rational& b,
                                               const RecurrencePair& rec, const QParam& qp,
                                               int n) {
  if (n < 0) throw std::invalid_argument("structure_coeffs: n < 0");
  const Rational an = a * gamma_n(qp, n) / alpha_n(qp, n + 1);
  Rational bsum(0);
  for (int j = 0; j < n; ++j) bsum += rec.B(j);
  const Rational bn = (gamma_n(qp, n) * (a * alpha_n(qp, n) * rec.B(n) + b * alpha_n(qp, n + 1)) +
                       a * qp.alpha * bsum) /
                      (alpha_n(qp, n) * alpha_n(qp, n + 1));
  return {an, bn};
}

namespace {

// Linear form u*a + v*b + w*c in the three shared unknowns of the fit.
struct LinForm3 {
  Rational u, v, w;
  LinForm3 operator-(const LinForm3& o) const { return {u - o.u, v - o.v, w - o.w}; }
  LinForm3 scaled(const Rational& s) const { return {u * s, v * s, w * s}; }
  Rational at(const Rational& a, const Rational& b, const Rational& c) const {
    return u * a + v * b + w * c;
  }
  bool zero() const { return is_zero(u) && is_zero(v) && is_zero(w); }
};

// Incremental Gaussian elimination over the homogeneous (a,b,c) constraint
// rows, one pivot row per column.
struct RowSpace {
  std::array<std::optional<LinForm3>, 3> pivot;

  static Rational component(const LinForm3& e, int i) {
    return i == 0 ? e.u : (i == 1 ? e.v : e.w);
  }

  // Returns true if the row increased the rank.
  bool add(LinForm3 r) {
    for (int i = 0; i < 3; ++i) {
      const Rational v = component(r, i);
      if (is_zero(v)) continue;
      if (pivot[static_cast<size_t>(i)]) {
        r = r - pivot[static_cast<size_t>(i)]->scaled(v);
      } else {
        pivot[static_cast<size_t>(i)] = r.scaled(Rational(1) / v);  // pivot entry 1
        return true;
      }
    }
    return false;
  }

  int rank() const {
    int n = 0;
    for (const auto& p : pivot) n += p.has_value();
    return n;
  }
};

// Null vector with the first nonzero component scaled to 1; false iff rank 3.
bool null_vector(const RowSpace& rs, Rational& a, Rational& b, Rational& c) {
  int free_idx = -1;
  for (int i = 0; i < 3; ++i)
    if (!rs.pivot[static_cast<size_t>(i)]) {
      free_idx = i;
      break;
    }
  if (free_idx < 0) return false;
  std::array<Rational, 3> x{Rational(0), Rational(0), Rational(0)};
  x[static_cast<size_t>(free_idx)] = 1;
  for (int i = 2; i >= 0; --i) {
    if (!rs.pivot[static_cast<size_t>(i)]) continue;
    const LinForm3& row = *rs.pivot[static_cast<size_t>(i)];
    Rational acc(0);
    for (int j = i + 1; j < 3; ++j) acc += RowSpace::component(row, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = -acc;  // pivot entry is 1
  }
  for (auto& xi : x)
    if (!is_zero(xi)) {
      const Rational s = Rational(1) / xi;
      for (auto& xj : x) xj *= s;
      break;
    }
  a = x[0];
  b = x[1];
  c = x[2];
  return true;
}

// pi2 Dq P_n - a_n Sq P_{n+1} - b_n Sq P_n - c_n Sq P_{n-1} for numeric data.
XPoly relation_residual(const Rational& a, const Rational& b, const Rational& c,
                        const XPoly& dqp, const XPoly& sq_next, const XPoly& sq_cur,
                        const XPoly& sq_prev, const Rational& an, const Rational& bn,
                        const Rational& cn) {
  const XPoly pi2({c, b, a});
  XPoly res = pi2 * dqp;
  res -= sq_next.scale(an);
  res -= sq_cur.scale(bn);
  res -= sq_prev.scale(cn);
  return res;
}

}  // namespace

StructureFit fit_structure(const MonicOPS& ops, const QParam& qp, int N) {
  if (N < 3) throw std::invalid_argument("fit_structure: N must be >= 3");
  if (ops.horizon() < N + 1)
    throw std::invalid_argument("fit_structure: ops horizon must reach N + 1");

  std::vector<XPoly> dqs, sqs;
  for (int n = 0; n <= N + 1; ++n) {
    dqs.push_back(dq(ops.P(n), qp));
    sqs.push_back(sq(ops.P(n), qp));
  }

  // Per n: triangular elimination of (a_n, b_n, c_n) leaves constraints that
  // are linear forms in (a, b, c).
  RowSpace rs;
  StructureFit fit;
  int witness = -1;
  for (int n = 0; n <= N && witness < 0; ++n) {
    const XPoly& d = dqs[static_cast<size_t>(n)];
    std::vector<LinForm3> lhs(static_cast<size_t>(n) + 2, LinForm3{Rational(0), Rational(0), Rational(0)});
    for (int j = 0; j <= d.degree(); ++j) {
      lhs[static_cast<size_t>(j + 2)].u += d.coeff(j);  // a z^2 term
      lhs[static_cast<size_t>(j + 1)].v += d.coeff(j);  // b z term
      lhs[static_cast<size_t>(j)].w += d.coeff(j);      // c term
    }
    auto eliminate = [&](const XPoly& s, int deg) -> LinForm3 {
      const LinForm3 coeff = lhs[static_cast<size_t>(deg)].scaled(Rational(1) / s.leading());
      for (int j = 0; j <= s.degree(); ++j)
        lhs[static_cast<size_t>(j)] = lhs[static_cast<size_t>(j)] - coeff.scaled(s.coeff(j));
      return coeff;
    };
    eliminate(sqs[static_cast<size_t>(n + 1)], n + 1);  // a_n
    eliminate(sqs[static_cast<size_t>(n)], n);          // b_n
    if (n >= 1) eliminate(sqs[static_cast<size_t>(n - 1)], n - 1);  // c_n
    for (int j = 0; j <= (n >= 1 ? n - 2 : -1); ++j)
      if (rs.add(lhs[static_cast<size_t>(j)]) && rs.rank() == 3) witness = n;
  }

  if (witness >= 0) {
    fit.verdict = StructureFit::Verdict::NO_SOLUTION;
    fit.witness_n = witness;
    return fit;
  }

  Rational a, b, c;
  if (!null_vector(rs, a, b, c)) {
    fit.verdict = StructureFit::Verdict::NO_SOLUTION;
    return fit;
  }

  fit.verdict = StructureFit::Verdict::EXACT;
  fit.a = a;
  fit.b = b;
  fit.c = c;
  fit.cn_nonzero = true;
  const XPoly zero;
  for (int n = 0; n <= N; ++n) {
    const XPoly& d = dqs[static_cast<size_t>(n)];
    const XPoly pi2({c, b, a});
    XPoly rem = pi2 * d;
    auto peel = [&](const XPoly& s, int deg) {
      const Rational coeff = rem.coeff(deg) / s.leading();
      rem -= s.scale(coeff);
      return coeff;
    };
    const Rational an = peel(sqs[static_cast<size_t>(n + 1)], n + 1);
    const Rational bn = peel(sqs[static_cast<size_t>(n)], n);
    const Rational cn = n >= 1 ? peel(sqs[static_cast<size_t>(n - 1)], n - 1) : Rational(0);
    fit.an.push_back(an);
    fit.bn.push_back(bn);
    fit.cn.push_back(cn);
    if (n >= 1 && is_zero(cn)) fit.cn_nonzero = false;
    fit.residuals.push_back(relation_residual(a, b, c, d, sqs[static_cast<size_t>(n + 1)],
                                              sqs[static_cast<size_t>(n)],
                                              n >= 1 ? sqs[static_cast<size_t>(n - 1)] : zero,
                                              an, bn, cn));
    assert(fit.residuals.back().is_zero());
  }
  return fit;
}

ConditionResiduals check_conditions(const Rational& a, const Rational& b, const Rational& /*c*/,
                                    const RecurrencePair& rec, const QParam& qp,
                                    const Rational& b2, const Rational& c2, const Rational& c3) {
  const Rational& al = qp.alpha;
  const Rational B0 = rec.B(0), B1 = rec.B(1), B2 = rec.B(2);
  const Rational C1 = rec.C(1), C2 = rec.C(2), C3 = rec.C(3);
  const Rational r2 = c2 + 2 * a * C2;
  const Rational r3 = c3 + 2 * a * C3;
  const Rational al2 = al * al;
  const Rational res32 =
      (4 * al2 - 1) * a * C2 * C3 +
      r3 / 2 *
          ((B0 + B1) * (B0 + B1) + 4 * al2 * (C1 - B0 * B1 + al2 - 1) - 2 * (2 * al2 - 1) * C2);
  const Rational res33 =
      a * C2 * C3 * (b2 + 2 * a * B2 + b / al) -
      r3 * (a * (B2 + B1) * C2 + b / al * C2 - r2 / 2 * (B1 - B0));
  return {res32, res33};
}

DerivedPearson derived_phi_psi(const Rational& a, const RecurrencePair& rec, const QParam& qp,
                               const Rational& c3) {
  const Rational B0 = rec.B(0), B1 = rec.B(1), C1 = rec.C(1), C3 = rec.C(3);
  const Rational r3 = c3 + 2 * a * C3;
  if (is_zero(r3)) throw DegenerateR3("derived_phi_psi: r3 = c3 + 2 a C3 = 0");
  const Rational& al = qp.alpha;
  const Rational ratio = 1 - 2 * a * C3 / r3;
  DerivedPearson dp;
  dp.fa = -(a * C3 + (al * al - 1) * r3) / (al * r3);
  dp.fb = -(ratio * (B0 + B1) - 2 * al * al * B0) / (2 * al);
  dp.fc = -(ratio * (C1 - B0 * B1) + C1 + B0 * B0) / (2 * al);
  dp.phi = XPoly({dp.fc, dp.fb, dp.fa});
  dp.psi = XPoly({-B0, Rational(1)});
  const Rational fa = dp.fa;
  dp.lambda = [fa, qp](int n) -> Rational {
    return gamma_n(qp, n) * (fa * gamma_n(qp, n - 1) + alpha_n(qp, n - 1));
  };
  return dp;
}

XPoly second_order_apply(const XPoly& phi, const XPoly& psi, const XPoly& p, const QParam& qp) {
  const XPoly dp = dq(p, qp);
  return phi * dq(dp, qp) + psi * sq(dp, qp);
}

std::string to_string(CorollaryCase c) {
  switch (c) {
    case CorollaryCase::I:
      return "I";
    case CorollaryCase::IIa:
      return "II-a";
    case CorollaryCase::IIb:
      return "II-b";
  }
  return "?";
}

CorollaryFamily corollary_family(const Rational& B0, const Rational& B1, const QParam& qp,
                                 int k, int N, std::optional<Rational> C1opt) {
  const Rational& al = qp.alpha;
  const Rational al2 = al * al;
  if (B1 == B0) throw DegenerateError("corollary_family: B1 = B0 leaves r undefined");

  CorollaryCase kase;
  Rational C1;
  if (B1 == -B0) {
    if (is_zero(B0)) throw CaseError("corollary_family: case I requires B0 != 0");
    kase = CorollaryCase::I;
    C1 = al2 - B0 * B0;
  } else if (B1 == (1 - 4 * al2) * B0) {
    kase = CorollaryCase::IIa;
    if (B0 != Rational(k) * al)
      throw CaseError("corollary_family: case II-a requires B0 = k alpha");
    if (!C1opt) throw CaseError("corollary_family: case II-a needs C1 (it is the free parameter)");
    C1 = *C1opt;
    if (is_zero(C1)) throw DegenerateError("corollary_family: C1 = 0 is not regular");
  } else {
    kase = CorollaryCase::IIb;
    const Rational denom = B1 + (4 * al2 - 1) * B0;
    if (is_zero(denom))
      throw DegenerateError("corollary_family: B1 + (4 alpha^2 - 1) B0 = 0");
    C1 = (al2 - B0 * B0) * (B0 - (4 * al2 - 3) * B1) / denom;
  }
  if (C1opt && kase != CorollaryCase::IIa && *C1opt != C1)
    throw MismatchError("corollary_family: supplied C1 contradicts the C1 relation");

  const Rational C2 = ((B0 + B1) * (B0 + B1) - 4 * al2 * (B0 * B1 + 1 - al2 - C1)) / (4 * al2 - 2);
  const Rational B2 = -B0 + 2 * B1 / (4 * al2 - 3);
  const Rational r = ((B1 * B1 - B0 * B0) / (2 * (2 * al2 - 1)) - C2) / (al * (B1 - B0));

  PearsonPair pear(
      XPoly({((B1 - B0) * B0 - 2 * C1) / (2 * al), -(B1 - (2 * al2 - 1) * B0) / (2 * al),
             -(al2 - 1) / al}),
      XPoly({-B0, Rational(1)}));

  std::vector<Rational> B, C;
  for (int n = 0; n <= N; ++n) {
    auto [Bn, Cn1] = pearson_recurrence(pear, qp, n);
    B.push_back(Bn);
    C.push_back(Cn1);
  }
  if (B[0] != B0 || B[1] != B1 || C[0] != C1 || C[1] != C2 || B[2] != B2)
    throw MismatchError("corollary_family: Pearson recurrence disagrees with the closed forms");

  std::vector<Rational> bn, cn;
  Rational bsum(0);
  for (int n = 0; n <= N; ++n) {
    bn.push_back(gamma_n(qp, n) / alpha_n(qp, n));
    cn.push_back(-r * gamma_n(qp, n) / alpha_n(qp, n - 1) +
                 bsum / (alpha_n(qp, n) * alpha_n(qp, n - 1)));
    bsum += B[static_cast<size_t>(n)];
  }

  return CorollaryFamily{kase,
                         kase == CorollaryCase::IIa ? k : 0,
                         qp,
                         B0,
                         B1,
                         C1,
                         C2,
                         B2,
                         r,
                         std::move(pear),
                         RecurrencePair(std::move(B), std::move(C)),
                         std::move(bn),
                         std::move(cn)};
}

QuarticTriple quartic_coeffs(const CorollaryFamily& fam) {
  const QParam& qp = fam.qp;
  const Rational& q = qp.q;
  const Rational al2 = qp.alpha * qp.alpha;
  const Rational qm1 = q - 1;
  switch (fam.kase) {
    case CorollaryCase::I:
      return {2 * (q + 1) * fam.B0 / qm1, 4 * (3 * al2 - 1) / qm1,
              2 * (1 + Rational(1) / q) * fam.B0 / qm1};
    case CorollaryCase::IIa: {
      const Rational q32 = pow_int(qp.t, 3);  // q^{3/2}
      const Rational kk(fam.k);
      return {kk * (q + 1) * (2 * q * q + q + 1) / (q32 * qm1),
              4 * (2 * fam.C1 + 4 * al2 * al2 + al2 - 1) / qm1,
              kk * (q + 1) * (q * q + q + 2) / (q32 * qm1)};
    }
    case CorollaryCase::IIb: {
      const Rational bracket = fam.B1 + (4 * al2 - 1) * fam.B0;
      if (is_zero(bracket)) throw DegenerateError("quartic_coeffs: T1 bracket vanishes");
      const Rational T1 = 1 - Rational(1) / q +
                          8 * (fam.B0 * fam.B0 - al2) * ((4 * al2 - 3) * fam.B1 - fam.B0) /
                              (bracket * qm1) -
                          4 * (fam.B1 - fam.B0) * fam.B0 / qm1;
      return {2 * (q * fam.B0 - fam.B1) / qm1, T1,
              2 * (fam.B0 / q - fam.B1) / qm1};
    }
  }
  throw std::logic_error("quartic_coeffs: unreachable");
}

namespace {

using BF = boost::multiprecision::mpfr_float;

struct CF {
  BF re, im;
  CF operator+(const CF& o) const { return {re + o.re, im + o.im}; }
  CF operator-(const CF& o) const { return {re - o.re, im - o.im}; }
  CF operator*(const CF& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

BF cabs(const CF& z) { return sqrt(z.re * z.re + z.im * z.im); }

BF to_bf(const Rational& r) {
  return BF(r.get_num().get_str()) / BF(r.get_den().get_str());
}

}  // namespace

RecoveryReport recover_params(const CorollaryFamily& fam, unsigned precision_bits) {
  RecoveryReport rep;
  rep.kase = fam.kase;
  rep.triple = quartic_coeffs(fam);
  rep.quartic = solve_quartic(rep.triple.R, rep.triple.T, rep.triple.S, fam.qp, precision_bits);

  const unsigned digits = static_cast<unsigned>(precision_bits * 0.30103) + 2;
  BF::default_precision(digits);
  std::vector<CF> roots;
  for (const auto& r : rep.quartic.roots) roots.push_back({BF(r.re), BF(r.im)});
  const CF e1 = roots[0] + roots[1] + roots[2] + roots[3];
  const CF e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[0] * roots[3] +
                roots[1] * roots[2] + roots[1] * roots[3] + roots[2] * roots[3];
  const CF e3 = roots[0] * roots[1] * roots[2] + roots[0] * roots[1] * roots[3] +
                roots[0] * roots[2] * roots[3] + roots[1] * roots[2] * roots[3];

  const Rational& q = fam.qp.q;
  const Rational al2 = fam.qp.alpha * fam.qp.alpha;
  const BF tol = pow(BF(10), -20);
  bool recon_ok = true;
  auto push = [&](const std::string& name, const BF& resid) {
    if (resid > tol) recon_ok = false;
    rep.reconstruction.emplace_back(name, resid.str(8, std::ios_base::fmtflags(0)));
  };

  switch (fam.kase) {
    case CorollaryCase::I: {
      const BF f1 = to_bf((q - 1) / (2 * (q + 1)));
      const BF f3 = to_bf((q - 1) / (2 * (1 + Rational(1) / q)));
      push("B0 via e1", cabs(CF{f1, BF(0)} * e1 - CF{to_bf(fam.B0), BF(0)}));
      push("B0 via e3", cabs(CF{f3, BF(0)} * e3 - CF{to_bf(fam.B0), BF(0)}));
      break;
    }
    case CorollaryCase::IIa: {
      const BF shift = to_bf(4 * (4 * al2 * al2 + al2 - 1) / (q - 1));
      const BF f = to_bf((q - 1) / Rational(8));
      push("C1 via e2", cabs(CF{f, BF(0)} * (e2 - CF{shift, BF(0)}) - CF{to_bf(fam.C1), BF(0)}));
      break;
    }
    case CorollaryCase::IIb: {
      // R and S invert linearly and exactly in the rational domain.
      const Rational B0rec =
          (rep.triple.R - rep.triple.S) * (q - 1) / (2 * (q - Rational(1) / q));
      const Rational B1rec = q * B0rec - rep.triple.R * (q - 1) / 2;
      push("B0 via (R,S)", to_bf(abs(B0rec - fam.B0)));
      push("B1 via (R,S)", to_bf(abs(B1rec - fam.B1)));
      break;
    }
  }

  rep.pass = rep.quartic.vieta_ok && recon_ok;
  return rep;
}

}  // namespace qaw
