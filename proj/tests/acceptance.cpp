// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any FAIL.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qaw/awfamily.hpp"
#include "qaw/prng.hpp"
#include "qaw/structrel.hpp"

using namespace qaw;

namespace {

const QParam kHalf{Rational(1, 2)};

const std::vector<QParam>& t_values() {
  static const std::vector<QParam> ts = {QParam(Rational(1, 2)), QParam(Rational(1, 3)),
                                         QParam(Rational(3, 5))};
  return ts;
}

RecurrencePair hermite_rec(int N) {
  std::vector<Rational> B, C;
  for (int n = 0; n <= N; ++n) {
    B.push_back(Rational(0));
    if (n < N) C.push_back((1 - pow_int(kHalf.q, n + 1)) / 4);
  }
  return RecurrencePair(std::move(B), std::move(C));
}

// 1. Product/averaging/expansion identities with zero residual polynomial.
bool operator_axioms() {
  std::uint64_t seed = 7;
  for (const auto& qp : t_values()) {
    SplitMix64 rng(seed++);
    const Rational inv_alpha = Rational(1) / qp.alpha;
    for (int i = 0; i < 100; ++i) {
      const XPoly f = rng.xpoly(8), h = rng.xpoly(8);
      if (dq(f * h, qp) != dq(f, qp) * sq(h, qp) + sq(f, qp) * dq(h, qp)) return false;
      if (sq(f * h, qp) != dq(f, qp) * dq(h, qp) * aux_u2(qp) + sq(f, qp) * sq(h, qp))
        return false;
      const XPoly inner = (sq(f, qp) - aux_u1(qp).scale(inv_alpha) * dq(f, qp)) * h;
      if (f * dq(h, qp) != dq(inner, qp) - sq(h * dq(f, qp), qp).scale(inv_alpha)) return false;
    }
  }
  return true;
}

// 2. Leading coefficients gamma_n / alpha_n and vanishing sub-leading terms.
bool degree_laws() {
  for (const auto& qp : t_values())
    for (int n = 0; n <= 12; ++n) {
      const XPoly d = dq(XPoly::monomial(n), qp), s = sq(XPoly::monomial(n), qp);
      if (d.coeff(n - 1) != gamma_n(qp, n) || s.coeff(n) != alpha_n(qp, n)) return false;
      if (!is_zero(d.coeff(n - 2)) || !is_zero(s.coeff(n - 1))) return false;
    }
  return true;
}

// 3. Symbolic operator vs raw divided-difference quotient on lattice points.
bool divided_difference_oracle() {
  const Rational ws[] = {Rational(3, 10), Rational(7, 10), Rational(3, 2)};
  auto xval = [](const Rational& z) -> Rational { return (z + Rational(1) / z) / 2; };
  SplitMix64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const XPoly p = rng.xpoly(8);
    const SymLaurent L = x_to_laurent(p);
    for (const auto& w : ws) {
      const Rational zp = kHalf.t * w, zm = w / kHalf.t;
      const Rational raw = (L.eval(zp) - L.eval(zm)) / (xval(zp) - xval(zm));
      if (eval_at_lattice(dq(p, kHalf), w) != raw) return false;
    }
  }
  return true;
}

// 4. Functional calculus: product rule and Dq^n/Sq commutation on functionals,
//    symmetry of the second-order form, and the lowering property of the
//    differentiated set's dual basis.
bool functional_calculus() {
  const int M = 14;
  const MomentFunctional u = moments(hermite_rec(M), M);
  SplitMix64 rng(9);
  for (int i = 0; i < 20; ++i) {
    XPoly f = rng.xpoly(5);
    if (f.degree() < 1) f = f + XPoly::monomial(1);  // Dq f must be a usable multiplier
    const MomentFunctional lhs = functional_mul(functional_dq(u, kHalf), f);
    const MomentFunctional r1 = functional_dq(functional_mul(u, sq(f, kHalf)), kHalf);
    const MomentFunctional r2 = functional_sq(functional_mul(u, dq(f, kHalf)), kHalf);
    for (int m = 0; m + f.degree() + 1 <= M; ++m)
      if (lhs.moment(m) != r1.moment(m) - r2.moment(m)) return false;
  }
  for (int n = 0; n <= 2; ++n) {
    MomentFunctional dn = u;
    for (int j = 0; j < n; ++j) dn = functional_dq(dn, kHalf);
    MomentFunctional lhs = functional_sq(u, kHalf);
    for (int j = 0; j < n; ++j) lhs = functional_dq(lhs, kHalf);
    const MomentFunctional r1 = functional_sq(dn, kHalf);
    const MomentFunctional r2 = functional_mul(functional_dq(dn, kHalf), aux_u1(kHalf));
    for (int m = 0; m <= M - 2; ++m)
      if (kHalf.alpha * lhs.moment(m) !=
          alpha_n(kHalf, n + 1) * r1.moment(m) + gamma_n(kHalf, n) * r2.moment(m))
        return false;
  }
  {
    const XPoly phi({Rational(-3, 8), Rational(0), Rational(3, 4)});
    const XPoly psi = XPoly::monomial(1);
    auto form = [&](const XPoly& f) {
      return phi * dq(dq(f, kHalf), kHalf) + psi * sq(dq(f, kHalf), kHalf);
    };
    const MomentFunctional v = moments(hermite_rec(12), 12);
    SplitMix64 g(23);
    for (int i = 0; i < 25; ++i) {
      const XPoly f = g.xpoly(4), h = g.xpoly(4);
      if (v.pair(form(f) * h) != v.pair(form(h) * f)) return false;
    }
  }
  {
    const RecurrencePair rec = hermite_rec(18);
    const MonicOPS ops = generate_ops(rec, 9);
    const MomentFunctional w = moments(rec, 16);
    std::vector<XPoly> Q1;
    for (int n = 0; n <= 8; ++n)
      Q1.push_back(dq(ops.P(n + 1), kHalf).scale(Rational(1) / gamma_n(kHalf, n + 1)));
    const SimpleSet set(Q1);
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 8; ++m)
        if (set.dual_pairing(n, dq(XPoly::monomial(m), kHalf)) !=
            gamma_n(kHalf, n + 1) * dual_pairing(ops, w, n + 1, XPoly::monomial(m)))
          return false;
  }
  return true;
}

// 5. Parameter route vs Pearson route, plus the single-parameter collapse
//    B_n = a1 q^n / 2 (a1 = 1 gives B_n = q^n / 2).
bool kls_pearson_consistency() {
  const std::array<Rational, 4> instances[] = {
      {Rational(1, 2), Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)},
  };
  for (const auto& a : instances) {
    const AWParams p(a, kHalf);
    const IsmailCoeffs ic = ismail_coeffs(p);
    const PearsonPair pp = PearsonPair(ic.phi, ic.psi).monic_psi();
    for (int n = 0; n <= 10; ++n)
      if (aw_recurrence(p, n) != pearson_recurrence(pp, kHalf, n)) return false;
  }
  const AWParams one({Rational(1), Rational(0), Rational(0), Rational(0)}, kHalf);
  for (int n = 0; n <= 10; ++n) {
    auto [Bn, Cn1] = aw_recurrence(one, n);
    if (Bn != pow_int(kHalf.q, n) / 2 || Cn1 != (1 - pow_int(kHalf.q, n + 1)) / 4) return false;
  }
  return true;
}

// 6. Corollary families end to end. The degree-one relation is decidable only
//    up to n = 3: it holds there with (a,b,c) = (0,1,-r) and is provably
//    inconsistent at n = 4, so the fit is EXACT at horizon 3 and NO_SOLUTION
//    with witness 4 at any larger horizon. Conditions, the functional
//    equation and the second-order equation hold at full strength.
bool corollary_end_to_end() {
  const CorollaryFamily fams[] = {
      corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, 16),
      corollary_family(Rational(1, 2), Rational(1, 8), kHalf, 1, 16),
  };
  if (fams[0].C1 != Rational(21, 16) || fams[0].C2 != Rational(25, 8) ||
      fams[0].r != Rational(5, 2))
    return false;
  for (const auto& fam : fams) {
    const MonicOPS ops = generate_ops(fam.rec, 12);
    const XPoly zr({-fam.r, Rational(1)});
    for (int n = 0; n <= 3; ++n) {
      XPoly rhs = sq(ops.P(n), kHalf).scale(fam.bn[static_cast<size_t>(n)]);
      if (n >= 1) rhs = rhs + sq(ops.P(n - 1), kHalf).scale(fam.cn[static_cast<size_t>(n)]);
      if (zr * dq(ops.P(n), kHalf) != rhs) return false;
    }
    const StructureFit fit3 = fit_structure(generate_ops(fam.rec, 4), kHalf, 3);
    if (fit3.verdict != StructureFit::Verdict::EXACT) return false;
    if (!is_zero(fit3.a) || fit3.b != Rational(1) || fit3.c != -fam.r) return false;
    const StructureFit fit8 = fit_structure(generate_ops(fam.rec, 9), kHalf, 8);
    if (fit8.verdict != StructureFit::Verdict::NO_SOLUTION || fit8.witness_n != 4) return false;

    const ConditionResiduals res = check_conditions(
        Rational(0), Rational(1), -fam.r, fam.rec, kHalf, fam.bn[2], fam.cn[2], fam.cn[3]);
    if (!is_zero(res.res32) || !is_zero(res.res33)) return false;

    const DerivedPearson dp = derived_phi_psi(Rational(0), fam.rec, kHalf, fam.cn[3]);
    const MomentFunctional u = moments(fam.rec, 14);
    if (!pearson_check(PearsonPair(dp.phi, dp.psi), u, kHalf, 12).pass) return false;
    for (int n = 0; n <= 12; ++n) {
      const Rational ln = gamma_n(kHalf, n) * (dp.fa * gamma_n(kHalf, n - 1) +
                                               alpha_n(kHalf, n - 1));
      if (ln != dp.lambda(n)) return false;
      if (second_order_apply(dp.phi, dp.psi, ops.P(n), kHalf) != ops.P(n).scale(ln))
        return false;
    }
  }
  return true;
}

// 7. Negative control: C2 + 1 breaks both the fit and the first condition.
bool negative_control() {
  const CorollaryFamily fam = corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, 10);
  std::vector<Rational> B, C;
  for (int n = 0; n <= 10; ++n) B.push_back(fam.rec.B(n));
  for (int n = 1; n <= 10; ++n) C.push_back(fam.rec.C(n));
  C[1] += 1;
  const RecurrencePair pert(B, C);
  const StructureFit fit = fit_structure(generate_ops(pert, 4), kHalf, 3);
  if (fit.verdict != StructureFit::Verdict::NO_SOLUTION) return false;
  const ConditionResiduals res = check_conditions(Rational(0), Rational(1), -fam.r, pert, kHalf,
                                                  fam.bn[2], fam.cn[2], fam.cn[3]);
  return !is_zero(res.res32);
}

// 8. Quartic coefficients, Vieta residuals, reconstruction and the explicit
//    root set of the (0,0,0) triple.
bool quartic_recovery() {
  const CorollaryFamily fam = corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, 6);
  const QuarticTriple qt = quartic_coeffs(fam);
  if (qt.R != Rational(-5, 3) || qt.T != Rational(-59, 3) || qt.S != Rational(-20, 3))
    return false;
  const RecoveryReport rep = recover_params(fam, 256);
  if (!rep.quartic.vieta_ok || !rep.pass) return false;
  for (const auto& [name, resid] : rep.reconstruction) {
    (void)name;
    if (std::abs(std::strtod(resid.c_str(), nullptr)) > 1e-20) return false;
  }
  const QuarticSolution sol = solve_quartic(Rational(0), Rational(0), Rational(0), kHalf, 256);
  const double s2 = 1.4142135623730951;
  const double expected[4][2] = {{-s2, 0.0}, {0.0, -s2}, {0.0, s2}, {s2, 0.0}};
  if (sol.roots.size() != 4 || !sol.vieta_ok) return false;
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& root : sol.roots) {
      const double re = std::strtod(root.re.c_str(), nullptr);
      const double im = std::strtod(root.im.c_str(), nullptr);
      found = found || (std::abs(re - e[0]) <= 1e-12 && std::abs(im - e[1]) <= 1e-12);
    }
    if (!found) return false;
  }
  return true;
}

// 9. The two second-order eigenvalue streams agree up to one constant factor,
//    exactly (the rational check subsumes any float tolerance).
bool eigenvalue_cross_check() {
  const CorollaryFamily fam = corollary_family(Rational(1, 2), Rational(1, 8), kHalf, 1, 14);
  const DerivedPearson dp = derived_phi_psi(Rational(0), fam.rec, kHalf, fam.cn[3]);
  const Rational q = kHalf.q;
  const Rational sigma4 = Rational(-1) / q;  // quartic constant term, by Vieta
  const Rational expected = Rational(-4) * (1 + q) / (q * (1 - q));
  for (int n = 1; n <= 8; ++n) {
    const Rational lis =
        4 * q * (1 - pow_int(q, -n)) * (1 - sigma4 * pow_int(q, n - 1)) / ((1 - q) * (1 - q));
    if (lis != expected * dp.lambda(n)) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)();
  };
  const Criterion criteria[] = {
      {"criterion 1: operator product and expansion identities", operator_axioms},
      {"criterion 2: degree laws and leading coefficients", degree_laws},
      {"criterion 3: raw divided-difference oracle", divided_difference_oracle},
      {"criterion 4: functional calculus and dual bases", functional_calculus},
      {"criterion 5: parameter route vs Pearson route", kls_pearson_consistency},
      {"criterion 6: corollary families end to end", corollary_end_to_end},
      {"criterion 7: negative control on a perturbed recurrence", negative_control},
      {"criterion 8: quartic recovery", quartic_recovery},
      {"criterion 9: eigenvalue cross-check", eigenvalue_cross_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cout << "FAIL " << c.name << " (exception: " << e.what() << ")\n";
      ++failures;
      continue;
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
