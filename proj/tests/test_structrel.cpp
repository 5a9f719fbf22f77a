#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "qaw/structrel.hpp"

using namespace qaw;

namespace {

const QParam kHalf{Rational(1, 2)};

CorollaryFamily case_i(int N) {
  return corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, N);
}
CorollaryFamily case_iib(int N) {
  return corollary_family(Rational(1, 2), Rational(1, 8), kHalf, 1, N);
}
CorollaryFamily case_iia(int N) {
  return corollary_family(Rational(5, 4), Rational(-105, 16), kHalf, 1, N, Rational(1));
}

double as_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("closed-form streams match the eliminated system") {
  const CorollaryFamily fam = case_i(8);
  const MonicOPS ops = generate_ops(fam.rec, 4);
  const StructureFit fit = fit_structure(ops, kHalf, 3);
  REQUIRE(fit.verdict == StructureFit::Verdict::EXACT);
  for (int n = 0; n <= 3; ++n) {
    auto [an, bn] = structure_coeffs(fit.a, fit.b, fam.rec, kHalf, n);
    CHECK(an == fit.an[static_cast<size_t>(n)]);
    CHECK(bn == fit.bn[static_cast<size_t>(n)]);
    CHECK(fit.cn[static_cast<size_t>(n)] == fam.cn[static_cast<size_t>(n)]);
  }
  // a_n = a gamma_n / alpha_{n+1} with a = 0 here
  for (const auto& an : fit.an) CHECK(is_zero(an));
}

TEST_CASE("case I family closed forms") {
  const CorollaryFamily fam = case_i(8);
  CHECK(fam.kase == CorollaryCase::I);
  CHECK(fam.C1 == Rational(21, 16));
  CHECK(fam.C2 == Rational(25, 8));
  CHECK(fam.B2 == Rational(-21, 26));
  CHECK(fam.r == Rational(5, 2));
  CHECK(fam.bn[1] == Rational(4, 5));
  CHECK(fam.bn[2] == Rational(20, 17));
  CHECK(fam.bn[3] == Rational(84, 65));
  CHECK(fam.cn[1] == Rational(-21, 10));
  CHECK(fam.cn[2] == Rational(-5));
  CHECK(fam.cn[3] == Rational(-90069, 14365));
}

TEST_CASE("case II-b family closed forms") {
  const CorollaryFamily fam = case_iib(8);
  CHECK(fam.kase == CorollaryCase::IIb);
  CHECK(fam.C1 == Rational(63, 1408));
  CHECK(fam.C2 == Rational(21375, 23936));
  CHECK(fam.B2 == Rational(-11, 26));
  CHECK(fam.r == Rational(89, 44));
}

TEST_CASE("case II-a needs its free parameter") {
  CHECK_THROWS_AS(corollary_family(Rational(5, 4), Rational(-105, 16), kHalf, 1, 6), CaseError);
  CHECK_THROWS_AS(corollary_family(Rational(5, 4), Rational(-105, 16), kHalf, -1, 6, Rational(1)),
                  CaseError);
  const CorollaryFamily fam = case_iia(8);
  CHECK(fam.kase == CorollaryCase::IIa);
  CHECK(fam.C2 == Rational(11425, 544));
  CHECK(fam.B2 == Rational(-275, 52));
  CHECK(fam.r == Rational(489, 425));
}

TEST_CASE("degenerate and inconsistent inputs are rejected") {
  CHECK_THROWS_AS(corollary_family(Rational(1, 2), Rational(1, 2), kHalf, 1, 6), DegenerateError);
  CHECK_THROWS_AS(corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, 6, Rational(1)),
                  MismatchError);
}

TEST_CASE("the degree-one relation holds through n = 3 and not beyond") {
  for (const CorollaryFamily& fam : {case_i(12), case_iib(12)}) {
    const MonicOPS ops = generate_ops(fam.rec, 10);
    const XPoly zr({-fam.r, Rational(1)});
    for (int n = 0; n <= 3; ++n) {
      const XPoly lhs = zr * dq(ops.P(n), kHalf);
      XPoly rhs = sq(ops.P(n), kHalf).scale(fam.bn[static_cast<size_t>(n)]);
      if (n >= 1) rhs = rhs + sq(ops.P(n - 1), kHalf).scale(fam.cn[static_cast<size_t>(n)]);
      CHECK(lhs == rhs);
    }
    const XPoly lhs4 = zr * dq(ops.P(4), kHalf);
    const XPoly rhs4 = sq(ops.P(4), kHalf).scale(fam.bn[4]) + sq(ops.P(3), kHalf).scale(fam.cn[4]);
    CHECK(lhs4 != rhs4);
  }
}

TEST_CASE("structure fit verdicts") {
  for (const CorollaryFamily& fam : {case_i(12), case_iib(12)}) {
    const MonicOPS ops4 = generate_ops(fam.rec, 4);
    const StructureFit fit3 = fit_structure(ops4, kHalf, 3);
    REQUIRE(fit3.verdict == StructureFit::Verdict::EXACT);
    CHECK(fit3.a == Rational(0));
    CHECK(fit3.b == Rational(1));
    CHECK(fit3.c == -fam.r);
    CHECK(fit3.cn_nonzero);
    for (const auto& res : fit3.residuals) CHECK(res.is_zero());

    const MonicOPS ops9 = generate_ops(fam.rec, 9);
    const StructureFit fit8 = fit_structure(ops9, kHalf, 8);
    CHECK(fit8.verdict == StructureFit::Verdict::NO_SOLUTION);
    CHECK(fit8.witness_n == 4);
  }
  CHECK_THROWS_AS(fit_structure(generate_ops(case_i(6).rec, 4), kHalf, 2),
                  std::invalid_argument);
}

TEST_CASE("a perturbed recurrence is detected") {
  const CorollaryFamily fam = case_i(10);
  std::vector<Rational> B, C;
  for (int n = 0; n <= 10; ++n) B.push_back(fam.rec.B(n));
  for (int n = 1; n <= 10; ++n) C.push_back(fam.rec.C(n));
  C[1] += 1;
  const RecurrencePair pert(B, C);
  const StructureFit fit = fit_structure(generate_ops(pert, 4), kHalf, 3);
  CHECK(fit.verdict == StructureFit::Verdict::NO_SOLUTION);
  CHECK(fit.witness_n == 3);

  const ConditionResiduals res = check_conditions(Rational(0), Rational(1), -fam.r, pert, kHalf,
                                                  fam.bn[2], fam.cn[2], fam.cn[3]);
  CHECK_FALSE(is_zero(res.res32));
}

TEST_CASE("admissibility conditions vanish on the corollary families") {
  for (const CorollaryFamily& fam : {case_i(8), case_iib(8), case_iia(8)}) {
    const ConditionResiduals res = check_conditions(
        Rational(0), Rational(1), -fam.r, fam.rec, kHalf, fam.bn[2], fam.cn[2], fam.cn[3]);
    CHECK(is_zero(res.res32));
    CHECK(is_zero(res.res33));
  }
}

TEST_CASE("derived second-order data, case I") {
  const CorollaryFamily fam = case_i(14);
  const DerivedPearson dp = derived_phi_psi(Rational(0), fam.rec, kHalf, fam.cn[3]);
  CHECK(dp.fa == Rational(-9, 20));
  CHECK(dp.fb == Rational(5, 8));
  CHECK(dp.fc == Rational(-5, 4));
  CHECK(dp.psi == XPoly({-fam.B0, Rational(1)}));
  CHECK(dp.lambda(0) == Rational(0));
  CHECK(dp.lambda(1) == Rational(1));
  CHECK(dp.lambda(2) == Rational(2));
  CHECK(dp.lambda(3) == Rational(21, 4));
  CHECK(dp.lambda(4) == Rational(289, 16));

  const MonicOPS ops = generate_ops(fam.rec, 12);
  for (int n = 0; n <= 12; ++n)
    CHECK(second_order_apply(dp.phi, dp.psi, ops.P(n), kHalf) == ops.P(n).scale(dp.lambda(n)));

  // the derived functional equation holds to high order
  const MomentFunctional u = moments(fam.rec, 14);
  const PearsonReport pr = pearson_check(PearsonPair(dp.phi, dp.psi), u, kHalf, 12);
  CHECK(pr.pass);
}

TEST_CASE("derived second-order data, case II-b") {
  const CorollaryFamily fam = case_iib(14);
  const DerivedPearson dp = derived_phi_psi(Rational(0), fam.rec, kHalf, fam.cn[3]);
  CHECK(dp.phi == XPoly({Rational(-39, 352), Rational(3, 8), Rational(-9, 20)}));
  const MonicOPS ops = generate_ops(fam.rec, 12);
  for (int n = 0; n <= 12; ++n)
    CHECK(second_order_apply(dp.phi, dp.psi, ops.P(n), kHalf) == ops.P(n).scale(dp.lambda(n)));
}

TEST_CASE("quartic coefficients per case") {
  const QuarticTriple qi = quartic_coeffs(case_i(6));
  CHECK(qi.R == Rational(-5, 3));
  CHECK(qi.T == Rational(-59, 3));
  CHECK(qi.S == Rational(-20, 3));
  const QuarticTriple qb = quartic_coeffs(case_iib(6));
  CHECK(qb.R == Rational(0));
  CHECK(qb.T == Rational(-197, 44));
  CHECK(qb.S == Rational(-5));
  const QuarticTriple qa = quartic_coeffs(case_iia(6));
  CHECK(qa.R == Rational(-55, 3));
  CHECK(qa.S == Rational(-185, 6));
  const QuarticTriple qa2 = quartic_coeffs(
      corollary_family(Rational(-5, 4), Rational(105, 16), kHalf, -1, 6, Rational(1)));
  CHECK(qa2.R == Rational(55, 3));
  CHECK(qa2.S == Rational(185, 6));
}

TEST_CASE("quartic solver on Z^4 = 1/q") {
  const QuarticSolution sol = solve_quartic(Rational(0), Rational(0), Rational(0), kHalf, 256);
  REQUIRE(sol.roots.size() == 4);
  CHECK(sol.vieta_ok);
  const double s2 = 1.4142135623730951;
  const double expected[4][2] = {{-s2, 0.0}, {0.0, -s2}, {0.0, s2}, {s2, 0.0}};
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& root : sol.roots)
      found = found || (std::abs(as_double(root.re) - e[0]) <= 1e-12 &&
                        std::abs(as_double(root.im) - e[1]) <= 1e-12);
    CHECK(found);
  }
}

TEST_CASE("parameter recovery round trip") {
  for (const CorollaryFamily& fam : {case_i(6), case_iib(6), case_iia(6)}) {
    const RecoveryReport rep = recover_params(fam, 256);
    CHECK(rep.quartic.vieta_ok);
    CHECK(rep.pass);
    for (const auto& [name, resid] : rep.reconstruction)
      CHECK(std::abs(as_double(resid)) <= 1e-20);
  }
}

TEST_CASE("second-order eigenvalues match the parameter route up to a constant") {
  // sigma_4 = -1/q by the quartic's constant term; the eigenvalue streams of
  // the two normalizations differ by the fixed factor -4(1+q)/(q(1-q)).
  const CorollaryFamily fam = case_iib(14);
  const DerivedPearson dp = derived_phi_psi(Rational(0), fam.rec, kHalf, fam.cn[3]);
  const Rational q = kHalf.q;
  const Rational sigma4 = Rational(-1) / q;
  const Rational expected = Rational(-4) * (1 + q) / (q * (1 - q));
  CHECK(expected == Rational(-80, 3));
  for (int n = 1; n <= 8; ++n) {
    const Rational lis =
        4 * q * (1 - pow_int(q, -n)) * (1 - sigma4 * pow_int(q, n - 1)) / ((1 - q) * (1 - q));
    CHECK(lis == expected * dp.lambda(n));
  }
}
