#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaw/awfamily.hpp"
#include "qaw/opseq.hpp"
#include "qaw/quartic.hpp"

namespace qaw {

struct DegenerateR3 : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form streams of the structure relation for pi2 = a z^2 + b z + c:
/// a_n = a gamma_n / alpha_{n+1};
/// alpha_n alpha_{n+1} b_n = gamma_n (a alpha_n B_n + b alpha_{n+1}) + a alpha sum_{j<n} B_j.
std::pair<Rational, Rational> structure_coeffs(const Rational& a, const Rational& b,
                                               const RecurrencePair& rec, const QParam& qp,
                                               int n);

/// Decision object for the relation
/// (a z^2 + b z + c) Dq P_n = a_n Sq P_{n+1} + b_n Sq P_n + c_n Sq P_{n-1}.
struct StructureFit {
  enum class Verdict { EXACT, NO_SOLUTION };
  Verdict verdict = Verdict::NO_SOLUTION;
  Rational a, b, c;                       // normalized: first nonzero = 1
  std::vector<Rational> an, bn, cn;       // streams for n = 0..N (cn[0] = 0)
  std::vector<XPoly> residuals;           // per-n certificate, all zero when EXACT
  bool cn_nonzero = false;                // c_n != 0 for 1 <= n <= N
  int witness_n = -1;                     // first inconsistent n when NO_SOLUTION
};

/// Exact decision procedure: eliminates the per-n streams triangularly and
/// decides solvability of the remaining homogeneous system in (a, b, c).
StructureFit fit_structure(const MonicOPS& ops, const QParam& qp, int N);

/// Left-hand sides of the two admissibility conditions on (a, b); zero means
/// the condition holds. Streams are (b_2, c_2, c_3); r_i = c_i + 2 a C_i.
struct ConditionResiduals {
  Rational res32;
  Rational res33;
};
ConditionResiduals check_conditions(const Rational& a, const Rational& b, const Rational& c,
                                    const RecurrencePair& rec, const QParam& qp,
                                    const Rational& b2, const Rational& c2, const Rational& c3);

/// Second-order data derived from a structure fit: phi = fa z^2 + fb z + fc,
/// psi = z - B_0, lambda_n = gamma_n (fa gamma_{n-1} + alpha_{n-1}).
struct DerivedPearson {
  Rational fa, fb, fc;
  XPoly phi;
  XPoly psi;
  std::function<Rational(int)> lambda;
};
DerivedPearson derived_phi_psi(const Rational& a, const RecurrencePair& rec, const QParam& qp,
                               const Rational& c3);

/// phi Dq^2 p + psi Sq Dq p.
XPoly second_order_apply(const XPoly& phi, const XPoly& psi, const XPoly& p, const QParam& qp);

enum class CorollaryCase { I, IIa, IIb };
std::string to_string(CorollaryCase c);

/// Fully materialized family of the corollary: case data, Pearson pair,
/// TTRR to horizon N and the streams b_n, c_n of the degree-one relation
/// (z - r) Dq P_n = b_n Sq P_n + c_n Sq P_{n-1}.
struct CorollaryFamily {
  CorollaryCase kase;
  int k = 0;  // +/-1, meaningful for case II-a
  QParam qp;
  Rational B0, B1, C1, C2, B2, r;
  PearsonPair pearson;
  RecurrencePair rec;
  std::vector<Rational> bn, cn;  // n = 0..N
};

/// Case II-a leaves C_1 free; it must be supplied there and is cross-checked
/// against the C_1 relation in cases I and II-b when present.
CorollaryFamily corollary_family(const Rational& B0, const Rational& B1, const QParam& qp,
                                 int k, int N,
                                 std::optional<Rational> C1 = std::nullopt);

/// The (R, T, S) triple of the quartic Z^4 - R Z^3 + T Z^2 - S Z - 1/q,
/// selected by the family's case.
struct QuarticTriple {
  Rational R, T, S;
};
QuarticTriple quartic_coeffs(const CorollaryFamily& fam);

/// Full recovery pipeline: solve the case quartic and verify the
/// reconstruction identities for the original family data. Residuals are decimal strings at the working
/// precision; verdict PASS iff every residual is within tolerance.
struct RecoveryReport {
  CorollaryCase kase;
  QuarticTriple triple;
  QuarticSolution quartic;
  std::vector<std::pair<std::string, std::string>> reconstruction;  // name -> residual
  bool pass = false;
};
RecoveryReport recover_params(const CorollaryFamily& fam, unsigned precision_bits = 256);

}  // namespace qaw
