#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qaw/opseq.hpp"
#include "qaw/qparam.hpp"
#include "qaw/xpoly.hpp"

namespace qaw {

struct RestrictionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegeneratePsi : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Askey-Wilson parameters with their elementary symmetric functions.
struct AWParams {
  std::array<Rational, 4> a;
  QParam qp;

  AWParams(std::array<Rational, 4> params, QParam q) : a(std::move(params)), qp(std::move(q)) {}

  Rational sigma(int j) const;  // j = 1..4
};

/// Monic Askey-Wilson TTRR coefficients (B_n, C_{n+1}). Throws
/// RestrictionViolated naming the vanishing factor, ZeroParameter if a1 = 0.
std::pair<Rational, Rational> aw_recurrence(const AWParams& p, int n);

/// The (phi, psi, lambda_n) of the Askey-Wilson second-order equation, in
/// terms of the sigma_j. Throws DegeneratePsi when sigma_4 = 1 (deg psi < 1).
struct IsmailCoeffs {
  XPoly phi;
  XPoly psi;
  std::function<Rational(int)> lambda;
};
IsmailCoeffs ismail_coeffs(const AWParams& p);

/// Pearson data: phi of degree <= 2, psi of exact degree 1.
struct PearsonPair {
  XPoly phi;
  XPoly psi;

  PearsonPair(XPoly phi_, XPoly psi_) : phi(std::move(phi_)), psi(std::move(psi_)) {
    if (phi.degree() > 2) throw std::invalid_argument("PearsonPair: deg phi > 2");
    if (psi.degree() != 1) throw std::invalid_argument("PearsonPair: deg psi != 1");
  }

  /// Same pair with psi monic.
  PearsonPair monic_psi() const {
    const Rational s = Rational(1) / psi.coeff(1);
    return PearsonPair(phi.scale(s), psi.scale(s));
  }
};

/// TTRR coefficients (B_n, C_{n+1}) of the family whose functional satisfies
/// Dq(phi u) = Sq(psi u). Throws AdmissibilityError naming the vanishing d_k.
std::pair<Rational, Rational> pearson_recurrence(const PearsonPair& pp, const QParam& qp, int n);

/// Residuals <Dq(phi u) - Sq(psi u), x^n> for n = 0..N; pass iff all zero.
struct PearsonReport {
  std::vector<Rational> residuals;
  bool pass = false;
};
PearsonReport pearson_check(const PearsonPair& pp, const MomentFunctional& u,
                            const QParam& qp, int N);

}  // namespace qaw
