#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qaw/qops.hpp"
#include "qaw/xpoly.hpp"

namespace qaw {

struct RegularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// TTRR data: B_0..B_N and C_1..C_N, materialized up to the horizon N.
class RecurrencePair {
 public:
  RecurrencePair(std::vector<Rational> B, std::vector<Rational> C_from_1)
      : B_(std::move(B)), C_(std::move(C_from_1)) {}

  int horizon() const { return static_cast<int>(B_.size()) - 1; }
  const Rational& B(int n) const { return B_.at(static_cast<size_t>(n)); }
  const Rational& C(int n) const {  // n >= 1
    if (n < 1) throw std::out_of_range("RecurrencePair::C: n < 1");
    return C_.at(static_cast<size_t>(n - 1));
  }
  int c_count() const { return static_cast<int>(C_.size()); }

 private:
  std::vector<Rational> B_;
  std::vector<Rational> C_;  // C_[i] = C_{i+1}
};

/// Monic OPS P_0..P_N built from the TTRR.
class MonicOPS {
 public:
  const XPoly& P(int n) const { return P_.at(static_cast<size_t>(n)); }
  int horizon() const { return static_cast<int>(P_.size()) - 1; }
  const RecurrencePair& rec() const { return rec_; }

  friend MonicOPS generate_ops(const RecurrencePair& rec, int N);

 private:
  MonicOPS(std::vector<XPoly> P, RecurrencePair rec)
      : P_(std::move(P)), rec_(std::move(rec)) {}
  std::vector<XPoly> P_;
  RecurrencePair rec_;
};

/// P_{n+1} = (x - B_n)P_n - C_n P_{n-1}. Throws RegularityError on C_n = 0.
MonicOPS generate_ops(const RecurrencePair& rec, int N);

/// Truncated moment vector mu_0..mu_M with mu_0 = 1.
class MomentFunctional {
 public:
  explicit MomentFunctional(std::vector<Rational> mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw std::invalid_argument("MomentFunctional: empty");
  }

  int order() const { return static_cast<int>(mu_.size()) - 1; }
  const Rational& moment(int n) const {
    if (n < 0 || n > order()) throw OrderExceeded("moment index beyond order");
    return mu_[static_cast<size_t>(n)];
  }

  /// <u, p>; throws OrderExceeded if deg p > order.
  Rational pair(const XPoly& p) const;

 private:
  std::vector<Rational> mu_;
};

/// Moments of the regular functional determined by the TTRR and mu_0 = 1,
/// via expansion of x^n in the P_k basis.
MomentFunctional moments(const RecurrencePair& rec, int M);

/// Adjoint actions on functionals: <Dq u, f> = -<u, Dq f>, <Sq u, f> = <u, Sq f>.
/// Both keep the moment order.
MomentFunctional functional_dq(const MomentFunctional& u, const QParam& qp);
MomentFunctional functional_sq(const MomentFunctional& u, const QParam& qp);

/// Left multiplication: <phi u, f> = <u, phi f>. Order drops by deg phi.
MomentFunctional functional_mul(const MomentFunctional& u, const XPoly& phi);

/// A simple set Q_0..Q_N (deg Q_n = n) with its dual basis, obtained by
/// triangular inversion of the coefficient matrix.
class SimpleSet {
 public:
  explicit SimpleSet(std::vector<XPoly> Q);

  int horizon() const { return static_cast<int>(Q_.size()) - 1; }
  const XPoly& Q(int n) const { return Q_.at(static_cast<size_t>(n)); }

  /// <a_n, x^m> for m = 0..N.
  const std::vector<Rational>& dual_row(int n) const {
    return dual_.at(static_cast<size_t>(n));
  }

  /// <a_n, f>; deg f must be <= N.
  Rational dual_pairing(int n, const XPoly& f) const;

 private:
  std::vector<XPoly> Q_;
  std::vector<std::vector<Rational>> dual_;
};

/// Dual pairing for a monic OPS through its functional:
/// <a_n, f> = <u, P_n f> / <u, P_n^2>.
Rational dual_pairing(const MonicOPS& ops, const MomentFunctional& u, int n, const XPoly& f);

}  // namespace qaw
