#include "qaw/opseq.hpp"

#include <cassert>

namespace qaw {

MonicOPS generate_ops(const RecurrencePair& rec, int N) {
  if (rec.horizon() < N - 1 || rec.c_count() < N - 1)
    throw std::invalid_argument("generate_ops: recurrence not materialized to N");
  std::vector<XPoly> P;
  P.reserve(static_cast<size_t>(N) + 1);
  P.push_back(XPoly::constant(Rational(1)));
  const XPoly x = XPoly::monomial(1);
  for (int n = 0; n < N; ++n) {
    if (n >= 1 && is_zero(rec.C(n)))
      throw RegularityError("generate_ops: C_" + std::to_string(n) + " = 0");
    XPoly next = (x - XPoly::constant(rec.B(n))) * P.back();
    if (n >= 1) next -= P[static_cast<size_t>(n - 1)].scale(rec.C(n));
    P.push_back(std::move(next));
  }
  // Second coefficient must be -sum_{j<n} B_j.
  Rational bsum(0);
  for (int n = 1; n <= N; ++n) {
    bsum += rec.B(n - 1);
    assert(P[static_cast<size_t>(n)].coeff(n - 1) == -bsum);
  }
  return MonicOPS(std::move(P), rec);
}

Rational MomentFunctional::pair(const XPoly& p) const {
  if (p.degree() > order())
    throw OrderExceeded("pair: polynomial degree exceeds moment order");
  Rational acc(0);
  for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * mu_[static_cast<size_t>(k)];
  return acc;
}

MomentFunctional moments(const RecurrencePair& rec, int M) {
  if (rec.horizon() < M - 1 || rec.c_count() < M - 1)
    throw std::invalid_argument("moments: recurrence horizon insufficient");
  for (int n = 1; n <= M - 1; ++n)
    if (is_zero(rec.C(n)))
      throw RegularityError("moments: C_" + std::to_string(n) + " = 0");
  std::vector<Rational> mu;
  mu.reserve(static_cast<size_t>(M) + 1);
  // e[k] = coefficient of P_k in the P-basis expansion of x^n.
  std::vector<Rational> e{Rational(1)};
  mu.push_back(Rational(1));
  for (int n = 1; n <= M; ++n) {
    std::vector<Rational> ne(e.size() + 1, Rational(0));
    for (size_t k = 0; k < e.size(); ++k) {
      if (is_zero(e[k])) continue;
      ne[k + 1] += e[k];
      ne[k] += e[k] * rec.B(static_cast<int>(k));
      if (k >= 1) ne[k - 1] += e[k] * rec.C(static_cast<int>(k));
    }
    e = std::move(ne);
    mu.push_back(e[0]);
  }
  return MomentFunctional(std::move(mu));
}

MomentFunctional functional_dq(const MomentFunctional& u, const QParam& qp) {
  std::vector<Rational> nu;
  nu.reserve(static_cast<size_t>(u.order()) + 1);
  for (int n = 0; n <= u.order(); ++n)
    nu.push_back(-u.pair(dq(XPoly::monomial(n), qp)));
  return MomentFunctional(std::move(nu));
}

MomentFunctional functional_sq(const MomentFunctional& u, const QParam& qp) {
  std::vector<Rational> nu;
  nu.reserve(static_cast<size_t>(u.order()) + 1);
  for (int n = 0; n <= u.order(); ++n)
    nu.push_back(u.pair(sq(XPoly::monomial(n), qp)));
  return MomentFunctional(std::move(nu));
}

MomentFunctional functional_mul(const MomentFunctional& u, const XPoly& phi) {
  const int d = phi.degree();
  if (d < 0) throw std::invalid_argument("functional_mul: zero polynomial");
  const int M = u.order() - d;
  if (M < 0) throw OrderExceeded("functional_mul: order would be negative");
  std::vector<Rational> nu;
  nu.reserve(static_cast<size_t>(M) + 1);
  for (int n = 0; n <= M; ++n)
    nu.push_back(u.pair(phi * XPoly::monomial(n)));
  return MomentFunctional(std::move(nu));
}

SimpleSet::SimpleSet(std::vector<XPoly> Q) : Q_(std::move(Q)) {
  const int N = static_cast<int>(Q_.size()) - 1;
  for (int n = 0; n <= N; ++n)
    if (Q_[static_cast<size_t>(n)].degree() != n)
      throw SingularSet("SimpleSet: deg Q_" + std::to_string(n) +
                        " != " + std::to_string(n));
  // dual_[n][m] = <a_n, x^m>, with sum_j M[m][j] dual_[n][j] = delta_{nm}
  // where M[m][j] is the x^j coefficient of Q_m. Lower-triangular solve.
  dual_.assign(static_cast<size_t>(N) + 1,
               std::vector<Rational>(static_cast<size_t>(N) + 1, Rational(0)));
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      Rational rhs = (m == n) ? Rational(1) : Rational(0);
      for (int j = 0; j < m; ++j)
        rhs -= Q_[static_cast<size_t>(m)].coeff(j) * dual_[static_cast<size_t>(n)][static_cast<size_t>(j)];
      dual_[static_cast<size_t>(n)][static_cast<size_t>(m)] =
          rhs / Q_[static_cast<size_t>(m)].coeff(m);
    }
  }
}

Rational SimpleSet::dual_pairing(int n, const XPoly& f) const {
  if (n < 0 || n > horizon()) throw std::out_of_range("dual_pairing: n out of range");
  if (f.degree() > horizon())
    throw OrderExceeded("dual_pairing: deg f exceeds set horizon");
  Rational acc(0);
  for (int m = 0; m <= f.degree(); ++m)
    acc += f.coeff(m) * dual_[static_cast<size_t>(n)][static_cast<size_t>(m)];
  return acc;
}

Rational dual_pairing(const MonicOPS& ops, const MomentFunctional& u, int n, const XPoly& f) {
  Rational kappa(1);
  for (int i = 1; i <= n; ++i) kappa *= ops.rec().C(i);
  return u.pair(ops.P(n) * f) / kappa;
}

}  // namespace qaw
