#include "qaw/xpoly.hpp"

#include <stdexcept>

namespace qaw {

XPoly XPoly::monomial(int k, Rational coeff) {
  if (k < 0) throw std::invalid_argument("XPoly::monomial: negative degree");
  if (qaw::is_zero(coeff)) return XPoly();
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c.back() = std::move(coeff);
  return XPoly(std::move(c));
}

Rational XPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

XPoly XPoly::operator+(const XPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return XPoly(std::move(r));
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v = -v;
  return XPoly(std::move(r));
}

XPoly XPoly::operator*(const XPoly& o) const {
  if (is_zero() || o.is_zero()) return XPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return XPoly(std::move(r));
}

XPoly XPoly::scale(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return XPoly(std::move(r));
}

SymLaurent SymLaurent::operator+(const SymLaurent& o) const {
  std::vector<Rational> r(std::max(l_.size(), o.l_.size()), Rational(0));
  for (size_t i = 0; i < l_.size(); ++i) r[i] += l_[i];
  for (size_t i = 0; i < o.l_.size(); ++i) r[i] += o.l_[i];
  return SymLaurent(std::move(r));
}

SymLaurent SymLaurent::operator*(const SymLaurent& o) const {
  if (is_zero() || o.is_zero()) return SymLaurent();
  const int da = degree(), db = o.degree();
  // Convolve the full exponent ranges [-da, da] x [-db, db], then fold.
  const int d = da + db;
  std::vector<Rational> full(static_cast<size_t>(2 * d) + 1, Rational(0));  // index e + d
  auto at = [&](const SymLaurent& p, int e) { return p.coeff(e); };
  for (int i = -da; i <= da; ++i) {
    Rational a = at(*this, i);
    if (qaw::is_zero(a)) continue;
    for (int j = -db; j <= db; ++j) {
      Rational b = at(o, j);
      if (qaw::is_zero(b)) continue;
      full[static_cast<size_t>(i + j + d)] += a * b;
    }
  }
  std::vector<Rational> l(static_cast<size_t>(d) + 1, Rational(0));
  l[0] = full[static_cast<size_t>(d)];
  for (int k = 1; k <= d; ++k) l[static_cast<size_t>(k)] = full[static_cast<size_t>(d + k)];
  return SymLaurent(std::move(l));
}

Rational SymLaurent::eval(const Rational& w) const {
  if (qaw::is_zero(w)) throw std::domain_error("SymLaurent::eval: w = 0");
  Rational acc(0);
  Rational wk(1), wmk(1);
  const Rational winv = Rational(1) / w;
  for (int k = 0; k <= degree(); ++k) {
    if (k == 0)
      acc += coeff(0);
    else
      acc += coeff(k) * (wk + wmk);
    wk *= w;
    wmk *= winv;
  }
  return acc;
}

SymLaurent x_to_laurent(const XPoly& p) {
  // Horner in the Laurent image: acc = acc * X + c_k with X = (z + 1/z)/2.
  const SymLaurent X({Rational(0), Rational(1, 2)});
  SymLaurent acc;
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * X + SymLaurent({p.coeff(k)});
  return acc;
}

XPoly laurent_to_x(const SymLaurent& L) {
  // Peel from the top: the z^d coefficient of x^d is 2^{-d}.
  SymLaurent rest = L;
  XPoly out;
  for (int k = rest.degree(); k >= 1; k = rest.degree()) {
    if (k < 1) break;
    Rational c = rest.coeff(k) * pow_int(Rational(2), k);
    XPoly mono = XPoly::monomial(k, c);
    out += mono;
    rest = rest + x_to_laurent(mono.scale(Rational(-1)));
  }
  out += XPoly::constant(rest.coeff(0));
  return out;
}

Rational eval_at_lattice(const XPoly& p, const Rational& w) {
  if (is_zero(w)) throw std::domain_error("eval_at_lattice: w = 0");
  return p.eval((w + Rational(1) / w) / 2);
}

}  // namespace qaw
