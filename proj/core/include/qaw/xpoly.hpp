#pragma once

#include <initializer_list>
#include <vector>

#include "qaw/rational.hpp"

namespace qaw {

/// Dense polynomial in the lattice variable x, monomial basis, lowest degree
/// first. The zero polynomial is the empty coefficient list.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  XPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

  static XPoly zero() { return XPoly(); }
  static XPoly constant(Rational v) { return XPoly({std::move(v)}); }
  static XPoly monomial(int k, Rational coeff = Rational(1));

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const {
    return (k < 0 || k >= static_cast<int>(c_.size())) ? Rational(0) : c_[k];
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator-() const;
  XPoly scale(const Rational& s) const;

  XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
  XPoly& operator-=(const XPoly& o) { return *this = *this - o; }

  bool operator==(const XPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }

 private:
  void normalize() {
    while (!c_.empty() && qaw::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Symmetric Laurent polynomial: l(0) is the z^0 coefficient, l(k) for k >= 1
/// the shared coefficient of z^k + z^{-k}. Invariant under z -> 1/z by
/// construction.
class SymLaurent {
 public:
  SymLaurent() = default;
  explicit SymLaurent(std::vector<Rational> l) : l_(std::move(l)) { normalize(); }
  SymLaurent(std::initializer_list<Rational> l) : l_(l) { normalize(); }

  int degree() const { return static_cast<int>(l_.size()) - 1; }
  bool is_zero() const { return l_.empty(); }
  Rational coeff(int k) const {
    k = k < 0 ? -k : k;
    return k >= static_cast<int>(l_.size()) ? Rational(0) : l_[k];
  }
  const std::vector<Rational>& coeffs() const { return l_; }

  SymLaurent operator*(const SymLaurent& o) const;
  SymLaurent operator+(const SymLaurent& o) const;

  /// Value at z = w (w != 0): l0 + sum_k l_k (w^k + w^{-k}).
  Rational eval(const Rational& w) const;

  bool operator==(const SymLaurent& o) const { return l_ == o.l_; }
  bool operator!=(const SymLaurent& o) const { return !(*this == o); }

 private:
  void normalize() {
    while (!l_.empty() && qaw::is_zero(l_.back())) l_.pop_back();
  }
  std::vector<Rational> l_;
};

/// Substitution x = (z + 1/z)/2; degree in z equals deg p.
SymLaurent x_to_laurent(const XPoly& p);

/// Inverse substitution (z^k + z^{-k} is triangular in powers of x).
XPoly laurent_to_x(const SymLaurent& L);

/// p((w + 1/w)/2); rejects w = 0.
Rational eval_at_lattice(const XPoly& p, const Rational& w);

}  // namespace qaw
