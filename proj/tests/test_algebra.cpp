#include <doctest.h>

#include "qaw/prng.hpp"
#include "qaw/qparam.hpp"
#include "qaw/xpoly.hpp"

using namespace qaw;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/16") == Rational(3, 16));
  CHECK(parse_rational("-6/9") == Rational(-2, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(Rational(3, 16)) == "3/16");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("polynomial arithmetic") {
  const XPoly xp1({Rational(1), Rational(1)});   // x + 1
  const XPoly xm1({Rational(-1), Rational(1)});  // x - 1
  CHECK(xp1 * xm1 == XPoly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(xp1 + XPoly::zero() == xp1);
  CHECK(XPoly::monomial(2, Rational(2)).scale(Rational(1, 2)) == XPoly::monomial(2));
  // degree law for nonzero products
  SplitMix64 rng(42);
  for (int i = 0; i < 20; ++i) {
    XPoly f = rng.xpoly(6), g = rng.xpoly(6);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("x_to_laurent examples") {
  CHECK(x_to_laurent(XPoly::monomial(1)) == SymLaurent({Rational(0), Rational(1, 2)}));
  CHECK(x_to_laurent(XPoly::monomial(2)) ==
        SymLaurent({Rational(1, 2), Rational(0), Rational(1, 4)}));
  CHECK(x_to_laurent(XPoly::constant(Rational(1))) == SymLaurent({Rational(1)}));
}

TEST_CASE("laurent_to_x examples") {
  CHECK(laurent_to_x(SymLaurent({Rational(1, 2), Rational(0), Rational(1, 4)})) ==
        XPoly::monomial(2));
  CHECK(laurent_to_x(SymLaurent({Rational(7)})) == XPoly::constant(Rational(7)));
  CHECK(laurent_to_x(SymLaurent({Rational(0), Rational(1, 2)})) == XPoly::monomial(1));
}

TEST_CASE("round trip up to degree 12") {
  SplitMix64 rng(7);
  for (int i = 0; i < 50; ++i) {
    XPoly p = rng.xpoly(12);
    CHECK(laurent_to_x(x_to_laurent(p)) == p);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    XPoly f = rng.xpoly(8), g = rng.xpoly(8);
    CHECK(x_to_laurent(f * g) == x_to_laurent(f) * x_to_laurent(g));
    CHECK(x_to_laurent(f + g) == x_to_laurent(f) + x_to_laurent(g));
  }
}

TEST_CASE("evaluation consistency") {
  SplitMix64 rng(13);
  const Rational ws[] = {Rational(2), Rational(3, 10), Rational(7, 10)};
  for (int i = 0; i < 30; ++i) {
    XPoly p = rng.xpoly(8);
    for (const auto& w : ws)
      CHECK(eval_at_lattice(p, w) == x_to_laurent(p).eval(w));
  }
  CHECK(eval_at_lattice(XPoly::monomial(2), Rational(2)) == Rational(25, 16));
  CHECK(eval_at_lattice(XPoly::monomial(1), Rational(1, 2)) == Rational(5, 4));
  CHECK_THROWS_AS(eval_at_lattice(XPoly::monomial(1), Rational(0)), std::domain_error);
}

TEST_CASE("lattice parameter validation") {
  CHECK_THROWS_AS(QParam(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(QParam(Rational(-1, 2)), std::domain_error);
  const QParam qp{Rational(1, 2)};
  CHECK(qp.q == Rational(1, 4));
  CHECK(qp.alpha == Rational(5, 4));
}
