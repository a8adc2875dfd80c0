#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lgq/errors.hpp"
#include "lgq/scalar.hpp"

using namespace lgq;

namespace {

Scalar qp(int e) { return Scalar::q_power(e); }

Scalar rat(long n, long d = 1) { return Scalar::from_rational(rational(n, d)); }

// Random elements stay small: a handful of terms, exponents in [-6, 6].
struct Gen {
  std::mt19937 rng{20240817};

  int exponent() { return static_cast<int>(rng() % 13) - 6; }

  Rational coefficient() {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    return rational(num, den);
  }

  LaurentPoly poly(bool nonzero = false) {
    LaurentPoly p;
    const std::size_t terms = rng() % 4;
    for (std::size_t i = 0; i < terms; ++i)
      p += LaurentPoly::term(coefficient(), exponent());
    if (nonzero && p.is_zero()) p += LaurentPoly::q_power(exponent());
    return p;
  }

  RationalFn rfn() {
    // Mostly polynomials; roughly a quarter carry a real denominator.
    if (rng() % 4 == 0) return RationalFn(poly(), poly(true));
    return RationalFn::from_poly(poly());
  }

  Scalar scalar() { return Scalar(rfn(), rng() % 2 ? rfn() : RationalFn()); }

  Scalar nonzero_scalar() {
    for (;;) {
      Scalar x = scalar();
      if (!x.is_zero()) return x;
    }
  }
};

}  // namespace

TEST_CASE("canonical text matches the documented grammar") {
  CHECK((qp(2) - qp(-2)).str() == "q^2 - q^-2");
  CHECK((rat(1, 2) + Scalar::s()).str() == "(1/2)·q^0 + (1)·s");
  CHECK(Scalar::zero().str() == "0");
  CHECK(Scalar::one().str() == "(1)·q^0");
  CHECK((-Scalar::one()).str() == "-(1)·q^0");
  CHECK(Scalar::s().str() == "0 + (1)·s");
  CHECK((rat(-3, 2) * qp(4)).str() == "-(3/2)·q^4");
  const Scalar frac = Scalar::one() / (qp(1) + qp(-1));
  CHECK(frac.str() == "(q^1)/(q^2 + (1)·q^0)");
}

TEST_CASE("s squares to the quantum integer [2]") {
  CHECK(Scalar::s() * Scalar::s() == qp(1) + qp(-1));
  // (1 + s)(1 - s) = 1 - [2] = 1 - q - q^-1
  CHECK((Scalar::one() + Scalar::s()) * (Scalar::one() - Scalar::s()) ==
        Scalar::one() - qp(1) - qp(-1));
}

TEST_CASE("q-power arithmetic") {
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const int a = g.exponent(), b = g.exponent();
    CHECK(qp(a) * qp(b) == qp(a + b));
  }
  CHECK(qp(3) / qp(5) == qp(-2));
}

TEST_CASE("ring axioms on random triples") {
  Gen g;
  for (int i = 0; i < 1000; ++i) {
    const Scalar x = g.scalar(), y = g.scalar(), z = g.scalar();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Scalar::zero() == x);
    CHECK(x * Scalar::one() == x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("division inverts multiplication") {
  Gen g;
  for (int i = 0; i < 300; ++i) {
    const Scalar x = g.scalar();
    const Scalar y = g.nonzero_scalar();
    CHECK((x / y) * y == x);
    CHECK(y * y.inverse() == Scalar::one());
  }
}

TEST_CASE("canonical form does not depend on the representative") {
  Gen g;
  for (int i = 0; i < 300; ++i) {
    LaurentPoly num = g.poly();
    LaurentPoly den = g.poly(true);
    LaurentPoly h = g.poly(true);
    CHECK(RationalFn(num * h, den * h) == RationalFn(num, den));
  }
  // The reduced denominator starts at exponent 0 with leading coefficient 1.
  for (int i = 0; i < 300; ++i) {
    const RationalFn r = g.rfn();
    if (r.is_zero()) {
      CHECK(r.den() == LaurentPoly(Rational(1)));
      continue;
    }
    CHECK(r.den().lowest_exponent() == 0);
    CHECK(r.den().coeff(r.den().highest_exponent()) == 1);
    CHECK(poly_gcd(r.num(), r.den()) ==
          (r.num().is_zero() ? LaurentPoly() : LaurentPoly(Rational(1))));
  }
}

TEST_CASE("text round-trips through parse") {
  Gen g;
  for (int i = 0; i < 1000; ++i) {
    const Scalar x = g.scalar();
    CHECK(Scalar::parse(x.str()) == x);
  }
  CHECK(Scalar::parse("q^2 - q^-2") == qp(2) - qp(-2));
  CHECK(Scalar::parse("(1/2)·q^0 + (1)·s") == rat(1, 2) + Scalar::s());
  // Lenient spellings.
  CHECK(Scalar::parse("1/2 + s") == rat(1, 2) + Scalar::s());
  CHECK(Scalar::parse("(1/2)") == rat(1, 2));
  CHECK(Scalar::parse(" -q^2 + 1 ") == rat(1) - qp(2));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("q^"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("(1/2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("q^2 +"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x + 1"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1//2"), ParseError);
}

TEST_CASE("evaluation") {
  const Scalar x = qp(2) - qp(-2);
  CHECK(x.evaluate_rational(rational(1, 2)) == rational(-15, 4));

  const Scalar::Value v = Scalar::s().evaluate(rational(1, 2));
  CHECK(v.a == 0);
  CHECK(v.b == 1);
  CHECK_THROWS_AS(Scalar::s().evaluate_rational(rational(1, 2)),
                  IrrationalValueError);
  // s² evaluates to q0 + 1/q0 exactly.
  CHECK((Scalar::s() * Scalar::s()).evaluate_rational(rational(1, 2)) ==
        rational(5, 2));

  const Scalar pole = Scalar::one() / (qp(1) - qp(-1));
  CHECK_THROWS_AS(pole.evaluate(rational(1)), PoleError);
  CHECK(pole.evaluate_rational(rational(2)) == rational(2, 3));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), DivisionByZeroError);
  CHECK_THROWS_AS(Scalar::zero().inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(RationalFn(LaurentPoly(Rational(1)), LaurentPoly()),
                  DivisionByZeroError);
}

TEST_CASE("exact polynomial division and gcd") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = g.poly(true), b = g.poly(true);
    const LaurentPoly p = a * b;
    CHECK(divide_exact(p, a) == b);
    const LaurentPoly d = poly_gcd(p, a);
    CHECK(divide_exact(p, d) * d == p);
  }
  // Monomials are units here, so an inexact case needs a non-monomial divisor.
  CHECK_THROWS_AS(divide_exact(LaurentPoly::q_power(2) + LaurentPoly(Rational(1)),
                               LaurentPoly::q_power(1) + LaurentPoly(Rational(1))),
                  DerivationError);
  CHECK(divide_exact(LaurentPoly::q_power(1) + LaurentPoly(Rational(1)),
                     LaurentPoly::q_power(2)) ==
        LaurentPoly::q_power(-1) + LaurentPoly::q_power(-2));
}
