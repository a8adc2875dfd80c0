#include "lgq/rational_fn.hpp"

#include "lgq/errors.hpp"

namespace lgq {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("RationalFn: zero denominator");
  reduce();
}

RationalFn RationalFn::from_poly(LaurentPoly p) {
  RationalFn r;
  r.num_ = std::move(p);
  return r;
}

RationalFn RationalFn::constant(const Rational& c) {
  return from_poly(LaurentPoly(c));
}

RationalFn RationalFn::q_power(int exp) {
  return from_poly(LaurentPoly::q_power(exp));
}

bool RationalFn::is_poly() const {
  return den_.is_constant() && den_.constant_value() == 1;
}

bool RationalFn::is_constant() const {
  return is_poly() && num_.is_constant();
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    // Fast path: a constant denominator is a unit.
    num_ = num_.scaled(Rational(1) / den_.constant_value());
    den_ = LaurentPoly(Rational(1));
    return;
  }
  const LaurentPoly g = poly_gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  // Normalize the denominator to lowest exponent 0, leading coefficient 1.
  const int shift = den_.lowest_exponent();
  num_ = num_.shifted(-shift);
  den_ = den_.shifted(-shift);
  if (den_.is_constant()) {
    num_ = num_.scaled(Rational(1) / den_.constant_value());
    den_ = LaurentPoly(Rational(1));
    return;
  }
  const Rational lc = den_.coeff(den_.highest_exponent());
  if (lc != 1) {
    num_ = num_.scaled(Rational(1) / lc);
    den_ = den_.scaled(Rational(1) / lc);
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
  return RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::operator-(const RationalFn& rhs) const {
  return RationalFn(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
  if (is_zero() || rhs.is_zero()) return RationalFn();
  return RationalFn(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFn RationalFn::operator/(const RationalFn& rhs) const {
  return *this * rhs.inverse();
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZeroError("RationalFn: inverse of zero");
  return RationalFn(den_, num_);
}

Rational RationalFn::evaluate(const Rational& q0) const {
  const Rational d = den_.evaluate(q0);
  if (d == 0)
    throw PoleError("RationalFn: pole at q = " + rational_str(q0));
  return num_.evaluate(q0) / d;
}

std::string RationalFn::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace lgq
