#pragma once

#include <string>

#include "lgq/laurent.hpp"

namespace lgq {

/// Quotient of Laurent polynomials in q, kept in reduced canonical form.
///
/// Invariants: gcd(num, den) = 1; den has lowest exponent 0 and
/// highest-exponent coefficient 1; zero is represented as 0/1. Equal
/// values therefore have equal representations.
class RationalFn {
public:
  RationalFn() : den_(Rational(1)) {}  // zero
  RationalFn(LaurentPoly num, LaurentPoly den);

  static RationalFn from_poly(LaurentPoly p);
  static RationalFn constant(const Rational& c);
  static RationalFn q_power(int exp);

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const;
  bool is_constant() const;

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  RationalFn operator-() const;
  RationalFn operator+(const RationalFn& rhs) const;
  RationalFn operator-(const RationalFn& rhs) const;
  RationalFn operator*(const RationalFn& rhs) const;
  RationalFn operator/(const RationalFn& rhs) const;
  RationalFn inverse() const;

  bool operator==(const RationalFn& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  /// Exact value at q = q0; throws PoleError when den(q0) = 0.
  Rational evaluate(const Rational& q0) const;

  /// Canonical text: the numerator's polynomial text when den = 1,
  /// otherwise "(num)/(den)".
  std::string str() const;

private:
  LaurentPoly num_;
  LaurentPoly den_;

  void reduce();
};

}  // namespace lgq
