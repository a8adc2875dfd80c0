#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace lgq {

/// Arbitrary-precision rational number.
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair. Throws
/// DivisionByZeroError when den == 0.
Rational rational(long num, long den = 1);

/// Parses "p" or "p/q" with an optional leading sign.
Rational parse_rational(const std::string& text);

/// "p" when den == 1, otherwise "p/q".
std::string rational_str(const Rational& r);

/// base^exp with exact arithmetic; negative exponents require base != 0.
Rational pow_rational(const Rational& base, long exp);

/// True when r > 0.
bool is_positive(const Rational& r);

/// Sparse Laurent polynomial in q with rational coefficients.
///
/// Canonical form: the exponent-to-coefficient map never stores a zero
/// coefficient, so equality of maps is equality of polynomials.
class LaurentPoly {
public:
  LaurentPoly() = default;  // zero
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly q_power(int exp);
  static LaurentPoly term(const Rational& coeff, int exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Exponent bounds; both throw on the zero polynomial.
  int lowest_exponent() const;
  int highest_exponent() const;

  Rational coeff(int exp) const;
  /// Value of a constant polynomial (zero included); throws otherwise.
  Rational constant_value() const;
  const std::map<int, Rational>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;

  /// Multiplication by q^exp.
  LaurentPoly shifted(int exp) const;
  /// Multiplication by a rational constant.
  LaurentPoly scaled(const Rational& c) const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }

  /// Exact value at q = q0; q0 must be nonzero.
  Rational evaluate(const Rational& q0) const;

  /// Canonical text, terms by decreasing exponent, e.g. "q^2 - q^-2",
  /// "(1/2)·q^0". The zero polynomial prints "0".
  std::string str() const;

private:
  std::map<int, Rational> terms_;

  void set(int exp, const Rational& c);
};

/// Monic greatest common divisor, normalized to lowest exponent 0.
/// gcd(0, 0) = 0; otherwise the result divides both arguments exactly.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient num / den; throws DerivationError when the division
/// leaves a remainder and DivisionByZeroError when den == 0.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Unit-normal form: shifted to lowest exponent 0 and scaled so the
/// highest-exponent coefficient is 1. Zero maps to zero.
LaurentPoly unit_normal(const LaurentPoly& p);

}  // namespace lgq
