#pragma once

#include <string>

#include "lgq/rational_fn.hpp"

namespace lgq {

/// Element a + b·s of the coefficient field Q(q)[s] / (s² - q - q⁻¹).
///
/// s models the positive square root of the quantum integer [2] = q + q⁻¹
/// for real 0 < q, so conjugation is the identity. Both components are
/// rational functions of q in reduced canonical form, which makes equality
/// of representations equality of field elements.
class Scalar {
public:
  Scalar() = default;  // zero
  Scalar(RationalFn a, RationalFn b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_rational(Rational(1)); }
  static Scalar s() { return Scalar(RationalFn(), RationalFn::constant(Rational(1))); }
  static Scalar q_power(int exp) { return Scalar(RationalFn::q_power(exp), RationalFn()); }
  static Scalar from_rational(const Rational& c) {
    return Scalar(RationalFn::constant(c), RationalFn());
  }
  static Scalar from_rfn(RationalFn a) { return Scalar(std::move(a), RationalFn()); }

  const RationalFn& a() const { return a_; }
  const RationalFn& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_ == RationalFn::constant(Rational(1)); }
  bool has_s_part() const { return !b_.is_zero(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar inverse() const;

  /// Conjugation fixes q and s (both real), so this is the identity map.
  Scalar conjugate() const { return *this; }

  bool operator==(const Scalar& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }

  /// Exact evaluation at q = q0 > 0: the value is a + b·sqrt(q0 + 1/q0)
  /// with the positive branch of the square root.
  struct Value {
    Rational a;
    Rational b;
  };
  Value evaluate(const Rational& q0) const;

  /// Evaluation that demands an exact rational result; throws
  /// IrrationalValueError when the s-component survives at q0.
  Rational evaluate_rational(const Rational& q0) const;

  /// Canonical text, e.g. "q^2 - q^-2", "(1/2)·q^0 + (1)·s".
  std::string str() const;

  /// Inverse of str(); accepts minor spelling variants (bare fractions,
  /// optional parentheses). Throws ParseError on malformed input.
  static Scalar parse(const std::string& text);

private:
  RationalFn a_;
  RationalFn b_;
};

/// Total number of stored polynomial terms; used to pick simple pivots
/// during elimination.
std::size_t complexity(const Scalar& x);

}  // namespace lgq
