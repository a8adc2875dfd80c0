#include "lgq/laurent.hpp"

#include <cctype>
#include <cstdlib>

#include "lgq/errors.hpp"

namespace lgq {

Rational rational(long num, long den) {
  if (den == 0) throw DivisionByZeroError("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto digits = [&](bool sign_ok) {
    std::string out;
    if (sign_ok && pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
      out += text[pos++];
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("rational: expected digits in '" + text + "'");
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out += text[pos++];
    return out;
  };
  const std::string num = digits(true);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(false);
  }
  if (pos != text.size())
    throw ParseError("rational: trailing characters in '" + text + "'");
  Rational d(den);
  if (d == 0) throw DivisionByZeroError("rational: zero denominator in '" + text + "'");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp > 0) return Rational(0);
    throw DivisionByZeroError("pow_rational: 0 raised to a negative power");
  }
  const unsigned long k = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), base.get_den().get_mpz_t(), k);
  Rational r = exp < 0 ? Rational(pd, pn) : Rational(pn, pd);
  r.canonicalize();
  return r;
}

bool is_positive(const Rational& r) {
  return sgn(r) > 0;
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  set(0, constant);
}

LaurentPoly LaurentPoly::q_power(int exp) {
  return term(Rational(1), exp);
}

LaurentPoly LaurentPoly::term(const Rational& coeff, int exp) {
  LaurentPoly p;
  p.set(exp, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::lowest_exponent() const {
  if (terms_.empty()) throw Error("lowest_exponent: zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
  if (terms_.empty()) throw Error("highest_exponent: zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_value() const {
  if (!is_constant()) throw Error("constant_value: polynomial is not constant");
  return coeff(0);
}

void LaurentPoly::set(int exp, const Rational& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
  return out;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exp, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
  if (q0 == 0) throw PoleError("evaluate: q = 0 is outside the Laurent domain");
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * pow_rational(q0, e);
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    const Rational& c = it->second;
    const bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    if (e != 0 && mag == 1)
      out += "q^" + std::to_string(e);
    else
      out += "(" + rational_str(mag) + ")·q^" + std::to_string(e);
  }
  return out;
}

namespace {

// Remainder of x mod y in the ordinary polynomial ring; both arguments
// must already have nonnegative exponents and y must be nonzero.
LaurentPoly poly_mod(LaurentPoly x, const LaurentPoly& y) {
  const int dy = y.highest_exponent();
  const Rational ly = y.coeff(dy);
  while (!x.is_zero() && x.highest_exponent() >= dy) {
    const int dx = x.highest_exponent();
    const Rational f = x.coeff(dx) / ly;
    x -= y.shifted(dx - dy).scaled(f);
  }
  return x;
}

}  // namespace

LaurentPoly unit_normal(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shifted(-p.lowest_exponent());
  const Rational lc = r.coeff(r.highest_exponent());
  return r.scaled(Rational(1) / lc);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  LaurentPoly x = a.shifted(-a.lowest_exponent());
  LaurentPoly y = b.shifted(-b.lowest_exponent());
  while (!y.is_zero()) {
    LaurentPoly r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return unit_normal(x);
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZeroError("divide_exact: zero divisor");
  if (num.is_zero()) return LaurentPoly();
  const int sn = num.lowest_exponent();
  const int sd = den.lowest_exponent();
  LaurentPoly x = num.shifted(-sn);
  const LaurentPoly y = den.shifted(-sd);
  const int dy = y.highest_exponent();
  const Rational ly = y.coeff(dy);
  LaurentPoly quot;
  while (!x.is_zero() && x.highest_exponent() >= dy) {
    const int dx = x.highest_exponent();
    const Rational f = x.coeff(dx) / ly;
    quot += LaurentPoly::term(f, dx - dy);
    x -= y.shifted(dx - dy).scaled(f);
  }
  if (!x.is_zero()) throw DerivationError("divide_exact: division is not exact");
  return quot.shifted(sn - sd);
}

}  // namespace lgq
