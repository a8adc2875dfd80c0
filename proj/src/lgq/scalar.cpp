#include "lgq/scalar.hpp"

#include <cctype>

#include "lgq/errors.hpp"

namespace lgq {

namespace {

// s² rewrites to the quantum integer [2] = q + q⁻¹.
const RationalFn& s_squared() {
  static const RationalFn v = RationalFn::from_poly(
      LaurentPoly::q_power(1) + LaurentPoly::q_power(-1));
  return v;
}

}  // namespace

Scalar Scalar::operator-() const {
  return Scalar(-a_, -b_);
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  return Scalar(a_ + rhs.a_, b_ + rhs.b_);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  return Scalar(a_ - rhs.a_, b_ - rhs.b_);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  // (a + b·s)(c + d·s) = ac + bd·[2] + (ad + bc)·s
  return Scalar(a_ * rhs.a_ + b_ * rhs.b_ * s_squared(),
                a_ * rhs.b_ + b_ * rhs.a_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  return *this * rhs.inverse();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  *this = *this + rhs;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  *this = *this - rhs;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  *this = *this * rhs;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("Scalar: inverse of zero");
  // (a + b·s)⁻¹ = (a - b·s) / (a² - b²·[2]); the norm is nonzero because
  // [2] is not a square in Q(q).
  const RationalFn norm = a_ * a_ - b_ * b_ * s_squared();
  if (norm.is_zero())
    throw DerivationError("Scalar: vanishing norm for a nonzero element");
  const RationalFn inv = norm.inverse();
  return Scalar(a_ * inv, -(b_ * inv));
}

Scalar::Value Scalar::evaluate(const Rational& q0) const {
  return Value{a_.evaluate(q0), b_.evaluate(q0)};
}

Rational Scalar::evaluate_rational(const Rational& q0) const {
  const Value v = evaluate(q0);
  if (v.b != 0)
    throw IrrationalValueError(
        "Scalar: value at q = " + rational_str(q0) +
        " keeps an irrational s-component (" + rational_str(v.b) + ")·s");
  return v.a;
}

std::string Scalar::str() const {
  std::string out = a_.str();
  if (!b_.is_zero()) {
    const std::string inner = b_.is_constant()
                                  ? rational_str(b_.num().constant_value())
                                  : b_.str();
    out += " + (" + inner + ")·s";
  }
  return out;
}

std::size_t complexity(const Scalar& x) {
  return x.a().num().terms().size() + x.a().den().terms().size() +
         x.b().num().terms().size() + x.b().den().terms().size();
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

constexpr const char* kDot = "\xc2\xb7";  // '·' in UTF-8

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool consume(const std::string& lit) {
    if (text.compare(pos, lit.size(), lit) == 0) {
      pos += lit.size();
      return true;
    }
    return false;
  }
  bool consume_dot() { return consume(kDot); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("Scalar parse: " + msg + " at offset " +
                     std::to_string(pos) + " in '" + text + "'");
  }

  // Consumes "(....)" with balanced nesting and returns the inner text.
  std::string scan_balanced() {
    if (peek() != '(') fail("expected '('");
    std::size_t depth = 0;
    const std::size_t start = pos + 1;
    for (std::size_t i = pos; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') {
        --depth;
        if (depth == 0) {
          std::string inner = text.substr(start, i - start);
          pos = i + 1;
          return inner;
        }
      }
    }
    fail("unbalanced parentheses");
  }

  long parse_integer() {
    std::string digits;
    if (peek() == '-' || peek() == '+') digits += text[pos++];
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text[pos++];
    return std::stol(digits);
  }

  Rational parse_fraction(bool sign_ok) {
    std::string body;
    if (sign_ok && (peek() == '-' || peek() == '+')) body += text[pos++];
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    while (std::isdigit(static_cast<unsigned char>(peek()))) body += text[pos++];
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      body += text[pos++];
      while (std::isdigit(static_cast<unsigned char>(peek()))) body += text[pos++];
    }
    return parse_rational(body);
  }
};

RationalFn parse_rf_text(const std::string& inner);

// One summand: a q-power term, a parenthesized group, a bare fraction, or
// (when allowed) an s-term. Sets is_s when the atom multiplies s.
void parse_atom(Cursor& c, bool allow_s, RationalFn& val, bool& is_s) {
  is_s = false;
  if (c.peek() == '(') {
    const std::string inner = c.scan_balanced();
    if (c.peek() == '/' && c.peek(1) == '(') {
      ++c.pos;
      const std::string den_inner = c.scan_balanced();
      const RationalFn den = parse_rf_text(den_inner);
      if (den.is_zero()) c.fail("zero denominator");
      val = parse_rf_text(inner) / den;
    } else if (c.consume_dot()) {
      if (c.consume("s")) {
        if (!allow_s) c.fail("'s' is not allowed here");
        is_s = true;
        val = parse_rf_text(inner);
        return;
      }
      if (c.consume("q^")) {
        Cursor ic{inner};
        ic.skip_ws();
        const Rational coeff = ic.parse_fraction(true);
        ic.skip_ws();
        if (!ic.eof()) ic.fail("trailing characters in coefficient");
        val = RationalFn::from_poly(
            LaurentPoly::term(coeff, static_cast<int>(c.parse_integer())));
        return;
      }
      c.fail("expected 's' or 'q^' after '·'");
    } else {
      val = parse_rf_text(inner);
    }
    // A quotient or bare group may still multiply s.
    if (c.consume_dot()) {
      if (!c.consume("s")) c.fail("expected 's' after '·'");
      if (!allow_s) c.fail("'s' is not allowed here");
      is_s = true;
    }
    return;
  }
  if (c.consume("q^")) {
    val = RationalFn::q_power(static_cast<int>(c.parse_integer()));
    return;
  }
  if (c.peek() == 's' &&
      !std::isalnum(static_cast<unsigned char>(c.peek(1)))) {
    if (!allow_s) c.fail("'s' is not allowed here");
    ++c.pos;
    is_s = true;
    val = RationalFn::constant(Rational(1));
    return;
  }
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    const Rational f = c.parse_fraction(false);
    if (c.consume_dot()) {
      if (c.consume("q^")) {
        val = RationalFn::from_poly(
            LaurentPoly::term(f, static_cast<int>(c.parse_integer())));
        return;
      }
      if (c.consume("s")) {
        if (!allow_s) c.fail("'s' is not allowed here");
        is_s = true;
        val = RationalFn::constant(f);
        return;
      }
      c.fail("expected 's' or 'q^' after '·'");
    }
    val = RationalFn::constant(f);
    return;
  }
  c.fail("unexpected character");
}

void parse_sum(Cursor& c, bool allow_s, RationalFn& a, RationalFn& b) {
  c.skip_ws();
  if (c.eof()) c.fail("empty expression");
  bool first = true;
  while (true) {
    int sign = 1;
    if (first) {
      if (c.consume("-"))
        sign = -1;
      else
        c.consume("+");
    } else {
      if (c.consume("+"))
        sign = 1;
      else if (c.consume("-"))
        sign = -1;
      else
        c.fail("expected '+' or '-'");
    }
    c.skip_ws();
    RationalFn val;
    bool is_s = false;
    parse_atom(c, allow_s, val, is_s);
    if (sign < 0) val = -val;
    (is_s ? b : a) = (is_s ? b : a) + val;
    first = false;
    c.skip_ws();
    if (c.eof()) return;
  }
}

RationalFn parse_rf_text(const std::string& inner) {
  Cursor c{inner};
  RationalFn a, b;
  parse_sum(c, /*allow_s=*/false, a, b);
  return a;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Cursor c{text};
  RationalFn a, b;
  parse_sum(c, /*allow_s=*/true, a, b);
  return Scalar(std::move(a), std::move(b));
}

}  // namespace lgq
