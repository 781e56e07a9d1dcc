// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_QUAD_SCALAR_HPP
#define FFC_QUAD_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "ffc/errors.hpp"
#include "ffc/poly.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// Writes n = s^2 * r with r square-free. n >= 0.
inline std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n < 0) throw ParameterError("split_square of a negative integer");
  if (n == 0) return {Integer(0), Integer(0)};
  Integer s = 1, r = 1, rest = n;
  for (unsigned long p = 2; Integer(p) * p <= rest; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) r *= p;
  }
  // whatever is left is a prime > sqrt of the remaining cofactor
  r *= rest;
  return {s, r};
}

/// a + b*sqrt(r) with a, b rational and r a square-free nonnegative integer.
///
/// When r is 0 or 1 the value is rational and is stored with b = 0, r = 0.
/// Binary operations require both operands to share the same radicand, or
/// one of them to be rational.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long a) : a_(a) {}              // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(n) for any nonnegative integer n; square factors of n are
  /// pulled into b.
  QuadScalar(const Rational& a, const Rational& b, const Integer& n) : a_(a) {
    auto [s, r] = split_square(n);
    if (r <= 1) {
      a_ += b * Rational(s * r);
    } else {
      b_ = b * Rational(s);
      r_ = r;
    }
    normalize();
  }

  /// c * sqrt(n)
  static QuadScalar sqrt_of(const Integer& n, const Rational& c = 1) { return QuadScalar(0, c, n); }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_coeff() const noexcept { return b_; }
  const Integer& radicand() const noexcept { return r_; }
  bool is_rational() const noexcept { return b_ == 0; }

  /// Exact sign: compares a^2 against b^2 r when a and b*sqrt(r) disagree in sign.
  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(r_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
  }

  QuadScalar operator-() const {
    QuadScalar q = *this;
    q.a_ = -q.a_;
    q.b_ = -q.b_;
    return q;
  }

  QuadScalar& operator+=(const QuadScalar& o) {
    adopt_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
  }
  QuadScalar& operator-=(const QuadScalar& o) { return *this += -o; }
  QuadScalar& operator*=(const QuadScalar& o) {
    adopt_radicand(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(r_);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    normalize();
    return *this;
  }

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.r_ == y.r_);
  }
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  double to_double() const {
    mpf_class v = to_mpf(128);
    return v.get_d();
  }

  mpf_class to_mpf(unsigned bits) const {
    mpf_class a(0, bits), b(0, bits), r(0, bits);
    a = a_;
    b = b_;
    r = r_;
    return a + b * sqrt(r);
  }

  /// Canonical text: "a", "b*sqrt(r)", "a+b*sqrt(r)", with b omitted when +-1.
  std::string str() const {
    if (b_ == 0) return to_string(a_);
    std::string out;
    if (a_ != 0) out = to_string(a_);
    Rational mag = abs(b_);
    if (b_ < 0) out += "-";
    else if (a_ != 0) out += "+";
    if (mag != 1) out += to_string(mag) + "*";
    out += "sqrt(" + to_string(r_) + ")";
    return out;
  }

  /// 15 significant digits unless asked otherwise.
  std::string decimal(int digits = 15) const {
    mpf_class v = to_mpf(512);
    std::string buf(128 + static_cast<std::size_t>(digits), '\0');
    int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, v.get_mpf_t());
    buf.resize(static_cast<std::size_t>(n));
    return buf;
  }

 private:
  void adopt_radicand(const QuadScalar& o) {
    if (o.b_ == 0) return;
    if (b_ == 0) {
      r_ = o.r_;
      return;
    }
    if (r_ != o.r_) throw ParameterError("QuadScalar operands live in different quadratic fields");
  }
  void normalize() {
    if (b_ == 0) r_ = 0;
  }

  Rational a_ = 0;
  Rational b_ = 0;
  Integer r_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const QuadScalar& q) { return os << q.str(); }

/// Exact value p(x) for x in Q(sqrt(r)).
inline QuadScalar evaluate(const RatPoly& p, const QuadScalar& x) {
  QuadScalar acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= x;
    acc += QuadScalar(*it);
  }
  return acc;
}

/// Parses the canonical forms produced by QuadScalar::str().
inline QuadScalar parse_quad_scalar(const std::string& text, const std::string& where = "quad_scalar") {
  auto pos = text.find("sqrt(");
  if (pos == std::string::npos) return QuadScalar(parse_rational(text, where));
  if (text.empty() || text.back() != ')') throw ParseError(where, "malformed '" + text + "'");
  Integer n;
  std::string radicand = text.substr(pos + 5, text.size() - pos - 6);
  if (radicand.empty() || radicand.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(where, "malformed radicand in '" + text + "'");
  n = Integer(radicand, 10);
  std::string head = text.substr(0, pos);  // "a+b*", "a-", "b*", "-", ""
  Rational a = 0, b = 1;
  if (!head.empty() && head.back() == '*') head.pop_back();
  else if (head.empty() || head.back() == '+' || head.back() == '-') head += "1";  // unit coefficient
  else throw ParseError(where, "missing '*' before sqrt in '" + text + "'");
  // split rational part from coefficient at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    b = parse_rational(head == "-1" ? "-1" : head, where);
  } else {
    a = parse_rational(head.substr(0, split), where);
    std::string coef = head.substr(split);
    if (coef[0] == '+') coef = coef.substr(1);
    b = parse_rational(coef, where);
  }
  return QuadScalar(a, b, n);
}

}  // namespace ffc

#endif  // FFC_QUAD_SCALAR_HPP
