// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_POLY_HPP
#define FFC_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// Exact univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending order of power and trimmed so that
/// the highest stored coefficient is nonzero. The zero polynomial has no
/// stored coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;

  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
  }

  RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

  static RatPoly constant(const Rational& a) { return RatPoly(std::vector<Rational>{a}); }

  /// a * x^k
  static RatPoly monomial(std::size_t k, const Rational& a = 1) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return RatPoly(std::move(c));
  }

  /// x - r
  static RatPoly linear(const Rational& r) { return RatPoly({-r, Rational(1)}); }

  /// prod (x - r_i)
  static RatPoly from_roots(std::span<const Rational> roots) {
    RatPoly p = constant(1);
    for (const auto& r : roots) p *= linear(r);
    return p;
  }

  static RatPoly from_roots(std::initializer_list<Rational> roots) {
    return from_roots(std::span<const Rational>(roots.begin(), roots.size()));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw ParameterError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  std::span<const Rational> coeffs() const noexcept { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  RatPoly operator-() const {
    RatPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  RatPoly& operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  RatPoly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
  }

  RatPoly& operator/=(const Rational& s) {
    if (s == 0) throw ParameterError("polynomial divided by zero scalar");
    for (auto& q : c_) q /= s;
    return *this;
  }

  RatPoly& operator*=(const RatPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator/(RatPoly a, const Rational& s) { return a /= s; }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Exact formal derivative.
inline RatPoly derivative(const RatPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(c));
}

/// (S p)(x) = p(x^2).
inline RatPoly s_transform(const RatPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> c(2 * p.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[2 * i] = p.coeffs()[i];
  return RatPoly(std::move(c));
}

inline RatPoly pow(const RatPoly& p, unsigned k) {
  RatPoly r = RatPoly::constant(1);
  RatPoly base = p;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ParameterError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  const Rational& lb = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / lb;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

/// a / b, throwing ContractError unless b divides a exactly.
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ContractError("polynomial division is not exact");
  return q;
}

inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Scales p by a positive rational so its coefficients are coprime integers.
/// The sign of p at every point is preserved.
inline RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& q : p.coeffs()) l = lcm(l, Integer(q.get_den()));
  for (const auto& q : p.coeffs()) g = gcd(g, Integer(q.get_num()) * (l / q.get_den()));
  return p * Rational(l, g);
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  return monic(a);
}

/// p / gcd(p, p'), made monic. Same distinct roots as p, each simple.
inline RatPoly square_free_part(const RatPoly& p) {
  if (p.is_zero()) throw ParameterError("square-free part of the zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(1);
  return monic(exact_div(p, gcd(p, derivative(p))));
}

/// Yun's square-free factorization: p = lead * prod_i factors[i]^(i+1), each
/// factor monic and square-free, pairwise coprime. Trailing ones are dropped.
inline std::vector<RatPoly> square_free_factorization(const RatPoly& p) {
  if (p.is_zero()) throw ParameterError("square-free factorization of the zero polynomial");
  std::vector<RatPoly> out;
  if (p.degree() == 0) return out;
  RatPoly f = monic(p);
  RatPoly fp = derivative(f);
  RatPoly a = gcd(f, fp);
  RatPoly b = exact_div(f, a);
  RatPoly c = exact_div(fp, a);
  RatPoly dd = c - derivative(b);
  while (b.degree() > 0) {
    RatPoly g = gcd(b, dd);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(dd, g);
    dd = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

inline std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (a == 1 && i > 0);
    if (!unit) os << to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << to_string(p); }

}  // namespace ffc

#endif  // FFC_POLY_HPP
