// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_STURM_HPP
#define FFC_STURM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/poly.hpp"
#include "ffc/quad_scalar.hpp"
#include "ffc/rational.hpp"

namespace ffc {

namespace detail {

inline std::vector<Integer> integer_coeffs(const RatPoly& primitive) {
  std::vector<Integer> out;
  out.reserve(primitive.coeffs().size());
  for (const auto& q : primitive.coeffs()) {
    if (q.get_den() != 1) throw InternalError("expected an integral polynomial");
    out.emplace_back(q.get_num());
  }
  return out;
}

/// Sign of sum c_i x^i at x = num/den (den > 0), using integer Horner on
/// den^deg * p(x).
inline int sign_at(const std::vector<Integer>& c, const Integer& num, const Integer& den) {
  if (c.empty()) return 0;
  Integer acc = c.back();
  Integer dpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    acc += c[i] * dpow;
  }
  return sgn(acc);
}

}  // namespace detail

/// Sturm sequence of the square-free part of a polynomial.
///
/// polys()[0] is the square-free part g (scaled to coprime integer
/// coefficients), polys()[1] is g', and the rest are negated Euclidean
/// remainders, each rescaled by a positive constant. For any a < b,
/// variations(a) - variations(b) is the number of distinct real roots of g
/// (equivalently of the input) in (a, b].
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p) {
    if (p.is_zero()) throw ParameterError("Sturm chain of the zero polynomial");
    RatPoly g = primitive_part(square_free_part(p));
    polys_.push_back(g);
    if (g.degree() > 0) {
      polys_.push_back(primitive_part(derivative(g)));
      while (true) {
        const auto n = polys_.size();
        RatPoly r = divmod(polys_[n - 2], polys_[n - 1]).second;
        if (r.is_zero()) break;
        polys_.push_back(primitive_part(-r));
      }
    }
    ints_.reserve(polys_.size());
    for (const auto& q : polys_) ints_.push_back(detail::integer_coeffs(q));
  }

  const std::vector<RatPoly>& polys() const noexcept { return polys_; }
  const RatPoly& square_free() const noexcept { return polys_.front(); }
  int degree() const noexcept { return polys_.front().degree(); }

  int variations(const Rational& x) const {
    std::vector<int> s;
    s.reserve(ints_.size());
    Integer num = x.get_num(), den = x.get_den();
    for (const auto& c : ints_) s.push_back(detail::sign_at(c, num, den));
    return count_changes(s);
  }

  int variations(const QuadScalar& x) const {
    if (x.is_rational()) return variations(x.rational_part());
    std::vector<int> s;
    s.reserve(polys_.size());
    for (const auto& q : polys_) s.push_back(evaluate(q, x).sign());
    return count_changes(s);
  }

  int variations_pos_inf() const {
    std::vector<int> s;
    for (const auto& q : polys_) s.push_back(sgn(q.leading()));
    return count_changes(s);
  }

  int variations_neg_inf() const {
    std::vector<int> s;
    for (const auto& q : polys_) s.push_back(q.degree() % 2 ? -sgn(q.leading()) : sgn(q.leading()));
    return count_changes(s);
  }

  /// Distinct real roots in (lo, hi].
  template <class Point>
  int count_half_open(const Point& lo, const Point& hi) const {
    return variations(lo) - variations(hi);
  }

  /// Distinct real roots in (x, +inf).
  template <class Point>
  int count_above(const Point& x) const {
    return variations(x) - variations_pos_inf();
  }

  /// Distinct real roots overall.
  int count_all() const { return variations_neg_inf() - variations_pos_inf(); }

  bool is_root(const Rational& x) const { return square_free()(x) == 0; }
  bool is_root(const QuadScalar& x) const { return evaluate(square_free(), x).sign() == 0; }

 private:
  static int count_changes(const std::vector<int>& s) {
    int changes = 0, last = 0;
    for (int v : s) {
      if (v == 0) continue;
      if (last != 0 && v != last) ++changes;
      last = v;
    }
    return changes;
  }

  std::vector<RatPoly> polys_;
  std::vector<std::vector<Integer>> ints_;
};

/// True iff every root is real (counted with multiplicity). Nonzero constants
/// are vacuously real-rooted; the zero polynomial is rejected.
inline bool is_real_rooted(const RatPoly& p) {
  if (p.is_zero()) throw ParameterError("is_real_rooted of the zero polynomial");
  if (p.degree() <= 0) return true;
  SturmChain chain(p);
  return chain.count_all() == chain.degree();
}

/// Distinct real roots in (lo, hi) when `open`, else in [lo, hi].
inline int count_roots_in(const RatPoly& p, const QuadScalar& lo, const QuadScalar& hi, bool open) {
  if (p.is_zero()) throw ParameterError("count_roots_in of the zero polynomial");
  if (!(lo < hi)) throw ParameterError("count_roots_in requires lo < hi");
  if (p.degree() <= 0) return 0;
  SturmChain chain(p);
  int n = chain.count_half_open(lo, hi);
  if (open) return n - (chain.is_root(hi) ? 1 : 0);
  return n + (chain.is_root(lo) ? 1 : 0);
}

/// Every root z satisfies |z| < 1 + max_i |a_i / a_n|.
inline Rational cauchy_root_bound(const RatPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

/// Rational interval [lo, hi] with hi - lo <= width that contains the largest
/// real root of p. The root lies in (lo, hi].
inline std::pair<Rational, Rational> max_root_bracket(const SturmChain& chain, const RatPoly& p,
                                                      const Rational& width) {
  if (width <= 0) throw ParameterError("bracket width must be positive");
  if (chain.count_all() == 0) throw ParameterError("polynomial has no real roots");
  Rational b = cauchy_root_bound(p);
  Rational lo = -b, hi = b;
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (chain.count_above(mid) > 0) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

inline std::pair<Rational, Rational> max_root_bracket(const RatPoly& p, const Rational& width) {
  if (p.degree() < 1) throw ParameterError("max_root_bracket needs a nonconstant polynomial");
  SturmChain chain(p);
  return max_root_bracket(chain, p, width);
}

/// Disjoint half-open intervals (lo, hi], ascending, each holding exactly one
/// distinct real root of p.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const SturmChain& chain,
                                                                     const RatPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  Rational b = cauchy_root_bound(p);
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = chain.count_half_open(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    // push right half first so the left half is processed next
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  return out;
}

/// g --> f: the roots of g and f interlace and the largest root of f is at
/// least the largest root of g. Requires deg g = deg f - 1.
///
/// Common roots are divided out first (exact gcd); the reduced pair must
/// then strictly alternate with simple roots.
inline bool interlaces(const RatPoly& g, const RatPoly& f) {
  if (f.is_zero() || g.is_zero()) throw ParameterError("interlaces on the zero polynomial");
  if (g.degree() != f.degree() - 1) throw ParameterError("interlaces requires deg g = deg f - 1");
  if (!is_real_rooted(f) || !is_real_rooted(g)) return false;
  RatPoly h = gcd(f, g);
  RatPoly f1 = exact_div(f, h), g1 = exact_div(g, h);
  if (gcd(f1, derivative(f1)).degree() > 0) return false;
  if (g1.degree() > 0 && gcd(g1, derivative(g1)).degree() > 0) return false;
  if (g1.degree() <= 0) return true;

  SturmChain cf(f1), cg(g1);
  auto iv = isolate_real_roots(cf, f1);
  for (auto& [lo, hi] : iv) {
    // shrink around the f1 root until no g1 root shares the interval
    while (cg.count_half_open(lo, hi) != 0) {
      Rational mid = (lo + hi) / 2;
      if (cf.count_half_open(lo, mid) == 1) hi = mid;
      else lo = mid;
    }
  }
  for (std::size_t k = 0; k + 1 < iv.size(); ++k)
    if (cg.count_half_open(iv[k].second, iv[k + 1].first) != 1) return false;
  return cg.count_all() == g1.degree();
}

}  // namespace ffc

#endif  // FFC_STURM_HPP
