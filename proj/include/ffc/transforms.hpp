// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_TRANSFORMS_HPP
#define FFC_TRANSFORMS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "ffc/convolution.hpp"
#include "ffc/errors.hpp"
#include "ffc/parallel.hpp"
#include "ffc/poly.hpp"
#include "ffc/quad_scalar.hpp"
#include "ffc/rational.hpp"
#include "ffc/sturm.hpp"

namespace ffc {

/// G_p(x) = p'(x) / (deg p * p(x)), exact.
inline Rational cauchy(const RatPoly& p, const Rational& x) {
  if (p.degree() < 1) throw ParameterError("cauchy transform needs a nonconstant polynomial");
  Rational px = p(x);
  if (px == 0) throw PoleError("cauchy transform evaluated at a root");
  return derivative(p)(x) / (Rational(p.degree()) * px);
}

/// Default tolerance for inverse Cauchy queries: 10^-12.
inline Rational default_cauchy_tol() { return Rational(1, Integer("1000000000000")); }

/// K_p(w) on the branch beyond the largest root. [lo, hi] is a certified
/// bracket of width <= tol; value is a polished double inside it.
struct InverseCauchy {
  Rational lo;
  Rational hi;
  double value = 0;
};

namespace detail {

/// A few Newton steps on G(x) - w in long double, never leaving [lo, hi].
inline double newton_polish(const RatPoly& p, double w, double x, double lo, double hi) {
  const std::size_t n = p.coeffs().size();
  const long double d = static_cast<long double>(p.degree());
  for (int it = 0; it < 3; ++it) {
    long double v = 0, v1 = 0, v2 = 0;
    for (std::size_t k = n; k-- > 0;) {
      v2 = v2 * x + 2 * v1;
      v1 = v1 * x + v;
      v = v * x + static_cast<long double>(p.coeffs()[k].get_d());
    }
    if (v == 0) break;
    long double r = v1 / v;
    long double g = r / d - w;
    long double dg = (v2 / v - r * r) / d;
    if (dg == 0 || !std::isfinite(static_cast<double>(dg))) break;
    double next = static_cast<double>(x - g / dg);
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

}  // namespace detail

/// Largest x with G_p(x) = w. Bisects the certified bracket
/// [r + 1/(d w), r + 1/w] around the largest root r, which lies beyond r so
/// G is strictly decreasing on it.
inline InverseCauchy inverse_cauchy(const RatPoly& p, const Rational& w, const Rational& tol = default_cauchy_tol()) {
  if (w <= 0) throw ParameterError("inverse cauchy transform needs w > 0");
  if (tol <= 0) throw ParameterError("inverse cauchy tolerance must be positive");
  if (p.degree() < 1) throw ParameterError("inverse cauchy transform needs a nonconstant polynomial");
  if (!is_real_rooted(p)) throw ParameterError("inverse cauchy transform needs a real-rooted polynomial");
  const Rational d(p.degree());
  SturmChain chain(p);
  // r in (rlo, rhi] with rhi - rlo < 1/(d w) keeps the lower end above r
  auto [rlo, rhi] = max_root_bracket(chain, p, 1 / (2 * d * w));
  Rational lo = rlo + 1 / (d * w), hi = rhi + 1 / w;
  const RatPoly dp = derivative(p);
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (dp(mid) / (d * p(mid)) > w) lo = mid;
    else hi = mid;
  }
  double x = to_double((lo + hi) / 2);
  x = detail::newton_polish(p, w.get_d(), x, lo.get_d(), hi.get_d());
  return {lo, hi, x};
}

/// Both sides of a root-bound inequality lhs <= rhs. margin = rhs - lhs from
/// the polished values; certified_margin is a lower bound on the true margin
/// computed from the exact brackets.
struct BoundReport {
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  double certified_margin = 0;
};

namespace detail {

inline BoundReport bound_report(const InverseCauchy& kc, const InverseCauchy& kp, const InverseCauchy& kq,
                                const Rational& w) {
  BoundReport r;
  r.lhs = kc.value;
  r.rhs = kp.value + kq.value - to_double(1 / w);
  r.margin = r.rhs - r.lhs;
  r.certified_margin = to_double(kp.lo + kq.lo - 1 / w - kc.hi);
  return r;
}

}  // namespace detail

/// K_{p [+]_d q}(w) <= K_p(w) + K_q(w) - 1/w for real-rooted degree-d p, q.
inline BoundReport check_sym_bound(const RatPoly& p, const RatPoly& q, int d, const Rational& w,
                                   const Rational& tol = default_cauchy_tol()) {
  if (p.degree() != d || q.degree() != d) throw ParameterError("check_sym_bound needs degree-d inputs");
  return detail::bound_report(inverse_cauchy(sym_convolve(p, q, d), w, tol), inverse_cauchy(p, w, tol),
                              inverse_cauchy(q, w, tol), w);
}

/// K_{S(p [++]_d q)}(w) <= K_{S p}(w) + K_{S q}(w) - 1/w for degree-d p, q
/// with nonnegative real roots, S p(x) = p(x^2).
inline BoundReport check_asym_bound(const RatPoly& p, const RatPoly& q, int d, const Rational& w,
                                    const Rational& tol = default_cauchy_tol()) {
  if (p.degree() != d || q.degree() != d) throw ParameterError("check_asym_bound needs degree-d inputs");
  return detail::bound_report(inverse_cauchy(s_transform(asym_convolve(p, q, d)), w, tol),
                              inverse_cauchy(s_transform(p), w, tol), inverse_cauchy(s_transform(q), w, tol), w);
}

/// (x-1)^{d/2-1} (x+1)^{d/2}: a perfect matching on d vertices with the
/// trivial eigenvalue 1 removed.
inline RatPoly matching_nontrivial_poly(int d) {
  if (d < 2 || d % 2) throw ParameterError("matching polynomial needs an even d >= 2");
  const unsigned h = static_cast<unsigned>(d / 2);
  return pow(RatPoly::linear(1), h - 1) * pow(RatPoly::linear(-1), h);
}

/// (x-1)^{d-1}: the identity biadjacency on d + d vertices, trivial singular
/// value removed, in the squared-singular-value variable.
inline RatPoly bip_matching_nontrivial_poly(int d) {
  if (d < 2) throw ParameterError("bipartite matching polynomial needs d >= 2");
  return pow(RatPoly::linear(1), static_cast<unsigned>(d - 1));
}

/// 2 sqrt(m-1) exactly, with an independent numeric minimization of
/// (x^2 + m - 1) / x over x > 0.
struct RamanujanBound {
  QuadScalar exact;
  double numeric = 0;
};

inline RamanujanBound ramanujan_bound(int m) {
  if (m < 2) throw ParameterError("ramanujan bound needs m >= 2");
  RamanujanBound b{QuadScalar::sqrt_of(Integer(m - 1), 2)};
  const double c = m - 1;
  auto f = [c](double x) { return (x * x + c) / x; };
  auto [xmin, fmin] =
      boost::math::tools::brent_find_minima(f, 1e-3, static_cast<double>(m), std::numeric_limits<double>::digits);
  (void)xmin;
  b.numeric = fmin;
  if (std::abs(b.numeric - b.exact.to_double()) > 1e-12)
    throw InternalError("numeric minimization disagrees with 2 sqrt(m-1)");
  return b;
}

/// One (m, d) cell of the root-bound table.
struct TableRow {
  int m = 0;
  int d = 0;
  ConvolutionKind mode = ConvolutionKind::symmetric;
  RatPoly poly;  // symmetric: m-fold at dimension d-1; asymmetric: S of it
  Rational root_lo;
  Rational root_hi;
  QuadScalar bound;
  bool below_bound = false;
};

/// The m-fold convolution of the nontrivial matching polynomial for one cell.
inline RatPoly mfold_matching_poly(int m, int d, ConvolutionKind mode) {
  if (mode == ConvolutionKind::symmetric) return m_fold_sym(matching_nontrivial_poly(d), m, d - 1);
  return s_transform(m_fold_asym(bip_matching_nontrivial_poly(d), m, d - 1));
}

/// Largest root < 2 sqrt(m-1), decided by a Sturm count at the exact bound.
inline TableRow mfold_root_bound_row(int m, int d, ConvolutionKind mode) {
  if (m < 2) throw ParameterError("table entries need m >= 2");
  TableRow row;
  row.m = m;
  row.d = d;
  row.mode = mode;
  row.poly = mfold_matching_poly(m, d, mode);
  row.bound = QuadScalar::sqrt_of(Integer(m - 1), 2);
  SturmChain chain(row.poly);
  std::tie(row.root_lo, row.root_hi) = max_root_bracket(chain, row.poly, Rational(1, Integer(1) << 40));
  row.below_bound = chain.count_above(row.bound) == 0 && !chain.is_root(row.bound);
  return row;
}

/// Rows in (m, d) order, m outer.
inline std::vector<TableRow> mfold_root_bound_table(const std::vector<int>& m_list, const std::vector<int>& d_list,
                                                    ConvolutionKind mode) {
  std::vector<std::pair<int, int>> cells;
  for (int m : m_list)
    for (int d : d_list) cells.emplace_back(m, d);
  return parallel_map(cells.size(), [&](std::size_t i) {
    return mfold_root_bound_row(cells[i].first, cells[i].second, mode);
  });
}

}  // namespace ffc

#endif  // FFC_TRANSFORMS_HPP
