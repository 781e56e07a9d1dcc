// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_CONVOLUTION_HPP
#define FFC_CONVOLUTION_HPP

#include <cstddef>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/poly.hpp"
#include "ffc/rational.hpp"
#include "ffc/sturm.hpp"

namespace ffc {

/// Coefficients in the signed, degree-d normalized basis:
///   p(x) = sum_{i=0}^{d} x^{d-i} (-1)^i a_i.
/// A monic degree-d polynomial has a_0 = 1; a_i is then the i-th elementary
/// symmetric function of its roots.
struct SignedCoeffs {
  int d = 0;
  std::vector<Rational> a;

  static SignedCoeffs from_poly(const RatPoly& p, int d) {
    if (d < 0) throw ParameterError("negative dimension");
    if (p.degree() > d) throw ParameterError("polynomial degree exceeds d");
    SignedCoeffs s{d, std::vector<Rational>(static_cast<std::size_t>(d) + 1)};
    for (int i = 0; i <= d; ++i) {
      Rational c = p.coeff(static_cast<std::size_t>(d - i));
      s.a[static_cast<std::size_t>(i)] = (i % 2) ? Rational(-c) : c;
    }
    return s;
  }

  RatPoly to_poly() const {
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
      const Rational& ai = a[static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(d - i)] = (i % 2) ? Rational(-ai) : ai;
    }
    return RatPoly(std::move(c));
  }
};

/// Which finite free additive convolution.
enum class ConvolutionKind { symmetric, asymmetric };

namespace detail {

/// W(d, i, j) = (d-i)! (d-j)! / (d! (d-i-j)!), for i + j <= d.
inline Rational convolution_weight(int d, int i, int j) {
  Integer num = factorial(static_cast<unsigned>(d - i)) * factorial(static_cast<unsigned>(d - j));
  Integer den = factorial(static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(d - i - j));
  Rational w(num, den);
  w.canonicalize();
  return w;
}

inline RatPoly convolve(const RatPoly& p, const RatPoly& q, int d, bool squared) {
  if (d < 0) throw ParameterError("convolution dimension must be nonnegative");
  if (p.degree() > d || q.degree() > d) throw ParameterError("polynomial degree exceeds convolution dimension");
  const SignedCoeffs sp = SignedCoeffs::from_poly(p, d);
  const SignedCoeffs sq = SignedCoeffs::from_poly(q, d);
  SignedCoeffs out{d, std::vector<Rational>(static_cast<std::size_t>(d) + 1)};
  for (int k = 0; k <= d; ++k) {
    Rational acc = 0;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      const Rational& ai = sp.a[static_cast<std::size_t>(i)];
      const Rational& bj = sq.a[static_cast<std::size_t>(j)];
      if (ai == 0 || bj == 0) continue;
      Rational w = convolution_weight(d, i, j);
      if (squared) w *= w;
      acc += w * ai * bj;
    }
    out.a[static_cast<std::size_t>(k)] = acc;
  }
  return out.to_poly();
}

}  // namespace detail

/// Symmetric additive convolution p [+]_d q: the expected characteristic
/// polynomial of A + Q B Q^T over Haar-random orthogonal Q, where p, q are
/// the characteristic polynomials of symmetric A, B. Bilinear, so inputs of
/// degree below d or non-monic inputs are accepted.
inline RatPoly sym_convolve(const RatPoly& p, const RatPoly& q, int d) {
  return detail::convolve(p, q, d, false);
}

/// Asymmetric additive convolution p [++]_d q: the expected characteristic
/// polynomial of (A + Q B R^T)(A + Q B R^T)^T for independent Haar Q, R,
/// where p = chi(A A^T), q = chi(B B^T). Uses the squared weights.
inline RatPoly asym_convolve(const RatPoly& p, const RatPoly& q, int d) {
  return detail::convolve(p, q, d, true);
}

/// Asymmetric convolution plus a flag for inputs outside the nonnegative
/// real-rooted class the root-bound results assume.
struct AsymResult {
  RatPoly poly;
  bool inputs_nonnegative_real_rooted = true;
};

/// True iff p is real-rooted with every root >= 0.
inline bool has_nonnegative_real_roots(const RatPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 0) return true;
  if (!is_real_rooted(p)) return false;
  SturmChain chain(p);
  // no distinct root in (-inf, 0)
  int below = chain.variations_neg_inf() - chain.variations(Rational(0));
  bool zero_root = chain.is_root(Rational(0));
  return below - (zero_root ? 1 : 0) == 0;
}

inline AsymResult asym_convolve_checked(const RatPoly& p, const RatPoly& q, int d) {
  AsymResult r{asym_convolve(p, q, d)};
  r.inputs_nonnegative_real_rooted = has_nonnegative_real_roots(p) && has_nonnegative_real_roots(q);
  return r;
}

inline RatPoly convolve(ConvolutionKind kind, const RatPoly& p, const RatPoly& q, int d) {
  return kind == ConvolutionKind::symmetric ? sym_convolve(p, q, d) : asym_convolve(p, q, d);
}

/// p [+]_d p [+]_d ... (m copies), folded left to right.
inline RatPoly m_fold(ConvolutionKind kind, const RatPoly& p, int m, int d) {
  if (m < 1) throw ParameterError("m-fold convolution needs m >= 1");
  if (p.degree() > d) throw ParameterError("polynomial degree exceeds convolution dimension");
  RatPoly acc = p;
  for (int i = 1; i < m; ++i) acc = convolve(kind, acc, p, d);
  return acc;
}

inline RatPoly m_fold_sym(const RatPoly& p, int m, int d) { return m_fold(ConvolutionKind::symmetric, p, m, d); }
inline RatPoly m_fold_asym(const RatPoly& p, int m, int d) { return m_fold(ConvolutionKind::asymmetric, p, m, d); }

}  // namespace ffc

#endif  // FFC_CONVOLUTION_HPP
