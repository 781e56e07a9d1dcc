// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_MATRIX_HPP
#define FFC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/poly.hpp"
#include "ffc/rational.hpp"

namespace ffc {

/// Dense square matrix of rationals, row-major.
///
/// Optionally annotated with a constant row sum (every row sums to it) and a
/// doubly-regular flag (every column too). Annotations are verified when set.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n) : n_(n), e_(n * n) {}

  RatMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n) throw ParameterError("matrix entry count does not match n*n");
  }

  RatMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    e_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw ParameterError("matrix literal is not square");
      for (long v : row) e_.emplace_back(v);
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const std::vector<Rational>& entries() const noexcept { return e_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Common row sum if every row sums to the same value.
  std::optional<Rational> constant_row_sum() const {
    if (n_ == 0) return std::nullopt;
    std::optional<Rational> s;
    for (std::size_t i = 0; i < n_; ++i) {
      Rational r = 0;
      for (std::size_t j = 0; j < n_; ++j) r += (*this)(i, j);
      if (s && *s != r) return std::nullopt;
      s = r;
    }
    return s;
  }

  std::optional<Rational> constant_col_sum() const { return transpose().constant_row_sum(); }

  /// Annotates and verifies A1 = a1. Throws ContractError if rows differ.
  RatMatrix& mark_row_sum() {
    auto s = constant_row_sum();
    if (!s) throw ContractError("matrix rows do not have a common sum");
    row_sum_ = s;
    return *this;
  }

  /// Annotates and verifies A1 = A^T 1 = a1.
  RatMatrix& mark_doubly_regular() {
    mark_row_sum();
    auto c = constant_col_sum();
    if (!c || *c != *row_sum_) throw ContractError("matrix column sums differ from the row sum");
    doubly_regular_ = true;
    return *this;
  }

  const std::optional<Rational>& row_sum() const noexcept { return row_sum_; }
  bool doubly_regular() const noexcept { return doubly_regular_; }

  RatMatrix transpose() const {
    RatMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    clear_annotations();
    return *this;
  }
  RatMatrix& operator-=(const RatMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    clear_annotations();
    return *this;
  }
  RatMatrix& operator*=(const Rational& s) {
    for (auto& v : e_) v *= s;
    clear_annotations();
    return *this;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    RatMatrix c(n);
    Rational t;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b(k, j) == 0) continue;
          t = aik * b(k, j);
          c(i, j) += t;
        }
      }
    return c;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  void check_same(const RatMatrix& o) const {
    if (o.n_ != n_) throw ParameterError("matrix dimension mismatch");
  }
  void clear_annotations() {
    row_sum_.reset();
    doubly_regular_ = false;
  }

  std::size_t n_ = 0;
  std::vector<Rational> e_;
  std::optional<Rational> row_sum_;
  bool doubly_regular_ = false;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence:
///   N_1 = I, c_{n-k} = -tr(M N_k)/k, N_{k+1} = M N_k + c_{n-k} I.
/// Exact over the rationals; O(n^4).
inline RatPoly char_poly(const RatMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  if (n == 0) return RatPoly(std::move(c));
  RatMatrix nk = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix mn = m * nk;
    Rational ck = -mn.trace() / Rational(static_cast<long>(k));
    c[n - k] = ck;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mn(i, i) += ck;
    nk = std::move(mn);
  }
  return RatPoly(std::move(c));
}

/// [[0, M], [M^T, 0]]
inline RatMatrix dilation(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix d(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d(i, n + j) = m(i, j);
      d(n + j, i) = m(i, j);
    }
  return d;
}

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t rank(const RatMatrix& m) {
  const std::size_t n = m.size();
  // Clear denominators row by row so elimination stays in the integers.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(m(i, j).get_den()));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Integer(m(i, j).get_num()) * (l / m(i, j).get_den());
  }
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

}  // namespace ffc

#endif  // FFC_MATRIX_HPP
