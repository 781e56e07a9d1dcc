// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_GENERATORS_HPP
#define FFC_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/matrix.hpp"
#include "ffc/permutation.hpp"
#include "ffc/rational.hpp"
#include "ffc/rng.hpp"

namespace ffc {

/// Uniform integer in [lo, hi].
inline long uniform_int(Rng& rng, long lo, long hi) {
  if (hi < lo) throw ParameterError("uniform_int needs lo <= hi");
  return lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1));
}

inline RatMatrix random_integer_matrix(std::size_t n, Rng& rng, long lo = -3, long hi = 3) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform_int(rng, lo, hi);
  return m;
}

inline RatMatrix random_symmetric_integer(std::size_t n, Rng& rng, long lo = -3, long hi = 3) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform_int(rng, lo, hi);
  return m;
}

/// Symmetric integer matrix with a common row sum: the diagonal is raised so
/// every row reaches the largest row sum.
inline RatMatrix random_symmetric_regular(std::size_t n, Rng& rng) {
  RatMatrix m = random_symmetric_integer(n, rng);
  std::vector<Rational> sums(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sums[i] += m(i, j);
  Rational target = *std::max_element(sums.begin(), sums.end());
  for (std::size_t i = 0; i < n; ++i) m(i, i) += target - sums[i];
  m.mark_row_sum();
  return m;
}

/// Integer combination of `terms` uniform permutation matrices, so rows and
/// columns share one sum.
inline RatMatrix random_doubly_regular(std::size_t n, Rng& rng, int terms = 3) {
  RatMatrix m(n);
  for (int t = 0; t < terms; ++t) {
    Permutation p = sample_uniform_permutation(static_cast<int>(n), rng);
    long c = uniform_int(rng, -2, 3);
    for (std::size_t i = 0; i < n; ++i) m(static_cast<std::size_t>(p(static_cast<int>(i))), i) += c;
  }
  m.mark_doubly_regular();
  return m;
}

/// `count` swaps on random distinct index pairs with alpha in {1/8, ..., 7/8}.
inline SwapProgram random_swap_program(int d, std::size_t count, Rng& rng) {
  if (d < 2) throw ParameterError("random_swap_program needs d >= 2");
  SwapProgram prog{d, {}};
  for (std::size_t k = 0; k < count; ++k) {
    int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(d - 1)));
    if (t >= s) ++t;
    prog.swaps.push_back({s, t, Rational(uniform_int(rng, 1, 7), 8)});
  }
  return prog;
}

}  // namespace ffc

#endif  // FFC_GENERATORS_HPP
