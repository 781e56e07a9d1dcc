// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_PERMUTATION_HPP
#define FFC_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "ffc/errors.hpp"
#include "ffc/matrix.hpp"
#include "ffc/parallel.hpp"
#include "ffc/rational.hpp"
#include "ffc/rng.hpp"

namespace ffc {

/// image[i] = pi(i) on {0, ..., d-1}.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int d) {
    if (d < 0) throw ParameterError("negative permutation size");
    Permutation p;
    p.image.resize(static_cast<std::size_t>(d));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
  }

  static Permutation transposition(int d, int s, int t) {
    Permutation p = identity(d);
    if (s < 0 || t < 0 || s >= d || t >= d || s == t) throw ParameterError("invalid transposition");
    std::swap(p.image[static_cast<std::size_t>(s)], p.image[static_cast<std::size_t>(t)]);
    return p;
  }

  /// Validates that `image` is a bijection on {0, ..., size-1}.
  static Permutation from_image(std::vector<int> image) {
    std::vector<char> seen(image.size(), 0);
    for (int v : image) {
      if (v < 0 || static_cast<std::size_t>(v) >= image.size() || seen[static_cast<std::size_t>(v)])
        throw ParameterError("permutation image is not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation{std::move(image)};
  }

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  bool is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != static_cast<int>(i)) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation q;
    q.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) q.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
    return q;
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw ParameterError("composing permutations of different sizes");
    Permutation c;
    c.image.resize(b.image.size());
    for (std::size_t i = 0; i < b.image.size(); ++i) c.image[i] = a(b.image[i]);
    return c;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// The permutation matrix P with P e_i = e_{pi(i)}.
inline RatMatrix permutation_matrix(const Permutation& p) {
  RatMatrix m(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p(i)), static_cast<std::size_t>(i)) = 1;
  return m;
}

/// P A P^T, entry (pi(i), pi(j)) = A(i, j).
inline RatMatrix conjugate(const RatMatrix& a, const Permutation& p) {
  if (a.size() != static_cast<std::size_t>(p.size())) throw ParameterError("permutation size does not match matrix");
  RatMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      out(static_cast<std::size_t>(p(static_cast<int>(i))), static_cast<std::size_t>(p(static_cast<int>(j)))) = a(i, j);
  return out;
}

/// Lehmer-code rank in [0, d!).
inline std::uint64_t permutation_rank(const Permutation& p) {
  std::uint64_t r = 0;
  const int d = p.size();
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j)
      if (p(j) < p(i)) ++smaller;
    r = r * static_cast<std::uint64_t>(d - i) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

/// The transposition (s t) with probability alpha, else the identity.
struct RandomSwap {
  int s = 0;
  int t = 1;
  Rational alpha;
};

/// Independent random swaps S_1, ..., S_N; the outcome is S_N ... S_1.
struct SwapProgram {
  int d = 0;
  std::vector<RandomSwap> swaps;

  void validate() const {
    if (d < 0) throw ParameterError("negative program dimension");
    for (const auto& sw : swaps) {
      if (sw.s < 0 || sw.t < 0 || sw.s >= d || sw.t >= d || sw.s == sw.t)
        throw ParameterError("swap indices out of range or equal");
      if (sw.alpha < 0 || sw.alpha > 1) throw ParameterError("swap probability outside [0, 1]");
    }
  }

  /// Swaps whose outcome is random.
  std::size_t branching_count() const {
    return static_cast<std::size_t>(
        std::count_if(swaps.begin(), swaps.end(), [](const RandomSwap& s) { return s.alpha != 0 && s.alpha != 1; }));
  }
};

/// M_2 = S_{01}(1/2), M_k = M_{k-1} S_{0,k-1}(1 - 1/k) M_{k-1}: uniform on
/// S_d with 2^{d-1} - 1 swaps. The middle swap must leave index k-1 fixed
/// with probability exactly 1/k, so it fires with probability 1 - 1/k.
inline SwapProgram uniform_program(int d) {
  if (d < 1) throw ParameterError("uniform_program needs d >= 1");
  if (d > 24) throw ResourceError("uniform_program length 2^(d-1) - 1 is too large");
  SwapProgram prog{d, {}};
  for (int k = 2; k <= d; ++k) {
    std::vector<RandomSwap> next = prog.swaps;
    next.push_back({0, k - 1, Rational(k - 1, k)});
    next.insert(next.end(), prog.swaps.begin(), prog.swaps.end());
    prog.swaps = std::move(next);
  }
  return prog;
}

/// P (+) S on 2d indices with P, S independent and uniform on S_d.
inline SwapProgram bipartite_uniform_program(int d) {
  SwapProgram left = uniform_program(d);
  SwapProgram prog{2 * d, left.swaps};
  for (const auto& sw : left.swaps) prog.swaps.push_back({sw.s + d, sw.t + d, sw.alpha});
  return prog;
}

/// Composes the sampled swaps in O(1) each via an inverse array.
inline Permutation sample(const SwapProgram& program, Rng& rng) {
  Permutation p = Permutation::identity(program.d);
  std::vector<int> inv = p.image;
  for (const auto& sw : program.swaps) {
    if (sw.alpha == 0) continue;
    if (sw.alpha != 1 && !rng.bernoulli(to_double(sw.alpha))) continue;
    // left-multiply by (s t): the preimages of s and t trade images
    auto& is = inv[static_cast<std::size_t>(sw.s)];
    auto& it = inv[static_cast<std::size_t>(sw.t)];
    std::swap(p.image[static_cast<std::size_t>(is)], p.image[static_cast<std::size_t>(it)]);
    std::swap(is, it);
  }
  return p;
}

/// Fisher-Yates: uniform on S_d without building a swap program.
inline Permutation sample_uniform_permutation(int d, Rng& rng) {
  Permutation p = Permutation::identity(d);
  for (int i = d - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p.image[static_cast<std::size_t>(i)], p.image[j]);
  }
  return p;
}

/// Default cap on random swaps for exact leaf enumeration.
inline constexpr std::size_t kLeafBudget = 22;

/// Exact outcome distribution. Identical outcomes are merged as swaps are
/// applied, so the work is bounded by the number of distinct permutations.
inline std::map<Permutation, Rational> leaf_distribution(const SwapProgram& program,
                                                         std::size_t budget = kLeafBudget) {
  program.validate();
  if (program.branching_count() > budget)
    throw ResourceError("swap program has " + std::to_string(program.branching_count()) +
                        " random swaps; leaf enumeration budget is " + std::to_string(budget));
  std::map<Permutation, Rational> dist{{Permutation::identity(program.d), Rational(1)}};
  for (const auto& sw : program.swaps) {
    if (sw.alpha == 0) continue;
    const Permutation t = Permutation::transposition(program.d, sw.s, sw.t);
    std::map<Permutation, Rational> next;
    for (const auto& [perm, prob] : dist) {
      if (sw.alpha != 1) next[perm] += prob * (1 - sw.alpha);
      next[t * perm] += prob * sw.alpha;
    }
    dist = std::move(next);
  }
  return dist;
}

/// Pearson chi-square test of sample(program) against the uniform law on S_d.
struct ChiSquareReport {
  double statistic = 0;
  double dof = 0;
  double p_value = 0;
};

inline ChiSquareReport chi_square_uniformity(const SwapProgram& program, std::uint64_t samples, std::uint64_t seed) {
  if (program.d < 2 || program.d > 10) throw ParameterError("chi-square uniformity needs 2 <= d <= 10");
  if (samples == 0) throw ParameterError("chi-square uniformity needs samples >= 1");
  std::uint64_t cells = 1;
  for (int k = 2; k <= program.d; ++k) cells *= static_cast<std::uint64_t>(k);
  const std::size_t chunks = 64;
  auto counts = parallel_reduce(
      samples, chunks, std::vector<std::uint64_t>(cells),
      [&](std::size_t lo, std::size_t hi) {
        std::vector<std::uint64_t> c(cells);
        Rng rng = Rng::derive(seed, lo);
        for (std::size_t i = lo; i < hi; ++i) ++c[permutation_rank(sample(program, rng))];
        return c;
      },
      [](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      });
  ChiSquareReport r;
  const double expect = static_cast<double>(samples) / static_cast<double>(cells);
  for (auto c : counts) {
    double diff = static_cast<double>(c) - expect;
    r.statistic += diff * diff / expect;
  }
  r.dof = static_cast<double>(cells - 1);
  r.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(r.dof), r.statistic));
  return r;
}

}  // namespace ffc

#endif  // FFC_PERMUTATION_HPP
