// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_GRAPH_HPP
#define FFC_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/linalg_float.hpp"
#include "ffc/matrix.hpp"
#include "ffc/permutation.hpp"
#include "ffc/poly.hpp"
#include "ffc/quad_scalar.hpp"
#include "ffc/rational.hpp"
#include "ffc/rng.hpp"
#include "ffc/sturm.hpp"

namespace ffc {

enum class GraphMode { bipartite, nonbipartite };

inline const char* to_string(GraphMode m) { return m == GraphMode::bipartite ? "bipartite" : "nonbipartite"; }

/// Union of m perfect matchings.
///
/// nonbipartite: d vertices (even); matching i is P_i M P_i^T where M pairs
/// (2k, 2k+1). bipartite: d vertices per side; matching i joins left j to
/// right perms[i](j). Parallel edges are kept.
struct MatchingUnion {
  GraphMode mode = GraphMode::bipartite;
  int d = 0;
  int m = 0;
  std::vector<Permutation> perms;
  std::optional<std::uint64_t> seed;

  void validate() const {
    if (d < 1) throw ParameterError("graph needs d >= 1");
    if (m < 1) throw ParameterError("graph needs m >= 1");
    if (mode == GraphMode::nonbipartite && d % 2) throw ParameterError("nonbipartite graph needs an even d");
    if (perms.size() != static_cast<std::size_t>(m)) throw ParameterError("graph needs exactly m permutations");
    for (const auto& p : perms) {
      if (p.size() != d) throw ParameterError("permutation size does not match d");
      Permutation::from_image(p.image);
    }
  }

  int vertex_count() const { return mode == GraphMode::bipartite ? 2 * d : d; }
};

inline MatchingUnion sample_nonbipartite(int d, int m, Rng& rng) {
  if (d < 2 || d % 2) throw ParameterError("nonbipartite sampling needs an even d >= 2");
  if (m < 1) throw ParameterError("graph needs m >= 1");
  MatchingUnion g{GraphMode::nonbipartite, d, m, {}, std::nullopt};
  for (int i = 0; i < m; ++i) g.perms.push_back(sample_uniform_permutation(d, rng));
  return g;
}

inline MatchingUnion sample_bipartite(int d, int m, Rng& rng) {
  if (d < 1) throw ParameterError("bipartite sampling needs d >= 1");
  if (m < 1) throw ParameterError("graph needs m >= 1");
  MatchingUnion g{GraphMode::bipartite, d, m, {}, std::nullopt};
  for (int i = 0; i < m; ++i) g.perms.push_back(sample_uniform_permutation(d, rng));
  return g;
}

inline MatchingUnion sample_graph(GraphMode mode, int d, int m, Rng& rng) {
  return mode == GraphMode::bipartite ? sample_bipartite(d, m, rng) : sample_nonbipartite(d, m, rng);
}

/// sum_i P_i with (P_i)(pi_i(j), j) = 1.
inline RatMatrix biadjacency(const MatchingUnion& g) {
  if (g.mode != GraphMode::bipartite) throw ParameterError("biadjacency of a nonbipartite graph");
  RatMatrix b(static_cast<std::size_t>(g.d));
  for (const auto& p : g.perms)
    for (int j = 0; j < g.d; ++j) b(static_cast<std::size_t>(p(j)), static_cast<std::size_t>(j)) += 1;
  return b;
}

/// Symmetric integer adjacency with every row summing to m. Bipartite graphs
/// use the 2d x 2d dilation of the biadjacency.
inline RatMatrix adjacency(const MatchingUnion& g) {
  g.validate();
  RatMatrix a;
  if (g.mode == GraphMode::bipartite) {
    a = dilation(biadjacency(g));
  } else {
    a = RatMatrix(static_cast<std::size_t>(g.d));
    for (const auto& p : g.perms)
      for (int k = 0; k + 1 < g.d; k += 2) {
        auto u = static_cast<std::size_t>(p(k)), v = static_cast<std::size_t>(p(k + 1));
        a(u, v) += 1;
        a(v, u) += 1;
      }
  }
  a.mark_row_sum();
  return a;
}

/// p / (x - m), and also / (x + m) when bipartite. Throws ContractError when a
/// division is not exact, which signals a non-regular input.
inline RatPoly deflate_trivial(const RatPoly& p, int m, bool bipartite) {
  RatPoly q = exact_div(p, RatPoly::linear(m));
  if (bipartite) q = exact_div(q, RatPoly::linear(-m));
  return q;
}

enum class Verdict { strictly_ramanujan, ramanujan_with_boundary, not_ramanujan };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::strictly_ramanujan: return "strictly-ramanujan";
    case Verdict::ramanujan_with_boundary: return "ramanujan-with-boundary";
    case Verdict::not_ramanujan: return "not-ramanujan";
  }
  return "unknown";
}

/// Exact classification of the nontrivial spectrum against 2 sqrt(m-1).
/// Counts are with multiplicity: interior is |lambda| < bound, boundary is
/// |lambda| = bound, exterior is the rest.
struct RamanujanCertificate {
  MatchingUnion graph;
  RatPoly char_poly;
  RatPoly deflated;
  QuadScalar bound;
  int interior_count = 0;
  int boundary_count = 0;
  int exterior_count = 0;
  Verdict verdict = Verdict::not_ramanujan;
  Rational lambda2_lo;  // largest nontrivial eigenvalue lies in (lo, hi]
  Rational lambda2_hi;
};

/// Largest root of p bracketed to `width`; p must have a real root.
inline std::pair<Rational, Rational> largest_root(const RatPoly& p, const Rational& width) {
  return max_root_bracket(p, width);
}

namespace detail {

/// Multiplicity-weighted counts of roots of p strictly inside (-b, b) and
/// exactly at +-b, for b = 2 sqrt(m-1) >= 0.
inline std::pair<int, int> count_against_bound(const RatPoly& p, const QuadScalar& b) {
  int interior = 0, boundary = 0;
  auto factors = square_free_factorization(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const RatPoly& f = factors[i];
    if (f.degree() <= 0) continue;
    const int mult = static_cast<int>(i) + 1;
    SturmChain chain(f);
    if (b.sign() > 0) interior += mult * (chain.count_half_open(-b, b) - (chain.is_root(b) ? 1 : 0));
    int at = chain.is_root(b) ? 1 : 0;
    if (b.sign() > 0 && chain.is_root(-b)) ++at;
    boundary += mult * at;
  }
  return {interior, boundary};
}

}  // namespace detail

/// Exact certificate. Deflation removes one trivial root (two when
/// bipartite), so a disconnected graph keeps an eigenvalue m and fails.
inline RamanujanCertificate certify(const MatchingUnion& g) {
  RatMatrix a = adjacency(g);
  RamanujanCertificate c;
  c.graph = g;
  c.char_poly = char_poly(a);
  c.deflated = deflate_trivial(c.char_poly, g.m, g.mode == GraphMode::bipartite);
  c.bound = QuadScalar::sqrt_of(Integer(g.m - 1), 2);
  const int deg = c.deflated.degree();
  if (deg <= 0) {
    c.verdict = Verdict::strictly_ramanujan;  // nothing nontrivial to bound
    return c;
  }
  std::tie(c.interior_count, c.boundary_count) = detail::count_against_bound(c.deflated, c.bound);
  c.exterior_count = deg - c.interior_count - c.boundary_count;
  if (c.interior_count == deg) c.verdict = Verdict::strictly_ramanujan;
  else if (c.interior_count + c.boundary_count == deg) c.verdict = Verdict::ramanujan_with_boundary;
  else c.verdict = Verdict::not_ramanujan;
  std::tie(c.lambda2_lo, c.lambda2_hi) = largest_root(c.deflated, Rational(1, Integer(1) << 40));
  return c;
}

/// Recomputes a certificate from its graph and checks every stored field.
inline bool reverify(const RamanujanCertificate& c) {
  RamanujanCertificate fresh = certify(c.graph);
  return fresh.char_poly == c.char_poly && fresh.deflated == c.deflated && fresh.bound == c.bound &&
         fresh.interior_count == c.interior_count && fresh.boundary_count == c.boundary_count &&
         fresh.exterior_count == c.exterior_count && fresh.verdict == c.verdict;
}

/// Floating estimates for screening: the largest nontrivial eigenvalue and
/// the largest nontrivial absolute value.
struct FloatSpectrum {
  double lambda2 = 0;
  double max_abs = 0;
};

inline FloatSpectrum float_filter(const MatchingUnion& g) {
  auto ev = jacobi_eigenvalues(DMatrix(adjacency(g)), 1e-10);
  // ev is descending; ev[0] is m, and in bipartite mode ev.back() is -m
  std::size_t lo = 1, hi = ev.size() - (g.mode == GraphMode::bipartite ? 1 : 0);
  FloatSpectrum f;
  if (lo >= hi) return f;
  f.lambda2 = ev[lo];
  f.max_abs = std::max(std::abs(ev[lo]), std::abs(ev[hi - 1]));
  return f;
}

}  // namespace ffc

#endif  // FFC_GRAPH_HPP
