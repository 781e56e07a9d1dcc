// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_SEARCH_HPP
#define FFC_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffc/convolution.hpp"
#include "ffc/errors.hpp"
#include "ffc/graph.hpp"
#include "ffc/parallel.hpp"
#include "ffc/permutation.hpp"
#include "ffc/quadrature.hpp"
#include "ffc/rng.hpp"
#include "ffc/sturm.hpp"
#include "ffc/transforms.hpp"

namespace ffc {

/// Outcome of a search. A certificate is present exactly when a graph meeting
/// the requested verdict was found.
struct SearchReport {
  GraphMode mode = GraphMode::bipartite;
  int d = 0;
  int m = 0;
  std::uint64_t trials_run = 0;
  std::uint64_t successes = 0;
  std::optional<std::uint64_t> first_success_trial;
  std::optional<RamanujanCertificate> certificate;
  double wall_time = 0;  // seconds
};

inline void check_model(GraphMode mode, int d, int m) {
  if (m < 1) throw ParameterError("graph model needs m >= 1");
  if (d < 1) throw ParameterError("graph model needs d >= 1");
  if (mode == GraphMode::nonbipartite && (d < 2 || d % 2))
    throw ParameterError("nonbipartite graph model needs an even d >= 2");
}

/// The graph drawn by trial t of a search seeded with `seed`.
inline MatchingUnion trial_graph(GraphMode mode, int d, int m, std::uint64_t seed, std::uint64_t t) {
  Rng rng = Rng::derive(seed, t);
  MatchingUnion g = sample_graph(mode, d, m, rng);
  g.seed = seed;
  return g;
}

/// Samples graphs trial by trial, screens them with the float filter and
/// certifies the survivors exactly. Trials run in parallel batches but the
/// reported success is always the lowest-indexed one, so the result depends
/// only on the seed.
inline SearchReport rejection_search(GraphMode mode, int d, int m, std::uint64_t max_trials, std::uint64_t seed,
                                     bool allow_boundary = false) {
  check_model(mode, d, m);
  if (max_trials < 1) throw ParameterError("search needs max_trials >= 1");
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.mode = mode;
  rep.d = d;
  rep.m = m;
  const double bound = 2 * std::sqrt(static_cast<double>(m - 1));
  auto accept = [&](Verdict v) {
    return v == Verdict::strictly_ramanujan || (allow_boundary && v == Verdict::ramanujan_with_boundary);
  };
  const std::uint64_t batch = 16ULL * thread_count();
  for (std::uint64_t base = 0; base < max_trials && !rep.certificate; base += batch) {
    const std::uint64_t n = std::min(batch, max_trials - base);
    auto results = parallel_map(n, [&](std::size_t i) -> std::optional<RamanujanCertificate> {
      MatchingUnion g = trial_graph(mode, d, m, seed, base + i);
      // the filter only skips graphs that are clearly outside the bound
      if (float_filter(g).max_abs > bound + 1e-6) return std::nullopt;
      RamanujanCertificate c = certify(g);
      if (!accept(c.verdict)) return std::nullopt;
      return c;
    });
    for (std::size_t i = 0; i < n; ++i) {
      if (!results[i]) continue;
      rep.trials_run = base + i + 1;
      rep.successes = 1;
      rep.first_success_trial = base + i;
      rep.certificate = std::move(results[i]);
      break;
    }
    if (!rep.certificate) rep.trials_run = base + n;
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// The expected characteristic polynomial of the random graph model, in
/// closed form:
///   nonbipartite: (x - m) * (p [+]_{d-1} ... [+]_{d-1} p), p the nontrivial
///                 matching polynomial, m copies;
///   bipartite:    (x^2 - m^2) * S(q [++]_{d-1} ... [++]_{d-1} q), q = (x-1)^{d-1}.
inline RatPoly expected_poly_for_graph_model(GraphMode mode, int d, int m) {
  check_model(mode, d, m);
  if (mode == GraphMode::nonbipartite)
    return RatPoly::linear(m) * m_fold_sym(matching_nontrivial_poly(d), m, d - 1);
  RatPoly trivial = RatPoly::monomial(2) - RatPoly::constant(Rational(m * m));
  if (d == 1) return trivial;
  return trivial * s_transform(m_fold_asym(bip_matching_nontrivial_poly(d), m, d - 1));
}

enum class DescentStrategy { exact, sampled };

/// Certified bracket (lo, hi] for the largest root of a polynomial.
struct RootBracket {
  Rational lo;
  Rational hi;
};

/// One decided swap of a descent.
struct DescentStep {
  std::size_t program = 0;  // which matching's program
  std::size_t swap = 0;     // index within that program
  bool applied = false;     // outcome chosen: true = transposition, false = identity
  RootBracket current;      // lambda_2 of the expectation before the decision
  RootBracket chosen;       // lambda_2 of the chosen conditional expectation
  std::optional<RootBracket> rejected;
  RatPoly expectation;  // the chosen conditional expectation
};

struct DescentReport {
  SearchReport search;
  RootBracket initial;  // lambda_2 of the unconditioned expectation
  RatPoly expected;     // the unconditioned expectation
  std::vector<DescentStep> steps;
  RamanujanCertificate final_certificate;  // of the graph the descent ends at
  std::size_t cache_size = 0;
};

namespace detail {

/// Largest root of the deflated expectation.
inline RootBracket lambda2_bracket(const RatPoly& expected, int m, bool bipartite, const Rational& width) {
  RatPoly q = deflate_trivial(expected, m, bipartite);
  if (q.degree() < 1) return {Rational(-m), Rational(-m)};
  SturmChain chain(q);
  // a sampled average can lose its real roots; rank it above everything
  if (chain.count_all() == 0) return {cauchy_root_bound(q), cauchy_root_bound(q)};
  auto [lo, hi] = max_root_bracket(chain, q, width);
  return {lo, hi};
}

/// -1, 0, 1 comparing the largest roots of two polynomials; 0 means the
/// brackets still overlap at the finest width tried.
inline int compare_lambda2(const RatPoly& a, const RatPoly& b, int m, bool bipartite, RootBracket& ra,
                           RootBracket& rb) {
  for (unsigned bits : {40u, 80u}) {
    const Rational w(1, Integer(1) << bits);
    ra = lambda2_bracket(a, m, bipartite, w);
    rb = lambda2_bracket(b, m, bipartite, w);
    // roots sit in (lo, hi]; a point bracket {v, v} means exactly v
    if (ra.hi < rb.lo || (ra.hi == rb.lo && rb.lo < rb.hi)) return -1;
    if (rb.hi < ra.lo || (rb.hi == ra.lo && ra.lo < ra.hi)) return 1;
  }
  return 0;
}

/// Exact comparison of largest roots: -1, 0 (equal) or 1, or nullopt when
/// two distinct roots agree to 80 bits. Equality is proven by a common root
/// of both polynomials inside both brackets, each bracket holding a single
/// root of its own polynomial.
inline std::optional<int> compare_lambda2_certified(const RatPoly& a, const RatPoly& b, int m, bool bipartite) {
  RootBracket ra, rb;
  if (int cmp = compare_lambda2(a, b, m, bipartite, ra, rb); cmp != 0) return cmp;
  if (ra.lo == ra.hi || rb.lo == rb.hi) {
    if (ra.lo == ra.hi && rb.lo == rb.hi && ra.lo == rb.lo) return 0;
    return std::nullopt;
  }
  RatPoly qa = deflate_trivial(a, m, bipartite), qb = deflate_trivial(b, m, bipartite);
  if (SturmChain(qa).count_half_open(ra.lo, ra.hi) != 1 || SturmChain(qb).count_half_open(rb.lo, rb.hi) != 1)
    return std::nullopt;
  RatPoly g = gcd(qa, qb);
  const Rational lo = std::max(ra.lo, rb.lo), hi = std::min(ra.hi, rb.hi);
  if (g.degree() < 1 || lo >= hi) return std::nullopt;
  if (SturmChain(g).count_half_open(lo, hi) >= 1) return 0;
  return std::nullopt;
}

/// Monte Carlo conditional expectation: remaining swaps sampled, the rest
/// fixed by their (already 0/1) probabilities.
inline RatPoly sampled_expectation(const std::vector<RatMatrix>& matrices, const std::vector<SwapProgram>& programs,
                                   std::uint64_t trials, std::uint64_t seed) {
  RatPoly sum = parallel_reduce(trials, 4ULL * thread_count(), RatPoly(), [&](std::size_t lo, std::size_t hi) {
    RatPoly acc;
    for (std::size_t t = lo; t < hi; ++t) {
      Rng rng = Rng::derive(seed, t);
      RatMatrix s(matrices.front().size());
      for (std::size_t i = 0; i < matrices.size(); ++i) s += conjugate(matrices[i], sample(programs[i], rng));
      acc += char_poly(s);
    }
    return acc;
  }, [](RatPoly a, const RatPoly& b) { return a += b; });
  return sum / Rational(Integer(std::to_string(trials)));
}

}  // namespace detail

/// Greedy walk down the interlacing family of swap outcomes. Each matching's
/// permutation is realized by a uniform swap program (in bipartite mode the
/// program permutes the left side only). For every random swap in program
/// order, both conditional expectations are computed and the branch whose
/// deflated expectation has the smaller largest root is fixed; ties go to
/// the identity. In exact mode each step can only lower that root.
inline DescentReport interlacing_descent(GraphMode mode, int d, int m, DescentStrategy strategy,
                                         std::uint64_t seed = 0, std::uint64_t sampled_trials = 2000,
                                         std::size_t swap_budget = kLeafBudget) {
  check_model(mode, d, m);
  const auto start = std::chrono::steady_clock::now();
  const bool bip = mode == GraphMode::bipartite;
  const int n = bip ? 2 * d : d;

  // every matching is (P_i) applied to a fixed base matrix
  RatMatrix base(static_cast<std::size_t>(n));
  if (bip) base = dilation(RatMatrix::identity(static_cast<std::size_t>(d)));
  else
    for (int k = 0; k + 1 < d; k += 2)
      base(static_cast<std::size_t>(k), static_cast<std::size_t>(k + 1)) =
          base(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) = 1;
  std::vector<RatMatrix> matrices(static_cast<std::size_t>(m), base);
  std::vector<SwapProgram> programs;
  for (int i = 0; i < m; ++i) {
    SwapProgram u = uniform_program(d);
    programs.push_back(SwapProgram{n, u.swaps});
  }
  std::size_t branching = 0;
  for (const auto& p : programs) branching += p.branching_count();
  if (strategy == DescentStrategy::exact && branching > swap_budget)
    throw ResourceError("exact descent needs " + std::to_string(branching) + " random swaps; budget is " +
                        std::to_string(swap_budget) + "; use the sampled strategy");

  CharPolyCache cache;
  std::uint64_t stream = 0;
  auto expectation = [&](const std::vector<SwapProgram>& progs) {
    if (strategy == DescentStrategy::exact)
      return expected_charpoly_swaps(matrices, progs, swap_budget, kDeterminantBudget, &cache).poly;
    return detail::sampled_expectation(matrices, progs, sampled_trials, Rng::derive(seed, stream++)());
  };

  DescentReport rep;
  rep.search.mode = mode;
  rep.search.d = d;
  rep.search.m = m;
  const Rational w40(1, Integer(1) << 40);
  rep.expected = expectation(programs);
  rep.initial = detail::lambda2_bracket(rep.expected, m, bip, w40);
  RatPoly current = rep.expected;
  RootBracket current_bracket = rep.initial;

  for (std::size_t pi = 0; pi < programs.size(); ++pi)
    for (std::size_t si = 0; si < programs[pi].swaps.size(); ++si) {
      const Rational alpha = programs[pi].swaps[si].alpha;
      if (alpha == 0 || alpha == 1) continue;
      auto with = programs, without = programs;
      with[pi].swaps[si].alpha = 1;
      without[pi].swaps[si].alpha = 0;
      RatPoly e1 = expectation(with), e0 = expectation(without);
      DescentStep step;
      step.program = pi;
      step.swap = si;
      step.current = current_bracket;
      RootBracket r0, r1;
      int cmp = detail::compare_lambda2(e1, e0, m, bip, r1, r0);
      step.applied = cmp < 0;
      step.rejected = step.applied ? r0 : r1;
      programs = step.applied ? with : without;
      current = step.applied ? e1 : e0;
      current_bracket = detail::lambda2_bracket(current, m, bip, w40);
      step.chosen = current_bracket;
      step.expectation = current;
      rep.steps.push_back(step);
    }

  // every swap is now deterministic; read off the permutations
  MatchingUnion g{mode, d, m, {}, seed};
  Rng unused(0);
  for (const auto& p : programs) {
    Permutation full = sample(p, unused);
    Permutation perm = Permutation::identity(d);
    for (int j = 0; j < d; ++j) perm.image[static_cast<std::size_t>(j)] = full(j);
    g.perms.push_back(perm);
  }
  rep.final_certificate = certify(g);
  rep.search.trials_run = 1;
  if (rep.final_certificate.verdict == Verdict::strictly_ramanujan) {
    rep.search.successes = 1;
    rep.search.first_success_trial = 0;
    rep.search.certificate = rep.final_certificate;
  }
  rep.cache_size = cache.size();
  rep.search.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace ffc

#endif  // FFC_SEARCH_HPP
