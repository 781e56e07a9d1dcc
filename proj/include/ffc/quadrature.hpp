// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_QUADRATURE_HPP
#define FFC_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ffc/convolution.hpp"
#include "ffc/errors.hpp"
#include "ffc/linalg_float.hpp"
#include "ffc/matrix.hpp"
#include "ffc/parallel.hpp"
#include "ffc/permutation.hpp"
#include "ffc/poly.hpp"
#include "ffc/rational.hpp"
#include "ffc/rng.hpp"

namespace ffc {

/// Default cap on determinant (characteristic polynomial) evaluations.
inline constexpr std::uint64_t kDeterminantBudget = 10'000'000;

enum class ExpectationMethod { perm_enum, swap_enum, monte_carlo };

inline const char* to_string(ExpectationMethod m) {
  switch (m) {
    case ExpectationMethod::perm_enum: return "perm-enum";
    case ExpectationMethod::swap_enum: return "swap-enum";
    case ExpectationMethod::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

/// An expected characteristic polynomial. Exact methods give the weighted
/// rational average; Monte Carlo gives the sample mean with one standard
/// error per coefficient (ascending, like the polynomial).
struct ExpectedPoly {
  RatPoly poly;
  ExpectationMethod method = ExpectationMethod::perm_enum;
  std::uint64_t terms = 0;
  std::vector<double> std_errors;
};

/// All d! permutations in lexicographic order of their images.
inline std::vector<Permutation> all_permutations(int d) {
  if (d < 0 || d > 12) throw ParameterError("all_permutations needs 0 <= d <= 12");
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(d);
  do out.push_back(p);
  while (std::next_permutation(p.image.begin(), p.image.end()));
  return out;
}

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

inline void check_square_family(const std::vector<RatMatrix>& ms) {
  if (ms.empty()) throw ParameterError("need at least one matrix");
  for (const auto& m : ms)
    if (m.size() != ms.front().size()) throw ParameterError("matrices have different sizes");
}

/// Sum of characteristic polynomials over mixed-radix tuples [lo, hi).
template <class CharPolyOf>
RatPoly sum_over_tuples(std::uint64_t lo, std::uint64_t hi, std::size_t slots, std::uint64_t radix, CharPolyOf&& f) {
  RatPoly acc;
  std::vector<std::size_t> digits(slots);
  for (std::uint64_t t = lo; t < hi; ++t) {
    std::uint64_t x = t;
    for (std::size_t s = 0; s < slots; ++s) {
      digits[s] = static_cast<std::size_t>(x % radix);
      x /= radix;
    }
    acc += f(digits);
  }
  return acc;
}

inline std::size_t reduce_chunks(std::uint64_t total) {
  return static_cast<std::size_t>(std::min<std::uint64_t>(total, 4ULL * thread_count()));
}

}  // namespace detail

/// Exact E char_poly(sum_i P_i A_i P_i^T) over independent uniform P_i.
/// With fix_first, P_1 = I: conjugating the whole sum by P_1^T leaves the
/// spectrum unchanged, so the average is the same over d! times fewer terms.
inline ExpectedPoly expected_charpoly_perm(const std::vector<RatMatrix>& matrices, bool fix_first = true,
                                           std::uint64_t budget = kDeterminantBudget) {
  detail::check_square_family(matrices);
  const int d = static_cast<int>(matrices.front().size());
  if (d > 12) throw ResourceError("permutation enumeration beyond d = 12 exceeds any budget");
  const std::size_t slots = matrices.size() - (fix_first ? 1 : 0);
  const std::uint64_t total =
      detail::checked_pow(factorial(static_cast<unsigned>(d)).get_ui(), slots, budget);
  if (total > budget)
    throw ResourceError("permutation enumeration needs more than " + std::to_string(budget) +
                        " determinant evaluations");
  const auto perms = slots > 0 ? all_permutations(d) : std::vector<Permutation>{};
  const std::size_t offset = fix_first ? 1 : 0;
  auto f = [&](const std::vector<std::size_t>& digits) {
    RatMatrix sum = fix_first ? matrices.front() : RatMatrix(matrices.front().size());
    for (std::size_t s = 0; s < slots; ++s) sum += conjugate(matrices[s + offset], perms[digits[s]]);
    return char_poly(sum);
  };
  RatPoly sum = parallel_reduce(
      total, detail::reduce_chunks(total), RatPoly(),
      [&](std::size_t lo, std::size_t hi) { return detail::sum_over_tuples(lo, hi, slots, perms.size(), f); },
      [](RatPoly a, const RatPoly& b) { return a += b; });
  return {sum / Rational(Integer(std::to_string(total))), ExpectationMethod::perm_enum, total, {}};
}

/// Equality check of an expectation against a closed form.
struct QuadratureReport {
  RatPoly lhs;
  RatPoly rhs;
  bool equal = false;
  std::uint64_t terms = 0;
};

namespace detail {

inline RatPoly remove_trivial_root(const RatPoly& chi, const Rational& root, const char* what) {
  try {
    return exact_div(chi, RatPoly::linear(root));
  } catch (const ContractError&) {
    throw InternalError(std::string(what) + ": trivial factor does not divide the characteristic polynomial");
  }
}

inline Rational required_row_sum(const RatMatrix& a, bool columns_too, const char* name) {
  auto r = a.constant_row_sum();
  if (!r) throw ContractError(std::string(name) + " does not have constant row sums");
  if (columns_too) {
    auto c = a.constant_col_sum();
    if (!c || *c != *r) throw ContractError(std::string(name) + " does not have matching constant column sums");
  }
  return *r;
}

}  // namespace detail

/// E_P chi(A + P B P^T) = (x - (a+b)) (p [+]_{d-1} q) for symmetric A, B with
/// row sums a, b, where chi_A = (x-a) p and chi_B = (x-b) q.
inline QuadratureReport verify_sym_quadrature(const RatMatrix& a, const RatMatrix& b,
                                              std::uint64_t budget = kDeterminantBudget) {
  if (a.size() != b.size() || a.size() == 0) throw ParameterError("quadrature needs two nonempty matrices of equal size");
  if (!a.is_symmetric() || !b.is_symmetric()) throw ContractError("symmetric quadrature needs symmetric matrices");
  const Rational ra = detail::required_row_sum(a, false, "A");
  const Rational rb = detail::required_row_sum(b, false, "B");
  const int d = static_cast<int>(a.size());
  QuadratureReport rep;
  ExpectedPoly e = expected_charpoly_perm({a, b}, true, budget);
  rep.lhs = e.poly;
  rep.terms = e.terms;
  RatPoly p = detail::remove_trivial_root(char_poly(a), ra, "A");
  RatPoly q = detail::remove_trivial_root(char_poly(b), rb, "B");
  rep.rhs = RatPoly::linear(ra + rb) * sym_convolve(p, q, d - 1);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

/// E_{P,S} chi(dil(A) + (P+S) dil(B) (P+S)^T) = (x^2 - (a+b)^2) S(p [++]_{d-1} q)
/// for A, B with A1 = A^T 1 = a1 and B1 = B^T 1 = b1, where
/// chi(A A^T) = (x - a^2) p and chi(B B^T) = (x - b^2) q.
inline QuadratureReport verify_bip_quadrature(const RatMatrix& a, const RatMatrix& b,
                                              std::uint64_t budget = kDeterminantBudget) {
  if (a.size() != b.size() || a.size() == 0) throw ParameterError("quadrature needs two nonempty matrices of equal size");
  const Rational ra = detail::required_row_sum(a, true, "A");
  const Rational rb = detail::required_row_sum(b, true, "B");
  const int d = static_cast<int>(a.size());
  if (d > 12) throw ResourceError("bipartite enumeration beyond d = 12 exceeds any budget");
  const std::uint64_t n = factorial(static_cast<unsigned>(d)).get_ui();
  if (n > budget / n) throw ResourceError("bipartite enumeration exceeds the determinant budget");
  const std::uint64_t total = n * n;
  const auto perms = all_permutations(d);
  const RatMatrix da = dilation(a), db = dilation(b);
  auto f = [&](const std::vector<std::size_t>& digits) {
    // P (+) S as one permutation of 2d indices
    Permutation ps = Permutation::identity(2 * d);
    for (int i = 0; i < d; ++i) {
      ps.image[static_cast<std::size_t>(i)] = perms[digits[0]](i);
      ps.image[static_cast<std::size_t>(i + d)] = perms[digits[1]](i) + d;
    }
    RatMatrix sum = da;
    sum += conjugate(db, ps);
    return char_poly(sum);
  };
  RatPoly sum = parallel_reduce(
      total, detail::reduce_chunks(total), RatPoly(),
      [&](std::size_t lo, std::size_t hi) { return detail::sum_over_tuples(lo, hi, 2, n, f); },
      [](RatPoly x, const RatPoly& y) { return x += y; });
  QuadratureReport rep;
  rep.lhs = sum / Rational(Integer(std::to_string(total)));
  rep.terms = total;
  RatPoly p = detail::remove_trivial_root(char_poly(a * a.transpose()), ra * ra, "A");
  RatPoly q = detail::remove_trivial_root(char_poly(b * b.transpose()), rb * rb, "B");
  RatPoly trivial = RatPoly::monomial(2) - RatPoly::constant((ra + rb) * (ra + rb));
  rep.rhs = trivial * s_transform(asym_convolve(p, q, d - 1));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

/// Memo of characteristic polynomials keyed by the tuple of outcome
/// permutations. Safe to share across threads.
class CharPolyCache {
 public:
  template <class Compute>
  RatPoly get(const std::vector<Permutation>& key, Compute&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    RatPoly v = compute();
    std::lock_guard lock(mu_);
    map_.emplace(key, v);
    return v;
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<std::vector<Permutation>, RatPoly> map_;
};

/// Exact E char_poly(sum_i Q_i A_i Q_i^T) where Q_i is the product of program
/// i's independent random swaps.
inline ExpectedPoly expected_charpoly_swaps(const std::vector<RatMatrix>& matrices,
                                            const std::vector<SwapProgram>& programs,
                                            std::size_t swap_budget = kLeafBudget,
                                            std::uint64_t budget = kDeterminantBudget,
                                            CharPolyCache* cache = nullptr) {
  detail::check_square_family(matrices);
  if (programs.size() != matrices.size()) throw ParameterError("need one swap program per matrix");
  std::size_t branching = 0;
  for (const auto& prog : programs) {
    if (static_cast<std::size_t>(prog.d) != matrices.front().size())
      throw ParameterError("swap program dimension does not match the matrices");
    branching += prog.branching_count();
  }
  if (branching > swap_budget)
    throw ResourceError("swap expectation has " + std::to_string(branching) + " random swaps; budget is " +
                        std::to_string(swap_budget));
  std::vector<std::vector<std::pair<Permutation, Rational>>> leaves;
  std::uint64_t total = 1;
  for (const auto& prog : programs) {
    auto dist = leaf_distribution(prog, swap_budget);
    leaves.emplace_back(dist.begin(), dist.end());
    total *= leaves.back().size();
    if (total > budget) throw ResourceError("swap expectation exceeds the determinant budget");
  }
  auto term = [&](std::uint64_t t) {
    std::vector<Permutation> key;
    key.reserve(leaves.size());
    Rational w = 1;
    for (const auto& l : leaves) {
      const auto& [perm, prob] = l[static_cast<std::size_t>(t % l.size())];
      t /= l.size();
      key.push_back(perm);
      w *= prob;
    }
    auto compute = [&] {
      RatMatrix sum(matrices.front().size());
      for (std::size_t i = 0; i < key.size(); ++i) sum += conjugate(matrices[i], key[i]);
      return char_poly(sum);
    };
    RatPoly chi = cache ? cache->get(key, compute) : compute();
    return chi * w;
  };
  RatPoly sum = parallel_reduce(
      total, detail::reduce_chunks(total), RatPoly(),
      [&](std::size_t lo, std::size_t hi) {
        RatPoly acc;
        for (std::size_t t = lo; t < hi; ++t) acc += term(t);
        return acc;
      },
      [](RatPoly a, const RatPoly& b) { return a += b; });
  return {sum, ExpectationMethod::swap_enum, total, {}};
}

/// Monte Carlo E char_poly(sum_i P_i A_i P_i^T) with m = matrices.size()
/// independent uniform P_i. Trial t draws from stream (seed, t), so the
/// result does not depend on scheduling.
inline ExpectedPoly expected_charpoly_mc(const std::vector<RatMatrix>& matrices, std::uint64_t trials,
                                         std::uint64_t seed) {
  detail::check_square_family(matrices);
  if (trials < 1) throw ParameterError("monte carlo needs trials >= 1");
  const int d = static_cast<int>(matrices.front().size());
  struct Acc {
    RatPoly sum;
    std::vector<double> s1, s2;
  };
  auto combine = [](Acc a, const Acc& b) {
    a.sum += b.sum;
    if (a.s1.size() < b.s1.size()) {
      a.s1.resize(b.s1.size());
      a.s2.resize(b.s2.size());
    }
    for (std::size_t i = 0; i < b.s1.size(); ++i) {
      a.s1[i] += b.s1[i];
      a.s2[i] += b.s2[i];
    }
    return a;
  };
  Acc acc = parallel_reduce(trials, detail::reduce_chunks(trials), Acc{}, [&](std::size_t lo, std::size_t hi) {
    Acc a;
    a.s1.assign(static_cast<std::size_t>(d) + 1, 0.0);
    a.s2.assign(static_cast<std::size_t>(d) + 1, 0.0);
    for (std::size_t t = lo; t < hi; ++t) {
      Rng rng = Rng::derive(seed, t);
      RatMatrix sum(matrices.front().size());
      for (const auto& m : matrices) sum += conjugate(m, sample_uniform_permutation(d, rng));
      RatPoly chi = char_poly(sum);
      for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
        double c = chi.coeff(i).get_d();
        a.s1[i] += c;
        a.s2[i] += c * c;
      }
      a.sum += chi;
    }
    return a;
  }, combine);
  ExpectedPoly e{acc.sum / Rational(Integer(std::to_string(trials))), ExpectationMethod::monte_carlo, trials, {}};
  const double n = static_cast<double>(trials);
  for (std::size_t i = 0; i < acc.s1.size(); ++i) {
    if (trials == 1) {
      e.std_errors.push_back(0);
      continue;
    }
    double mean = acc.s1[i] / n;
    double var = std::max(0.0, (acc.s2[i] - n * mean * mean) / (n - 1));
    e.std_errors.push_back(std::sqrt(var / n));
  }
  return e;
}

/// Discrete Fourier coefficients of theta -> det(A + R B R^T), R a rotation
/// by theta in the first two coordinates.
struct FourierReport {
  std::vector<std::complex<double>> coeffs;  // index k + samples/2 - 1 holds c_k, k in (-N/2, N/2]
  double max_high = 0;                       // max |c_k| over 3 <= |k| <= N/2
  double max_all = 0;
  double relative = 0;  // max_high / max_all (0 when f vanishes)
  double c2 = 0;        // |c_2|
};

inline FourierReport fourier_degree_test(const RatMatrix& a, const RatMatrix& b, int samples = 16) {
  if (a.size() != b.size() || a.size() < 2) throw ParameterError("fourier test needs equal sizes >= 2");
  if (samples < 8) throw ParameterError("fourier test needs samples >= 8");
  const std::size_t n = a.size();
  const DMatrix da(a), db(b);
  std::vector<double> f(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double th = 2 * std::numbers::pi * j / samples, c = std::cos(th), s = std::sin(th);
    DMatrix r(n);
    for (std::size_t i = 2; i < n; ++i) r(i, i) = 1;
    r(0, 0) = c;
    r(0, 1) = -s;
    r(1, 0) = s;
    r(1, 1) = c;
    DMatrix rb(n), m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) rb(i, l) += r(i, k) * db(k, l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        double v = da(i, l);
        for (std::size_t k = 0; k < n; ++k) v += rb(i, k) * r(l, k);
        m(i, l) = v;
      }
    f[static_cast<std::size_t>(j)] = determinant(m);
  }
  FourierReport rep;
  for (int k = -samples / 2 + 1; k <= samples / 2; ++k) {
    std::complex<double> c = 0;
    for (int j = 0; j < samples; ++j)
      c += f[static_cast<std::size_t>(j)] * std::polar(1.0, -2 * std::numbers::pi * k * j / samples);
    c /= samples;
    rep.coeffs.push_back(c);
    double mag = std::abs(c);
    rep.max_all = std::max(rep.max_all, mag);
    if (std::abs(k) >= 3) rep.max_high = std::max(rep.max_high, mag);
    if (k == 2) rep.c2 = mag;
  }
  rep.relative = rep.max_all > 0 ? rep.max_high / rep.max_all : 0;
  return rep;
}

/// Rank and trace of A - sigma A sigma^T for a transposition sigma.
struct Rank2Report {
  std::size_t rank = 0;
  Rational trace;
};

inline Rank2Report rank2_check(const Permutation& sigma, const RatMatrix& a) {
  int moved = 0;
  for (int i = 0; i < sigma.size(); ++i) moved += sigma(i) != i;
  if (moved != 2 || !(sigma * sigma).is_identity()) throw ParameterError("rank2_check needs a transposition");
  if (!a.is_symmetric()) throw ParameterError("rank2_check needs a symmetric matrix");
  RatMatrix diff = a;
  diff -= conjugate(a, sigma);
  return {rank(diff), diff.trace()};
}

}  // namespace ffc

#endif  // FFC_QUADRATURE_HPP
