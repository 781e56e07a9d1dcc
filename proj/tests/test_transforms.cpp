// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ffc/matrix.hpp"
#include "ffc/transforms.hpp"
#include "oracles.hpp"

using namespace ffc;

namespace {

RatPoly X() { return RatPoly::monomial(1); }
RatPoly C(long c) { return RatPoly::constant(c); }

/// Partial-fraction form of G over explicitly known roots.
Rational cauchy_from_roots(const std::vector<Rational>& roots, const Rational& x) {
  Rational s = 0;
  for (const auto& r : roots) s += 1 / (x - r);
  return s / Rational(static_cast<long>(roots.size()));
}

/// Perfect matching pairing (2k, 2k+1).
RatMatrix matching_adjacency(std::size_t d) {
  RatMatrix a(d);
  for (std::size_t k = 0; k + 1 < d; k += 2) a(k, k + 1) = a(k + 1, k) = 1;
  return a;
}

}  // namespace

TEST(Cauchy, Examples) {
  EXPECT_EQ(cauchy(pow(X(), 4), 2), Rational(1, 2));
  EXPECT_EQ(cauchy(RatPoly({-1, 0, 1}), 2), Rational(2, 3));
  EXPECT_EQ(cauchy(pow(X() - C(1), 2) * pow(X() + C(1), 3), 3), Rational(7, 20));
  EXPECT_THROW(cauchy(RatPoly({-1, 0, 1}), 1), PoleError);
  EXPECT_THROW(cauchy(C(3), 1), ParameterError);
}

TEST(Cauchy, MatchesPartialFractionsAndDecreases) {
  std::mt19937_64 gen(101);
  std::uniform_int_distribution<int> roots(-6, 6);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> r;
    for (int i = 0; i < 1 + t % 6; ++i) r.emplace_back(roots(gen));
    RatPoly p = RatPoly::from_roots(std::span<const Rational>(r)) * Rational(3, 7);
    Rational x1 = 7, x2(15, 2);
    EXPECT_EQ(cauchy(p, x1), cauchy_from_roots(r, x1));
    EXPECT_GT(cauchy(p, x1), cauchy(p, x2));
  }
}

TEST(InverseCauchy, Examples) {
  auto k1 = inverse_cauchy(pow(X(), 5), Rational(1, 2));
  EXPECT_NEAR(k1.value, 2.0, 1e-12);
  EXPECT_TRUE(k1.lo <= 2 && 2 <= k1.hi);
  auto k2 = inverse_cauchy(RatPoly({-1, 0, 1}), Rational(2, 3));
  EXPECT_NEAR(k2.value, 2.0, 1e-12);
  EXPECT_THROW(inverse_cauchy(X(), 0), ParameterError);
  EXPECT_THROW(inverse_cauchy(RatPoly({1, 0, 1}), 1), ParameterError);
}

TEST(InverseCauchy, QuadraticFormulaOracle) {
  // x/(x^2-1) = w  =>  K(w) = (1 + sqrt(1 + 4 w^2)) / (2 w)
  for (int num = 1; num <= 20; ++num) {
    Rational w(num, 7);
    w.canonicalize();
    double wd = w.get_d();
    double expect = (1 + std::sqrt(1 + 4 * wd * wd)) / (2 * wd);
    EXPECT_NEAR(inverse_cauchy(RatPoly({-1, 0, 1}), w).value, expect, 1e-11);
  }
}

TEST(InverseCauchy, RoundTripAndAboveMaxRoot) {
  std::mt19937_64 gen(103);
  for (int t = 0; t < 30; ++t) {
    RatPoly p = oracle::random_real_rooted(gen, 1 + t % 7);
    Rational w(1 + t % 5, 1 + t % 3);
    w.canonicalize();
    auto k = inverse_cauchy(p, w);
    auto [rlo, rhi] = max_root_bracket(p, Rational(1, 1000000));
    EXPECT_GT(k.lo, rhi);
    EXPECT_LE(k.hi - k.lo, default_cauchy_tol());
    EXPECT_GE(cauchy(p, k.lo), w);
    EXPECT_LE(cauchy(p, k.hi), w);
    EXPECT_TRUE(k.lo.get_d() <= k.value && k.value <= k.hi.get_d());
  }
}

TEST(InverseCauchy, LargeWApproachesMaxRoot) {
  RatPoly p = (X() - C(3)) * (X() + C(2)) * RatPoly::linear(Rational(1, 2));
  auto k = inverse_cauchy(p, Rational(1000000));
  EXPECT_GT(k.value, 3.0);
  EXPECT_LT(k.value, 3.0 + 1e-6);
}

TEST(KOfPowerShift, ClosedForm) {
  // K_{(x-c)^d}(w) = c + 1/w
  for (int d = 1; d <= 6; ++d)
    for (int c = -2; c <= 2; ++c)
      EXPECT_NEAR(inverse_cauchy(pow(X() - C(c), static_cast<unsigned>(d)), Rational(1, 3)).value, c + 3.0, 1e-11);
}

TEST(SymBound, Examples) {
  auto r = check_sym_bound(pow(X(), 3), pow(X(), 3), 3, Rational(1, 4));
  EXPECT_NEAR(r.margin, 0, 1e-11);
  EXPECT_GE(r.certified_margin, -1e-9);
  auto s = check_sym_bound(pow(X() - C(1), 2), pow(X() - C(1), 2), 2, 1);
  EXPECT_NEAR(s.lhs, 3, 1e-11);
  EXPECT_NEAR(s.rhs, 3, 1e-11);
}

TEST(SymBound, HoldsOnRandomPairs) {
  std::mt19937_64 gen(107);
  for (int t = 0; t < 30; ++t) {
    int d = 2 + t % 5;
    RatPoly p = oracle::random_real_rooted(gen, d), q = oracle::random_real_rooted(gen, d);
    for (Rational w : {Rational(1, 4), Rational(1), Rational(4)})
      EXPECT_GE(check_sym_bound(p, q, d, w).certified_margin, -1e-9);
  }
}

TEST(AsymBound, ExamplesAndRandomPairs) {
  auto r = check_asym_bound(pow(X(), 3), pow(X(), 3), 3, 1);
  EXPECT_NEAR(r.margin, 0, 1e-11);
  EXPECT_GE(check_asym_bound(pow(X() - C(1), 4), pow(X() - C(1), 4), 4, 1).margin, 0);
  std::mt19937_64 gen(109);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + t % 4;
    RatPoly p = oracle::random_nonnegative_rooted(gen, d), q = oracle::random_nonnegative_rooted(gen, d);
    for (Rational w : {Rational(1, 4), Rational(1), Rational(4)})
      EXPECT_GE(check_asym_bound(p, q, d, w).certified_margin, -1e-9);
  }
}

TEST(MatchingPoly, Examples) {
  EXPECT_EQ(matching_nontrivial_poly(2), X() + C(1));
  EXPECT_EQ(matching_nontrivial_poly(4), (X() - C(1)) * pow(X() + C(1), 2));
  EXPECT_THROW(matching_nontrivial_poly(5), ParameterError);
  for (std::size_t d = 2; d <= 10; d += 2)
    EXPECT_EQ((X() - C(1)) * matching_nontrivial_poly(static_cast<int>(d)), char_poly(matching_adjacency(d)));
  EXPECT_EQ(bip_matching_nontrivial_poly(2), X() - C(1));
  EXPECT_EQ(bip_matching_nontrivial_poly(5), pow(X() - C(1), 4));
  EXPECT_EQ(s_transform(bip_matching_nontrivial_poly(4)), pow(RatPoly({-1, 0, 1}), 3));
}

TEST(MatchingPoly, CauchyBelowTrivialRootRestored) {
  // G of the matching polynomial is below x/(x^2-1) for x > 1
  for (int d = 2; d <= 16; d += 2)
    for (int k = 1; k <= 12; ++k) {
      Rational x = 1 + Rational(k, 5);
      x.canonicalize();
      EXPECT_LT(cauchy(matching_nontrivial_poly(d), x), x / (x * x - 1)) << d << " " << x;
    }
}

TEST(RamanujanBound, Examples) {
  EXPECT_EQ(ramanujan_bound(2).exact, QuadScalar(2));
  EXPECT_EQ(ramanujan_bound(3).exact.str(), "2*sqrt(2)");
  EXPECT_NEAR(ramanujan_bound(3).numeric, 2.8284271247461903, 1e-12);
  EXPECT_EQ(ramanujan_bound(5).exact, QuadScalar(4));
  EXPECT_THROW(ramanujan_bound(1), ParameterError);
}

TEST(RootBoundTable, SmallGridIsBelowBound) {
  auto sym = mfold_root_bound_table({2, 3, 4}, {4, 6, 8}, ConvolutionKind::symmetric);
  auto asym = mfold_root_bound_table({2, 3, 4}, {4, 6, 8}, ConvolutionKind::asymmetric);
  ASSERT_EQ(sym.size(), 9u);
  for (const auto& rows : {sym, asym})
    for (const auto& row : rows) {
      EXPECT_TRUE(row.below_bound) << row.m << " " << row.d;
      EXPECT_TRUE(is_real_rooted(row.poly));
      EXPECT_LT(row.root_lo.get_d(), row.bound.to_double());
    }
  EXPECT_EQ(sym[0].m, 2);
  EXPECT_EQ(sym[1].d, 6);
}

TEST(RootBoundTable, SymmetricFourVerticesThreeMatchings) {
  auto row = mfold_root_bound_row(3, 4, ConvolutionKind::symmetric);
  EXPECT_EQ(row.poly.degree(), 3);
  EXPECT_TRUE(row.below_bound);
}

TEST(RootBoundTable, ExactVerdictFailsAboveBound) {
  // a single matching repeated: m-fold with m = 1 is rejected, and a bound
  // check with the roots pushed past 2 sqrt(m-1) is caught exactly
  EXPECT_THROW(mfold_root_bound_row(1, 4, ConvolutionKind::symmetric), ParameterError);
  RatPoly p = (X() - C(3)) * (X() + C(1));
  SturmChain chain(p);
  EXPECT_GT(chain.count_above(ramanujan_bound(3).exact), 0);
}
