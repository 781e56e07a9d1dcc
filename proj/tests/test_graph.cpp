// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "ffc/graph.hpp"
#include "ffc/quadrature.hpp"

using namespace ffc;

namespace {

RatPoly X() { return RatPoly::monomial(1); }
RatPoly C(long c) { return RatPoly::constant(c); }

MatchingUnion bip(std::vector<std::vector<int>> perms) {
  MatchingUnion g{GraphMode::bipartite, static_cast<int>(perms.front().size()), static_cast<int>(perms.size()), {}, {}};
  for (auto& p : perms) g.perms.push_back(Permutation::from_image(p));
  return g;
}

MatchingUnion plain(std::vector<std::vector<int>> perms) {
  MatchingUnion g = bip(std::move(perms));
  g.mode = GraphMode::nonbipartite;
  return g;
}

}  // namespace

TEST(Graph, NonbipartiteSamplingInvariants) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    int d = 2 * (1 + t % 5), m = 1 + t % 4;
    auto g = sample_nonbipartite(d, m, rng);
    RatMatrix a = adjacency(g);
    EXPECT_TRUE(a.is_symmetric());
    EXPECT_EQ(*a.row_sum(), m);
    RatPoly chi = char_poly(a);
    EXPECT_EQ(chi(Rational(m)), 0);
  }
  EXPECT_THROW(sample_nonbipartite(5, 2, rng), ParameterError);
}

TEST(Graph, BipartiteSamplingInvariants) {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    int d = 1 + t % 6, m = 1 + t % 4;
    auto g = sample_bipartite(d, m, rng);
    RatMatrix a = adjacency(g);
    EXPECT_EQ(*a.row_sum(), m);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        EXPECT_EQ(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), 0);
        EXPECT_EQ(a(static_cast<std::size_t>(i + d), static_cast<std::size_t>(j + d)), 0);
      }
    RatPoly chi = char_poly(a);
    for (std::size_t k = 1; k < chi.coeffs().size(); k += 2) EXPECT_EQ(chi.coeff(k), 0);
    EXPECT_NO_THROW(deflate_trivial(chi, m, true));
  }
}

TEST(Graph, SingleMatchingAndIdentityPerms) {
  auto one = plain({{0, 1, 2, 3}});
  EXPECT_EQ(char_poly(adjacency(one)), pow(RatPoly({-1, 0, 1}), 2));
  auto same = plain({{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
  EXPECT_EQ(char_poly(adjacency(same)), pow(X() - C(3), 2) * pow(X() + C(3), 2));
  auto bone = bip({{1, 0, 2}});
  EXPECT_EQ(char_poly(adjacency(bone)), pow(RatPoly({-1, 0, 1}), 3));
}

TEST(Graph, SmallBipartiteExamples) {
  auto good = bip({{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(biadjacency(good), (RatMatrix{{2, 1}, {1, 2}}));
  RatPoly chi = char_poly(adjacency(good));
  EXPECT_EQ(chi, (X() - C(3)) * (X() + C(3)) * RatPoly({-1, 0, 1}));
  EXPECT_EQ(deflate_trivial(chi, 3, true), RatPoly({-1, 0, 1}));
  auto bad = bip({{1, 0}, {1, 0}, {1, 0}});
  EXPECT_EQ(deflate_trivial(char_poly(adjacency(bad)), 3, true), (X() - C(3)) * (X() + C(3)));
}

TEST(Deflate, Examples) {
  RatPoly r = RatPoly({2, 0, 1});  // no roots at +-m
  EXPECT_EQ(deflate_trivial((X() - C(4)) * (X() + C(4)) * r, 4, true), r);
  EXPECT_EQ(deflate_trivial(pow(X() - C(2), 2) * r, 2, false), (X() - C(2)) * r);
  EXPECT_THROW(deflate_trivial(r, 2, false), ContractError);
}

TEST(Certify, SmallBipartiteVerdicts) {
  auto good = certify(bip({{0, 1}, {0, 1}, {1, 0}}));
  EXPECT_EQ(good.verdict, Verdict::strictly_ramanujan);
  EXPECT_EQ(good.interior_count, 2);
  EXPECT_EQ(good.bound.str(), "2*sqrt(2)");
  EXPECT_TRUE(good.lambda2_lo < 1 && 1 <= good.lambda2_hi);
  auto bad = certify(bip({{1, 0}, {1, 0}, {1, 0}}));
  EXPECT_EQ(bad.verdict, Verdict::not_ramanujan);
  EXPECT_EQ(bad.exterior_count, 2);
  EXPECT_TRUE(reverify(good));
  EXPECT_TRUE(reverify(bad));
  auto tampered = good;
  tampered.interior_count = 1;
  EXPECT_FALSE(reverify(tampered));
}

TEST(Certify, AllSmallBipartiteTriples) {
  // over S_2^3, the union is Ramanujan unless all three permutations agree
  int success = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < 3; ++i) perms.push_back(mask >> i & 1 ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
    auto c = certify(bip(perms));
    bool all_equal = mask == 0 || mask == 7;
    EXPECT_EQ(c.verdict == Verdict::strictly_ramanujan, !all_equal);
    success += c.verdict == Verdict::strictly_ramanujan;
  }
  EXPECT_EQ(success, 6);
}

TEST(Certify, CycleBoundaryAtMTwo) {
  // m = 2, bound 2: an aligned cycle union keeps a second eigenvalue 2 (disconnected)
  auto split = certify(plain({{0, 1, 2, 3}, {0, 1, 2, 3}}));
  EXPECT_EQ(split.verdict, Verdict::ramanujan_with_boundary);
  EXPECT_EQ(split.boundary_count, 3);  // eigenvalues 2, -2, -2 remain
  // 4-cycle: spectrum 2, 0, 0, -2
  auto cycle = certify(plain({{0, 1, 2, 3}, {1, 2, 3, 0}}));
  EXPECT_EQ(cycle.char_poly, (X() - C(2)) * X() * X() * (X() + C(2)));
  EXPECT_EQ(cycle.interior_count, 2);
  EXPECT_EQ(cycle.boundary_count, 1);
  EXPECT_EQ(cycle.verdict, Verdict::ramanujan_with_boundary);
}

TEST(Certify, RationalBoundWhenMMinusOneIsSquare) {
  Rng rng(4);
  auto g = sample_bipartite(4, 5, rng);
  auto c = certify(g);
  EXPECT_TRUE(c.bound.is_rational());
  EXPECT_EQ(c.bound, QuadScalar(4));
  EXPECT_EQ(c.interior_count + c.boundary_count + c.exterior_count, c.deflated.degree());
}

TEST(Certify, DegreeOneIsVacuous) {
  auto c = certify(bip({{0}}));
  EXPECT_EQ(c.deflated.degree(), 0);
  EXPECT_EQ(c.verdict, Verdict::strictly_ramanujan);
}

TEST(Certify, CountsPartitionTheDeflatedDegree) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    auto g = t % 2 ? sample_bipartite(2 + t % 5, 2 + t % 3, rng) : sample_nonbipartite(2 * (2 + t % 4), 2 + t % 3, rng);
    auto c = certify(g);
    EXPECT_EQ(c.interior_count + c.boundary_count + c.exterior_count, c.deflated.degree());
    EXPECT_EQ(c.verdict == Verdict::strictly_ramanujan, c.interior_count == c.deflated.degree());
  }
}

TEST(FloatFilter, MatchesExactVerdicts) {
  Rng rng(6);
  int compared = 0;
  for (int t = 0; t < 1000; ++t) {
    auto g = t % 2 ? sample_bipartite(3 + t % 4, 3, rng) : sample_nonbipartite(2 * (2 + t % 4), 3, rng);
    auto f = float_filter(g);
    double bound = 2 * std::sqrt(2.0);
    if (std::abs(f.max_abs - bound) <= 1e-6) continue;
    auto c = certify(g);
    EXPECT_EQ(f.max_abs < bound, c.verdict == Verdict::strictly_ramanujan) << t;
    ++compared;
  }
  EXPECT_GT(compared, 900);
}

TEST(FloatFilter, Examples) {
  EXPECT_NEAR(float_filter(plain({{0, 1, 2, 3}, {0, 1, 2, 3}})).lambda2, 2, 1e-9);
  EXPECT_NEAR(float_filter(bip({{0, 1}, {0, 1}, {1, 0}})).lambda2, 1, 1e-9);
}
