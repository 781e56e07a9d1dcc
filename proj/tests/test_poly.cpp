// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "ffc/matrix.hpp"
#include "ffc/poly.hpp"
#include "ffc/quad_scalar.hpp"
#include "oracles.hpp"

using namespace ffc;

namespace {

RatPoly X() { return RatPoly::monomial(1); }

}  // namespace

TEST(RatPoly, TrimsLeadingZeros) {
  RatPoly p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(RatPoly({0, 0}).is_zero());
  EXPECT_EQ(RatPoly().degree(), -1);
}

TEST(RatPoly, Derivative) {
  EXPECT_EQ(derivative(RatPoly({1, -2, 1})), RatPoly({-2, 2}));
  EXPECT_TRUE(derivative(RatPoly::constant(5)).is_zero());
  EXPECT_EQ(derivative(RatPoly({0, -1, 0, 1})), RatPoly({-1, 0, 3}));
}

TEST(RatPoly, STransform) {
  EXPECT_EQ(s_transform(RatPoly({-1, 1})), RatPoly({-1, 0, 1}));
  EXPECT_EQ(s_transform(RatPoly({2, -3, 1})), RatPoly({2, 0, -3, 0, 1}));
  EXPECT_TRUE(s_transform(RatPoly()).is_zero());
}

TEST(RatPoly, DivmodReconstructs) {
  std::mt19937_64 gen(7);
  for (int t = 0; t < 50; ++t) {
    RatPoly a = oracle::random_real_rooted(gen, 6) + RatPoly({Rational(1, 3)});
    RatPoly b = oracle::random_real_rooted(gen, 3) * Rational(5, 2);
    auto [q, r] = divmod(a, b);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(q * b + r, a);
  }
  EXPECT_THROW(divmod(X(), RatPoly()), ParameterError);
  EXPECT_THROW(exact_div(X(), X() + RatPoly::constant(1)), ContractError);
}

TEST(RatPoly, GcdAndSquareFree) {
  RatPoly p = pow(X() - RatPoly::constant(1), 3) * (X() + RatPoly::constant(2));
  RatPoly q = pow(X() - RatPoly::constant(1), 2) * (X() - RatPoly::constant(5));
  EXPECT_EQ(gcd(p, q), pow(X() - RatPoly::constant(1), 2));
  EXPECT_EQ(square_free_part(p), (X() - RatPoly::constant(1)) * (X() + RatPoly::constant(2)));

  // (x-1)^3 (x+2) (x-4)^2 * 3
  RatPoly r = p * pow(X() - RatPoly::constant(4), 2) * Rational(3);
  auto f = square_free_factorization(r);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], X() + RatPoly::constant(2));
  EXPECT_EQ(f[1], X() - RatPoly::constant(4));
  EXPECT_EQ(f[2], X() - RatPoly::constant(1));
}

TEST(RatPoly, SquareFreeFactorizationReassembles) {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 40; ++t) {
    RatPoly p = oracle::random_real_rooted(gen, 7, 2);
    auto f = square_free_factorization(p);
    RatPoly back = RatPoly::constant(1);
    for (std::size_t i = 0; i < f.size(); ++i) back *= pow(f[i], static_cast<unsigned>(i + 1));
    EXPECT_EQ(back, p);
  }
}

TEST(CharPoly, SmallExamples) {
  EXPECT_EQ(char_poly(RatMatrix::identity(2)), pow(X() - RatPoly::constant(1), 2));
  EXPECT_EQ(char_poly(RatMatrix{{0, 1}, {1, 0}}), RatPoly({-1, 0, 1}));
  RatMatrix ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  RatPoly expected = RatPoly::monomial(2) * (X() - RatPoly::constant(3));
  EXPECT_EQ(oracle::laplace_char_poly(ones), expected);
  EXPECT_EQ(char_poly(ones), expected);
}

TEST(CharPoly, AgreesWithCofactorExpansion) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    RatMatrix m = oracle::random_integer_matrix(gen, n);
    m(0, 0) = Rational(1, 1 + t % 4);
    EXPECT_EQ(char_poly(m), oracle::laplace_char_poly(m)) << "n=" << n;
  }
}

TEST(Dilation, Examples) {
  RatMatrix one{{1}};
  EXPECT_EQ(dilation(one), (RatMatrix{{0, 1}, {1, 0}}));
  EXPECT_TRUE(dilation(RatMatrix{{1, 2}, {3, 4}}).is_symmetric());
}

TEST(Dilation, SpectrumSymmetricAndSTransformIdentity) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 4);
    RatMatrix m = oracle::random_integer_matrix(gen, n, -4, 4);
    RatPoly cd = char_poly(dilation(m));
    for (std::size_t i = 1; i < cd.coeffs().size(); i += 2) EXPECT_EQ(cd.coeffs()[i], 0);
    EXPECT_EQ(cd, s_transform(char_poly(m * m.transpose())));
  }
}

TEST(RatMatrix, RowSumAnnotations) {
  RatMatrix a{{1, 2}, {2, 1}};
  a.mark_row_sum();
  EXPECT_EQ(*a.row_sum(), 3);
  RatMatrix b{{1, 2}, {0, 2}};
  EXPECT_THROW(b.mark_row_sum(), ContractError);
  RatMatrix c{{1, 2}, {1, 2}};
  EXPECT_NO_THROW(c.mark_row_sum());
  EXPECT_THROW(c.mark_doubly_regular(), ContractError);
}

TEST(RatMatrix, RankMatchesSmallCases) {
  EXPECT_EQ(rank(RatMatrix(3)), 0u);
  EXPECT_EQ(rank(RatMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RatMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(RatMatrix{{0, 1, 0}, {0, 2, 0}, {0, 0, 3}}), 2u);
  RatMatrix q(2, {Rational(1, 2), Rational(1, 3), Rational(3, 2), 1});
  EXPECT_EQ(rank(q), 1u);
}

TEST(RatMatrix, RankAgreesWithDeterminantOfMinors) {
  // full rank iff char poly has nonzero constant term
  std::mt19937_64 gen(19);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    RatMatrix m = oracle::random_integer_matrix(gen, n, -1, 1);
    bool full = char_poly(m).coeff(0) != 0;
    EXPECT_EQ(rank(m) == n, full);
  }
}

TEST(QuadScalar, NormalizesRationalCases) {
  QuadScalar two = QuadScalar::sqrt_of(1, 2);
  EXPECT_TRUE(two.is_rational());
  EXPECT_EQ(two, QuadScalar(2));
  QuadScalar four = QuadScalar::sqrt_of(4, 2);
  EXPECT_EQ(four, QuadScalar(4));
  QuadScalar s8 = QuadScalar::sqrt_of(8);  // 2 sqrt 2
  EXPECT_EQ(s8.radicand(), 2);
  EXPECT_EQ(s8.radical_coeff(), 2);
  EXPECT_EQ(QuadScalar::sqrt_of(0, 7), QuadScalar(0));
}

TEST(QuadScalar, ExactSign) {
  QuadScalar r2 = QuadScalar::sqrt_of(2);
  EXPECT_EQ((r2 - QuadScalar(Rational(141, 100))).sign(), 1);
  EXPECT_EQ((r2 - QuadScalar(Rational(142, 100))).sign(), -1);
  EXPECT_EQ((r2 * r2 - QuadScalar(2)).sign(), 0);
  EXPECT_EQ((QuadScalar(3) - QuadScalar::sqrt_of(9)).sign(), 0);
  EXPECT_LT(QuadScalar::sqrt_of(2), QuadScalar(Rational(3, 2)));
  EXPECT_THROW(QuadScalar::sqrt_of(2) + QuadScalar::sqrt_of(3), ParameterError);
}

TEST(QuadScalar, TextRoundTrip) {
  std::mt19937_64 gen(23);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 100; ++t) {
    Rational a(d(gen), 1 + std::abs(d(gen)));
    Rational b(d(gen), 1 + std::abs(d(gen)));
    a.canonicalize();
    b.canonicalize();
    QuadScalar q(a, b, Integer(2 + t % 13));
    EXPECT_EQ(parse_quad_scalar(q.str()), q) << q.str();
  }
  EXPECT_EQ(QuadScalar::sqrt_of(2, 2).str(), "2*sqrt(2)");
  EXPECT_EQ(QuadScalar::sqrt_of(2, 2).decimal(), "2.82842712474619");
  EXPECT_THROW(parse_quad_scalar("2sqrt(2)"), ParseError);
  EXPECT_THROW(parse_quad_scalar("1/0"), ParseError);
}

TEST(QuadScalar, PolynomialEvaluation) {
  RatPoly p({-2, 0, 1});  // x^2 - 2
  EXPECT_EQ(evaluate(p, QuadScalar::sqrt_of(2)).sign(), 0);
  EXPECT_EQ(evaluate(p, QuadScalar::sqrt_of(3)), QuadScalar(1));
}
