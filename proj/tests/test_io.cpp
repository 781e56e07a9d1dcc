// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "ffc/io.hpp"
#include "oracles.hpp"

using namespace ffc;

namespace {

Rational random_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000);
  Rational q(num(gen), den(gen));
  q.canonicalize();
  return q;
}

template <class F>
void expect_parse_error(F&& f, const std::string& where) {
  try {
    f();
    ADD_FAILURE() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), where) << e.what();
  }
}

}  // namespace

TEST(Io, PolynomialRoundTrip) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> cs(static_cast<std::size_t>(trial % 9 + 1));
    for (auto& c : cs) c = random_rational(gen);
    RatPoly p(cs);
    Json j = poly_to_json(p);
    EXPECT_EQ(poly_from_json(parse_json(j.dump(), "t")), p);
  }
  EXPECT_EQ(poly_to_json(RatPoly({Rational(-1, 2), 0, 1})).dump(), R"({"coeffs":["-1/2","0","1"]})");
  EXPECT_EQ(poly_from_json(parse_json(R"({"coeffs":[-1, "3/6"]})", "t")), RatPoly({-1, Rational(1, 2)}));
  expect_parse_error([] { poly_from_json(parse_json(R"({"coeffs":["1","x"]})", "t")); }, "poly.coeffs[1]");
  expect_parse_error([] { poly_from_json(parse_json(R"({"coef":[]})", "t")); }, "poly");
  expect_parse_error([] { poly_from_json(parse_json(R"({"coeffs":["1/0"]})", "t")); }, "poly.coeffs[0]");
}

TEST(Io, MatrixRoundTrip) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto n = static_cast<std::size_t>(trial % 5 + 1);
    RatMatrix m;
    if (trial % 2) {
      m = oracle::random_symmetric_regular(gen, n);
    } else {
      m = oracle::random_integer_matrix(gen, n);
      m(0, n - 1) = random_rational(gen);
    }
    RatMatrix back = matrix_from_json(parse_json(matrix_to_json(m).dump(), "t"));
    EXPECT_EQ(back.entries(), m.entries());
    EXPECT_EQ(back.row_sum(), m.row_sum());
  }
  expect_parse_error([] { matrix_from_json(parse_json(R"({"n":2,"entries":["1","2","3"]})", "t")); },
                     "matrix.entries");
  expect_parse_error([] { matrix_from_json(parse_json(R"({"n":2,"entries":[1,0,0,2],"row_sum":"1"})", "t")); },
                     "matrix.row_sum");
}

TEST(Io, QuadScalarRoundTrip) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> rad(0, 50);
  for (int trial = 0; trial < 100; ++trial) {
    QuadScalar q(random_rational(gen), trial % 7 ? random_rational(gen) : Rational(trial % 3 - 1), Integer(rad(gen)));
    EXPECT_EQ(parse_quad_scalar(exact_to_json(q)["exact"].get<std::string>()), q) << q.str();
  }
  EXPECT_EQ(exact_to_json(QuadScalar::sqrt_of(2, 2)).dump(), R"j({"exact":"2*sqrt(2)","decimal":"2.82842712474619"})j");
}

TEST(Io, GraphRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::derive(4, static_cast<std::uint64_t>(trial));
    auto mode = trial % 2 ? GraphMode::bipartite : GraphMode::nonbipartite;
    MatchingUnion g = sample_graph(mode, 2 * (trial % 6 + 1), trial % 4 + 1, rng);
    if (trial % 3) g.seed = 0xffffffffffffffffULL - static_cast<std::uint64_t>(trial);
    MatchingUnion back = graph_from_json(parse_json(graph_to_json(g).dump(), "t"));
    EXPECT_EQ(back.mode, g.mode);
    EXPECT_EQ(back.d, g.d);
    EXPECT_EQ(back.m, g.m);
    EXPECT_EQ(back.perms, g.perms);
    EXPECT_EQ(back.seed, g.seed);
  }
}

TEST(Io, GraphRejections) {
  const std::string good = R"({"version":1,"mode":"plain","d":4,"m":2,"perms":[[0,1,2,3],[3,2,1,0]]})";
  EXPECT_EQ(graph_from_json(parse_json(good, "t")).mode, GraphMode::nonbipartite);
  expect_parse_error(
      [] { graph_from_json(parse_json(R"({"version":1,"mode":"bipartite","d":3,"m":1,"perms":[[0,1,1]]})", "t")); },
      "graph.perms[0]");
  expect_parse_error(
      [] { graph_from_json(parse_json(R"({"version":2,"mode":"bipartite","d":1,"m":1,"perms":[[0]]})", "t")); },
      "graph.version");
  expect_parse_error([] { graph_from_json(parse_json(R"({"mode":"bipartite","d":1,"m":1,"perms":[[0]]})", "t")); },
                     "graph");
  expect_parse_error(
      [] { graph_from_json(parse_json(R"({"version":1,"mode":"cubic","d":1,"m":1,"perms":[[0]]})", "t")); },
      "graph.mode");
  expect_parse_error(
      [] { graph_from_json(parse_json(R"({"version":1,"mode":"plain","d":3,"m":1,"perms":[[0,1,2]]})", "t")); },
      "graph.d");
  expect_parse_error(
      [] { graph_from_json(parse_json(R"({"version":1,"mode":"bipartite","d":2,"m":2,"perms":[[0,1]]})", "t")); },
      "graph.perms");
  expect_parse_error(
      [] { graph_from_json(parse_json(R"({"version":1,"mode":"bipartite","d":2,"m":1,"perms":[[0,5]]})", "t")); },
      "graph.perms[0]");
  expect_parse_error([] { parse_json("{\"version\":", "file.json"); }, "file.json");
}

TEST(Io, CertificateRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::derive(5, static_cast<std::uint64_t>(trial));
    auto mode = trial % 2 ? GraphMode::bipartite : GraphMode::nonbipartite;
    RamanujanCertificate c = certify(sample_graph(mode, 2 * (trial % 4 + 1), trial % 4 + 2, rng));
    Json j = certificate_to_json(c);
    RamanujanCertificate back = certificate_from_json(parse_json(j.dump(2), "t"));
    EXPECT_EQ(certificate_to_json(back), j);
    EXPECT_TRUE(reverify(back));
  }
  RamanujanCertificate c = certify(MatchingUnion{GraphMode::bipartite, 2, 3,
                                                 {Permutation::identity(2), Permutation::identity(2),
                                                  Permutation::transposition(2, 0, 1)},
                                                 std::nullopt});
  Json j = certificate_to_json(c);
  EXPECT_EQ(j["verdict"], "strictly-ramanujan");
  EXPECT_EQ(j["bound"]["exact"], "2*sqrt(2)");
  j["verdict"] = "not-ramanujan";
  EXPECT_FALSE(reverify(certificate_from_json(j)));
  j["verdict"] = "maybe";
  expect_parse_error([&] { certificate_from_json(j); }, "certificate.verdict");
}

TEST(Io, ProgramRoundTrip) {
  SwapProgram p = uniform_program(4);
  SwapProgram back = program_from_json(program_to_json(p));
  ASSERT_EQ(back.swaps.size(), p.swaps.size());
  for (std::size_t i = 0; i < p.swaps.size(); ++i) {
    EXPECT_EQ(back.swaps[i].s, p.swaps[i].s);
    EXPECT_EQ(back.swaps[i].t, p.swaps[i].t);
    EXPECT_EQ(back.swaps[i].alpha, p.swaps[i].alpha);
  }
  EXPECT_EQ(program_to_json(uniform_program(2)).dump(), R"({"d":2,"swaps":[[0,1,"1/2"]]})");
  expect_parse_error([] { program_from_json(parse_json(R"({"d":2,"swaps":[[0,0,"1/2"]]})", "t")); }, "program");
}

TEST(Io, TableFormats) {
  auto rows = mfold_root_bound_table({3}, {4, 6}, ConvolutionKind::symmetric);
  std::string tsv = table_to_tsv(rows);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 3);
  EXPECT_NE(tsv.find("3\t4\tsym\t"), std::string::npos);
  EXPECT_NE(tsv.find("2*sqrt(2)\t2.82842712474619\tyes"), std::string::npos);
  Json j = table_to_json(rows);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(poly_from_json(j["rows"][1]["poly"]), rows[1].poly);
  EXPECT_EQ(j["rows"][0]["below_bound"], true);
}

TEST(Io, Fnv1a) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(hex64(0xaf63dc4c8601ec8cULL), "af63dc4c8601ec8c");
}
