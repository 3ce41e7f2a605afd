// Copyright 2026 The holocode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "holocode/code_builder.hpp"
#include "holocode/decoder.hpp"
#include "holocode/errors.hpp"
#include "holocode/gf2.hpp"
#include "oracles/oracles.hpp"

namespace holocode {
namespace {

BitVec random_bits(std::size_t n, std::mt19937_64& rng, unsigned one_in = 2) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() % one_in == 0);
  return v;
}

PauliVector random_pauli(std::size_t n, std::mt19937_64& rng, unsigned one_in) {
  PauliVector e(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() % one_in == 0) e.set(q, 1 + static_cast<unsigned>(rng() % 3));
  }
  return e;
}

DecoderOptions options(SolverKind solver, bool coefficients = false) {
  DecoderOptions o;
  o.solver = solver;
  o.coefficients = coefficients;
  return o;
}

std::vector<std::uint8_t> lambda_of(const Correction& c) {
  std::vector<std::uint8_t> out;
  for (std::size_t j = 0; j < c.lambda.size(); ++j) out.push_back(c.lambda.get(j) ? 1 : 0);
  for (std::size_t j = 0; j < c.mu.size(); ++j) out.push_back(c.mu.get(j) ? 1 : 0);
  return out;
}

BitVec combine(const DecodeProblem& p, const Correction& c) {
  BitVec v = p.target;
  for (std::size_t j = 0; j < c.lambda.size(); ++j) {
    if (c.lambda.get(j)) v ^= p.generators[j];
  }
  for (std::size_t j = 0; j < c.mu.size(); ++j) {
    if (c.mu.get(j)) v ^= p.generators[p.num_stabilizers + j];
  }
  return v;
}

TEST(Decoder, ParseNames) {
  EXPECT_EQ(parse_objective("hamming"), Objective::hamming);
  EXPECT_EQ(parse_objective("pauli"), Objective::pauli);
  EXPECT_EQ(parse_mode("css"), DecodeMode::css);
  EXPECT_EQ(parse_mode("symplectic"), DecodeMode::symplectic);
  EXPECT_EQ(parse_solver("bnb"), SolverKind::branch_and_bound);
  EXPECT_EQ(parse_solver("network"), SolverKind::network);
  EXPECT_THROW(parse_objective("l1"), UnsupportedError);
  EXPECT_THROW(parse_mode("mixed"), UnsupportedError);
  EXPECT_EQ(to_string(parse_objective(to_string(Objective::pauli))), "pauli");
}

TEST(Decoder, PureErrorSolvesSyndrome) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Gf2Matrix s(6, 14);
    for (std::size_t r = 0; r < 6; ++r) s.row(r) = random_bits(14, rng);
    if (rank(s) < 6) continue;
    const Gf2Matrix f = right_inverse(s);
    const BitVec y = random_bits(6, rng);
    EXPECT_EQ(s * pure_error(f, y), y);
  }
  EXPECT_THROW(pure_error(Gf2Matrix(4, 3), BitVec(2)), DimensionError);
}

// Random problems of up to 14 generators against full enumeration, checking
// both the optimum and the lexicographic tie-break.
TEST(Decoder, BranchAndBoundMatchesExhaustive) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    DecodeProblem p;
    p.symplectic = t % 2 == 1;
    p.objective = (t % 4 == 3) ? Objective::pauli : Objective::hamming;
    const std::size_t bits = p.symplectic ? 2 * (6 + rng() % 8) : 6 + rng() % 14;
    const std::size_t m = 1 + rng() % 14;
    for (std::size_t j = 0; j < m; ++j) p.generators.push_back(random_bits(bits, rng, 1 + rng() % 3));
    p.num_stabilizers = rng() % (m + 1);
    p.target = random_bits(bits, rng);
    const auto got = min_weight_coset(p);
    const auto want = oracle::exhaustive_coset(p);
    ASSERT_EQ(got.weight, want.weight) << "trial " << t;
    EXPECT_TRUE(got.certified);
    EXPECT_TRUE(got.lex_minimal);
    EXPECT_EQ(lambda_of(got), want.lambda) << "trial " << t;
    EXPECT_EQ(combine(p, got), got.vector);
    EXPECT_EQ(oracle::weight_of(got.vector, p), got.weight);
  }
}

TEST(Decoder, ZeroTimeoutIsUncertified) {
  const auto code = build_code(Family::heptagon, 2, RateVariant::max);
  const auto split = css_split(code);
  DecodeProblem p;
  p.generators = split.sz.row_data();
  p.num_stabilizers = p.generators.size();
  for (const auto& r : split.z_logicals) p.generators.push_back(r);
  std::mt19937_64 rng(5);
  p.target = random_bits(code.n, rng);
  const auto c = min_weight_coset(p, SolverLimits{0.0});
  EXPECT_FALSE(c.certified);
  EXPECT_EQ(combine(p, c), c.vector);
  EXPECT_LE(c.weight, p.target.popcount());
}

TEST(Decoder, SingleTileCodesCorrectSingleQubitErrors) {
  for (const auto& seed : {steane_tensor(), scf_tensor(), five_qubit_tensor()}) {
    auto code = std::make_shared<HolographicCode>(single_tile_code(seed));
    const Decoder decoder(code);
    const LogicalAnalyzer analyzer(*code);
    std::size_t corrected = 0;
    for (std::size_t q = 0; q < code->n; ++q) {
      for (unsigned v = 1; v < 4; ++v) {
        PauliVector e(code->n);
        e.set(q, v);
        const auto r = decoder.decode(decoder.syndrome_of(e));
        EXPECT_TRUE(r.certified);
        EXPECT_FALSE(decoder.syndrome_of(e * r.correction).any());
        if (analyzer.effect(e * r.correction).trivial()) ++corrected;
      }
    }
    // The fragment code has distance 2 and cannot correct everything.
    if (seed.name == "scf") {
      EXPECT_LT(corrected, 3 * code->n);
    } else {
      EXPECT_EQ(corrected, 3 * code->n) << seed.name;
    }
  }
}

TEST(Decoder, CorrectionReproducesSyndrome) {
  auto code = std::make_shared<HolographicCode>(build_code(Family::pentagon, 3, RateVariant::reduced));
  const Decoder decoder(code);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const PauliVector e = random_pauli(code->n, rng, 6);
    const auto r = decoder.decode(decoder.syndrome_of(e));
    EXPECT_EQ(decoder.syndrome_of(r.correction), decoder.syndrome_of(e));
    EXPECT_LE(r.correction.weight(), e.weight() + e.sector_weight());
  }
}

void expect_solvers_agree(const std::shared_ptr<const HolographicCode>& code, int trials, unsigned one_in) {
  const Decoder network(code, options(SolverKind::network));
  const Decoder bnb(code, options(SolverKind::branch_and_bound));
  ASSERT_TRUE(network.uses_network());
  ASSERT_FALSE(bnb.uses_network());
  std::mt19937_64 rng(17);
  for (int t = 0; t < trials; ++t) {
    const PauliVector e = random_pauli(code->n, rng, one_in);
    const BitVec s = network.syndrome_of(e);
    const auto a = network.decode(s);
    const auto b = bnb.decode(s);
    ASSERT_EQ(a.sectors.size(), b.sectors.size());
    for (std::size_t i = 0; i < a.sectors.size(); ++i) EXPECT_EQ(a.sectors[i].weight, b.sectors[i].weight);
    EXPECT_EQ(network.syndrome_of(a.correction), s);
  }
}

TEST(Decoder, NetworkMatchesBranchAndBoundCss) {
  expect_solvers_agree(std::make_shared<HolographicCode>(build_code(Family::heptagon, 2, RateVariant::max)), 100, 3);
}

TEST(Decoder, NetworkMatchesBranchAndBoundSymplectic) {
  expect_solvers_agree(std::make_shared<HolographicCode>(build_code(Family::pentagon, 2, RateVariant::zero)), 50, 5);
}

// Both solvers report coefficients relative to the same pure error, so
// undoing them must land on the same target vector.
TEST(Decoder, CoefficientsReconstructTarget) {
  auto code = std::make_shared<HolographicCode>(build_code(Family::heptagon, 2, RateVariant::max));
  const Decoder network(code, options(SolverKind::network, true));
  const Decoder bnb(code, options(SolverKind::branch_and_bound, true));
  const auto split = css_split(*code);
  const auto undo = [&](const Correction& c) {
    BitVec v = c.vector;
    for (std::size_t j = 0; j < c.lambda.size(); ++j) {
      if (c.lambda.get(j)) v ^= split.sz.row(j);
    }
    for (std::size_t j = 0; j < c.mu.size(); ++j) {
      if (c.mu.get(j)) v ^= split.z_logicals[j];
    }
    return v;
  };
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const PauliVector e = random_pauli(code->n, rng, 4);
    const auto a = network.decode(network.syndrome_of(e));
    const auto b = bnb.decode(bnb.syndrome_of(e));
    // Sector 0 removes Z errors with Z-type generators.
    ASSERT_EQ(a.sectors[0].lambda.size(), split.sz.rows());
    EXPECT_EQ(undo(a.sectors[0]), undo(b.sectors[0]));
  }
}

TEST(Decoder, LogicalAnalyzerReadsRepresentatives) {
  const auto code = build_code(Family::heptagon, 2, RateVariant::max);
  const LogicalAnalyzer analyzer(code);
  for (std::size_t i = 0; i < code.k(); ++i) {
    const auto ex = analyzer.effect(code.logicals[i].x_rep * code.stabilizers[i % code.stabilizers.size()]);
    EXPECT_FALSE(ex.detectable);
    for (std::size_t j = 0; j < code.k(); ++j) EXPECT_EQ(ex.effect[j], i == j ? 1U : 0U);
    const auto ey = analyzer.effect(code.logicals[i].x_rep * code.logicals[i].z_rep);
    EXPECT_EQ(ey.effect[i], 3U);
  }
  EXPECT_TRUE(analyzer.effect(code.stabilizers[0]).trivial());
  PauliVector single(code.n);
  single.set(0, 1);
  EXPECT_TRUE(analyzer.effect(single).detectable);
  EXPECT_FALSE(analyzer.effect(single).trivial());
  EXPECT_EQ(net_logical_effect(code, code.logicals[0].z_rep).effect[0], 2U);
}

}  // namespace
}  // namespace holocode
