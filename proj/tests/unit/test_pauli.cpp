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

#include <random>
#include <sstream>

#include "holocode/errors.hpp"
#include "holocode/pauli.hpp"

namespace holocode {
namespace {

// Single-qubit Paulis anticommute exactly when both are non-identity and
// different; the n-qubit product is the parity of such positions.
bool anticommute_oracle(const std::string& a, const std::string& b) {
  bool odd = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) odd = !odd;
  }
  return odd;
}

std::string random_pauli(std::mt19937_64& rng, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back("IXYZ"[rng() % 4]);
  return s;
}

TEST(Pauli, ParsesAndPrints) {
  const auto p = PauliVector::from_string("IXYZ_");
  EXPECT_EQ(p.size(), 5U);
  EXPECT_EQ(p.get(0), 0U);
  EXPECT_EQ(p.get(1), 1U);
  EXPECT_EQ(p.get(2), 3U);
  EXPECT_EQ(p.get(3), 2U);
  EXPECT_EQ(p.to_string(), "IXYZI");
  EXPECT_EQ(p.weight(), 3U);
  EXPECT_EQ(p.sector_weight(), 4U);
  EXPECT_THROW(PauliVector::from_string("XQ"), ParseError);
}

TEST(Pauli, SymplecticRoundTrip) {
  const auto p = PauliVector::from_string("XYZI");
  EXPECT_EQ(p.to_symplectic().to_string(), "11000110");
  EXPECT_EQ(PauliVector::from_symplectic(p.to_symplectic()), p);
  EXPECT_THROW(PauliVector::from_symplectic(BitVec(5)), DimensionError);
}

TEST(Pauli, ProductIsPhaseFree) {
  auto p = PauliVector::from_string("XZYI");
  p *= PauliVector::from_string("ZZXX");
  EXPECT_EQ(p.to_string(), "YIZX");
}

TEST(Pauli, SymplecticProductMatchesCommutationOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const auto a = random_pauli(rng, n);
    const auto b = random_pauli(rng, n);
    EXPECT_EQ(symplectic_product(PauliVector::from_string(a), PauliVector::from_string(b)),
              anticommute_oracle(a, b));
  }
  EXPECT_THROW(symplectic_product(PauliVector(2), PauliVector(3)), DimensionError);
}

TEST(Pauli, SyndromeIsCheckMatrixTimesError) {
  std::mt19937_64 rng(22);
  std::vector<PauliVector> stabs;
  for (int i = 0; i < 6; ++i) stabs.push_back(PauliVector::from_string(random_pauli(rng, 9)));
  const auto h = check_matrix(stabs);
  for (int t = 0; t < 50; ++t) {
    const auto e = PauliVector::from_string(random_pauli(rng, 9));
    const BitVec s = syndrome(stabs, e);
    EXPECT_EQ(s, h * e.to_symplectic());
    for (std::size_t j = 0; j < stabs.size(); ++j) EXPECT_EQ(s.get(j), symplectic_product(stabs[j], e));
  }
}

TEST(Pauli, CommutationAndIndependence) {
  const std::vector<PauliVector> ok = {PauliVector::from_string("XXXX"), PauliVector::from_string("ZZZZ")};
  EXPECT_TRUE(all_commute(ok));
  EXPECT_TRUE(independent(ok));
  const std::vector<PauliVector> bad = {PauliVector::from_string("XI"), PauliVector::from_string("ZI")};
  EXPECT_FALSE(all_commute(bad));
  const std::vector<PauliVector> dep = {PauliVector::from_string("XX"), PauliVector::from_string("ZZ"),
                                        PauliVector::from_string("YY")};
  EXPECT_FALSE(independent(dep));
}

TEST(Pauli, TableauRoundTrip) {
  const std::vector<PauliVector> ops = {PauliVector::from_string("XZZXI"), PauliVector::from_string("IXZZX")};
  std::stringstream s;
  write_tableau(s, ops);
  EXPECT_EQ(read_tableau(s), ops);
  EXPECT_EQ(parse_tableau("# comment\nXX\n\nZZ\n").size(), 2U);
  EXPECT_THROW(parse_tableau("XX\nZZZ\n"), ParseError);
  EXPECT_THROW(parse_tableau("XA\n"), ParseError);
}

TEST(Pauli, RestrictKeepsListedQubits) {
  const auto p = PauliVector::from_string("XYZIX");
  EXPECT_EQ(p.restrict_to({4, 1, 2}).to_string(), "XYZ");
}

}  // namespace
}  // namespace holocode
