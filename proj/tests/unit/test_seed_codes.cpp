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

#include <bit>
#include <cstdint>
#include <sstream>

#include "holocode/errors.hpp"
#include "holocode/seed_codes.hpp"

namespace holocode {
namespace {

TEST(Seeds, ShapesAndLegOrder) {
  const auto steane = steane_tensor();
  EXPECT_EQ(steane.legs(), 8U);
  EXPECT_EQ(steane.k(), 1U);
  EXPECT_EQ(steane.n(), 7U);
  EXPECT_EQ(steane.bulk_slot(), 6U);
  EXPECT_TRUE(steane.css());
  const auto scf = scf_tensor();
  EXPECT_EQ(scf.legs(), 6U);
  EXPECT_EQ(scf.bulk_slot(), 4U);
  EXPECT_TRUE(scf.css());
  const auto five = five_qubit_tensor();
  EXPECT_EQ(five.legs(), 6U);
  EXPECT_EQ(five.bulk_slot(), 4U);
  EXPECT_FALSE(five.css());
}

TEST(Seeds, TableausAreValid) {
  for (const auto& s : {steane_tensor(), scf_tensor(), five_qubit_tensor()}) {
    EXPECT_NO_THROW(validate_seed(s)) << s.name;
    EXPECT_EQ(s.generators.size(), s.legs());
  }
}

TEST(Seeds, PerfectionProperties) {
  EXPECT_TRUE(is_block_perfect(steane_tensor()));
  EXPECT_TRUE(is_block_perfect(scf_tensor()));
  EXPECT_TRUE(is_perfect(five_qubit_tensor()));
  EXPECT_FALSE(is_perfect(scf_tensor()));
  EXPECT_FALSE(is_perfect(steane_tensor()));
}

TEST(Seeds, PerfectImpliesBlockPerfect) {
  for (const auto& s : {steane_tensor(), scf_tensor(), five_qubit_tensor()}) {
    if (is_perfect(s)) {
      EXPECT_TRUE(is_block_perfect(s)) << s.name;
    }
  }
}

// A block is an isometric input iff no nonzero group element lives inside it.
// The oracle walks the whole stabilizer group.
bool isometry_oracle(const SeedCode& s, const std::vector<std::size_t>& block) {
  const std::size_t m = s.generators.size();
  std::vector<bool> inside(s.legs(), false);
  for (auto a : block) inside[a] = true;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    PauliVector g(s.legs());
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) g *= s.generators[j];
    }
    bool contained = true;
    for (std::size_t q = 0; q < s.legs() && contained; ++q) contained = inside[q] || g.get(q) == 0;
    if (contained) return false;
  }
  return true;
}

TEST(Seeds, IsometryMatchesGroupEnumeration) {
  for (const auto& s : {steane_tensor(), scf_tensor(), five_qubit_tensor()}) {
    const std::size_t m = s.legs();
    for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) * 2 > m) continue;
      std::vector<std::size_t> block;
      for (std::size_t q = 0; q < m; ++q) {
        if ((mask >> q) & 1U) block.push_back(q);
      }
      EXPECT_EQ(is_isometry(s, block), isometry_oracle(s, block)) << s.name << " mask " << mask;
    }
  }
}

TEST(Seeds, IsometryChecksInputSize) {
  const auto five = five_qubit_tensor();
  EXPECT_TRUE(is_isometry(five, {0, 2, 4}));
  EXPECT_THROW(is_isometry(five, {0, 1, 2, 3}), DimensionError);
  EXPECT_THROW(is_isometry(five, {9}), DimensionError);
}

TEST(Seeds, BlankTileDropsBulkFlags) {
  const auto b = blank_tile(steane_tensor());
  EXPECT_EQ(b.k(), 0U);
  EXPECT_EQ(b.generators, steane_tensor().generators);
  EXPECT_THROW(blank_tile(b), DimensionError);
}

TEST(Seeds, NamesAndAliases) {
  EXPECT_EQ(seed_by_name("five_qubit").name, five_qubit_tensor().name);
  EXPECT_EQ(seed_by_name("scf").name, scf_tensor().name);
  EXPECT_THROW(seed_by_name("toric"), UnsupportedError);
}

TEST(Seeds, TextRoundTrip) {
  for (const auto& s : {steane_tensor(), scf_tensor(), five_qubit_tensor()}) {
    std::stringstream io;
    write_seed(io, s);
    const auto back = read_seed(io);
    EXPECT_EQ(back.name, s.name);
    EXPECT_EQ(back.leg_labels, s.leg_labels);
    EXPECT_EQ(back.bulk, s.bulk);
    EXPECT_EQ(back.generators, s.generators);
  }
  std::stringstream bad("steane 7 1\nXX\n");
  EXPECT_THROW(read_seed(bad), ParseError);
}

}  // namespace
}  // namespace holocode
