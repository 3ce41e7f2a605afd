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

#include <map>
#include <set>

#include "holocode/errors.hpp"
#include "holocode/tiling.hpp"

namespace holocode {
namespace {

struct CountCase {
  Family family;
  RateVariant variant;
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
};

const std::vector<CountCase>& count_cases() {
  static const std::vector<CountCase> cases = {
      {Family::heptagon, RateVariant::max, {7, 42, 203, 973, 4662, 22337}, {1, 8, 43, 211, 1016, 4873}},
      {Family::pentagon, RateVariant::reduced, {5, 25, 75, 255, 745, 2525}, {1, 1, 21, 21, 221, 221}},
      {Family::pentagon, RateVariant::zero, {5, 25, 95, 355, 1325, 4945}, {1, 1, 1, 1, 1, 1}},
      // Regression values for the all-logical pentagon tiling.
      {Family::pentagon, RateVariant::max, {5, 20, 55, 145, 380, 995}, {}},
  };
  return cases;
}

TEST(Tiling, BoundaryAndBulkCounts) {
  for (const auto& c : count_cases()) {
    for (std::size_t r = 1; r <= c.n.size(); ++r) {
      const auto g = build_tiling(c.family, r, c.variant);
      EXPECT_EQ(g.boundary.size(), c.n[r - 1]) << to_string(c.family) << "/" << to_string(c.variant) << " R=" << r;
      if (!c.k.empty()) {
        EXPECT_EQ(g.bulk.size(), c.k[r - 1]) << to_string(c.variant) << " R=" << r;
      }
      const auto cnt = counts(g);
      EXPECT_EQ(cnt.n, g.boundary.size());
      EXPECT_DOUBLE_EQ(cnt.rate, static_cast<double>(cnt.k) / static_cast<double>(cnt.n));
    }
  }
}

TEST(Tiling, StructuralInvariants) {
  for (const auto& c : count_cases()) {
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto g = build_tiling(c.family, r, c.variant);
      EXPECT_NO_THROW(validate_tiling(g));
      // Every leg is open, contracted once, or bulk.
      std::map<std::pair<std::size_t, std::size_t>, int> uses;
      for (const auto& e : g.edges) {
        ++uses[{e.inner.tile, e.inner.leg}];
        ++uses[{e.outer.tile, e.outer.leg}];
        EXPECT_LT(e.inner.tile, e.outer.tile);
      }
      for (const auto& b : g.boundary) ++uses[{b.tile, b.leg}];
      for (const auto& b : g.bulk) ++uses[{b.tile, b.leg}];
      std::size_t legs = 0;
      for (const auto& t : g.tiles) legs += t.legs;
      EXPECT_EQ(uses.size(), legs);
      for (const auto& [leg, count] : uses) EXPECT_EQ(count, 1);
      // Each non-central tile attaches to the previous layer.
      std::set<std::size_t> attached;
      for (const auto& e : g.edges) {
        if (g.tiles[e.inner.tile].layer + 1 == g.tiles[e.outer.tile].layer) attached.insert(e.outer.tile);
      }
      EXPECT_EQ(attached.size(), g.tiles.size() - 1);
    }
  }
}

TEST(Tiling, VariantLayerKinds) {
  const auto reduced = build_tiling(Family::pentagon, 4, RateVariant::reduced);
  for (const auto& t : reduced.tiles) {
    EXPECT_EQ(t.kind, t.layer % 2 == 0 ? TileKind::logical : TileKind::blank);
    EXPECT_EQ(t.legs, 6U);
    EXPECT_EQ(t.sides(), t.kind == TileKind::logical ? 5U : 6U);
  }
  const auto zero = build_tiling(Family::pentagon, 3, RateVariant::zero);
  for (const auto& t : zero.tiles) EXPECT_EQ(t.kind == TileKind::logical, t.id == 0);
}

TEST(Tiling, HeptagonSupportsOnlyMaxRate) {
  EXPECT_THROW(build_tiling(Family::heptagon, 2, RateVariant::reduced), UnsupportedError);
  EXPECT_THROW(build_tiling(Family::heptagon, 2, RateVariant::zero), UnsupportedError);
  EXPECT_THROW(build_tiling(Family::pentagon, 0, RateVariant::max), DimensionError);
}

TEST(Tiling, ParseNames) {
  EXPECT_EQ(parse_family("heptagon"), Family::heptagon);
  EXPECT_EQ(parse_variant("reduced"), RateVariant::reduced);
  EXPECT_THROW(parse_family("square"), UnsupportedError);
  EXPECT_THROW(parse_variant("half"), UnsupportedError);
}

TEST(Tiling, JsonRoundTrip) {
  const auto g = build_tiling(Family::pentagon, 3, RateVariant::reduced);
  const auto back = tiling_from_json(tiling_to_json(g));
  EXPECT_EQ(back.family, g.family);
  EXPECT_EQ(back.variant, g.variant);
  EXPECT_EQ(back.radius, g.radius);
  ASSERT_EQ(back.tiles.size(), g.tiles.size());
  for (std::size_t i = 0; i < g.tiles.size(); ++i) {
    EXPECT_EQ(back.tiles[i].side_legs, g.tiles[i].side_legs);
    EXPECT_EQ(back.tiles[i].kind, g.tiles[i].kind);
    EXPECT_EQ(back.tiles[i].layer, g.tiles[i].layer);
  }
  ASSERT_EQ(back.edges.size(), g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EXPECT_EQ(back.edges[i].inner, g.edges[i].inner);
    EXPECT_EQ(back.edges[i].outer, g.edges[i].outer);
  }
  EXPECT_EQ(back.boundary, g.boundary);
  EXPECT_EQ(back.bulk, g.bulk);
  EXPECT_THROW(tiling_from_json("{\"family\": 3}"), ParseError);
  EXPECT_THROW(tiling_from_json("not json"), ParseError);
}

}  // namespace
}  // namespace holocode
