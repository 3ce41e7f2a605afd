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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holocode {

enum class Family { heptagon, pentagon };
enum class RateVariant { max, reduced, zero };
enum class TileKind { logical, blank };

std::string_view to_string(Family f);
std::string_view to_string(RateVariant v);
std::string_view to_string(TileKind k);
Family parse_family(std::string_view s);
RateVariant parse_variant(std::string_view s);

/// Leg layout of the seed placed on each tile. Logical tiles use every leg
/// except bulk_slot as a side; blank tiles use all legs as sides.
struct TileLayout {
  std::size_t legs = 0;
  std::size_t bulk_slot = 0;
};

/// Steane layout (8 legs, bulk at 6) for heptagons; 6 legs with bulk at 4 for
/// pentagon/hexagon tilings.
TileLayout default_layout(Family f);

struct LegRef {
  std::size_t tile = 0;
  std::size_t leg = 0;
  bool operator==(const LegRef&) const = default;
};

struct Tile {
  std::size_t id = 0;
  TileKind kind = TileKind::logical;
  /// 0 for the central tile.
  std::size_t layer = 0;
  std::size_t legs = 0;
  /// Seed leg index of the bulk leg; only meaningful for logical tiles.
  std::size_t bulk_leg = 0;
  /// side_legs[u] is the seed leg on counter-clockwise side u.
  std::vector<std::size_t> side_legs;

  std::size_t sides() const { return side_legs.size(); }
};

/// Contracted leg pair. `inner` belongs to the tile created first.
struct TileEdge {
  LegRef inner;
  LegRef outer;
};

/// Truncated tessellation: radius R has layers 0..R-1.
struct TileGraph {
  Family family = Family::heptagon;
  RateVariant variant = RateVariant::max;
  std::size_t radius = 0;
  TileLayout layout;
  std::vector<Tile> tiles;
  /// In creation order; edges to a tile precede edges of later tiles.
  std::vector<TileEdge> edges;
  /// Open planar legs in cyclic boundary order.
  std::vector<LegRef> boundary;
  /// One per logical tile, in tile order.
  std::vector<LegRef> bulk;
};

/// Layer-by-layer growth where every vertex is shared by four tiles.
///
/// Logical tiles map side u to leg (bulk_slot + 1 + u) mod legs; blank tiles
/// map side u to leg (bulk_slot + u) mod legs. Side 0 of a new tile faces the
/// last boundary edge it covers.
///
/// Variants: heptagon supports max only. For pentagon, max makes every tile a
/// logical pentagon, reduced alternates logical pentagon layers (even layer
/// index) with blank hexagon layers, and zero keeps only the central pentagon
/// logical with blank hexagons elsewhere.
TileGraph build_tiling(Family family, std::size_t radius, RateVariant variant,
                       std::optional<TileLayout> layout = std::nullopt);

struct TileCounts {
  std::size_t n = 0;
  std::size_t k = 0;
  double rate = 0.0;
};
TileCounts counts(const TileGraph& g);

/// Throws InvariantError when a leg is consumed twice or not at all, a bulk
/// leg is contracted, or an edge skips a layer.
void validate_tiling(const TileGraph& g);

std::string tiling_to_json(const TileGraph& g);
TileGraph tiling_from_json(std::string_view text);

}  // namespace holocode
