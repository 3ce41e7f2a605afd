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

#include "holocode/tiling.hpp"

#include <algorithm>
#include <utility>

#include "holocode/errors.hpp"
#include "json.hpp"

namespace holocode {

namespace {

// Tiles around each vertex of the tessellation.
constexpr int kVertexDegree = 4;

struct OpenSide {
  std::size_t tile;
  std::size_t side;
};

TileKind kind_for_layer(Family family, RateVariant variant, std::size_t layer) {
  if (family == Family::heptagon) {
    if (variant != RateVariant::max) {
      throw UnsupportedError("heptagon family only supports the max rate variant");
    }
    return TileKind::logical;
  }
  switch (variant) {
    case RateVariant::max:
      return TileKind::logical;
    case RateVariant::reduced:
      return layer % 2 == 0 ? TileKind::logical : TileKind::blank;
    case RateVariant::zero:
      return layer == 0 ? TileKind::logical : TileKind::blank;
  }
  return TileKind::logical;
}

Tile make_tile(std::size_t id, TileKind kind, std::size_t layer, const TileLayout& layout) {
  Tile t;
  t.id = id;
  t.kind = kind;
  t.layer = layer;
  t.legs = layout.legs;
  t.bulk_leg = layout.bulk_slot;
  if (kind == TileKind::logical) {
    for (std::size_t u = 0; u + 1 < layout.legs; ++u) {
      t.side_legs.push_back((layout.bulk_slot + 1 + u) % layout.legs);
    }
  } else {
    for (std::size_t u = 0; u < layout.legs; ++u) {
      t.side_legs.push_back((layout.bulk_slot + u) % layout.legs);
    }
  }
  return t;
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::heptagon ? "heptagon" : "pentagon"; }

std::string_view to_string(RateVariant v) {
  switch (v) {
    case RateVariant::max:
      return "max";
    case RateVariant::reduced:
      return "reduced";
    case RateVariant::zero:
      return "zero";
  }
  return "max";
}

std::string_view to_string(TileKind k) { return k == TileKind::logical ? "logical" : "blank"; }

Family parse_family(std::string_view s) {
  if (s == "heptagon") return Family::heptagon;
  if (s == "pentagon") return Family::pentagon;
  throw UnsupportedError("unknown family '" + std::string(s) + "'");
}

RateVariant parse_variant(std::string_view s) {
  if (s == "max") return RateVariant::max;
  if (s == "reduced") return RateVariant::reduced;
  if (s == "zero") return RateVariant::zero;
  throw UnsupportedError("unknown rate variant '" + std::string(s) + "'");
}

TileLayout default_layout(Family f) {
  return f == Family::heptagon ? TileLayout{8, 6} : TileLayout{6, 4};
}

TileGraph build_tiling(Family family, std::size_t radius, RateVariant variant,
                       std::optional<TileLayout> layout) {
  if (radius < 1) throw DimensionError("radius must be at least 1");
  TileGraph g;
  g.family = family;
  g.variant = variant;
  g.radius = radius;
  g.layout = layout.value_or(default_layout(family));
  if (g.layout.bulk_slot >= g.layout.legs || g.layout.legs < 5) {
    throw DimensionError("tile layout needs at least 5 legs and a bulk slot inside them");
  }

  g.tiles.push_back(make_tile(0, kind_for_layer(family, variant, 0), 0, g.layout));
  // Open sides in cyclic order; in_count[i] is the number of placed tiles at
  // the vertex where open side i ends.
  std::vector<OpenSide> open;
  std::vector<int> in_count;
  for (std::size_t u = 0; u < g.tiles[0].sides(); ++u) {
    open.push_back({0, u});
    in_count.push_back(1);
  }

  for (std::size_t layer = 1; layer < radius; ++layer) {
    const TileKind kind = kind_for_layer(family, variant, layer);
    const std::size_t m = open.size();
    // Start right after a vertex that does not merge two open sides.
    std::size_t anchor = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (in_count[i] != kVertexDegree - 1) {
        anchor = i;
        break;
      }
    }
    if (anchor == m) throw InvariantError("tiling growth: every boundary vertex is saturated");
    std::rotate(open.begin(), open.begin() + static_cast<std::ptrdiff_t>((anchor + 1) % m), open.end());
    std::rotate(in_count.begin(), in_count.begin() + static_cast<std::ptrdiff_t>((anchor + 1) % m),
                in_count.end());

    std::vector<OpenSide> next_open;
    std::vector<int> next_count;
    std::size_t j = 0;
    while (j < m) {
      // A run of open sides joined at saturated vertices is covered by one tile.
      std::size_t c = 1;
      while (in_count[(j + c - 1) % m] == kVertexDegree - 1) ++c;
      const int end_count = in_count[(j + c - 1) % m];
      if (end_count != 1) throw InvariantError("tiling growth: unexpected vertex state");

      const std::size_t t = g.tiles.size();
      g.tiles.push_back(make_tile(t, kind, layer, g.layout));
      const Tile& tile = g.tiles.back();
      if (c >= tile.sides()) throw InvariantError("tiling growth: tile would be closed");
      for (std::size_t u = 0; u < c; ++u) {
        const OpenSide& in = open[(j + c - 1 - u) % m];
        g.edges.push_back({{in.tile, g.tiles[in.tile].side_legs[in.side]}, {t, tile.side_legs[u]}});
      }
      for (std::size_t u = c; u < tile.sides(); ++u) {
        next_open.push_back({t, u});
        next_count.push_back(u + 1 == tile.sides() ? end_count + 2 : 1);
      }
      j += c;
    }
    open = std::move(next_open);
    in_count = std::move(next_count);
  }

  for (const auto& s : open) g.boundary.push_back({s.tile, g.tiles[s.tile].side_legs[s.side]});
  for (const auto& t : g.tiles) {
    if (t.kind == TileKind::logical) g.bulk.push_back({t.id, t.bulk_leg});
  }
  validate_tiling(g);
  return g;
}

TileCounts counts(const TileGraph& g) {
  TileCounts c;
  c.n = g.boundary.size();
  c.k = g.bulk.size();
  c.rate = c.n == 0 ? 0.0 : static_cast<double>(c.k) / static_cast<double>(c.n);
  return c;
}

void validate_tiling(const TileGraph& g) {
  if (g.tiles.empty()) throw InvariantError("tiling has no tiles");
  if (g.tiles[0].layer != 0) throw InvariantError("central tile is not in layer 0");
  std::vector<std::vector<int>> uses(g.tiles.size());
  for (const auto& t : g.tiles) {
    if (t.id >= g.tiles.size() || &g.tiles[t.id] != &t) throw InvariantError("tile ids are not positional");
    uses[t.id].assign(t.legs, 0);
  }
  auto consume = [&](const LegRef& r, const char* what) {
    if (r.tile >= g.tiles.size() || r.leg >= g.tiles[r.tile].legs) {
      throw InvariantError(std::string(what) + " references a missing leg");
    }
    ++uses[r.tile][r.leg];
  };
  for (const auto& e : g.edges) {
    consume(e.inner, "edge");
    consume(e.outer, "edge");
    const auto la = g.tiles[e.inner.tile].layer;
    const auto lb = g.tiles[e.outer.tile].layer;
    if ((la > lb ? la - lb : lb - la) > 1) throw InvariantError("edge connects non-adjacent layers");
  }
  for (const auto& b : g.boundary) consume(b, "boundary");
  std::size_t logical = 0;
  for (const auto& t : g.tiles) {
    std::vector<bool> planar(t.legs, false);
    for (auto leg : t.side_legs) planar[leg] = true;
    for (std::size_t leg = 0; leg < t.legs; ++leg) {
      if (planar[leg] && uses[t.id][leg] != 1) {
        throw InvariantError("tile " + std::to_string(t.id) + " leg " + std::to_string(leg) +
                             " is consumed " + std::to_string(uses[t.id][leg]) + " times");
      }
      if (!planar[leg] && uses[t.id][leg] != 0) {
        throw InvariantError("tile " + std::to_string(t.id) + " bulk leg is contracted or open");
      }
    }
    if (t.kind == TileKind::logical) {
      if (planar[t.bulk_leg]) throw InvariantError("logical tile has no free bulk leg");
      if (logical >= g.bulk.size() || g.bulk[logical] != LegRef{t.id, t.bulk_leg}) {
        throw InvariantError("bulk leg list does not follow logical tiles");
      }
      ++logical;
    }
  }
  if (logical != g.bulk.size()) throw InvariantError("bulk leg list has extra entries");
}

std::string tiling_to_json(const TileGraph& g) {
  using nlohmann::json;
  json j;
  j["family"] = std::string(to_string(g.family));
  j["variant"] = std::string(to_string(g.variant));
  j["radius"] = g.radius;
  j["layout"] = {{"legs", g.layout.legs}, {"bulk_slot", g.layout.bulk_slot}};
  json tiles = json::array();
  for (const auto& t : g.tiles) {
    tiles.push_back({{"id", t.id},
                     {"kind", std::string(to_string(t.kind))},
                     {"layer", t.layer},
                     {"legs", t.legs},
                     {"bulk_leg", t.bulk_leg},
                     {"side_legs", t.side_legs}});
  }
  j["tiles"] = std::move(tiles);
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.inner.tile, e.inner.leg, e.outer.tile, e.outer.leg});
  j["edges"] = std::move(edges);
  auto refs = [](const std::vector<LegRef>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back({r.tile, r.leg});
    return a;
  };
  j["boundary"] = refs(g.boundary);
  j["bulk"] = refs(g.bulk);
  return j.dump();
}

TileGraph tiling_from_json(std::string_view text) {
  using nlohmann::json;
  TileGraph g;
  try {
    const json j = json::parse(text);
    g.family = parse_family(j.at("family").get<std::string>());
    g.variant = parse_variant(j.at("variant").get<std::string>());
    g.radius = j.at("radius").get<std::size_t>();
    g.layout.legs = j.at("layout").at("legs").get<std::size_t>();
    g.layout.bulk_slot = j.at("layout").at("bulk_slot").get<std::size_t>();
    for (const auto& jt : j.at("tiles")) {
      Tile t;
      t.id = jt.at("id").get<std::size_t>();
      t.kind = jt.at("kind").get<std::string>() == "logical" ? TileKind::logical : TileKind::blank;
      t.layer = jt.at("layer").get<std::size_t>();
      t.legs = jt.at("legs").get<std::size_t>();
      t.bulk_leg = jt.at("bulk_leg").get<std::size_t>();
      t.side_legs = jt.at("side_legs").get<std::vector<std::size_t>>();
      g.tiles.push_back(std::move(t));
    }
    for (const auto& je : j.at("edges")) {
      auto v = je.get<std::vector<std::size_t>>();
      if (v.size() != 4) throw ParseError("edge entries need 4 integers");
      g.edges.push_back({{v[0], v[1]}, {v[2], v[3]}});
    }
    auto read_refs = [](const json& a) {
      std::vector<LegRef> out;
      for (const auto& jr : a) {
        auto v = jr.get<std::vector<std::size_t>>();
        if (v.size() != 2) throw ParseError("leg references need 2 integers");
        out.push_back({v[0], v[1]});
      }
      return out;
    };
    g.boundary = read_refs(j.at("boundary"));
    g.bulk = read_refs(j.at("bulk"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("tiling JSON: ") + e.what());
  } catch (const UnsupportedError& e) {
    throw ParseError(std::string("tiling JSON: ") + e.what());
  }
  try {
    validate_tiling(g);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("tiling JSON: ") + e.what());
  }
  return g;
}

}  // namespace holocode
