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
#include <vector>

#include "holocode/gf2.hpp"
#include "holocode/pauli.hpp"
#include "holocode/seed_codes.hpp"
#include "holocode/tiling.hpp"

namespace holocode {

/// Stabilizer state on a set of open legs. Column c of every generator acts on
/// legs[c]; generators.size() == legs.size() for a full state.
struct NetworkState {
  std::vector<LegRef> legs;
  std::vector<PauliVector> generators;

  std::size_t column_of(const LegRef& leg) const;
};

/// Seeds placed on logical and blank tiles. The blank seed defaults to
/// blank_tile(logical).
struct SeedAssignment {
  SeedCode logical;
  std::optional<SeedCode> blank;

  const SeedCode& for_kind(TileKind kind) const;
  static SeedAssignment from_logical(SeedCode logical);
};

/// Default seed per family and variant: Steane for heptagons, the surface-code
/// fragment for pentagon max/reduced, the five-qubit code for pentagon zero.
SeedAssignment default_seeds(Family family, RateVariant variant);

/// Direct sum of two states on disjoint legs.
NetworkState direct_sum(NetworkState a, const NetworkState& b);
/// State of a single tile with its legs labelled (tile, leg).
NetworkState tile_state(const SeedCode& seed, std::size_t tile_id);

/// Projects columns a and b onto the Bell pair stabilized by XX and ZZ and
/// removes both. The generator count drops by exactly 2. Columns are removed
/// by moving the last columns into their slots.
void contract_pair(NetworkState& state, std::size_t col_a, std::size_t col_b);

/// Contracts the whole tile graph, adding tiles in id order and contracting
/// each new tile's edges as soon as it is placed.
NetworkState network_state(const TileGraph& g, const SeedAssignment& seeds);

/// Throws InvariantError unless generators commute, are independent and match
/// the open-leg count.
void validate_state(const NetworkState& state);

struct LogicalQubit {
  std::size_t id = 0;
  std::size_t tile = 0;
  std::size_t layer = 0;
  PauliVector x_rep;
  PauliVector z_rep;
};

struct CodeMetadata {
  std::string family;
  std::string variant;
  std::size_t radius = 0;
  std::string seed;
};

struct HolographicCode {
  std::size_t n = 0;
  std::vector<PauliVector> stabilizers;
  std::vector<LogicalQubit> logicals;
  bool css = false;
  CodeMetadata metadata;
  /// Present for codes built from a tiling; enables the network solver.
  std::optional<TileGraph> tiling;
  std::optional<SeedAssignment> seeds;

  std::size_t k() const { return logicals.size(); }
  /// Stabilizers, then X and Z representatives of each logical in order.
  std::vector<PauliVector> all_generators() const;
  /// Index of the logical on the central tile (layer 0), or 0.
  std::size_t central_qubit() const;
};

struct ExtractOptions {
  /// Multiply logical representatives by stabilizers while that lowers weight.
  bool reduce_weight = true;
};

/// Stabilizers are the state elements trivial on every bulk leg; logical
/// representatives are the elements acting as a single X or Z on one bulk
/// leg. Boundary qubit q is the leg boundary[q]. Throws InvariantError("not an
/// isometry") when some bulk operator has no representative.
HolographicCode extract_code(const NetworkState& state, const std::vector<LegRef>& boundary,
                             const std::vector<LegRef>& bulk, const ExtractOptions& options = {});

/// Tiling, contraction and extraction in one step. The result keeps the tiling
/// and seeds.
HolographicCode build_code(Family family, std::size_t radius, RateVariant variant,
                           std::optional<SeedAssignment> seeds = std::nullopt,
                           const ExtractOptions& options = {});

/// Code of a single seed tile: legs in seed order with bulk legs removed.
HolographicCode single_tile_code(const SeedCode& seed);

/// Throws InvariantError when any HolographicCode invariant fails.
void validate_code(const HolographicCode& code);

struct CssSplit {
  /// x-parts of X-type stabilizers; detects Z errors.
  Gf2Matrix sx;
  /// z-parts of Z-type stabilizers; detects X errors.
  Gf2Matrix sz;
  std::vector<BitVec> x_logicals;
  std::vector<BitVec> z_logicals;
};

/// Throws NotCssError for non-CSS codes.
CssSplit css_split(const HolographicCode& code);

// Code files: `path` holds the tableau (stabilizers, then X and Z
// representatives per logical); `path.json` holds metadata.
void save_code(const HolographicCode& code, const std::string& path);
HolographicCode load_code(const std::string& path);

}  // namespace holocode
