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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "holocode/code_builder.hpp"
#include "holocode/tiling.hpp"

namespace holocode {

/// Which part of the stabilizer group the solver ranges over. For x and z the
/// per-leg value is that bit of the operator (CSS seeds only); for symplectic
/// it is x | z << 1, matching PauliVector::get.
enum class Sector { x, z, symplectic };

/// Exact minimum-cost search over the group of boundary operators generated by
/// a tile network.
///
/// Every element of the contracted group is a choice of one group element per
/// tile such that both ends of each contracted edge carry the same value. The
/// total cost is a sum of per-boundary-qubit costs, so the minimum is found by
/// min-sum variable elimination over the edge values. The elimination order is
/// fixed at construction; solve() is exact and deterministic.
class NetworkModel {
 public:
  static constexpr std::int32_t kInfinity = 1 << 28;

  /// Throws NotCssError for x/z sectors on non-CSS seeds and UnsupportedError
  /// when the largest intermediate table exceeds max_table_entries.
  NetworkModel(const TileGraph& g, const SeedAssignment& seeds, Sector sector,
               std::size_t max_table_entries = std::size_t{1} << 26);

  Sector sector() const { return sector_; }
  unsigned domain() const { return domain_; }
  std::size_t boundary_size() const { return num_boundary_; }
  std::size_t bulk_size() const { return num_bulk_; }
  /// Entries in the largest intermediate table.
  std::size_t max_table_entries() const { return max_table_; }

  struct Solution {
    bool feasible = false;
    std::int64_t cost = 0;
    /// Per boundary qubit value of the chosen group element.
    std::vector<std::uint8_t> boundary;
    /// Per bulk leg value of the chosen group element.
    std::vector<std::uint8_t> bulk;
  };

  /// costs[q][v] is the cost of value v on boundary qubit q (only the first
  /// domain() entries are read). bulk_allowed[i] is a bitmask of the values
  /// permitted on bulk leg i. Ties resolve to the first minimum in a fixed
  /// enumeration order.
  Solution solve(const std::vector<std::array<std::int32_t, 4>>& costs,
                 const std::vector<std::uint8_t>& bulk_allowed) const;

 private:
  struct TileTerm {
    // Edge variables of this tile's factor, in factor digit order.
    std::vector<std::size_t> vars;
    // Per group element: factor index, bulk value (or 0xff), boundary values.
    std::vector<std::uint32_t> element_index;
    std::vector<std::uint8_t> element_bulk;
    std::vector<std::uint8_t> element_boundary;  // elements x boundary legs
    std::vector<std::size_t> boundary_qubits;
    std::size_t bulk_index = static_cast<std::size_t>(-1);
  };

  struct Step {
    std::size_t var = 0;
    std::vector<std::size_t> inputs;  // factor ids
    std::vector<std::size_t> scope;   // output scope, digit order
    // strides[f][j]: stride of scope digit j in input f; last entry is the
    // stride of the eliminated variable.
    std::vector<std::vector<std::size_t>> strides;
    std::size_t output = 0;  // factor id
  };

  Sector sector_;
  unsigned domain_ = 2;
  std::size_t num_boundary_ = 0;
  std::size_t num_bulk_ = 0;
  std::size_t num_vars_ = 0;
  std::size_t num_factors_ = 0;
  std::size_t max_table_ = 1;
  std::vector<TileTerm> tiles_;
  std::vector<Step> steps_;
  std::vector<std::size_t> scalar_factors_;
};

}  // namespace holocode
