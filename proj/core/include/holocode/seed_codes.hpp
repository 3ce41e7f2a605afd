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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "holocode/pauli.hpp"

namespace holocode {

/// Extended stabilizer state of a seed code on n + k legs.
///
/// Legs are stored in cyclic planar order; bulk legs sit at their printed slot
/// in that order. generators.size() == n + k.
struct SeedCode {
  std::string name;
  std::vector<std::string> leg_labels;
  std::vector<bool> bulk;
  std::vector<PauliVector> generators;

  std::size_t legs() const { return leg_labels.size(); }
  std::size_t k() const;
  std::size_t n() const { return legs() - k(); }
  /// Index of the first bulk leg, or legs() when there is none.
  std::size_t bulk_slot() const;
  bool css() const;
};

/// Steane tensor, legs (1,2,3,4,5,6,L,7).
SeedCode steane_tensor();
/// Surface-code fragment tensor, legs (1,2,3,4,L,5).
SeedCode scf_tensor();
/// [[5,1,3]] tensor, legs (1,2,3,4,L,5): cyclic shifts of XZZXI plus
/// X_L X^5 and Z_L Z^5.
SeedCode five_qubit_tensor();
/// Same generators with every bulk leg reflagged as planar.
SeedCode blank_tile(const SeedCode& seed);

/// Accepts "steane", "scf", "five-qubit" (alias "five_qubit").
SeedCode seed_by_name(std::string_view name);

/// Throws InvariantError unless the generators are n+k commuting,
/// independent operators on n+k legs with consistent labels.
void validate_seed(const SeedCode& seed);

/// True iff no nonzero group element is supported inside A.
/// Throws DimensionError when |A| > legs/2 or an index is out of range.
bool is_isometry(const SeedCode& seed, const std::vector<std::size_t>& A);
/// is_isometry for every contiguous cyclic block of size <= legs/2.
bool is_block_perfect(const SeedCode& seed);
/// is_isometry for every subset of size <= legs/2.
bool is_perfect(const SeedCode& seed);

// Text form: a header line `name n k leg_order bulk_flags` (leg_order comma
// separated, bulk_flags a 0/1 string), then the generators as a tableau.
void write_seed(std::ostream& out, const SeedCode& seed);
SeedCode read_seed(std::istream& in);

}  // namespace holocode
