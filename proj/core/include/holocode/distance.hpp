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
#include <string_view>
#include <utility>
#include <vector>

#include "holocode/code_builder.hpp"
#include "holocode/decoder.hpp"
#include "holocode/pauli.hpp"

namespace holocode {

/// x and z range over X-type (Z-type) logical operators of a CSS code and
/// count set bits. pauli ranges over every nontrivial logical action and
/// counts non-identity qubits.
enum class DistanceSector { x, z, pauli };

std::string_view to_string(DistanceSector s);
DistanceSector parse_distance_sector(std::string_view s);

struct DistanceOptions {
  SolverKind solver = SolverKind::automatic;
  /// Budget for one branch-and-bound distance problem.
  double timeout_seconds = 3600.0;
};

/// lower <= distance <= upper; lower == upper whenever certified.
struct DistanceBound {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool certified = false;
  /// A logical operator of weight `upper`.
  PauliVector witness;

  std::size_t value() const { return upper; }
};

struct DistanceResult {
  std::size_t qubit = 0;
  DistanceSector sector = DistanceSector::pauli;
  DistanceBound bit;
  DistanceBound word;
};

/// Lowest weight of a logical operator acting nontrivially on qubit i (in the
/// given sector) and trivially on every other logical qubit.
DistanceBound bit_distance(const HolographicCode& code, std::size_t qubit, DistanceSector sector,
                           const DistanceOptions& options = {});

/// As bit_distance, but the operator may also act on other logical qubits.
DistanceBound word_distance(const HolographicCode& code, std::size_t qubit, DistanceSector sector,
                            const DistanceOptions& options = {});

/// Both distances of one qubit in one sector.
DistanceResult qubit_distance(const HolographicCode& code, std::size_t qubit, DistanceSector sector,
                              const DistanceOptions& options = {});

/// Default sector policy: CSS codes are solved per sector and the smaller
/// result is reported; other codes use the pauli sector.
DistanceResult qubit_distance(const HolographicCode& code, std::size_t qubit, const DistanceOptions& options = {});

/// qubit_distance for each listed qubit, spread over `threads` workers. Each
/// problem runs on one thread; output order follows `qubits`. Without a
/// sector the default policy applies.
std::vector<DistanceResult> qubit_distances(const HolographicCode& code, const std::vector<std::size_t>& qubits,
                                            const DistanceOptions& options = {}, std::size_t threads = 1,
                                            std::optional<DistanceSector> sector = std::nullopt);

struct ScalingFit {
  /// d ~ exp(intercept) * n^exponent.
  double exponent = 0.0;
  double intercept = 0.0;
  /// Half width of the confidence interval on the exponent.
  double half_width = 0.0;
  double confidence = 0.95;
  std::size_t points = 0;
};

/// Least squares fit of log d against log n with a Student-t interval on the
/// slope. Throws DimensionError for fewer than 3 points, non-positive values or
/// a single distinct n.
ScalingFit fit_distance_scaling(const std::vector<std::pair<double, double>>& points, double confidence = 0.95);

}  // namespace holocode
