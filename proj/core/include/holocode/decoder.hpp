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
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "holocode/code_builder.hpp"
#include "holocode/gf2.hpp"
#include "holocode/network_solver.hpp"
#include "holocode/pauli.hpp"

namespace holocode {

/// hamming counts set bits; pauli counts qubits where x or z is set (only
/// meaningful for [x | z] vectors).
enum class Objective { hamming, pauli };
enum class DecodeMode { css, symplectic };
/// automatic uses the network solver when the code carries a tiling.
enum class SolverKind { automatic, branch_and_bound, network };

std::string_view to_string(Objective o);
std::string_view to_string(DecodeMode m);
Objective parse_objective(std::string_view s);
DecodeMode parse_mode(std::string_view s);
SolverKind parse_solver(std::string_view s);

struct SolverLimits {
  double timeout_seconds = 60.0;
};

/// Minimize weight(target + Σ λ_j generators[j]) over all λ.
struct DecodeProblem {
  BitVec target;
  std::vector<BitVec> generators;
  /// generators[0, num_stabilizers) are stabilizer rows, the rest logical rows.
  std::size_t num_stabilizers = 0;
  Objective objective = Objective::hamming;
  /// Vectors are [x | z] of even length; required for the pauli objective.
  bool symplectic = false;
};

struct Correction {
  BitVec vector;
  std::size_t weight = 0;
  /// Coefficients over stabilizer rows and logical rows.
  BitVec lambda;
  BitVec mu;
  /// Weight proven minimal.
  bool certified = false;
  /// Coefficients are the lexicographically smallest among minimum-weight
  /// choices (stabilizer coefficients first, in row order).
  bool lex_minimal = false;
  std::size_t nodes = 0;
};

std::size_t objective_weight(const BitVec& v, Objective objective, bool symplectic);

/// e = F·y. Throws DimensionError on shape mismatch.
BitVec pure_error(const Gf2Matrix& F, const BitVec& y);

/// Depth-first branch and bound over the coefficients.
///
/// The first pass orders generators by overlap with the residual and bounds
/// by the residual weight on positions no remaining generator touches. The
/// second pass fixes coefficients in row order, keeping 0 whenever some
/// optimum allows it. On timeout the best incumbent is returned uncertified.
Correction min_weight_coset(const DecodeProblem& problem, const SolverLimits& limits = {});

struct DecoderOptions {
  /// Defaults to css for CSS codes and symplectic otherwise.
  std::optional<DecodeMode> mode;
  Objective objective = Objective::pauli;
  SolverKind solver = SolverKind::automatic;
  SolverLimits limits;
  /// Fill Correction::lambda / mu; the network solver needs an extra
  /// decomposition for this.
  bool coefficients = false;
};

struct DecodeResult {
  PauliVector correction;
  bool certified = true;
  bool timed_out = false;
  /// One entry per decoded sector: (Z errors, X errors) in css mode, a single
  /// joint entry in symplectic mode.
  std::vector<Correction> sectors;
};

/// Minimum-weight decoding against the stabilizers and logical
/// representatives of a code. Syndrome bit j is the commutation of the error
/// with code.stabilizers[j]. Immutable after construction; decode() may be
/// called concurrently.
class Decoder {
 public:
  Decoder(std::shared_ptr<const HolographicCode> code, DecoderOptions options = {});

  const HolographicCode& code() const { return *code_; }
  DecodeMode mode() const { return mode_; }
  const DecoderOptions& options() const { return options_; }
  bool uses_network() const { return !models_.empty(); }

  BitVec syndrome_of(const PauliVector& error) const;
  DecodeResult decode(const BitVec& syndrome) const;

 private:
  struct SectorData {
    std::vector<std::size_t> checks;  // stabilizer indices read from the syndrome
    Gf2Matrix isf_columns;            // row j is column j of the right inverse
    std::vector<BitVec> generators;   // stabilizer rows then logical rows
    std::size_t num_stabilizers = 0;
    std::unique_ptr<RowSpaceSolver> decomposer;
  };

  Correction solve_sector(std::size_t s, const BitVec& target) const;

  std::shared_ptr<const HolographicCode> code_;
  DecoderOptions options_;
  DecodeMode mode_;
  std::vector<SectorData> sectors_;
  std::vector<std::unique_ptr<NetworkModel>> models_;
};

/// Effect of an operator on the encoded qubits. detectable is set when the
/// operator has a nonzero syndrome; otherwise effect[i] is 0 (I), 1 (X),
/// 2 (Z) or 3 (Y) for logical qubit i.
struct LogicalEffect {
  bool detectable = false;
  std::vector<unsigned> effect;
  bool trivial() const;
};

/// Decomposes operators over stabilizers and logical representatives with a
/// precomputed elimination.
class LogicalAnalyzer {
 public:
  explicit LogicalAnalyzer(const HolographicCode& code);
  LogicalEffect effect(const PauliVector& v) const;

 private:
  std::vector<PauliVector> stabilizers_;
  std::size_t k_ = 0;
  RowSpaceSolver decomposer_;
};

/// One-shot form of LogicalAnalyzer::effect.
LogicalEffect net_logical_effect(const HolographicCode& code, const PauliVector& v);

}  // namespace holocode
