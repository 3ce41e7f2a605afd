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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "holocode/code_builder.hpp"
#include "holocode/decoder.hpp"
#include "holocode/pauli.hpp"
#include "holocode/rng.hpp"

namespace holocode {

/// Uniform support of size a; each supported qubit gets X, Y or Z with
/// probability 1/3. Throws DimensionError when a > n.
PauliVector sample_fixed_weight_error(std::size_t n, std::size_t a, CounterRng& rng);

/// Failure tally at one error weight. sigma = sqrt(P (1 - P) / m).
struct WeightRecord {
  std::size_t a = 0;
  std::size_t m = 0;
  std::size_t f = 0;
  double p = 0.0;
  double sigma = 0.0;
  /// Trials whose decode did not certify within the solver limits; these are
  /// already counted in f.
  std::size_t timeouts = 0;
  /// Set for weights filled by interpolation rather than sampled (m == 0).
  bool filled = false;
};

WeightRecord make_record(std::size_t a, std::size_t m, std::size_t f, std::size_t timeouts = 0);

/// Stream id for the trial generator, derived from the code metadata.
std::uint32_t code_stream_id(const HolographicCode& code);

struct TrialContext {
  const Decoder* decoder = nullptr;
  const LogicalAnalyzer* analyzer = nullptr;
  std::size_t target = 0;
  std::uint64_t seed = 0;
  std::uint32_t stream = 0;
  std::size_t threads = 1;
};

/// m trials at weight a. Trial t draws its error from CounterRng(seed,
/// stream, (a << 32) | t), so the record depends only on the inputs and not on
/// the thread count. A trial fails when the net error acts on the target.
WeightRecord run_trials(const TrialContext& ctx, std::size_t a, std::size_t m);

/// Convenience form building its own decoder and analyzer.
WeightRecord run_trials(const HolographicCode& code, std::size_t target, std::size_t a, std::size_t m,
                        std::uint64_t seed, std::size_t threads = 1);

struct FailureCurve {
  std::string family;
  std::string variant;
  std::size_t radius = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t target = 0;
  /// Sampled records in increasing a.
  std::vector<WeightRecord> records;

  std::size_t timeouts() const;
};

/// One record per weight 0..n: sampled records as given, P(0) = 0 when
/// unsampled, gaps filled by linear interpolation between the neighbouring
/// sampled weights and flat beyond the last one. Filled sigma is interpolated
/// the same way.
std::vector<WeightRecord> complete_records(const FailureCurve& curve);

struct MixedPoint {
  double p = 0.0;
  double value = 0.0;
  /// Per-weight sigma combined in quadrature with the binomial weights.
  double sigma = 0.0;
};

/// Σ_a C(n,a) p^a (1-p)^(n-a) P(a) over a complete table (records[a].a == a
/// for a = 0..n). Throws DimensionError for p outside [0, 1] or an
/// incomplete table.
MixedPoint binomial_mix(const std::vector<WeightRecord>& records, double p);

struct Crossing {
  std::size_t radius_a = 0;
  std::size_t radius_b = 0;
  double p = 0.0;
};

using CurveFunction = std::function<MixedPoint(double)>;

/// Crossing of two curves on (lo, hi). A grid scan finds where the difference
/// leaves one sign, either changing sign or becoming exactly zero for the rest
/// of the interval, and bisection refines it. The first transition between
/// grid points where the curves differ by more than their combined sigma is
/// preferred, falling back to the first transition. Throws NoCrossingError
/// when there is none, for example for identical curves.
double find_crossing(const CurveFunction& a, const CurveFunction& b, double lo = 0.0, double hi = 0.5);

/// find_crossing of the binomially mixed curves of two complete tables.
double find_crossing(const std::vector<WeightRecord>& a, const std::vector<WeightRecord>& b, double lo = 0.0,
                     double hi = 0.5);

struct ThresholdEstimate {
  double p_th = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Crossing> pairs;
};

/// Mean crossing over adjacent radius pairs (curves sorted by radius) and the
/// min/max bracket. Needs at least two distinct radii.
ThresholdEstimate estimate_threshold(std::vector<FailureCurve> curves);

/// Which weights to sample.
struct WeightSchedule {
  enum class Kind { all, automatic, list };
  Kind kind = Kind::automatic;
  std::vector<std::size_t> weights;

  /// "all", "auto" or a comma separated list such as "0,1,2,5".
  static WeightSchedule parse(std::string_view s);
};

struct SimulationConfig {
  WeightSchedule schedule;
  std::size_t trials_per_weight = 1000;
  std::uint64_t seed = 1;
  std::size_t target = 0;
  std::size_t threads = 1;
  DecoderOptions decoder;
  /// automatic schedules sample every weight up to this n.
  std::size_t full_schedule_max_n = 50;
};

/// Runs the schedule. For automatic schedules with n above
/// full_schedule_max_n, a pilot pass over a coarse grid locates the weights
/// with 0.02 < P < 0.98 and those are sampled densely.
FailureCurve simulate(const HolographicCode& code, const SimulationConfig& config);

/// Weights the automatic schedule samples for a code of n qubits given pilot
/// estimates at the coarse grid weights.
std::vector<std::size_t> coarse_weight_grid(std::size_t n);
std::vector<std::size_t> refine_weight_grid(std::size_t n, const std::vector<WeightRecord>& pilot);

/// CSV columns: family, variant, R, n, k, target, a, m, f, P, sigma, timeouts.
/// Doubles use 17 significant digits so values read back exactly.
void write_curve_csv(std::ostream& out, const FailureCurve& curve, bool header = true);
void write_curve_csv(const std::string& path, const FailureCurve& curve);
/// Throws ParseError on malformed rows or rows from more than one curve.
FailureCurve read_curve_csv(std::istream& in);
FailureCurve read_curve_csv(const std::string& path);

}  // namespace holocode
