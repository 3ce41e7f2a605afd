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


#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "holocode/code_builder.hpp"
#include "holocode/decoder.hpp"
#include "holocode/distance.hpp"
#include "holocode/gf2.hpp"
#include "holocode/sim_harness.hpp"

namespace holocode {
namespace {

PauliVector random_error(std::size_t n, std::size_t a, std::uint64_t index) {
  CounterRng rng(1, 0, index);
  return sample_fixed_weight_error(n, a, rng);
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Gf2Matrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c) m.set(r, c, (rng() & 1U) != 0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(64)->Arg(256)->Arg(1024);

void BM_BuildCode(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_code(Family::heptagon, r, RateVariant::max).n);
}
BENCHMARK(BM_BuildCode)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// One CSS sector of heptagon R=2: 25 generators on 42 bits.
void BM_BranchAndBound(benchmark::State& state) {
  const auto code = build_code(Family::heptagon, 2, RateVariant::max);
  const auto split = css_split(code);
  DecodeProblem p;
  p.generators = split.sz.row_data();
  p.num_stabilizers = p.generators.size();
  for (const auto& l : split.z_logicals) p.generators.push_back(l);
  std::uint64_t i = 0;
  for (auto _ : state) {
    p.target = random_error(code.n, static_cast<std::size_t>(state.range(0)), i++).z();
    benchmark::DoNotOptimize(min_weight_coset(p).weight);
  }
}
BENCHMARK(BM_BranchAndBound)->Arg(4)->Arg(12)->Unit(benchmark::kMicrosecond);

void decode_benchmark(benchmark::State& state, Family f, RateVariant v, SolverKind solver) {
  auto code = std::make_shared<const HolographicCode>(build_code(f, static_cast<std::size_t>(state.range(0)), v));
  DecoderOptions o;
  o.solver = solver;
  const Decoder decoder(code, o);
  const std::size_t a = code->n / 10;
  std::uint64_t i = 0;
  for (auto _ : state) {
    const BitVec s = decoder.syndrome_of(random_error(code->n, a, i++));
    benchmark::DoNotOptimize(decoder.decode(s).correction);
  }
}

void BM_DecodeNetworkHeptagon(benchmark::State& state) {
  decode_benchmark(state, Family::heptagon, RateVariant::max, SolverKind::network);
}
BENCHMARK(BM_DecodeNetworkHeptagon)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_DecodeNetworkZeroRate(benchmark::State& state) {
  decode_benchmark(state, Family::pentagon, RateVariant::zero, SolverKind::network);
}
BENCHMARK(BM_DecodeNetworkZeroRate)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_DecodeBnbHeptagon(benchmark::State& state) {
  decode_benchmark(state, Family::heptagon, RateVariant::max, SolverKind::branch_and_bound);
}
BENCHMARK(BM_DecodeBnbHeptagon)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_CentralDistance(benchmark::State& state) {
  const auto code = build_code(Family::heptagon, static_cast<std::size_t>(state.range(0)), RateVariant::max);
  for (auto _ : state) benchmark::DoNotOptimize(qubit_distance(code, code.central_qubit()).bit.upper);
}
BENCHMARK(BM_CentralDistance)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Trials(benchmark::State& state) {
  auto code = std::make_shared<const HolographicCode>(build_code(Family::heptagon, 3, RateVariant::max));
  const Decoder decoder(code);
  const LogicalAnalyzer analyzer(*code);
  const TrialContext ctx{&decoder, &analyzer, code->central_qubit(), 1, code_stream_id(*code), 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(ctx, 15, 100).f);
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_Trials)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace holocode

BENCHMARK_MAIN();
