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
#include <cstdint>

namespace holocode {

/// Philox4x32-10 counter-based generator: a keyed bijection on 128-bit
/// counters, so any (key, counter) pair can be evaluated independently.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Random stream identified by (seed, stream id, word): the seed is the key
/// and counter words 1..3 hold the stream and word; word 0 counts blocks.
/// Equal identifiers give equal streams on every platform.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t index);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter counter_;
  Philox4x32::Counter buffer_{};
  unsigned used_ = 4;
};

}  // namespace holocode
