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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holocode {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bits past size() are always zero, so word-level popcount and comparisons
/// never see garbage.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVec from_string(std::string_view bits);

  static constexpr std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void clear();

  /// Grows or shrinks; new bits are zero.
  void resize(std::size_t size);

  std::size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Index of the lowest set bit, or npos.
  std::size_t find_first() const;
  /// Index of the lowest set bit strictly after `i`, or npos.
  std::size_t find_next(std::size_t i) const;

  /// Parity of the bitwise AND (GF(2) inner product).
  bool dot(const BitVec& other) const;
  /// popcount(this AND other).
  std::size_t and_count(const BitVec& other) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool operator==(const BitVec& other) const = default;
  /// Lexicographic order on bit index 0, 1, 2, ... with 0 < 1.
  bool lex_less(const BitVec& other) const;

  /// Concatenation [this | tail].
  BitVec concat(const BitVec& tail) const;
  BitVec slice(std::size_t begin, std::size_t count) const;

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace holocode
