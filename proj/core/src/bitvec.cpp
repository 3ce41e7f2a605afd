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

#include "holocode/bitvec.hpp"

#include <algorithm>

#include "holocode/errors.hpp"

namespace holocode {

namespace {

void require_same_size(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("bit-vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

BitVec BitVec::from_string(std::string_view bits) {
  BitVec out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

void BitVec::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

void BitVec::resize(std::size_t size) {
  if (size < size_ && size % kWordBits != 0 && word_count(size) > 0) {
    // Zero the tail so the padding invariant survives a shrink.
    words_.resize(word_count(size));
    words_.back() &= (Word{1} << (size % kWordBits)) - 1;
  } else {
    words_.resize(word_count(size), 0);
  }
  size_ = size;
}

std::size_t BitVec::popcount() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVec::find_first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return npos;
}

std::size_t BitVec::find_next(std::size_t i) const {
  std::size_t start = i + 1;
  if (start >= size_) return npos;
  std::size_t w = start / kWordBits;
  Word cur = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w >= words_.size()) return npos;
    cur = words_[w];
  }
}

bool BitVec::dot(const BitVec& other) const {
  require_same_size(*this, other);
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVec::and_count(const BitVec& other) const {
  require_same_size(*this, other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

bool BitVec::lex_less(const BitVec& other) const {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const Word diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      const Word lowest = diff & (~diff + 1);
      return (other.words_[w] & lowest) != 0;
    }
  }
  return false;
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(size_ + tail.size_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  for (std::size_t i = tail.find_first(); i != npos; i = tail.find_next(i)) out.set(size_ + i);
  return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t count) const {
  if (begin + count > size_) throw DimensionError("slice out of range");
  BitVec out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (get(begin + i)) out.set(i);
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace holocode
