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
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holocode/bitvec.hpp"

namespace holocode {

/// Dense row-major matrix over GF(2); each row is a packed BitVec.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static Gf2Matrix identity(std::size_t n);
  /// All rows must have length `cols`.
  static Gf2Matrix from_rows(std::vector<BitVec> rows, std::size_t cols);
  /// Rows given as '0'/'1' strings, e.g. {"110", "011"}.
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVec>& row_data() const { return rows_; }

  void append_row(BitVec row);
  BitVec column(std::size_t c) const;

  /// M·x for a column vector x of length cols().
  BitVec operator*(const BitVec& x) const;
  Gf2Matrix operator*(const Gf2Matrix& other) const;
  Gf2Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Gf2Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RowEchelon {
  Gf2Matrix reduced;
  std::size_t rank = 0;
  /// pivots[i] is the pivot column of row i, for i < rank.
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Nonzero rows come first.
RowEchelon rref(Gf2Matrix m);

/// Gauss-Jordan restricted to pivot columns [0, col_limit). Rows past the rank
/// are zero on those columns; the remaining columns are carried along.
RowEchelon rref_prefix(Gf2Matrix m, std::size_t col_limit);

std::size_t rank(const Gf2Matrix& m);

/// Any x with M·x = y, or nullopt when y is outside the column space.
std::optional<BitVec> solve(const Gf2Matrix& m, const BitVec& y);

/// F with S·F = I. Throws NoRightInverse when S lacks full row rank.
Gf2Matrix right_inverse(const Gf2Matrix& s);

/// Basis of {x : M·x = 0}; its size is cols - rank.
std::vector<BitVec> kernel(const Gf2Matrix& m);

/// Row-space decomposition with a precomputed elimination.
///
/// Given generator rows g_0..g_{k-1}, finds coefficients c with
/// Σ c_j g_j = v. Preprocessing is one elimination; each query costs
/// O(k · words).
class RowSpaceSolver {
 public:
  RowSpaceSolver() = default;
  explicit RowSpaceSolver(const std::vector<BitVec>& generators);

  std::size_t generator_count() const { return num_generators_; }
  std::size_t rank() const { return reduced_.size(); }

  /// Coefficients over the original generators, or nullopt when v is not in
  /// the span.
  std::optional<BitVec> decompose(const BitVec& v) const;
  bool contains(const BitVec& v) const;

 private:
  std::size_t num_generators_ = 0;
  std::size_t width_ = 0;
  std::vector<BitVec> reduced_;     // echelon rows
  std::vector<BitVec> transforms_;  // combination of generators per reduced row
  std::vector<std::size_t> pivots_;
};

}  // namespace holocode
