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

#include "holocode/gf2.hpp"

#include <utility>

#include "holocode/errors.hpp"

namespace holocode {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("matrix row has wrong length");
  }
  Gf2Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVec> data;
  std::size_t cols = 0;
  for (auto s : rows) {
    data.push_back(BitVec::from_string(s));
    cols = s.size();
  }
  return from_rows(std::move(data), cols);
}

void Gf2Matrix::append_row(BitVec row) {
  if (row.size() != cols_) throw DimensionError("appended row has wrong length");
  rows_.push_back(std::move(row));
}

BitVec Gf2Matrix::column(std::size_t c) const {
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].get(c)) out.set(r);
  }
  return out;
}

BitVec Gf2Matrix::operator*(const BitVec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(x)) out.set(r);
  }
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& other) const {
  if (cols_ != other.rows()) throw DimensionError("matrix-matrix size mismatch");
  Gf2Matrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    const BitVec& a = rows_[r];
    BitVec& dst = out.rows_[r];
    for (std::size_t k = a.find_first(); k != BitVec::npos; k = a.find_next(k)) dst ^= other.rows_[k];
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    const BitVec& a = rows_[r];
    for (std::size_t c = a.find_first(); c != BitVec::npos; c = a.find_next(c)) out.set(c, r);
  }
  return out;
}

bool Gf2Matrix::is_zero() const {
  for (const auto& r : rows_) {
    if (r.any()) return false;
  }
  return true;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

namespace {

// Gauss-Jordan elimination that mirrors every row operation onto `track`
// (when non-null). Returns pivot columns; rows [0, rank) are the pivots.
std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t cols,
                                   std::vector<BitVec>* track) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].get(c)) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[found], rows[next]);
    if (track != nullptr) std::swap((*track)[found], (*track)[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        if (track != nullptr) (*track)[r] ^= (*track)[next];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(Gf2Matrix m) {
  std::vector<BitVec> rows = m.row_data();
  auto pivots = eliminate(rows, m.cols(), nullptr);
  RowEchelon out;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  out.reduced = Gf2Matrix::from_rows(std::move(rows), m.cols());
  return out;
}

RowEchelon rref_prefix(Gf2Matrix m, std::size_t col_limit) {
  if (col_limit > m.cols()) throw DimensionError("rref_prefix: column limit exceeds width");
  std::vector<BitVec> rows = m.row_data();
  auto pivots = eliminate(rows, col_limit, nullptr);
  RowEchelon out;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  out.reduced = Gf2Matrix::from_rows(std::move(rows), m.cols());
  return out;
}

std::size_t rank(const Gf2Matrix& m) { return rref(m).rank; }

std::optional<BitVec> solve(const Gf2Matrix& m, const BitVec& y) {
  if (y.size() != m.rows()) throw DimensionError("solve: right-hand side length != rows");
  std::vector<BitVec> rows = m.row_data();
  // Carry y as a one-column tracked matrix.
  std::vector<BitVec> rhs(m.rows(), BitVec(1));
  for (std::size_t r = 0; r < m.rows(); ++r) rhs[r].set(0, y.get(r));
  auto pivots = eliminate(rows, m.cols(), &rhs);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rhs[r].get(0)) return std::nullopt;
  }
  BitVec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], rhs[i].get(0));
  return x;
}

Gf2Matrix right_inverse(const Gf2Matrix& s) {
  std::vector<BitVec> rows = s.row_data();
  std::vector<BitVec> transform = Gf2Matrix::identity(s.rows()).row_data();
  auto pivots = eliminate(rows, s.cols(), &transform);
  if (pivots.size() != s.rows()) {
    throw NoRightInverse("no right inverse: parity-check rows are linearly dependent (rank " +
                         std::to_string(pivots.size()) + " < " + std::to_string(s.rows()) + ")");
  }
  // T·S = R with R in RREF. F[p_i][j] = T[i][j] solves S·F = I.
  Gf2Matrix f(s.cols(), s.rows());
  for (std::size_t i = 0; i < pivots.size(); ++i) f.row(pivots[i]) = transform[i];
  return f;
}

std::vector<BitVec> kernel(const Gf2Matrix& m) {
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < ech.rank; ++i) {
      if (ech.reduced.get(i, f)) v.set(ech.pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RowSpaceSolver::RowSpaceSolver(const std::vector<BitVec>& generators)
    : num_generators_(generators.size()) {
  if (generators.empty()) return;
  width_ = generators.front().size();
  std::vector<BitVec> rows = generators;
  std::vector<BitVec> track = Gf2Matrix::identity(generators.size()).row_data();
  pivots_ = eliminate(rows, width_, &track);
  rows.resize(pivots_.size());
  track.resize(pivots_.size());
  reduced_ = std::move(rows);
  transforms_ = std::move(track);
}

std::optional<BitVec> RowSpaceSolver::decompose(const BitVec& v) const {
  BitVec coeffs(num_generators_);
  if (num_generators_ == 0) {
    if (v.any()) return std::nullopt;
    return coeffs;
  }
  if (v.size() != width_) throw DimensionError("decompose: vector length mismatch");
  BitVec residual = v;
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (residual.get(pivots_[i])) {
      residual ^= reduced_[i];
      coeffs ^= transforms_[i];
    }
  }
  if (residual.any()) return std::nullopt;
  return coeffs;
}

bool RowSpaceSolver::contains(const BitVec& v) const { return decompose(v).has_value(); }

}  // namespace holocode
