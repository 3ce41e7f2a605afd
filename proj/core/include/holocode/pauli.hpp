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

#include "holocode/bitvec.hpp"
#include "holocode/gf2.hpp"

namespace holocode {

/// Phase-free n-qubit Pauli operator X^x Z^z.
class PauliVector {
 public:
  PauliVector() = default;
  explicit PauliVector(std::size_t n) : x_(n), z_(n) {}
  PauliVector(BitVec x, BitVec z);

  /// Parses characters from {I, X, Y, Z} (also '_' for I).
  static PauliVector from_string(std::string_view s);
  /// Splits a 2n-bit [x | z] vector.
  static PauliVector from_symplectic(const BitVec& xz);

  std::size_t size() const { return x_.size(); }

  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  BitVec& x() { return x_; }
  BitVec& z() { return z_; }

  /// 0 = I, 1 = X, 2 = Z, 3 = Y (bit 0 is x, bit 1 is z).
  unsigned get(std::size_t q) const { return (x_.get(q) ? 1U : 0U) | (z_.get(q) ? 2U : 0U); }
  void set(std::size_t q, unsigned code) {
    x_.set(q, (code & 1U) != 0);
    z_.set(q, (code & 2U) != 0);
  }
  char char_at(std::size_t q) const;

  /// Number of qubits acted on non-trivially.
  std::size_t weight() const;
  /// popcount(x) + popcount(z).
  std::size_t sector_weight() const { return x_.popcount() + z_.popcount(); }
  bool is_identity() const { return x_.none() && z_.none(); }

  bool is_x_type() const { return z_.none(); }
  bool is_z_type() const { return x_.none(); }

  /// [x | z] as a single 2n-bit vector.
  BitVec to_symplectic() const { return x_.concat(z_); }

  PauliVector& operator*=(const PauliVector& other);
  friend PauliVector operator*(PauliVector a, const PauliVector& b) { return a *= b; }
  bool operator==(const PauliVector& other) const = default;

  /// Keeps the listed qubits, in order.
  PauliVector restrict_to(const std::vector<std::size_t>& qubits) const;

  std::string to_string() const;

 private:
  BitVec x_;
  BitVec z_;
};

/// (a.x·b.z + a.z·b.x) mod 2; zero iff a and b commute.
bool symplectic_product(const PauliVector& a, const PauliVector& b);

/// Rows [x | z] for each operator. Rank of this matrix is the GF(2) rank
/// of the generated group.
Gf2Matrix symplectic_matrix(const std::vector<PauliVector>& ops);

/// Rows [z | x], so that check·[e.x | e.z] is the symplectic syndrome.
Gf2Matrix check_matrix(const std::vector<PauliVector>& stabilizers);

/// Syndrome bit j is symplectic_product(stabilizers[j], e).
BitVec syndrome(const std::vector<PauliVector>& stabilizers, const PauliVector& e);

bool all_commute(const std::vector<PauliVector>& ops);
bool independent(const std::vector<PauliVector>& ops);

// Tableau text format: one operator per line over {I,X,Y,Z}; blank lines and
// lines starting with '#' are ignored. All lines must have equal length.
std::vector<PauliVector> parse_tableau(std::string_view text);
std::vector<PauliVector> read_tableau(std::istream& in);
void write_tableau(std::ostream& out, const std::vector<PauliVector>& ops);

}  // namespace holocode
