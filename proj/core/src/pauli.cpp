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

#include "holocode/pauli.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "holocode/errors.hpp"

namespace holocode {

PauliVector::PauliVector(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw DimensionError("Pauli x and z parts differ in length");
}

PauliVector PauliVector::from_string(std::string_view s) {
  PauliVector p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set(i, 1);
        break;
      case 'Z':
        p.set(i, 2);
        break;
      case 'Y':
        p.set(i, 3);
        break;
      default:
        throw ParseError(std::string("invalid Pauli character '") + s[i] + "'");
    }
  }
  return p;
}

PauliVector PauliVector::from_symplectic(const BitVec& xz) {
  if (xz.size() % 2 != 0) throw DimensionError("symplectic vector has odd length");
  const std::size_t n = xz.size() / 2;
  return PauliVector(xz.slice(0, n), xz.slice(n, n));
}

char PauliVector::char_at(std::size_t q) const {
  static constexpr char kChars[] = {'I', 'X', 'Z', 'Y'};
  return kChars[get(q)];
}

std::size_t PauliVector::weight() const { return (x_ | z_).popcount(); }

PauliVector& PauliVector::operator*=(const PauliVector& other) {
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

PauliVector PauliVector::restrict_to(const std::vector<std::size_t>& qubits) const {
  PauliVector out(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) out.set(i, get(qubits[i]));
  return out;
}

std::string PauliVector::to_string() const {
  std::string s(size(), 'I');
  for (std::size_t i = 0; i < size(); ++i) s[i] = char_at(i);
  return s;
}

bool symplectic_product(const PauliVector& a, const PauliVector& b) {
  if (a.size() != b.size()) throw DimensionError("symplectic product of operators with different qubit counts");
  return a.x().dot(b.z()) != a.z().dot(b.x());
}

Gf2Matrix symplectic_matrix(const std::vector<PauliVector>& ops) {
  const std::size_t n = ops.empty() ? 0 : ops.front().size();
  Gf2Matrix m(0, 2 * n);
  for (const auto& p : ops) m.append_row(p.to_symplectic());
  return m;
}

Gf2Matrix check_matrix(const std::vector<PauliVector>& stabilizers) {
  const std::size_t n = stabilizers.empty() ? 0 : stabilizers.front().size();
  Gf2Matrix m(0, 2 * n);
  for (const auto& p : stabilizers) m.append_row(p.z().concat(p.x()));
  return m;
}

BitVec syndrome(const std::vector<PauliVector>& stabilizers, const PauliVector& e) {
  BitVec y(stabilizers.size());
  for (std::size_t j = 0; j < stabilizers.size(); ++j) {
    if (symplectic_product(stabilizers[j], e)) y.set(j);
  }
  return y;
}

bool all_commute(const std::vector<PauliVector>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (symplectic_product(ops[i], ops[j])) return false;
    }
  }
  return true;
}

bool independent(const std::vector<PauliVector>& ops) {
  return rank(symplectic_matrix(ops)) == ops.size();
}

std::vector<PauliVector> parse_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_tableau(in);
}

std::vector<PauliVector> read_tableau(std::istream& in) {
  std::vector<PauliVector> ops;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string_view body(line.data() + first, last - first + 1);
    try {
      ops.push_back(PauliVector::from_string(body));
    } catch (const ParseError& e) {
      throw ParseError("tableau line " + std::to_string(lineno) + ": " + e.what());
    }
    if (ops.back().size() != ops.front().size()) {
      throw ParseError("tableau line " + std::to_string(lineno) + ": length " +
                       std::to_string(ops.back().size()) + " differs from " +
                       std::to_string(ops.front().size()));
    }
  }
  return ops;
}

void write_tableau(std::ostream& out, const std::vector<PauliVector>& ops) {
  for (const auto& p : ops) out << p.to_string() << '\n';
}

}  // namespace holocode
