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

#include "holocode/seed_codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "holocode/errors.hpp"

namespace holocode {

std::size_t SeedCode::k() const {
  return static_cast<std::size_t>(std::count(bulk.begin(), bulk.end(), true));
}

std::size_t SeedCode::bulk_slot() const {
  for (std::size_t i = 0; i < bulk.size(); ++i) {
    if (bulk[i]) return i;
  }
  return legs();
}

bool SeedCode::css() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const PauliVector& g) { return g.is_x_type() || g.is_z_type(); });
}

namespace {

SeedCode make_seed(std::string name, std::vector<std::string> labels,
                   std::initializer_list<std::string_view> rows) {
  SeedCode s;
  s.name = std::move(name);
  s.leg_labels = std::move(labels);
  s.bulk.assign(s.leg_labels.size(), false);
  for (std::size_t i = 0; i < s.leg_labels.size(); ++i) s.bulk[i] = s.leg_labels[i] == "L";
  for (auto r : rows) s.generators.push_back(PauliVector::from_string(r));
  validate_seed(s);
  return s;
}

}  // namespace

SeedCode steane_tensor() {
  return make_seed("steane", {"1", "2", "3", "4", "5", "6", "L", "7"},
                   {
                       "XXIIIXIX",
                       "IXXXIIIX",
                       "IIIXXXIX",
                       "ZZIIIZIZ",
                       "IZZZIIIZ",
                       "IIIZZZIZ",
                       "XXXXXXXX",
                       "ZZZZZZZZ",
                   });
}

SeedCode scf_tensor() {
  return make_seed("scf", {"1", "2", "3", "4", "L", "5"},
                   {
                       "XXIXII",
                       "IIXXIX",
                       "ZIZZII",
                       "IZIZIZ",
                       "XIXIXI",
                       "IIZIZZ",
                   });
}

SeedCode five_qubit_tensor() {
  // Legs 1-4, L, 5: the code qubit pattern is spliced around the L slot.
  return make_seed("five-qubit", {"1", "2", "3", "4", "L", "5"},
                   {
                       "XZZXII",
                       "IXZZIX",
                       "XIXZIZ",
                       "ZXIXIZ",
                       "XXXXXX",
                       "ZZZZZZ",
                   });
}

SeedCode blank_tile(const SeedCode& seed) {
  if (seed.k() == 0) throw DimensionError("blank_tile needs a seed with a bulk leg");
  SeedCode out = seed;
  out.name = seed.name + "-blank";
  out.bulk.assign(out.legs(), false);
  return out;
}

SeedCode seed_by_name(std::string_view name) {
  if (name == "steane") return steane_tensor();
  if (name == "scf") return scf_tensor();
  if (name == "five-qubit" || name == "five_qubit") return five_qubit_tensor();
  throw UnsupportedError("unknown seed code '" + std::string(name) + "'");
}

void validate_seed(const SeedCode& seed) {
  const std::size_t m = seed.legs();
  if (seed.bulk.size() != m) throw InvariantError(seed.name + ": bulk flags do not match leg count");
  if (seed.generators.size() != m) {
    throw InvariantError(seed.name + ": expected " + std::to_string(m) + " generators, got " +
                         std::to_string(seed.generators.size()));
  }
  for (const auto& g : seed.generators) {
    if (g.size() != m) throw InvariantError(seed.name + ": generator length differs from leg count");
  }
  if (!all_commute(seed.generators)) throw InvariantError(seed.name + ": generators do not commute");
  if (!independent(seed.generators)) throw InvariantError(seed.name + ": generators are dependent");
}

bool is_isometry(const SeedCode& seed, const std::vector<std::size_t>& A) {
  const std::size_t m = seed.legs();
  if (2 * A.size() > m) {
    throw DimensionError("is_isometry: input block of size " + std::to_string(A.size()) +
                         " exceeds half of " + std::to_string(m) + " legs");
  }
  std::vector<bool> in_a(m, false);
  for (auto a : A) {
    if (a >= m) throw DimensionError("is_isometry: leg index out of range");
    in_a[a] = true;
  }
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < m; ++i) {
    if (!in_a[i]) complement.push_back(i);
  }
  // The subgroup inside A is trivial iff restriction to the complement is
  // injective on the generated group.
  std::vector<PauliVector> restricted;
  restricted.reserve(seed.generators.size());
  for (const auto& g : seed.generators) restricted.push_back(g.restrict_to(complement));
  return rank(symplectic_matrix(restricted)) == seed.generators.size();
}

bool is_block_perfect(const SeedCode& seed) {
  const std::size_t m = seed.legs();
  for (std::size_t len = 1; 2 * len <= m; ++len) {
    for (std::size_t start = 0; start < m; ++start) {
      std::vector<std::size_t> block;
      for (std::size_t j = 0; j < len; ++j) block.push_back((start + j) % m);
      if (!is_isometry(seed, block)) return false;
    }
  }
  return true;
}

bool is_perfect(const SeedCode& seed) {
  const std::size_t m = seed.legs();
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    if (2 * static_cast<std::size_t>(std::popcount(mask)) > m) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) subset.push_back(i);
    }
    if (!is_isometry(seed, subset)) return false;
  }
  return true;
}

void write_seed(std::ostream& out, const SeedCode& seed) {
  out << seed.name << ' ' << seed.n() << ' ' << seed.k() << ' ';
  for (std::size_t i = 0; i < seed.legs(); ++i) out << (i ? "," : "") << seed.leg_labels[i];
  out << ' ';
  for (bool b : seed.bulk) out << (b ? '1' : '0');
  out << '\n';
  write_tableau(out, seed.generators);
}

SeedCode read_seed(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') break;
    line.clear();
  }
  if (line.empty()) throw ParseError("seed file: missing header line");
  std::istringstream header(line);
  SeedCode s;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string order;
  std::string flags;
  if (!(header >> s.name >> n >> k >> order >> flags)) {
    throw ParseError("seed file: header must be `name n k leg_order bulk_flags`");
  }
  std::stringstream labels(order);
  for (std::string label; std::getline(labels, label, ',');) s.leg_labels.push_back(label);
  if (flags.size() != s.leg_labels.size() || s.leg_labels.size() != n + k) {
    throw ParseError("seed file: leg_order, bulk_flags and n + k disagree");
  }
  for (char c : flags) {
    if (c != '0' && c != '1') throw ParseError("seed file: bulk_flags must be a 0/1 string");
    s.bulk.push_back(c == '1');
  }
  if (s.k() != k) throw ParseError("seed file: bulk_flags do not contain k bulk legs");
  s.generators = read_tableau(in);
  try {
    validate_seed(s);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("seed file: ") + e.what());
  }
  return s;
}

}  // namespace holocode
