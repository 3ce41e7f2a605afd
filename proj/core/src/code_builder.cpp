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

#include "holocode/code_builder.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "holocode/errors.hpp"
#include "json.hpp"

namespace holocode {

namespace {

// Column lookup for (tile, leg) pairs.
class LegIndex {
 public:
  static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);

  void set(const LegRef& r, std::size_t col) {
    if (r.tile >= cols_.size()) cols_.resize(r.tile + 1);
    auto& v = cols_[r.tile];
    if (r.leg >= v.size()) v.resize(r.leg + 1, kMissing);
    v[r.leg] = col;
  }
  std::size_t get(const LegRef& r) const {
    if (r.tile >= cols_.size() || r.leg >= cols_[r.tile].size()) return kMissing;
    return cols_[r.tile][r.leg];
  }

 private:
  std::vector<std::vector<std::size_t>> cols_;
};

void delete_column(NetworkState& st, std::size_t c) {
  const std::size_t last = st.legs.size() - 1;
  for (auto& g : st.generators) {
    if (c != last) {
      g.x().set(c, g.x().get(last));
      g.z().set(c, g.z().get(last));
    }
    g.x().resize(last);
    g.z().resize(last);
  }
  st.legs[c] = st.legs[last];
  st.legs.pop_back();
}

// Pauli weight of a * b without materializing the product.
std::size_t product_weight(const PauliVector& a, const PauliVector& b) {
  const auto ax = a.x().words();
  const auto az = a.z().words();
  const auto bx = b.x().words();
  const auto bz = b.z().words();
  std::size_t w = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount((ax[i] ^ bx[i]) | (az[i] ^ bz[i])));
  }
  return w;
}

void reduce_representative(PauliVector& rep, const std::vector<PauliVector>& stabilizers) {
  std::size_t w = rep.weight();
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& s : stabilizers) {
      const std::size_t w2 = product_weight(rep, s);
      if (w2 < w) {
        rep *= s;
        w = w2;
        improved = true;
      }
    }
  }
}

}  // namespace

std::size_t NetworkState::column_of(const LegRef& leg) const {
  for (std::size_t c = 0; c < legs.size(); ++c) {
    if (legs[c] == leg) return c;
  }
  throw DimensionError("leg (" + std::to_string(leg.tile) + "," + std::to_string(leg.leg) + ") is not open");
}

const SeedCode& SeedAssignment::for_kind(TileKind kind) const {
  if (kind == TileKind::logical) return logical;
  if (!blank) throw UnsupportedError("seed assignment has no blank seed");
  return *blank;
}

SeedAssignment SeedAssignment::from_logical(SeedCode logical) {
  SeedAssignment s;
  s.blank = blank_tile(logical);
  s.logical = std::move(logical);
  return s;
}

SeedAssignment default_seeds(Family family, RateVariant variant) {
  if (family == Family::heptagon) return SeedAssignment::from_logical(steane_tensor());
  if (variant == RateVariant::zero) return SeedAssignment::from_logical(five_qubit_tensor());
  return SeedAssignment::from_logical(scf_tensor());
}

NetworkState direct_sum(NetworkState a, const NetworkState& b) {
  const std::size_t la = a.legs.size();
  const std::size_t total = la + b.legs.size();
  for (auto& g : a.generators) {
    g.x().resize(total);
    g.z().resize(total);
  }
  for (const auto& g : b.generators) {
    PauliVector h(total);
    for (std::size_t i = g.x().find_first(); i != BitVec::npos; i = g.x().find_next(i)) h.x().set(la + i);
    for (std::size_t i = g.z().find_first(); i != BitVec::npos; i = g.z().find_next(i)) h.z().set(la + i);
    a.generators.push_back(std::move(h));
  }
  a.legs.insert(a.legs.end(), b.legs.begin(), b.legs.end());
  return a;
}

NetworkState tile_state(const SeedCode& seed, std::size_t tile_id) {
  NetworkState st;
  for (std::size_t leg = 0; leg < seed.legs(); ++leg) st.legs.push_back({tile_id, leg});
  st.generators = seed.generators;
  return st;
}

void contract_pair(NetworkState& st, std::size_t a, std::size_t b) {
  const std::size_t legs = st.legs.size();
  if (a == b || a >= legs || b >= legs) throw DimensionError("contract_pair: legs must be two distinct open columns");
  auto& gens = st.generators;
  // Keep combinations whose actions on a and b agree: first clear the x
  // mismatch, then the z mismatch.
  for (int part = 0; part < 2; ++part) {
    auto mismatch = [&](const PauliVector& g) {
      const BitVec& v = part == 0 ? g.x() : g.z();
      return v.get(a) != v.get(b);
    };
    auto pivot = std::find_if(gens.begin(), gens.end(), mismatch);
    if (pivot == gens.end()) continue;
    const PauliVector p = *pivot;
    gens.erase(pivot);
    for (auto& g : gens) {
      if (mismatch(g)) g *= p;
    }
  }
  const std::size_t hi = std::max(a, b);
  const std::size_t lo = std::min(a, b);
  delete_column(st, hi);
  delete_column(st, lo);
  if (gens.size() > st.legs.size()) {
    // The pair was already entangled with itself; drop the dependent rows.
    auto ech = rref(symplectic_matrix(gens));
    std::vector<PauliVector> kept;
    for (std::size_t r = 0; r < ech.rank; ++r) kept.push_back(PauliVector::from_symplectic(ech.reduced.row(r)));
    gens = std::move(kept);
  }
  if (gens.size() != st.legs.size()) {
    throw InvariantError("contract_pair: generator count " + std::to_string(gens.size()) +
                         " does not match open legs " + std::to_string(st.legs.size()));
  }
}

NetworkState network_state(const TileGraph& g, const SeedAssignment& seeds) {
  NetworkState st;
  LegIndex index;
  std::size_t next_edge = 0;
  for (const auto& tile : g.tiles) {
    const SeedCode& seed = seeds.for_kind(tile.kind);
    if (seed.legs() != tile.legs) {
      throw DimensionError("tile " + std::to_string(tile.id) + " has " + std::to_string(tile.legs) +
                           " legs but seed '" + seed.name + "' has " + std::to_string(seed.legs()));
    }
    if (tile.kind == TileKind::logical && (seed.k() != 1 || !seed.bulk[tile.bulk_leg])) {
      throw DimensionError("seed '" + seed.name + "' has no bulk leg at slot " + std::to_string(tile.bulk_leg));
    }
    if (tile.kind == TileKind::blank && seed.k() != 0) {
      throw DimensionError("blank tile needs a seed without bulk legs");
    }
    const std::size_t base = st.legs.size();
    st = direct_sum(std::move(st), tile_state(seed, tile.id));
    for (std::size_t leg = 0; leg < seed.legs(); ++leg) index.set({tile.id, leg}, base + leg);
    // Edges are stored in creation order, so this tile's inward edges are next.
    while (next_edge < g.edges.size() && g.edges[next_edge].outer.tile == tile.id) {
      const auto& e = g.edges[next_edge++];
      const std::size_t ca = index.get(e.inner);
      const std::size_t cb = index.get(e.outer);
      if (ca == LegIndex::kMissing || cb == LegIndex::kMissing) {
        throw InvariantError("edge references a leg that is not open");
      }
      contract_pair(st, ca, cb);
      index.set(e.inner, LegIndex::kMissing);
      index.set(e.outer, LegIndex::kMissing);
      for (std::size_t pos : {std::min(ca, cb), std::max(ca, cb)}) {
        if (pos < st.legs.size()) index.set(st.legs[pos], pos);
      }
    }
  }
  if (next_edge != g.edges.size()) throw InvariantError("tile graph edges are not in creation order");
  return st;
}

void validate_state(const NetworkState& state) {
  if (state.generators.size() != state.legs.size()) {
    throw InvariantError("state has " + std::to_string(state.generators.size()) + " generators on " +
                         std::to_string(state.legs.size()) + " legs");
  }
  if (!all_commute(state.generators)) throw InvariantError("state generators do not commute");
  if (!independent(state.generators)) throw InvariantError("state generators are dependent");
}

std::vector<PauliVector> HolographicCode::all_generators() const {
  std::vector<PauliVector> out = stabilizers;
  for (const auto& l : logicals) {
    out.push_back(l.x_rep);
    out.push_back(l.z_rep);
  }
  return out;
}

std::size_t HolographicCode::central_qubit() const {
  for (std::size_t i = 0; i < logicals.size(); ++i) {
    if (logicals[i].layer == 0) return i;
  }
  return 0;
}

HolographicCode extract_code(const NetworkState& state, const std::vector<LegRef>& boundary,
                             const std::vector<LegRef>& bulk, const ExtractOptions& options) {
  const std::size_t n = boundary.size();
  const std::size_t k = bulk.size();
  if (state.legs.size() != n + k || state.generators.size() != n + k) {
    throw DimensionError("extract_code: state does not match boundary plus bulk legs");
  }
  // Target position of every state column: bulk parts first, then boundary.
  LegIndex index;
  for (std::size_t c = 0; c < state.legs.size(); ++c) index.set(state.legs[c], c);
  std::vector<std::size_t> boundary_cols(n);
  std::vector<std::size_t> bulk_cols(k);
  for (std::size_t q = 0; q < n; ++q) {
    boundary_cols[q] = index.get(boundary[q]);
    if (boundary_cols[q] == LegIndex::kMissing) throw DimensionError("boundary leg is not open in the state");
  }
  for (std::size_t i = 0; i < k; ++i) {
    bulk_cols[i] = index.get(bulk[i]);
    if (bulk_cols[i] == LegIndex::kMissing) throw DimensionError("bulk leg is not open in the state");
  }

  const std::size_t width = 2 * k + 2 * n;
  Gf2Matrix m(0, width);
  for (const auto& g : state.generators) {
    BitVec row(width);
    for (std::size_t i = 0; i < k; ++i) {
      row.set(2 * i, g.x().get(bulk_cols[i]));
      row.set(2 * i + 1, g.z().get(bulk_cols[i]));
    }
    for (std::size_t q = 0; q < n; ++q) {
      row.set(2 * k + q, g.x().get(boundary_cols[q]));
      row.set(2 * k + n + q, g.z().get(boundary_cols[q]));
    }
    m.append_row(std::move(row));
  }
  auto ech = rref_prefix(std::move(m), 2 * k);
  if (ech.rank != 2 * k) {
    throw InvariantError("not an isometry: only " + std::to_string(ech.rank) + " of " + std::to_string(2 * k) +
                         " bulk operators have boundary representatives");
  }
  auto boundary_part = [&](std::size_t r) {
    const BitVec& row = ech.reduced.row(r);
    return PauliVector(row.slice(2 * k, n), row.slice(2 * k + n, n));
  };

  HolographicCode code;
  code.n = n;
  for (std::size_t r = 2 * k; r < ech.reduced.rows(); ++r) code.stabilizers.push_back(boundary_part(r));
  // With full rank on the prefix, pivot row r carries exactly bulk bit r.
  for (std::size_t i = 0; i < k; ++i) {
    LogicalQubit l;
    l.id = i;
    l.tile = bulk[i].tile;
    l.x_rep = boundary_part(2 * i);
    l.z_rep = boundary_part(2 * i + 1);
    if (options.reduce_weight) {
      reduce_representative(l.x_rep, code.stabilizers);
      reduce_representative(l.z_rep, code.stabilizers);
    }
    code.logicals.push_back(std::move(l));
  }
  code.css = std::all_of(code.stabilizers.begin(), code.stabilizers.end(),
                         [](const PauliVector& s) { return s.is_x_type() || s.is_z_type(); });
  return code;
}

HolographicCode build_code(Family family, std::size_t radius, RateVariant variant,
                           std::optional<SeedAssignment> seeds, const ExtractOptions& options) {
  TileGraph g = build_tiling(family, radius, variant, std::nullopt);
  SeedAssignment s = seeds ? *seeds : default_seeds(family, variant);
  NetworkState st = network_state(g, s);
  HolographicCode code = extract_code(st, g.boundary, g.bulk, options);
  for (auto& l : code.logicals) l.layer = g.tiles[l.tile].layer;
  code.metadata.family = std::string(to_string(family));
  code.metadata.variant = std::string(to_string(variant));
  code.metadata.radius = radius;
  code.metadata.seed = s.logical.name;
  code.tiling = std::move(g);
  code.seeds = std::move(s);
  validate_code(code);
  return code;
}

HolographicCode single_tile_code(const SeedCode& seed) {
  NetworkState st = tile_state(seed, 0);
  std::vector<LegRef> boundary;
  std::vector<LegRef> bulk;
  for (std::size_t leg = 0; leg < seed.legs(); ++leg) (seed.bulk[leg] ? bulk : boundary).push_back({0, leg});
  // Representatives stay exactly as the seed's extended logical rows.
  HolographicCode code = extract_code(st, boundary, bulk, ExtractOptions{false});
  code.metadata.seed = seed.name;
  code.metadata.radius = 1;
  validate_code(code);
  return code;
}

void validate_code(const HolographicCode& code) {
  const std::size_t n = code.n;
  const std::size_t k = code.k();
  if (code.stabilizers.size() + k != n) {
    throw InvariantError("code has " + std::to_string(code.stabilizers.size()) + " stabilizers, expected " +
                         std::to_string(n - std::min(n, k)));
  }
  const auto all = code.all_generators();
  for (const auto& g : all) {
    if (g.size() != n) throw InvariantError("generator length differs from n");
  }
  if (!all_commute(code.stabilizers)) throw InvariantError("stabilizers do not commute");
  if (!independent(all)) throw InvariantError("stabilizers and logical representatives are dependent");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& li = code.logicals[i];
    if (!symplectic_product(li.x_rep, li.z_rep)) {
      throw InvariantError("logical " + std::to_string(i) + ": X and Z representatives commute");
    }
    for (const auto& s : code.stabilizers) {
      if (symplectic_product(li.x_rep, s) || symplectic_product(li.z_rep, s)) {
        throw InvariantError("logical " + std::to_string(i) + " anticommutes with a stabilizer");
      }
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& lj = code.logicals[j];
      if (symplectic_product(li.x_rep, lj.x_rep) || symplectic_product(li.x_rep, lj.z_rep) ||
          symplectic_product(li.z_rep, lj.x_rep) || symplectic_product(li.z_rep, lj.z_rep)) {
        throw InvariantError("logicals " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      }
    }
  }
  const bool css = std::all_of(code.stabilizers.begin(), code.stabilizers.end(),
                               [](const PauliVector& s) { return s.is_x_type() || s.is_z_type(); });
  if (css != code.css) throw InvariantError("css flag does not match the stabilizers");
}

CssSplit css_split(const HolographicCode& code) {
  if (!code.css) throw NotCssError("code is not CSS");
  CssSplit out;
  out.sx = Gf2Matrix(0, code.n);
  out.sz = Gf2Matrix(0, code.n);
  for (const auto& s : code.stabilizers) {
    if (s.is_identity()) continue;
    if (s.is_x_type()) {
      out.sx.append_row(s.x());
    } else {
      out.sz.append_row(s.z());
    }
  }
  for (const auto& l : code.logicals) {
    if (!l.x_rep.is_x_type() || !l.z_rep.is_z_type()) {
      throw NotCssError("logical representatives are not of pure X or Z type");
    }
    out.x_logicals.push_back(l.x_rep.x());
    out.z_logicals.push_back(l.z_rep.z());
  }
  return out;
}

void save_code(const HolographicCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write code file '" + path + "'");
  out << "# holocode " << code.metadata.family << ' ' << code.metadata.variant << " R=" << code.metadata.radius
      << " n=" << code.n << " k=" << code.k() << '\n';
  out << "# stabilizers: " << code.stabilizers.size() << '\n';
  write_tableau(out, code.stabilizers);
  out << "# logical representatives: X then Z per qubit\n";
  for (const auto& l : code.logicals) {
    out << l.x_rep.to_string() << '\n' << l.z_rep.to_string() << '\n';
  }
  if (!out) throw ParseError("failed writing code file '" + path + "'");

  nlohmann::json meta;
  meta["family"] = code.metadata.family;
  meta["variant"] = code.metadata.variant;
  meta["radius"] = code.metadata.radius;
  meta["seed"] = code.metadata.seed;
  meta["n"] = code.n;
  meta["k"] = code.k();
  meta["css"] = code.css;
  nlohmann::json logicals = nlohmann::json::array();
  for (const auto& l : code.logicals) logicals.push_back({{"id", l.id}, {"tile", l.tile}, {"layer", l.layer}});
  meta["logicals"] = std::move(logicals);
  if (code.tiling) meta["tiling"] = nlohmann::json::parse(tiling_to_json(*code.tiling));
  std::ofstream mout(path + ".json");
  if (!mout) throw ParseError("cannot write metadata file '" + path + ".json'");
  mout << meta.dump(2) << '\n';
}

HolographicCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read code file '" + path + "'");
  const auto ops = read_tableau(in);
  std::ifstream min(path + ".json");
  if (!min) throw ParseError("cannot read metadata file '" + path + ".json'");
  HolographicCode code;
  try {
    const auto meta = nlohmann::json::parse(min);
    code.n = meta.at("n").get<std::size_t>();
    const auto k = meta.at("k").get<std::size_t>();
    code.css = meta.at("css").get<bool>();
    code.metadata.family = meta.value("family", "");
    code.metadata.variant = meta.value("variant", "");
    code.metadata.radius = meta.value("radius", std::size_t{0});
    code.metadata.seed = meta.value("seed", "");
    if (ops.size() != code.n + k) throw ParseError("code file has " + std::to_string(ops.size()) + " operators, expected n + k");
    const std::size_t nstab = code.n - k;
    code.stabilizers.assign(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(nstab));
    const auto& jl = meta.at("logicals");
    if (jl.size() != k) throw ParseError("metadata logical list does not have k entries");
    for (std::size_t i = 0; i < k; ++i) {
      LogicalQubit l;
      l.id = jl[i].at("id").get<std::size_t>();
      l.tile = jl[i].at("tile").get<std::size_t>();
      l.layer = jl[i].at("layer").get<std::size_t>();
      l.x_rep = ops[nstab + 2 * i];
      l.z_rep = ops[nstab + 2 * i + 1];
      code.logicals.push_back(std::move(l));
    }
    if (meta.contains("tiling")) {
      code.tiling = tiling_from_json(meta.at("tiling").dump());
      code.seeds = SeedAssignment::from_logical(seed_by_name(code.metadata.seed));
      if (code.tiling->boundary.size() != code.n) throw ParseError("tiling boundary does not match n");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("code metadata: ") + e.what());
  }
  for (const auto& op : ops) {
    if (op.size() != code.n) throw ParseError("code file operators do not act on n qubits");
  }
  try {
    validate_code(code);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("code file fails validation: ") + e.what());
  }
  return code;
}

}  // namespace holocode
