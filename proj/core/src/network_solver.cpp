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

#include "holocode/network_solver.hpp"

#include <algorithm>
#include <set>

#include "holocode/errors.hpp"

namespace holocode {

namespace {

constexpr std::uint8_t kNoBulk = 0xff;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int32_t add_sat(std::int32_t a, std::int32_t b) {
  const std::int64_t s = static_cast<std::int64_t>(a) + b;
  return s >= NetworkModel::kInfinity ? NetworkModel::kInfinity : static_cast<std::int32_t>(s);
}

// Per-leg values of every element of the seed's group in the given sector.
std::vector<std::vector<std::uint8_t>> sector_elements(const SeedCode& seed, Sector sector) {
  std::vector<std::vector<std::uint8_t>> gens;
  for (const auto& g : seed.generators) {
    std::vector<std::uint8_t> v(seed.legs());
    bool keep = true;
    for (std::size_t leg = 0; leg < seed.legs(); ++leg) {
      switch (sector) {
        case Sector::x:
          keep = keep && g.is_x_type();
          v[leg] = g.x().get(leg) ? 1 : 0;
          break;
        case Sector::z:
          keep = keep && g.is_z_type();
          v[leg] = g.z().get(leg) ? 1 : 0;
          break;
        case Sector::symplectic:
          v[leg] = static_cast<std::uint8_t>(g.get(leg));
          break;
      }
    }
    if (keep) gens.push_back(std::move(v));
  }
  std::vector<std::vector<std::uint8_t>> elements;
  const std::size_t count = std::size_t{1} << gens.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint8_t> v(seed.legs(), 0);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if ((mask >> j) & 1U) {
        for (std::size_t leg = 0; leg < v.size(); ++leg) v[leg] ^= gens[j][leg];
      }
    }
    elements.push_back(std::move(v));
  }
  return elements;
}

}  // namespace

NetworkModel::NetworkModel(const TileGraph& g, const SeedAssignment& seeds, Sector sector,
                           std::size_t max_table_entries)
    : sector_(sector), domain_(sector == Sector::symplectic ? 4 : 2) {
  num_boundary_ = g.boundary.size();
  num_bulk_ = g.bulk.size();
  num_vars_ = g.edges.size();
  const std::size_t T = g.tiles.size();

  // Per tile: leg -> (edge var | boundary qubit | bulk index).
  std::vector<std::vector<std::size_t>> leg_var(T), leg_qubit(T), leg_bulk(T);
  for (const auto& t : g.tiles) {
    leg_var[t.id].assign(t.legs, kNone);
    leg_qubit[t.id].assign(t.legs, kNone);
    leg_bulk[t.id].assign(t.legs, kNone);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    leg_var[g.edges[e].inner.tile][g.edges[e].inner.leg] = e;
    leg_var[g.edges[e].outer.tile][g.edges[e].outer.leg] = e;
  }
  for (std::size_t q = 0; q < g.boundary.size(); ++q) leg_qubit[g.boundary[q].tile][g.boundary[q].leg] = q;
  for (std::size_t i = 0; i < g.bulk.size(); ++i) leg_bulk[g.bulk[i].tile][g.bulk[i].leg] = i;

  std::vector<std::vector<std::size_t>> scopes;
  tiles_.resize(T);
  for (const auto& t : g.tiles) {
    const SeedCode& seed = seeds.for_kind(t.kind);
    if (seed.legs() != t.legs) throw DimensionError("network model: seed leg count differs from tile");
    if (sector != Sector::symplectic && !seed.css()) {
      throw NotCssError("network model: sector " + std::string(sector == Sector::x ? "x" : "z") +
                        " needs CSS seeds, '" + seed.name + "' is not CSS");
    }
    TileTerm& term = tiles_[t.id];
    std::vector<std::size_t> var_legs;   // leg for each factor digit
    std::vector<std::size_t> qubit_legs;
    std::size_t bulk_leg = kNone;
    for (std::size_t leg = 0; leg < t.legs; ++leg) {
      if (leg_var[t.id][leg] != kNone) {
        var_legs.push_back(leg);
      } else if (leg_qubit[t.id][leg] != kNone) {
        qubit_legs.push_back(leg);
        term.boundary_qubits.push_back(leg_qubit[t.id][leg]);
      } else if (leg_bulk[t.id][leg] != kNone) {
        bulk_leg = leg;
        term.bulk_index = leg_bulk[t.id][leg];
      }
    }
    std::sort(var_legs.begin(), var_legs.end(),
              [&](std::size_t a, std::size_t b) { return leg_var[t.id][a] < leg_var[t.id][b]; });
    for (auto leg : var_legs) term.vars.push_back(leg_var[t.id][leg]);

    for (const auto& el : sector_elements(seed, sector)) {
      std::uint32_t idx = 0;
      std::uint32_t stride = 1;
      for (auto leg : var_legs) {
        idx += el[leg] * stride;
        stride *= domain_;
      }
      term.element_index.push_back(idx);
      term.element_bulk.push_back(bulk_leg == kNone ? kNoBulk : el[bulk_leg]);
      for (auto leg : qubit_legs) term.element_boundary.push_back(el[leg]);
    }
    scopes.push_back(term.vars);
    max_table_ = std::max(max_table_, ipow(domain_, term.vars.size()));
  }

  // Greedy elimination: smallest resulting scope first, ties by variable id.
  std::vector<bool> alive(scopes.size(), true);
  std::vector<bool> eliminated(num_vars_, false);
  std::vector<std::vector<std::size_t>> var_factors(num_vars_);
  for (std::size_t f = 0; f < scopes.size(); ++f) {
    for (auto v : scopes[f]) var_factors[v].push_back(f);
  }
  auto union_scope = [&](std::size_t v) {
    std::set<std::size_t> u;
    for (auto f : var_factors[v]) u.insert(scopes[f].begin(), scopes[f].end());
    u.erase(v);
    return u;
  };
  for (std::size_t done = 0; done < num_vars_; ++done) {
    std::size_t best_var = kNone;
    std::size_t best_size = kNone;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (eliminated[v]) continue;
      const std::size_t size = union_scope(v).size();
      if (size < best_size) {
        best_size = size;
        best_var = v;
      }
    }
    Step step;
    step.var = best_var;
    step.inputs = var_factors[best_var];
    std::sort(step.inputs.begin(), step.inputs.end());
    const auto u = union_scope(best_var);
    step.scope.assign(u.begin(), u.end());
    for (auto f : step.inputs) {
      alive[f] = false;
      std::vector<std::size_t> s(step.scope.size() + 1, 0);
      for (std::size_t p = 0; p < scopes[f].size(); ++p) {
        const std::size_t stride = ipow(domain_, p);
        if (scopes[f][p] == best_var) {
          s.back() = stride;
        } else {
          const auto pos = static_cast<std::size_t>(
              std::lower_bound(step.scope.begin(), step.scope.end(), scopes[f][p]) - step.scope.begin());
          s[pos] = stride;
        }
      }
      step.strides.push_back(std::move(s));
    }
    step.output = scopes.size();
    for (auto var : step.scope) {
      auto& vf = var_factors[var];
      vf.erase(std::remove_if(vf.begin(), vf.end(), [&](std::size_t f) { return !alive[f]; }), vf.end());
      vf.push_back(step.output);
    }
    var_factors[best_var].clear();
    scopes.push_back(step.scope);
    alive.push_back(true);
    eliminated[best_var] = true;
    max_table_ = std::max(max_table_, ipow(domain_, step.scope.size() + 1));
    if (max_table_ > max_table_entries) {
      throw UnsupportedError("network model: elimination needs a table of " + std::to_string(max_table_) +
                             " entries, above the limit of " + std::to_string(max_table_entries));
    }
    steps_.push_back(std::move(step));
  }
  num_factors_ = scopes.size();
  for (std::size_t f = 0; f < scopes.size(); ++f) {
    if (alive[f]) scalar_factors_.push_back(f);
  }
}

NetworkModel::Solution NetworkModel::solve(const std::vector<std::array<std::int32_t, 4>>& costs,
                                           const std::vector<std::uint8_t>& bulk_allowed) const {
  if (costs.size() != num_boundary_) throw DimensionError("network solve: one cost row per boundary qubit");
  if (bulk_allowed.size() != num_bulk_) throw DimensionError("network solve: one mask per bulk leg");
  const std::size_t D = domain_;

  auto element_allowed = [&](const TileTerm& t, std::size_t e) {
    return t.element_bulk[e] == kNoBulk || ((bulk_allowed[t.bulk_index] >> t.element_bulk[e]) & 1U) != 0;
  };
  auto element_cost = [&](const TileTerm& t, std::size_t e) {
    std::int32_t c = 0;
    const std::size_t nb = t.boundary_qubits.size();
    for (std::size_t j = 0; j < nb; ++j) c = add_sat(c, costs[t.boundary_qubits[j]][t.element_boundary[e * nb + j]]);
    return c;
  };

  std::vector<std::vector<std::int32_t>> tables(num_factors_);
  for (std::size_t ti = 0; ti < tiles_.size(); ++ti) {
    const TileTerm& t = tiles_[ti];
    auto& tab = tables[ti];
    tab.assign(ipow(D, t.vars.size()), kInfinity);
    for (std::size_t e = 0; e < t.element_index.size(); ++e) {
      if (!element_allowed(t, e)) continue;
      tab[t.element_index[e]] = std::min(tab[t.element_index[e]], element_cost(t, e));
    }
  }

  std::vector<std::vector<std::uint8_t>> argmins(steps_.size());
  for (std::size_t si = 0; si < steps_.size(); ++si) {
    const Step& st = steps_[si];
    const std::size_t nscope = st.scope.size();
    const std::size_t nin = st.inputs.size();
    const std::size_t out_size = ipow(D, nscope);
    auto& out = tables[st.output];
    out.assign(out_size, kInfinity);
    auto& arg = argmins[si];
    arg.assign(out_size, 0);
    std::vector<std::size_t> digits(nscope, 0);
    std::vector<std::size_t> base(nin, 0);
    for (std::size_t o = 0; o < out_size; ++o) {
      std::int32_t best = kInfinity;
      std::uint8_t best_v = 0;
      for (std::size_t v = 0; v < D; ++v) {
        std::int32_t sum = 0;
        for (std::size_t f = 0; f < nin && sum < kInfinity; ++f) {
          sum = add_sat(sum, tables[st.inputs[f]][base[f] + v * st.strides[f][nscope]]);
        }
        if (sum < best) {
          best = sum;
          best_v = static_cast<std::uint8_t>(v);
        }
      }
      out[o] = best;
      arg[o] = best_v;
      // Odometer over the output scope, digit 0 fastest.
      for (std::size_t j = 0; j < nscope; ++j) {
        if (++digits[j] < D) {
          for (std::size_t f = 0; f < nin; ++f) base[f] += st.strides[f][j];
          break;
        }
        digits[j] = 0;
        for (std::size_t f = 0; f < nin; ++f) base[f] -= (D - 1) * st.strides[f][j];
      }
    }
    for (auto f : st.inputs) std::vector<std::int32_t>().swap(tables[f]);
  }

  Solution sol;
  std::int32_t total = 0;
  for (auto f : scalar_factors_) total = add_sat(total, tables[f][0]);
  if (total >= kInfinity) return sol;
  sol.feasible = true;
  sol.cost = total;

  std::vector<std::uint8_t> value(num_vars_, 0);
  for (std::size_t si = steps_.size(); si-- > 0;) {
    const Step& st = steps_[si];
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (auto var : st.scope) {
      idx += value[var] * stride;
      stride *= D;
    }
    value[st.var] = argmins[si][idx];
  }

  sol.boundary.assign(num_boundary_, 0);
  sol.bulk.assign(num_bulk_, 0);
  for (const TileTerm& t : tiles_) {
    std::uint32_t idx = 0;
    std::uint32_t stride = 1;
    for (auto var : t.vars) {
      idx += value[var] * stride;
      stride *= static_cast<std::uint32_t>(D);
    }
    std::size_t chosen = kNone;
    std::int32_t chosen_cost = kInfinity;
    for (std::size_t e = 0; e < t.element_index.size(); ++e) {
      if (t.element_index[e] != idx || !element_allowed(t, e)) continue;
      const std::int32_t c = element_cost(t, e);
      if (c < chosen_cost) {
        chosen = e;
        chosen_cost = c;
      }
    }
    if (chosen == kNone) throw InvariantError("network solve: backtracking reached an empty tile choice");
    const std::size_t nb = t.boundary_qubits.size();
    for (std::size_t j = 0; j < nb; ++j) sol.boundary[t.boundary_qubits[j]] = t.element_boundary[chosen * nb + j];
    if (t.bulk_index != kNone) sol.bulk[t.bulk_index] = t.element_bulk[chosen];
  }
  return sol;
}

}  // namespace holocode
