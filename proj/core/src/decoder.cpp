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

#include "holocode/decoder.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>

#include "holocode/errors.hpp"

namespace holocode {

std::string_view to_string(Objective o) { return o == Objective::hamming ? "hamming" : "pauli"; }
std::string_view to_string(DecodeMode m) { return m == DecodeMode::css ? "css" : "symplectic"; }

Objective parse_objective(std::string_view s) {
  if (s == "hamming") return Objective::hamming;
  if (s == "pauli") return Objective::pauli;
  throw UnsupportedError("unknown objective '" + std::string(s) + "'");
}

DecodeMode parse_mode(std::string_view s) {
  if (s == "css") return DecodeMode::css;
  if (s == "symplectic") return DecodeMode::symplectic;
  throw UnsupportedError("unknown decode mode '" + std::string(s) + "'");
}

SolverKind parse_solver(std::string_view s) {
  if (s == "auto" || s == "automatic") return SolverKind::automatic;
  if (s == "bnb" || s == "branch-and-bound") return SolverKind::branch_and_bound;
  if (s == "network") return SolverKind::network;
  throw UnsupportedError("unknown solver '" + std::string(s) + "'");
}

std::size_t objective_weight(const BitVec& v, Objective objective, bool symplectic) {
  if (objective == Objective::hamming || !symplectic) return v.popcount();
  const auto p = PauliVector::from_symplectic(v);
  return p.weight();
}

BitVec pure_error(const Gf2Matrix& F, const BitVec& y) {
  if (F.cols() != y.size()) throw DimensionError("pure_error: syndrome length does not match the inverse");
  return F * y;
}

namespace {

using Word = BitVec::Word;
using Clock = std::chrono::steady_clock;

// Vectors are packed as flat word arrays. Symplectic vectors store the x
// words, then the z words, each half padded to a word boundary so the Pauli
// weight is computed word-wise.
struct Layout {
  std::size_t width = 0;
  std::size_t half = 0;
  bool pauli = false;

  std::size_t weight(const Word* r) const {
    std::size_t w = 0;
    if (pauli) {
      for (std::size_t i = 0; i < half; ++i) w += static_cast<std::size_t>(std::popcount(r[i] | r[half + i]));
    } else {
      for (std::size_t i = 0; i < width; ++i) w += static_cast<std::size_t>(std::popcount(r[i]));
    }
    return w;
  }

  // Residual weight that survives any combination of the generators in the
  // union `u`. A qubit stays nonzero if one of its set bits is untouched.
  std::size_t fixed_weight(const Word* r, const Word* u) const {
    std::size_t w = 0;
    if (pauli) {
      for (std::size_t i = 0; i < half; ++i) {
        w += static_cast<std::size_t>(std::popcount((r[i] & ~u[i]) | (r[half + i] & ~u[half + i])));
      }
    } else {
      for (std::size_t i = 0; i < width; ++i) w += static_cast<std::size_t>(std::popcount(r[i] & ~u[i]));
    }
    return w;
  }

  std::vector<Word> pack(const BitVec& v, bool symplectic) const {
    std::vector<Word> out(width, 0);
    if (!symplectic) {
      const auto w = v.words();
      std::copy(w.begin(), w.end(), out.begin());
      return out;
    }
    const std::size_t n = v.size() / 2;
    for (std::size_t i = v.find_first(); i != BitVec::npos; i = v.find_next(i)) {
      const std::size_t q = i < n ? i : i - n;
      const std::size_t base = i < n ? 0 : half;
      out[base + q / BitVec::kWordBits] |= Word{1} << (q % BitVec::kWordBits);
    }
    return out;
  }
};

struct SearchResult {
  std::size_t best = 0;
  // Coefficients over the generators passed to the search.
  std::vector<std::uint8_t> lambda;
  bool improved = false;
  bool timed_out = false;
};

// Depth-first branch and bound over one coset problem.
//
// The generators are first brought to reduced row echelon form (dropping
// dependent rows), so each pivot position is touched by exactly one row. A
// decided row therefore freezes its pivot and the untouched-position bound
// sees it. Solutions are mapped back to the caller's generators.
class CosetSearch {
 public:
  CosetSearch(const Layout& layout, Clock::time_point deadline, std::size_t* nodes)
      : layout_(layout), deadline_(deadline), nodes_(nodes) {}

  // Finds a combination with weight below `bound`; stops early once the weight
  // drops below `stop_below`.
  SearchResult run(const std::vector<Word>& target, const std::vector<const std::vector<Word>*>& gens,
                   std::size_t bound, std::size_t stop_below) {
    const std::size_t W = layout_.width;
    reduce(gens);
    const std::size_t r = rows_.size() / std::max<std::size_t>(W, 1);
    residual_.assign((r + 1) * W, 0);
    unions_.assign((r + 1) * W, 0);
    std::copy(target.begin(), target.end(), residual_.begin());
    chosen_.assign(r, 0);
    rem_.resize(r);
    for (std::size_t j = 0; j < r; ++j) rem_[j] = j;
    best_ = bound;
    stop_below_ = stop_below;
    stop_ = false;
    timed_out_ = false;
    found_ = false;
    dfs(0, r);

    SearchResult out;
    out.best = best_;
    out.improved = found_;
    out.timed_out = timed_out_;
    out.lambda.assign(gens.size(), 0);
    if (found_) {
      for (std::size_t j = 0; j < r; ++j) {
        if (!best_chosen_[j]) continue;
        for (std::size_t i = 0; i < gens.size(); ++i) out.lambda[i] ^= transform_[j * gens.size() + i];
      }
    }
    return out;
  }

 private:
  void reduce(const std::vector<const std::vector<Word>*>& gens) {
    const std::size_t W = layout_.width;
    const std::size_t m = gens.size();
    std::vector<Word> rows(m * W);
    std::vector<std::uint8_t> tr(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::copy(gens[i]->begin(), gens[i]->end(), rows.begin() + static_cast<std::ptrdiff_t>(i * W));
      tr[i * m + i] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < W * BitVec::kWordBits && rank < m; ++col) {
      const std::size_t w = col / BitVec::kWordBits;
      const Word bit = Word{1} << (col % BitVec::kWordBits);
      std::size_t p = rank;
      while (p < m && (rows[p * W + w] & bit) == 0) ++p;
      if (p == m) continue;
      if (p != rank) {
        std::swap_ranges(rows.begin() + static_cast<std::ptrdiff_t>(p * W),
                         rows.begin() + static_cast<std::ptrdiff_t>((p + 1) * W),
                         rows.begin() + static_cast<std::ptrdiff_t>(rank * W));
        std::swap_ranges(tr.begin() + static_cast<std::ptrdiff_t>(p * m),
                         tr.begin() + static_cast<std::ptrdiff_t>((p + 1) * m),
                         tr.begin() + static_cast<std::ptrdiff_t>(rank * m));
      }
      for (std::size_t q = 0; q < m; ++q) {
        if (q != rank && (rows[q * W + w] & bit) != 0) {
          for (std::size_t i = 0; i < W; ++i) rows[q * W + i] ^= rows[rank * W + i];
          for (std::size_t i = 0; i < m; ++i) tr[q * m + i] ^= tr[rank * m + i];
        }
      }
      ++rank;
    }
    rows.resize(rank * W);
    tr.resize(rank * m);
    rows_ = std::move(rows);
    transform_ = std::move(tr);
  }

  void dfs(std::size_t depth, std::size_t nrem) {
    if (stop_) return;
    if ((++*nodes_ & 1023U) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      stop_ = true;
      return;
    }
    const std::size_t W = layout_.width;
    const Word* r = residual_.data() + depth * W;
    const std::size_t w = layout_.weight(r);
    if (w < best_) {
      best_ = w;
      best_chosen_ = chosen_;
      found_ = true;
      if (best_ < stop_below_) {
        stop_ = true;
        return;
      }
    }
    if (nrem == 0) return;
    Word* u = unions_.data() + depth * W;
    std::fill(u, u + W, Word{0});
    for (std::size_t p = 0; p < nrem; ++p) {
      const Word* g = rows_.data() + rem_[p] * W;
      for (std::size_t i = 0; i < W; ++i) u[i] |= g[i];
    }
    if (layout_.fixed_weight(r, u) >= best_) return;

    // Branch on the remaining row overlapping the residual most.
    std::size_t pick = 0;
    std::size_t pick_overlap = 0;
    for (std::size_t p = 0; p < nrem; ++p) {
      const Word* g = rows_.data() + rem_[p] * W;
      std::size_t ov = 0;
      for (std::size_t i = 0; i < W; ++i) ov += static_cast<std::size_t>(std::popcount(r[i] & g[i]));
      if (ov > pick_overlap || (ov == pick_overlap && rem_[p] < rem_[pick])) {
        pick = p;
        pick_overlap = ov;
      }
    }
    const std::size_t j = rem_[pick];
    std::swap(rem_[pick], rem_[nrem - 1]);
    Word* next = residual_.data() + (depth + 1) * W;
    const Word* g = rows_.data() + j * W;
    for (std::size_t i = 0; i < W; ++i) next[i] = r[i] ^ g[i];
    const bool take_first = layout_.weight(next) <= w;
    for (int branch = 0; branch < 2 && !stop_; ++branch) {
      const bool take = (branch == 0) == take_first;
      for (std::size_t i = 0; i < W; ++i) next[i] = take ? (r[i] ^ g[i]) : r[i];
      chosen_[j] = take ? 1 : 0;
      dfs(depth + 1, nrem - 1);
      chosen_[j] = 0;
    }
    std::swap(rem_[pick], rem_[nrem - 1]);
  }

  const Layout& layout_;
  Clock::time_point deadline_;
  std::size_t* nodes_;
  std::vector<Word> rows_;
  std::vector<std::uint8_t> transform_;  // rank x m
  std::vector<Word> residual_;
  std::vector<Word> unions_;
  std::vector<std::uint8_t> chosen_;
  std::vector<std::uint8_t> best_chosen_;
  std::vector<std::size_t> rem_;
  std::size_t best_ = 0;
  std::size_t stop_below_ = 0;
  bool stop_ = false;
  bool timed_out_ = false;
  bool found_ = false;
};

void fill_coefficients(Correction& c, const std::vector<std::uint8_t>& lambda, std::size_t num_stabilizers) {
  const std::size_t m = lambda.size();
  c.lambda = BitVec(num_stabilizers);
  c.mu = BitVec(m - num_stabilizers);
  for (std::size_t j = 0; j < m; ++j) {
    if (lambda[j] == 0) continue;
    if (j < num_stabilizers) {
      c.lambda.set(j);
    } else {
      c.mu.set(j - num_stabilizers);
    }
  }
}

}  // namespace

Correction min_weight_coset(const DecodeProblem& problem, const SolverLimits& limits) {
  const std::size_t m = problem.generators.size();
  const std::size_t len = problem.target.size();
  if (problem.num_stabilizers > m) throw DimensionError("num_stabilizers exceeds the generator count");
  if (problem.symplectic && len % 2 != 0) throw DimensionError("symplectic target has odd length");
  for (const auto& g : problem.generators) {
    if (g.size() != len) throw DimensionError("generator length differs from target");
  }
  Layout layout;
  layout.pauli = problem.symplectic && problem.objective == Objective::pauli;
  if (problem.symplectic) {
    layout.half = BitVec::word_count(len / 2);
    layout.width = 2 * layout.half;
  } else {
    layout.width = BitVec::word_count(len);
  }
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(limits.timeout_seconds));
  std::size_t nodes = 0;
  CosetSearch search(layout, deadline, &nodes);

  const std::vector<Word> target = layout.pack(problem.target, problem.symplectic);
  std::vector<std::vector<Word>> gens;
  gens.reserve(m);
  for (const auto& g : problem.generators) gens.push_back(layout.pack(g, problem.symplectic));
  std::vector<const std::vector<Word>*> all;
  for (const auto& g : gens) all.push_back(&g);

  // Pass 1: optimal weight, incumbent λ = 0.
  const std::size_t start = layout.weight(target.data());
  SearchResult first = search.run(target, all, start, 0);
  const std::size_t optimum = first.improved ? first.best : start;
  std::vector<std::uint8_t> witness = first.improved ? first.lambda : std::vector<std::uint8_t>(m, 0);
  const bool proved = !first.timed_out;

  // Pass 2: in row order, clear each coefficient when an optimum allows it.
  bool lex = proved;
  if (proved) {
    std::vector<Word> prefix = target;
    for (std::size_t j = 0; j < m; ++j) {
      if (witness[j] == 1) {
        std::vector<const std::vector<Word>*> suffix(all.begin() + static_cast<std::ptrdiff_t>(j + 1), all.end());
        SearchResult sub = search.run(prefix, suffix, optimum + 1, optimum + 1);
        if (sub.timed_out) {
          lex = false;
          break;
        }
        if (sub.improved) {
          witness[j] = 0;
          for (std::size_t i = j + 1; i < m; ++i) witness[i] = sub.lambda[i - j - 1];
        }
      }
      if (witness[j] == 1) {
        for (std::size_t i = 0; i < layout.width; ++i) prefix[i] ^= gens[j][i];
      }
    }
  }

  Correction c;
  c.vector = problem.target;
  for (std::size_t j = 0; j < m; ++j) {
    if (witness[j]) c.vector ^= problem.generators[j];
  }
  c.weight = objective_weight(c.vector, problem.objective, problem.symplectic);
  if (c.weight != optimum) throw InvariantError("min_weight_coset: incumbent weight does not match its vector");
  fill_coefficients(c, witness, problem.num_stabilizers);
  c.certified = proved;
  c.lex_minimal = lex;
  c.nodes = nodes;
  return c;
}

Decoder::Decoder(std::shared_ptr<const HolographicCode> code, DecoderOptions options)
    : code_(std::move(code)), options_(options) {
  if (!code_) throw DimensionError("decoder needs a code");
  const HolographicCode& c = *code_;
  mode_ = options_.mode.value_or(c.css ? DecodeMode::css : DecodeMode::symplectic);
  if (mode_ == DecodeMode::css && !c.css) throw NotCssError("css decoding requested for a non-CSS code");

  std::vector<Sector> model_sectors;
  if (mode_ == DecodeMode::css) {
    // Sector 0 corrects Z errors using X-type checks; sector 1 corrects X errors.
    for (int s = 0; s < 2; ++s) {
      SectorData d;
      Gf2Matrix checks(0, c.n);
      for (std::size_t j = 0; j < c.stabilizers.size(); ++j) {
        const auto& st = c.stabilizers[j];
        if (s == 0 && st.is_x_type() && !st.is_identity()) {
          d.checks.push_back(j);
          checks.append_row(st.x());
        } else if (s == 1 && st.is_z_type() && !st.is_identity()) {
          d.checks.push_back(j);
          checks.append_row(st.z());
        }
      }
      for (const auto& st : c.stabilizers) {
        if (s == 0 && st.is_z_type() && !st.is_identity()) d.generators.push_back(st.z());
        if (s == 1 && st.is_x_type() && !st.is_identity()) d.generators.push_back(st.x());
      }
      d.num_stabilizers = d.generators.size();
      for (const auto& l : c.logicals) {
        if (s == 0) {
          if (!l.z_rep.is_z_type()) throw NotCssError("Z representative is not Z-type");
          d.generators.push_back(l.z_rep.z());
        } else {
          if (!l.x_rep.is_x_type()) throw NotCssError("X representative is not X-type");
          d.generators.push_back(l.x_rep.x());
        }
      }
      d.isf_columns = right_inverse(checks).transpose();
      sectors_.push_back(std::move(d));
      model_sectors.push_back(s == 0 ? Sector::z : Sector::x);
    }
  } else {
    SectorData d;
    for (std::size_t j = 0; j < c.stabilizers.size(); ++j) d.checks.push_back(j);
    d.isf_columns = right_inverse(check_matrix(c.stabilizers)).transpose();
    for (const auto& st : c.stabilizers) d.generators.push_back(st.to_symplectic());
    d.num_stabilizers = d.generators.size();
    for (const auto& l : c.logicals) {
      d.generators.push_back(l.x_rep.to_symplectic());
      d.generators.push_back(l.z_rep.to_symplectic());
    }
    sectors_.push_back(std::move(d));
    model_sectors.push_back(Sector::symplectic);
  }
  if (options_.coefficients) {
    for (auto& d : sectors_) d.decomposer = std::make_unique<RowSpaceSolver>(d.generators);
  }

  if (options_.solver != SolverKind::branch_and_bound) {
    if (c.tiling && c.seeds) {
      try {
        for (Sector s : model_sectors) models_.push_back(std::make_unique<NetworkModel>(*c.tiling, *c.seeds, s));
      } catch (const UnsupportedError&) {
        models_.clear();
        if (options_.solver == SolverKind::network) throw;
      }
    } else if (options_.solver == SolverKind::network) {
      throw UnsupportedError("network solver needs a code built from a tiling");
    }
  }
}

BitVec Decoder::syndrome_of(const PauliVector& error) const { return syndrome(code_->stabilizers, error); }

Correction Decoder::solve_sector(std::size_t s, const BitVec& target) const {
  const SectorData& d = sectors_[s];
  const bool symplectic = mode_ == DecodeMode::symplectic;
  if (models_.empty()) {
    DecodeProblem p;
    p.target = target;
    p.generators = d.generators;
    p.num_stabilizers = d.num_stabilizers;
    p.objective = options_.objective;
    p.symplectic = symplectic;
    return min_weight_coset(p, options_.limits);
  }

  const NetworkModel& model = *models_[s];
  const std::size_t n = code_->n;
  std::vector<std::array<std::int32_t, 4>> costs(n);
  for (std::size_t q = 0; q < n; ++q) {
    unsigned ev = 0;
    if (symplectic) {
      ev = (target.get(q) ? 1U : 0U) | (target.get(n + q) ? 2U : 0U);
    } else {
      ev = target.get(q) ? 1U : 0U;
    }
    for (unsigned v = 0; v < model.domain(); ++v) {
      const unsigned diff = ev ^ v;
      costs[q][v] = options_.objective == Objective::pauli && symplectic ? (diff != 0 ? 1 : 0)
                                                                         : std::popcount(diff);
    }
  }
  const std::vector<std::uint8_t> allowed(code_->k(), model.domain() == 4 ? 0x0f : 0x03);
  const auto sol = model.solve(costs, allowed);
  if (!sol.feasible) throw InvariantError("network decoder found no element of the coset");
  Correction c;
  c.vector = target;
  for (std::size_t q = 0; q < n; ++q) {
    const unsigned v = sol.boundary[q];
    if (symplectic) {
      if (v & 1U) c.vector.flip(q);
      if (v & 2U) c.vector.flip(n + q);
    } else if (v & 1U) {
      c.vector.flip(q);
    }
  }
  c.weight = objective_weight(c.vector, options_.objective, symplectic);
  if (c.weight != static_cast<std::size_t>(sol.cost)) {
    throw InvariantError("network decoder cost does not match the correction weight");
  }
  c.certified = true;
  if (d.decomposer) {
    const auto coeffs = d.decomposer->decompose(c.vector ^ target);
    if (!coeffs) throw InvariantError("network correction is outside the generated group");
    std::vector<std::uint8_t> lambda(d.generators.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] = coeffs->get(j) ? 1 : 0;
    fill_coefficients(c, lambda, d.num_stabilizers);
  }
  return c;
}

DecodeResult Decoder::decode(const BitVec& syn) const {
  const HolographicCode& c = *code_;
  if (syn.size() != c.stabilizers.size()) throw DimensionError("syndrome length must equal the stabilizer count");
  DecodeResult result;
  result.correction = PauliVector(c.n);
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    const SectorData& d = sectors_[s];
    BitVec target(d.isf_columns.cols());
    for (std::size_t j = 0; j < d.checks.size(); ++j) {
      if (syn.get(d.checks[j])) target ^= d.isf_columns.row(j);
    }
    Correction corr = solve_sector(s, target);
    if (mode_ == DecodeMode::css) {
      (s == 0 ? result.correction.z() : result.correction.x()) = corr.vector;
    } else {
      result.correction = PauliVector::from_symplectic(corr.vector);
    }
    result.certified = result.certified && corr.certified;
    result.sectors.push_back(std::move(corr));
  }
  result.timed_out = !result.certified;
  if (syndrome_of(result.correction) != syn) {
    throw InvariantError("decoder correction does not reproduce the syndrome");
  }
  return result;
}

bool LogicalEffect::trivial() const {
  return !detectable && std::all_of(effect.begin(), effect.end(), [](unsigned e) { return e == 0; });
}

namespace {

std::vector<BitVec> symplectic_rows(const HolographicCode& code) {
  std::vector<BitVec> rows;
  for (const auto& g : code.all_generators()) rows.push_back(g.to_symplectic());
  return rows;
}

}  // namespace

LogicalAnalyzer::LogicalAnalyzer(const HolographicCode& code)
    : stabilizers_(code.stabilizers), k_(code.k()), decomposer_(symplectic_rows(code)) {}

LogicalEffect LogicalAnalyzer::effect(const PauliVector& v) const {
  LogicalEffect out;
  if (syndrome(stabilizers_, v).any()) {
    out.detectable = true;
    return out;
  }
  out.effect.assign(k_, 0);
  const auto coeffs = decomposer_.decompose(v.to_symplectic());
  if (!coeffs) throw InvariantError("operator with trivial syndrome is outside the normalizer span");
  const std::size_t base = stabilizers_.size();
  for (std::size_t i = 0; i < k_; ++i) {
    out.effect[i] = (coeffs->get(base + 2 * i) ? 1U : 0U) | (coeffs->get(base + 2 * i + 1) ? 2U : 0U);
  }
  return out;
}

LogicalEffect net_logical_effect(const HolographicCode& code, const PauliVector& v) {
  return LogicalAnalyzer(code).effect(v);
}

}  // namespace holocode
