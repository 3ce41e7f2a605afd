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


#include "holocode/distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <memory>
#include <string>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "holocode/errors.hpp"
#include "holocode/network_solver.hpp"

namespace holocode {

std::string_view to_string(DistanceSector s) {
  switch (s) {
    case DistanceSector::x:
      return "X";
    case DistanceSector::z:
      return "Z";
    case DistanceSector::pauli:
      return "pauli";
  }
  return "pauli";
}

DistanceSector parse_distance_sector(std::string_view s) {
  if (s == "X" || s == "x") return DistanceSector::x;
  if (s == "Z" || s == "z") return DistanceSector::z;
  if (s == "pauli" || s == "P") return DistanceSector::pauli;
  throw UnsupportedError("unknown distance sector '" + std::string(s) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

// Shares network models and the CSS split across the problems of one code.
class DistanceSolver {
 public:
  DistanceSolver(const HolographicCode& code, const DistanceOptions& options)
      : code_(code), options_(options), analyzer_(code) {}

  // Builds the network model for a sector when the options and code allow it.
  void prepare(DistanceSector sector) {
    const auto s = static_cast<std::size_t>(sector);
    if (tried_[s]) return;
    tried_[s] = true;
    if (sector != DistanceSector::pauli && !code_.css) throw NotCssError("X/Z distance sectors need a CSS code");
    if (options_.solver == SolverKind::branch_and_bound) return;
    if (!code_.tiling || !code_.seeds) {
      if (options_.solver == SolverKind::network) throw UnsupportedError("network solver needs a code built from a tiling");
      return;
    }
    const Sector net = sector == DistanceSector::x   ? Sector::x
                       : sector == DistanceSector::z ? Sector::z
                                                     : Sector::symplectic;
    try {
      models_[s] = std::make_unique<NetworkModel>(*code_.tiling, *code_.seeds, net);
    } catch (const UnsupportedError&) {
      if (options_.solver == SolverKind::network) throw;
    }
  }

  DistanceBound solve(std::size_t qubit, DistanceSector sector, bool word) const {
    if (qubit >= code_.k()) throw DimensionError("qubit index out of range");
    const auto& model = models_[static_cast<std::size_t>(sector)];
    DistanceBound out = model ? solve_network(*model, qubit, sector, word) : solve_search(qubit, sector, word);
    check_witness(out, qubit, sector, word);
    return out;
  }

 private:
  DistanceBound solve_network(const NetworkModel& model, std::size_t qubit, DistanceSector sector, bool word) const {
    const std::size_t n = code_.n;
    const bool joint = sector == DistanceSector::pauli;
    std::vector<std::array<std::int32_t, 4>> costs(n, {0, 1, 1, 1});
    std::vector<std::uint8_t> allowed(code_.k(), joint ? (word ? 0x0f : 0x01) : (word ? 0x03 : 0x01));
    allowed[qubit] = joint ? 0x0e : 0x02;
    const auto sol = model.solve(costs, allowed);
    if (!sol.feasible) throw InvariantError("no logical operator found for the qubit");
    DistanceBound out;
    out.witness = PauliVector(n);
    for (std::size_t q = 0; q < n; ++q) {
      const unsigned v = sol.boundary[q];
      if (joint) {
        out.witness.set(q, v);
      } else if (v != 0) {
        out.witness.set(q, sector == DistanceSector::x ? 1U : 2U);
      }
    }
    out.lower = out.upper = static_cast<std::size_t>(sol.cost);
    out.certified = true;
    return out;
  }

  DistanceBound solve_search(std::size_t qubit, DistanceSector sector, bool word) const {
    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(options_.timeout_seconds));
    auto remaining = [&] { return std::max(0.0, std::chrono::duration<double>(deadline - Clock::now()).count()); };
    const std::size_t n = code_.n;

    std::vector<BitVec> targets;
    DecodeProblem p;
    if (sector == DistanceSector::pauli) {
      p.symplectic = true;
      p.objective = Objective::pauli;
      for (const auto& s : code_.stabilizers) p.generators.push_back(s.to_symplectic());
      p.num_stabilizers = p.generators.size();
      if (word) {
        for (std::size_t j = 0; j < code_.k(); ++j) {
          if (j == qubit) continue;
          p.generators.push_back(code_.logicals[j].x_rep.to_symplectic());
          p.generators.push_back(code_.logicals[j].z_rep.to_symplectic());
        }
      }
      const auto& l = code_.logicals[qubit];
      PauliVector y = l.x_rep;
      y *= l.z_rep;
      targets = {l.x_rep.to_symplectic(), l.z_rep.to_symplectic(), y.to_symplectic()};
    } else {
      const CssSplit split = css_split(code_);
      const bool xs = sector == DistanceSector::x;
      for (const auto& r : (xs ? split.sx : split.sz).row_data()) p.generators.push_back(r);
      p.num_stabilizers = p.generators.size();
      const auto& logicals = xs ? split.x_logicals : split.z_logicals;
      if (word) {
        for (std::size_t j = 0; j < logicals.size(); ++j) {
          if (j != qubit) p.generators.push_back(logicals[j]);
        }
      }
      targets = {logicals[qubit]};
    }

    DistanceBound out;
    out.certified = true;
    out.upper = n + 1;
    for (const auto& t : targets) {
      p.target = t;
      const Correction c = min_weight_coset(p, SolverLimits{remaining()});
      out.certified = out.certified && c.certified;
      if (c.weight < out.upper) {
        out.upper = c.weight;
        if (p.symplectic) {
          out.witness = PauliVector::from_symplectic(c.vector);
        } else {
          out.witness = PauliVector(n);
          for (std::size_t q = c.vector.find_first(); q != BitVec::npos; q = c.vector.find_next(q)) {
            out.witness.set(q, sector == DistanceSector::x ? 1U : 2U);
          }
        }
      }
    }
    // Any nontrivial logical has weight at least 1.
    out.lower = out.certified ? out.upper : 1;
    return out;
  }

  void check_witness(const DistanceBound& b, std::size_t qubit, DistanceSector sector, bool word) const {
    if (b.witness.weight() != b.upper) throw InvariantError("distance witness weight does not match the bound");
    if (sector == DistanceSector::x && !b.witness.is_x_type()) throw InvariantError("X-sector witness is not X-type");
    if (sector == DistanceSector::z && !b.witness.is_z_type()) throw InvariantError("Z-sector witness is not Z-type");
    const LogicalEffect e = analyzer_.effect(b.witness);
    if (e.detectable || e.effect[qubit] == 0) throw InvariantError("distance witness does not act on the qubit");
    if (!word) {
      for (std::size_t j = 0; j < e.effect.size(); ++j) {
        if (j != qubit && e.effect[j] != 0) throw InvariantError("bit-distance witness acts on another qubit");
      }
    }
  }

  const HolographicCode& code_;
  DistanceOptions options_;
  LogicalAnalyzer analyzer_;
  std::array<bool, 3> tried_{};
  std::array<std::unique_ptr<NetworkModel>, 3> models_;
};

std::vector<DistanceSector> default_sectors(const HolographicCode& code) {
  if (code.css) return {DistanceSector::x, DistanceSector::z};
  return {DistanceSector::pauli};
}

DistanceResult solve_both(const DistanceSolver& solver, std::size_t qubit, DistanceSector sector) {
  DistanceResult r;
  r.qubit = qubit;
  r.sector = sector;
  r.bit = solver.solve(qubit, sector, false);
  r.word = solver.solve(qubit, sector, true);
  if (r.word.lower > r.bit.upper) throw InvariantError("word distance exceeds bit distance");
  return r;
}

// Per-sector results merged by taking the smaller distance of each kind; the
// reported sector is that of the bit distance.
DistanceResult merge(const std::vector<DistanceResult>& parts) {
  DistanceResult out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.bit.upper < out.bit.upper) {
      out.bit = p.bit;
      out.sector = p.sector;
    }
    if (p.word.upper < out.word.upper) out.word = p.word;
  }
  // The minimum over sectors is only as certain as its least certain input.
  for (const auto& p : parts) {
    out.bit.lower = std::min(out.bit.lower, p.bit.lower);
    out.word.lower = std::min(out.word.lower, p.word.lower);
    out.bit.certified = out.bit.certified && (p.bit.certified || p.bit.lower >= out.bit.upper);
    out.word.certified = out.word.certified && (p.word.certified || p.word.lower >= out.word.upper);
  }
  if (out.bit.certified) out.bit.lower = out.bit.upper;
  if (out.word.certified) out.word.lower = out.word.upper;
  return out;
}

}  // namespace

DistanceBound bit_distance(const HolographicCode& code, std::size_t qubit, DistanceSector sector,
                           const DistanceOptions& options) {
  DistanceSolver solver(code, options);
  solver.prepare(sector);
  return solver.solve(qubit, sector, false);
}

DistanceBound word_distance(const HolographicCode& code, std::size_t qubit, DistanceSector sector,
                            const DistanceOptions& options) {
  DistanceSolver solver(code, options);
  solver.prepare(sector);
  return solver.solve(qubit, sector, true);
}

DistanceResult qubit_distance(const HolographicCode& code, std::size_t qubit, DistanceSector sector,
                              const DistanceOptions& options) {
  DistanceSolver solver(code, options);
  solver.prepare(sector);
  return solve_both(solver, qubit, sector);
}

DistanceResult qubit_distance(const HolographicCode& code, std::size_t qubit, const DistanceOptions& options) {
  return qubit_distances(code, {qubit}, options, 1).front();
}

std::vector<DistanceResult> qubit_distances(const HolographicCode& code, const std::vector<std::size_t>& qubits,
                                            const DistanceOptions& options, std::size_t threads,
                                            std::optional<DistanceSector> sector) {
  DistanceSolver solver(code, options);
  const auto sectors = sector ? std::vector<DistanceSector>{*sector} : default_sectors(code);
  for (auto s : sectors) solver.prepare(s);

  const std::size_t tasks = qubits.size() * sectors.size();
  std::vector<DistanceResult> parts(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks && !failed; t = next++) {
      try {
        parts[t] = solve_both(solver, qubits[t / sectors.size()], sectors[t % sectors.size()]);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(tasks, 1));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<DistanceResult> out;
  out.reserve(qubits.size());
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    std::vector<DistanceResult> per(parts.begin() + static_cast<std::ptrdiff_t>(q * sectors.size()),
                                    parts.begin() + static_cast<std::ptrdiff_t>((q + 1) * sectors.size()));
    out.push_back(merge(per));
  }
  return out;
}

ScalingFit fit_distance_scaling(const std::vector<std::pair<double, double>>& points, double confidence) {
  if (points.size() < 3) throw DimensionError("distance scaling fit needs at least 3 points");
  if (!(confidence > 0.0 && confidence < 1.0)) throw DimensionError("confidence must lie in (0, 1)");
  const double m = static_cast<double>(points.size());
  double sx = 0.0;
  double sy = 0.0;
  for (const auto& [n, d] : points) {
    if (!(n > 0.0) || !(d > 0.0)) throw DimensionError("distance scaling points must be positive");
    sx += std::log(n);
    sy += std::log(d);
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [n, d] : points) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(d) - my);
  }
  if (sxx <= 0.0) throw DimensionError("distance scaling points share a single n");
  ScalingFit fit;
  fit.points = points.size();
  fit.confidence = confidence;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ssr = 0.0;
  for (const auto& [n, d] : points) {
    const double r = std::log(d) - (fit.intercept + fit.exponent * std::log(n));
    ssr += r * r;
  }
  const double dof = m - 2.0;
  const double se = std::sqrt(ssr / dof / sxx);
  const boost::math::students_t dist(dof);
  fit.half_width = boost::math::quantile(dist, 0.5 + confidence / 2.0) * se;
  return fit;
}

}  // namespace holocode
