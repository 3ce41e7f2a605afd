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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when a
// criterion fails that was not listed with --expect-fail.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "holocode/code_builder.hpp"
#include "holocode/decoder.hpp"
#include "holocode/distance.hpp"
#include "holocode/errors.hpp"
#include "holocode/gf2.hpp"
#include "holocode/seed_codes.hpp"
#include "holocode/sim_harness.hpp"
#include "holocode/tiling.hpp"
#include "oracles/oracles.hpp"

namespace holocode {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok: " : "FAILED: ") + what);
  }
  void info(const std::string& what) { notes.push_back("info: " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Options {
  std::size_t threads = 1;
  std::size_t trials = 2000;
  std::size_t syndromes = 1000;
};

// 1. Seed tensor properties.
Outcome seed_properties(const Options&) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  o.require(is_block_perfect(steane_tensor()), "steane is block-perfect");
  o.require(is_block_perfect(scf_tensor()), "scf is block-perfect");
  o.require(is_perfect(five_qubit_tensor()), "five-qubit is perfect");
  o.require(!is_perfect(scf_tensor()), "scf is not perfect");
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, fmt("runtime %.3f s < 1 s", dt));
  return o;
}

// 2. Boundary qubit counts of all 18 tilings.
Outcome tiling_counts(const Options&) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  struct Row {
    Family f;
    RateVariant v;
    std::vector<std::size_t> n;
  };
  const std::vector<Row> rows{{Family::heptagon, RateVariant::max, {7, 42, 203, 973, 4662, 22337}},
                              {Family::pentagon, RateVariant::reduced, {5, 25, 75, 255, 745, 2525}},
                              {Family::pentagon, RateVariant::zero, {5, 25, 95, 355, 1325, 4945}}};
  std::size_t matched = 0;
  for (const auto& row : rows) {
    for (std::size_t r = 1; r <= row.n.size(); ++r) {
      const auto n = counts(build_tiling(row.f, r, row.v)).n;
      if (n == row.n[r - 1]) {
        ++matched;
      } else {
        o.require(false, fmt("%s/%s R=%zu: n=%zu, expected %zu", std::string(to_string(row.f)).c_str(),
                             std::string(to_string(row.v)).c_str(), r, n, row.n[r - 1]));
      }
    }
  }
  o.require(matched == 18, fmt("%zu/18 cells match", matched));
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, fmt("runtime %.3f s < 10 s", dt));
  return o;
}

// 3. Exhaustive single-qubit behaviour of the single-tile codes.
Outcome single_tiles(const Options&) {
  Outcome o;
  struct Case {
    SeedCode seed;
    bool expect_correct;
  };
  for (const auto& [seed, expect_correct] :
       {Case{steane_tensor(), true}, Case{scf_tensor(), false}, Case{five_qubit_tensor(), true}}) {
    auto code = std::make_shared<const HolographicCode>(single_tile_code(seed));
    const Decoder decoder(code);
    const LogicalAnalyzer analyzer(*code);
    std::size_t corrected = 0;
    std::size_t detected = 0;
    std::size_t total = 0;
    for (std::size_t q = 0; q < code->n; ++q) {
      for (unsigned v = 1; v < 4; ++v) {
        PauliVector e(code->n);
        e.set(q, v);
        const BitVec s = decoder.syndrome_of(e);
        detected += s.any() ? 1 : 0;
        corrected += analyzer.effect(e * decoder.decode(s).correction).trivial() ? 1 : 0;
        ++total;
      }
    }
    const std::string label = fmt("%s [[%zu,%zu]]", seed.name.c_str(), code->n, code->k());
    if (expect_correct) {
      o.require(corrected == total, fmt("%s corrects %zu/%zu weight-1 errors", label.c_str(), corrected, total));
    } else {
      o.require(detected == total, fmt("%s detects %zu/%zu weight-1 errors", label.c_str(), detected, total));
    }
  }
  return o;
}

struct SectorProblem {
  std::string label;
  Gf2Matrix checks;
  DecodeProblem problem;
};

std::vector<SectorProblem> sector_problems(const std::string& label, const HolographicCode& code) {
  std::vector<SectorProblem> out;
  if (code.css) {
    const auto split = css_split(code);
    SectorProblem z{label + " Z-errors", split.sx, {}};
    z.problem.generators = split.sz.row_data();
    z.problem.num_stabilizers = split.sz.rows();
    for (const auto& l : split.z_logicals) z.problem.generators.push_back(l);
    SectorProblem x{label + " X-errors", split.sz, {}};
    x.problem.generators = split.sx.row_data();
    x.problem.num_stabilizers = split.sx.rows();
    for (const auto& l : split.x_logicals) x.problem.generators.push_back(l);
    out.push_back(std::move(z));
    out.push_back(std::move(x));
  } else {
    SectorProblem p{label + " symplectic", check_matrix(code.stabilizers), {}};
    for (const auto& s : code.stabilizers) p.problem.generators.push_back(s.to_symplectic());
    p.problem.num_stabilizers = code.stabilizers.size();
    for (const auto& l : code.logicals) {
      p.problem.generators.push_back(l.x_rep.to_symplectic());
      p.problem.generators.push_back(l.z_rep.to_symplectic());
    }
    p.problem.symplectic = true;
    p.problem.objective = Objective::pauli;
    out.push_back(std::move(p));
  }
  return out;
}

// 4. Branch and bound against full enumeration on random syndromes.
Outcome decoder_oracle(const Options& opt) {
  Outcome o;
  std::vector<std::pair<std::string, HolographicCode>> codes{
      {"steane tile", single_tile_code(steane_tensor())},
      {"scf tile", single_tile_code(scf_tensor())},
      {"five-qubit tile", single_tile_code(five_qubit_tensor())},
      {"heptagon R=2", build_code(Family::heptagon, 2, RateVariant::max)},
      {"reduced scf R=2", build_code(Family::pentagon, 2, RateVariant::reduced)}};
  std::mt19937_64 rng(2026);
  for (const auto& [label, code] : codes) {
    for (auto& sp : sector_problems(label, code)) {
      const Gf2Matrix isf = right_inverse(sp.checks);
      const std::size_t bits = sp.problem.generators.front().size();
      const oracle::BatchedExhaustive exhaustive(bits, sp.problem.symplectic);
      std::vector<std::uint64_t> gens;
      for (const auto& g : sp.problem.generators) gens.push_back(oracle::BatchedExhaustive::pack(g));
      std::vector<DecodeProblem> problems;
      std::vector<std::uint64_t> targets;
      for (std::size_t t = 0; t < opt.syndromes; ++t) {
        BitVec y(sp.checks.rows());
        for (std::size_t i = 0; i < y.size(); ++i) y.set(i, (rng() & 1U) != 0);
        DecodeProblem p = sp.problem;
        p.target = pure_error(isf, y);
        if (!(sp.checks * p.target == y)) {
          o.require(false, sp.label + ": pure error does not reproduce its syndrome");
          return o;
        }
        targets.push_back(oracle::BatchedExhaustive::pack(p.target));
        problems.push_back(std::move(p));
      }
      const auto want = exhaustive.run(gens, targets);
      std::size_t agree = 0;
      bool certified = true;
      for (std::size_t t = 0; t < problems.size(); ++t) {
        const auto c = min_weight_coset(problems[t]);
        certified = certified && c.certified;
        agree += c.weight == want[t] ? 1 : 0;
      }
      o.require(agree == problems.size() && certified,
                fmt("%s: %zu generators, %zu/%zu syndromes match enumeration", sp.label.c_str(), gens.size(), agree,
                    problems.size()));
    }
  }
  return o;
}

struct DistanceRow {
  std::string family;
  std::size_t radius = 0;
  std::size_t n = 0;
  std::size_t bit = 0;
  std::size_t word = 0;
  bool certified = false;
};

struct DistanceTable {
  std::map<std::string, std::vector<DistanceRow>> rows;
  double seconds = 0.0;
};

const DistanceTable& distance_table(const Options& opt) {
  static const DistanceTable table = [&] {
    DistanceTable t;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::pair<Family, RateVariant>>> families{
        {"heptagon", {Family::heptagon, RateVariant::max}},
        {"reduced scf", {Family::pentagon, RateVariant::reduced}},
        {"zero-rate", {Family::pentagon, RateVariant::zero}}};
    for (const auto& [name, fv] : families) {
      for (std::size_t r = 1; r <= 4; ++r) {
        const auto code = build_code(fv.first, r, fv.second);
        const auto res = qubit_distances(code, {code.central_qubit()}, DistanceOptions{}, opt.threads).front();
        t.rows[name].push_back({name, r, code.n, res.bit.value(), res.word.value(),
                                res.bit.certified && res.word.certified});
      }
    }
    t.seconds = seconds_since(t0);
    return t;
  }();
  return table;
}

// 5. Central-qubit distances for R <= 3, with R = 4 reported.
Outcome distances(const Options& opt) {
  Outcome o;
  const auto& t = distance_table(opt);
  const std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> want{
      {"heptagon", {{3, 3}, {9, 6}, {19, 8}, {45, 15}}},
      {"reduced scf", {{2, 2}, {4, 4}, {8, 4}, {16, 8}}},
      {"zero-rate", {{3, 3}, {9, 9}, {19, 19}, {41, 41}}}};
  for (const auto& [name, rows] : t.rows) {
    const bool word_quoted = name != "zero-rate";
    for (const auto& row : rows) {
      const auto [b, w] = want.at(name)[row.radius - 1];
      const bool match = row.bit == b && (!word_quoted || row.word == w);
      const std::string line =
          word_quoted ? fmt("%s R=%zu n=%zu: d_B=%zu d_W=%zu (reference %zu/%zu)%s", name.c_str(), row.radius, row.n,
                            row.bit, row.word, b, w, row.certified ? " certified" : " uncertified")
                      : fmt("%s R=%zu n=%zu: d_B=%zu (reference %zu)%s", name.c_str(), row.radius, row.n, row.bit,
                            b, row.certified ? " certified" : " uncertified");
      if (row.radius <= 3) {
        o.require(match && row.certified, line);
      } else {
        o.info("stretch row, not gating: " + line + (match ? "" : " differs"));
      }
    }
  }
  o.require(t.seconds < 3600.0, fmt("distance runtime %.2f s within 1 h", t.seconds));
  return o;
}

// 6. Binomial mixture against a 100-digit summation.
Outcome mixture(const Options&) {
  Outcome o;
  std::mt19937_64 rng(6);
  double worst = 0.0;
  std::size_t checked = 0;
  bool monotone = true;
  for (std::size_t n : {5U, 25U, 42U, 203U, 973U}) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> p(n + 1);
      for (auto& v : p) v = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      std::sort(p.begin(), p.end());
      p[0] = 0.0;
      std::vector<WeightRecord> t(n + 1);
      for (std::size_t a = 0; a <= n; ++a) {
        t[a].a = a;
        t[a].p = p[a];
      }
      double last = -1.0;
      for (double x : {1e-5, 1e-3, 0.01, 0.03, 0.07, 0.1, 0.15, 0.2, 0.3, 0.5}) {
        const double got = binomial_mix(t, x).value;
        const double ref = oracle::binomial_mix(p, x);
        worst = std::max(worst, std::abs(got - ref) / ref);
        monotone = monotone && got >= last;
        last = got;
        ++checked;
      }
      // Raising one entry never lowers the mixture.
      auto bumped = t;
      bumped[n / 2].p = std::min(1.0, bumped[n / 2].p + 0.1);
      monotone = monotone && binomial_mix(bumped, 0.1).value >= binomial_mix(t, 0.1).value;
    }
  }
  o.require(worst <= 1e-12, fmt("max relative error %.3g over %zu points", worst, checked));
  o.require(monotone, "monotone in p and in each table entry");

  std::vector<WeightRecord> lin(61);
  std::vector<WeightRecord> flat(61);
  for (std::size_t a = 0; a <= 60; ++a) {
    lin[a].a = flat[a].a = a;
    lin[a].p = static_cast<double>(a) / 60.0;
    flat[a].p = 0.25;
  }
  o.require(binomial_mix(lin, 0.0).value == 0.0 && binomial_mix(lin, 1.0).value == 1.0,
            "p = 0 and p = 1 return the end entries exactly");
  o.require(std::abs(binomial_mix(lin, 0.137).value - 0.137) <= 1e-15,
            "P(a) = a/n mixes to p");
  o.require(std::abs(binomial_mix(flat, 0.3).value - 0.25) <= 1e-15, "constant P mixes to the constant");
  return o;
}

struct Curves {
  FailureCurve heptagon2, heptagon3, scf2, scf3;
  double seconds = 0.0;
};

FailureCurve run_curve(Family f, RateVariant v, std::size_t r, const Options& opt, std::size_t trials,
                       std::size_t threads, std::uint64_t seed) {
  const auto code = build_code(f, r, v);
  SimulationConfig cfg;
  cfg.trials_per_weight = trials;
  cfg.seed = seed;
  cfg.threads = threads;
  cfg.target = code.central_qubit();
  (void)opt;
  return simulate(code, cfg);
}

const Curves& threshold_curves(const Options& opt) {
  static const Curves curves = [&] {
    Curves c;
    const auto t0 = std::chrono::steady_clock::now();
    c.heptagon2 = run_curve(Family::heptagon, RateVariant::max, 2, opt, opt.trials, opt.threads, 1);
    c.heptagon3 = run_curve(Family::heptagon, RateVariant::max, 3, opt, opt.trials, opt.threads, 1);
    c.scf2 = run_curve(Family::pentagon, RateVariant::reduced, 2, opt, opt.trials, opt.threads, 1);
    c.scf3 = run_curve(Family::pentagon, RateVariant::reduced, 3, opt, opt.trials, opt.threads, 1);
    c.seconds = seconds_since(t0);
    return c;
  }();
  return curves;
}

struct Difference {
  double d = 0.0;
  double sigma = 0.0;
};

Difference difference(const std::vector<WeightRecord>& small, const std::vector<WeightRecord>& large, double p) {
  const auto a = binomial_mix(small, p);
  const auto b = binomial_mix(large, p);
  return {b.value - a.value, std::hypot(a.sigma, b.sigma)};
}

// 7. Crossings of the failure curves.
Outcome thresholds(const Options& opt) {
  Outcome o;
  const auto& c = threshold_curves(opt);
  o.info(fmt("%zu trials per weight, simulation %.1f s", opt.trials, c.seconds));

  const auto h2 = complete_records(c.heptagon2);
  const auto h3 = complete_records(c.heptagon3);
  try {
    const double p = find_crossing(h2, h3);
    // Nearest grid points on either side where the ordering is significant.
    double below = -1.0;
    double above = -1.0;
    for (int i = 1; i <= 1000; ++i) {
      const double q = p * (1.0 - i / 1000.0);
      const auto d = difference(h2, h3, q);
      if (d.d < -3.0 * d.sigma) {
        below = q;
        break;
      }
    }
    for (int i = 1; i <= 1000; ++i) {
      const double q = p + (0.5 - p) * i / 1000.0;
      const auto d = difference(h2, h3, q);
      if (d.d > 3.0 * d.sigma) {
        above = q;
        break;
      }
    }
    o.require(p >= 0.05 && p <= 0.10, fmt("heptagon R=2/R=3 crossing at p=%.4f within [0.05, 0.10]", p));
    o.require(below > 0.0 && above > 0.0,
              fmt("ordering flips at 3 sigma: R=3 better at p=%.4f, worse at p=%.4f", below, above));
  } catch (const NoCrossingError&) {
    o.require(false, "heptagon R=2/R=3 curves do not cross on (0, 0.5)");
  }

  // Reduced SCF: below a crossing the larger code must not be significantly
  // worse, above it not significantly better, and the sign must flip
  // between p = 0.05 and p = 0.12.
  const auto s2 = complete_records(c.scf2);
  const auto s3 = complete_records(c.scf3);
  bool consistent = true;
  std::string detail;
  for (double p : {0.02, 0.03, 0.04, 0.05}) {
    const auto d = difference(s2, s3, p);
    consistent = consistent && d.d < 3.0 * d.sigma;
    detail += fmt(" p=%.2f:%+.4f(%.4f)", p, d.d, d.sigma);
  }
  for (double p : {0.12, 0.14, 0.16, 0.20}) {
    const auto d = difference(s2, s3, p);
    consistent = consistent && d.d > -3.0 * d.sigma;
    detail += fmt(" p=%.2f:%+.4f(%.4f)", p, d.d, d.sigma);
  }
  const auto lo = difference(s2, s3, 0.05);
  const auto hi = difference(s2, s3, 0.12);
  consistent = consistent && lo.d < 0.0 && hi.d > 0.0;
  o.require(consistent, "reduced scf R=3 minus R=2 failure, (sigma):" + detail);
  if (!consistent) {
    o.info(
        "the reduced-rate codes alternate between layers with and without logical tiles, so R=2 and R=3 belong to "
        "different parity classes; the R=3 curve lies above R=2 across the whole range and a crossing needs radii "
        "of equal parity");
  }
  return o;
}

// 8. Power-law fits of the central distances.
Outcome scaling(const Options& opt) {
  Outcome o;
  const auto& t = distance_table(opt);
  bool structural = true;
  for (const auto& [name, rows] : t.rows) {
    for (const auto& r : rows) structural = structural && r.bit > 0 && r.word > 0 && r.word <= r.bit;
  }
  o.require(structural, "all distances positive and d_W <= d_B at R = 1..4");

  const auto fit_of = [&](const std::string& name, bool word) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : t.rows.at(name)) {
      if (r.certified) pts.emplace_back(static_cast<double>(r.n), static_cast<double>(word ? r.word : r.bit));
    }
    return fit_distance_scaling(pts);
  };
  const auto hb = fit_of("heptagon", false);
  const auto hw = fit_of("heptagon", true);
  o.require(std::abs(hb.exponent - 0.54) <= 0.03,
            fmt("heptagon d_B ~ n^%.3f (+-%.3f, %zu points) within 0.54 +- 0.03", hb.exponent, hb.half_width,
                hb.points));
  o.require(std::abs(hw.exponent - 0.37) <= 0.07,
            fmt("heptagon d_W ~ n^%.3f (+-%.3f, %zu points) within 0.37 +- 0.07", hw.exponent, hw.half_width,
                hw.points));
  const auto sb = fit_of("reduced scf", false);
  const auto sw = fit_of("reduced scf", true);
  const auto zb = fit_of("zero-rate", false);
  o.info(fmt("reduced scf d_B ~ n^%.3f, d_W ~ n^%.3f; zero-rate d_B ~ n^%.3f (reference 0.65 +- 0.08)", sb.exponent,
             sw.exponent, zb.exponent));
  return o;
}

std::string csv_of(const FailureCurve& c) {
  std::ostringstream out;
  write_curve_csv(out, c);
  return out.str();
}

std::string threshold_bits(const FailureCurve& a, const FailureCurve& b) {
  const auto est = estimate_threshold({a, b});
  return fmt("%a %a %a", est.p_th, est.lo, est.hi);
}

// 9. Thread-count independence of simulate and threshold.
Outcome reproducibility(const Options&) {
  Outcome o;
  std::string ref2;
  std::string ref3;
  std::string ref_th;
  for (std::size_t threads : {1U, 4U, 8U}) {
    const auto c2 = run_curve(Family::heptagon, RateVariant::max, 2, {}, 300, threads, 99);
    const auto c3 = run_curve(Family::heptagon, RateVariant::max, 3, {}, 300, threads, 99);
    const std::string s2 = csv_of(c2);
    const std::string s3 = csv_of(c3);
    const std::string th = threshold_bits(c2, c3);
    if (threads == 1) {
      ref2 = s2;
      ref3 = s3;
      ref_th = th;
      continue;
    }
    o.require(s2 == ref2 && s3 == ref3, fmt("simulate output identical at %zu threads", threads));
    o.require(th == ref_th, fmt("threshold estimate identical at %zu threads", threads));
  }
  return o;
}

// 10. Emitted sigma equals sqrt(P (1 - P) / m) exactly.
Outcome uncertainty(const Options& opt) {
  Outcome o;
  const auto& c = threshold_curves(opt);
  std::size_t records = 0;
  std::size_t exact = 0;
  for (const FailureCurve* curve : {&c.heptagon2, &c.heptagon3, &c.scf2, &c.scf3}) {
    std::istringstream in(csv_of(*curve));
    for (const auto& r : read_curve_csv(in).records) {
      const double p = static_cast<double>(r.f) / static_cast<double>(r.m);
      const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(r.m));
      ++records;
      exact += (r.p == p && r.sigma == sigma) ? 1 : 0;
    }
  }
  o.require(records > 0 && exact == records, fmt("%zu/%zu emitted records exact", exact, records));
  return o;
}

}  // namespace
}  // namespace holocode

int main(int argc, char** argv) {
  using namespace holocode;
  CLI::App app{"Acceptance checks"};
  Options opt;
  opt.threads = std::max(1U, std::thread::hardware_concurrency());
  std::set<int> expect_fail;
  std::set<int> only;
  app.add_option("--threads", opt.threads, "Worker threads")->capture_default_str();
  app.add_option("--trials", opt.trials, "Trials per weight for the crossing checks")->capture_default_str();
  app.add_option("--syndromes", opt.syndromes, "Random syndromes per decode sector")->capture_default_str();
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail; they do not change the exit code");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>> criteria{
      {"seed tensor properties", seed_properties},
      {"tiling qubit counts", tiling_counts},
      {"single-tile codes", single_tiles},
      {"decoder matches exhaustive search", decoder_oracle},
      {"central-qubit distances", distances},
      {"binomial mixture", mixture},
      {"failure-curve crossings", thresholds},
      {"distance scaling fits", scaling},
      {"thread-count reproducibility", reproducibility},
      {"record uncertainty", uncertainty}};

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && !only.contains(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(opt);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    for (const auto& note : o.notes) std::cout << "    " << note << '\n';
    const bool expected = expect_fail.contains(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first
              << fmt(" (%.2f s)", seconds_since(t0));
    if (!o.pass && expected) std::cout << " [expected failure]";
    if (o.pass && expected) std::cout << " [listed as expected failure but passed]";
    std::cout << std::endl;
    if (!o.pass && !expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
