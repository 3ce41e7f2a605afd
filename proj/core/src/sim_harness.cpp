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


#include "holocode/sim_harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <boost/math/distributions/binomial.hpp>

#include "holocode/errors.hpp"

namespace holocode {

PauliVector sample_fixed_weight_error(std::size_t n, std::size_t a, CounterRng& rng) {
  if (a > n) throw DimensionError("error weight exceeds the qubit count");
  PauliVector e(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Partial Fisher-Yates: order[0, a) is a uniform a-subset.
  for (std::size_t i = 0; i < a; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
    std::swap(order[i], order[j]);
    e.set(order[i], 1U + static_cast<unsigned>(rng.uniform_below(3)));
  }
  return e;
}

WeightRecord make_record(std::size_t a, std::size_t m, std::size_t f, std::size_t timeouts) {
  if (f > m) throw DimensionError("failure count exceeds the trial count");
  WeightRecord r;
  r.a = a;
  r.m = m;
  r.f = f;
  r.timeouts = timeouts;
  if (m > 0) {
    r.p = static_cast<double>(f) / static_cast<double>(m);
    r.sigma = std::sqrt(r.p * (1.0 - r.p) / static_cast<double>(m));
  }
  return r;
}

std::uint32_t code_stream_id(const HolographicCode& code) {
  const std::string key = code.metadata.family + "|" + code.metadata.variant + "|" +
                          std::to_string(code.metadata.radius) + "|" + code.metadata.seed + "|" +
                          std::to_string(code.n) + "|" + std::to_string(code.k());
  // 32-bit FNV-1a.
  std::uint32_t h = 2166136261U;
  for (const char c : key) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619U;
  }
  return h;
}

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers and rethrows the
// first exception.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

enum : std::uint8_t { kOk = 0, kFail = 1, kTimeout = 2 };

}  // namespace

WeightRecord run_trials(const TrialContext& ctx, std::size_t a, std::size_t m) {
  if (ctx.decoder == nullptr || ctx.analyzer == nullptr) throw DimensionError("trial context is incomplete");
  if (m == 0) throw DimensionError("run_trials needs at least one trial");
  const HolographicCode& code = ctx.decoder->code();
  if (ctx.target >= code.k()) throw DimensionError("target qubit out of range");
  if (a > code.n) throw DimensionError("error weight exceeds the qubit count");
  if (m > (std::size_t{1} << 32) || a >= (std::size_t{1} << 32)) throw DimensionError("trial index overflows");

  std::vector<std::uint8_t> outcome(m, kOk);
  parallel_for(m, ctx.threads, [&](std::size_t t) {
    CounterRng rng(ctx.seed, ctx.stream, (static_cast<std::uint64_t>(a) << 32) | t);
    const PauliVector e = sample_fixed_weight_error(code.n, a, rng);
    const DecodeResult r = ctx.decoder->decode(ctx.decoder->syndrome_of(e));
    PauliVector net = e;
    net *= r.correction;
    const LogicalEffect effect = ctx.analyzer->effect(net);
    if (effect.detectable) throw InvariantError("net error after decoding has a nonzero syndrome");
    if (r.timed_out) {
      outcome[t] = kTimeout;
    } else if (effect.effect[ctx.target] != 0) {
      outcome[t] = kFail;
    }
  });
  std::size_t f = 0;
  std::size_t timeouts = 0;
  for (const auto o : outcome) {
    f += o != kOk ? 1 : 0;
    timeouts += o == kTimeout ? 1 : 0;
  }
  return make_record(a, m, f, timeouts);
}

WeightRecord run_trials(const HolographicCode& code, std::size_t target, std::size_t a, std::size_t m,
                        std::uint64_t seed, std::size_t threads) {
  const Decoder decoder(std::make_shared<const HolographicCode>(code));
  const LogicalAnalyzer analyzer(code);
  TrialContext ctx{&decoder, &analyzer, target, seed, code_stream_id(code), threads};
  return run_trials(ctx, a, m);
}

std::size_t FailureCurve::timeouts() const {
  std::size_t t = 0;
  for (const auto& r : records) t += r.timeouts;
  return t;
}

std::vector<WeightRecord> complete_records(const FailureCurve& curve) {
  const std::size_t n = curve.n;
  std::vector<const WeightRecord*> at(n + 1, nullptr);
  for (const auto& r : curve.records) {
    if (r.a > n) throw DimensionError("record weight exceeds n");
    if (at[r.a] != nullptr) throw DimensionError("duplicate record weight");
    at[r.a] = &r;
  }
  std::vector<WeightRecord> out(n + 1);
  // Anchor: the zero-weight error never fails.
  WeightRecord zero;
  const WeightRecord* prev = at[0] != nullptr ? at[0] : &zero;
  std::size_t prev_a = 0;
  for (std::size_t a = 0; a <= n; ++a) {
    if (at[a] != nullptr) {
      out[a] = *at[a];
      prev = at[a];
      prev_a = a;
      continue;
    }
    std::size_t next_a = a + 1;
    while (next_a <= n && at[next_a] == nullptr) ++next_a;
    WeightRecord r;
    r.a = a;
    r.filled = true;
    if (next_a > n) {
      r.p = prev->p;
      r.sigma = prev->sigma;
    } else {
      const double t = static_cast<double>(a - prev_a) / static_cast<double>(next_a - prev_a);
      r.p = prev->p + t * (at[next_a]->p - prev->p);
      r.sigma = prev->sigma + t * (at[next_a]->sigma - prev->sigma);
    }
    out[a] = r;
  }
  return out;
}

MixedPoint binomial_mix(const std::vector<WeightRecord>& records, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DimensionError("physical error rate must lie in [0, 1]");
  if (records.empty()) throw DimensionError("binomial_mix needs records for every weight");
  const std::size_t n = records.size() - 1;
  for (std::size_t a = 0; a <= n; ++a) {
    if (records[a].a != a) throw DimensionError("binomial_mix needs records for every weight 0..n in order");
  }
  MixedPoint out;
  out.p = p;
  const boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
  double var = 0.0;
  for (std::size_t a = 0; a <= n; ++a) {
    const double w = boost::math::pdf(dist, static_cast<double>(a));
    out.value += w * records[a].p;
    var += (w * records[a].sigma) * (w * records[a].sigma);
  }
  out.value = std::clamp(out.value, 0.0, 1.0);
  out.sigma = std::sqrt(var);
  return out;
}

double find_crossing(const CurveFunction& a, const CurveFunction& b, double lo, double hi) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) throw DimensionError("crossing interval must lie in [0, 1]");
  constexpr std::size_t kGrid = 2000;
  auto diff = [&](double p) {
    const MixedPoint x = a(p);
    const MixedPoint y = b(p);
    return std::pair{x.value - y.value, std::hypot(x.sigma, y.sigma)};
  };
  std::vector<double> ps;
  std::vector<double> g;
  std::vector<int> significant;
  for (std::size_t i = 1; i < kGrid; ++i) {
    const double p = lo + (hi - lo) * static_cast<double>(i) / kGrid;
    const auto [d, s] = diff(p);
    ps.push_back(p);
    g.push_back(d);
    significant.push_back(std::abs(d) > s && d != 0.0 ? (d > 0 ? 1 : -1) : 0);
  }
  const std::size_t none = ps.size();
  auto sign = [](double d) { return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0); };

  // A transition at i: g[i] != 0 and the next nonzero value has the other sign,
  // or g stays exactly zero from i + 1 to the end of the grid.
  auto transition_in = [&](std::size_t from, std::size_t to) -> std::size_t {
    for (std::size_t i = from; i < to; ++i) {
      if (g[i] == 0.0) continue;
      std::size_t j = i + 1;
      while (j < ps.size() && g[j] == 0.0) ++j;
      if (j == ps.size()) return i + 1 < ps.size() ? i : none;
      if (sign(g[j]) != sign(g[i]) && j <= to) return i;
    }
    return none;
  };

  // Prefer a bracket between consecutive significant points of opposite sign.
  std::size_t left = none;
  std::size_t last = none;
  for (std::size_t i = 0; i < ps.size() && left == none; ++i) {
    if (significant[i] == 0) continue;
    if (last != none && significant[last] != significant[i]) left = transition_in(last, i);
    last = i;
  }
  if (left == none) left = transition_in(0, ps.size() - 1);
  if (left == none) throw NoCrossingError("failure curves do not cross on the interval");

  const int side = sign(g[left]);
  double x0 = ps[left];
  // g at the next grid point is zero or of the other sign by construction.
  double x1 = ps[left + 1];
  for (int it = 0; it < 200 && x1 - x0 > 1e-14; ++it) {
    const double mid = 0.5 * (x0 + x1);
    if (sign(diff(mid).first) == side) {
      x0 = mid;
    } else {
      x1 = mid;
    }
  }
  return 0.5 * (x0 + x1);
}

double find_crossing(const std::vector<WeightRecord>& a, const std::vector<WeightRecord>& b, double lo, double hi) {
  return find_crossing([&](double p) { return binomial_mix(a, p); }, [&](double p) { return binomial_mix(b, p); },
                       lo, hi);
}

ThresholdEstimate estimate_threshold(std::vector<FailureCurve> curves) {
  if (curves.size() < 2) throw DimensionError("threshold estimation needs at least two curves");
  std::sort(curves.begin(), curves.end(), [](const auto& x, const auto& y) { return x.radius < y.radius; });
  ThresholdEstimate out;
  out.lo = 1.0;
  out.hi = 0.0;
  for (std::size_t i = 0; i + 1 < curves.size(); ++i) {
    if (curves[i].radius == curves[i + 1].radius) throw DimensionError("threshold curves need distinct radii");
    Crossing c{curves[i].radius, curves[i + 1].radius,
               find_crossing(complete_records(curves[i]), complete_records(curves[i + 1]))};
    out.lo = std::min(out.lo, c.p);
    out.hi = std::max(out.hi, c.p);
    out.p_th += c.p;
    out.pairs.push_back(c);
  }
  out.p_th /= static_cast<double>(out.pairs.size());
  return out;
}

WeightSchedule WeightSchedule::parse(std::string_view s) {
  WeightSchedule w;
  if (s == "all") {
    w.kind = Kind::all;
    return w;
  }
  if (s == "auto") {
    w.kind = Kind::automatic;
    return w;
  }
  w.kind = Kind::list;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    const std::string_view item = s.substr(pos, end - pos);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("bad weight list entry '" + std::string(item) + "'");
    }
    w.weights.push_back(value);
    pos = end + 1;
  }
  return w;
}

std::vector<std::size_t> coarse_weight_grid(std::size_t n) {
  constexpr std::size_t kSteps = 32;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= kSteps; ++i) out.push_back((n * i + kSteps / 2) / kSteps);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> refine_weight_grid(std::size_t n, const std::vector<WeightRecord>& pilot) {
  constexpr std::size_t kDense = 64;
  constexpr std::size_t kLow = 16;
  std::vector<std::size_t> out = coarse_weight_grid(n);
  // [a_lo, a_hi] spans the pilot weights around the 0.02..0.98 band.
  std::size_t a_lo = 0;
  std::size_t a_hi = n;
  for (const auto& r : pilot) {
    if (r.p <= 0.02) a_lo = std::max(a_lo, r.a);
  }
  for (auto it = pilot.rbegin(); it != pilot.rend(); ++it) {
    if (it->p >= 0.98 && it->a > a_lo) a_hi = std::min(a_hi, it->a);
  }
  if (a_hi - a_lo <= kDense) {
    for (std::size_t a = a_lo; a <= a_hi; ++a) out.push_back(a);
  } else {
    for (std::size_t i = 0; i <= kDense; ++i) out.push_back(a_lo + (a_hi - a_lo) * i / kDense);
  }
  // Small weights dominate the mixture at low p.
  if (a_lo <= kLow) {
    for (std::size_t a = 0; a <= a_lo; ++a) out.push_back(a);
  } else {
    for (std::size_t i = 0; i <= kLow; ++i) out.push_back(a_lo * i / kLow);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FailureCurve simulate(const HolographicCode& code, const SimulationConfig& config) {
  if (config.target >= code.k()) throw DimensionError("target qubit out of range");
  if (config.trials_per_weight == 0) throw DimensionError("trials per weight must be positive");
  const Decoder decoder(std::make_shared<const HolographicCode>(code), config.decoder);
  const LogicalAnalyzer analyzer(code);
  const TrialContext ctx{&decoder, &analyzer, config.target, config.seed, code_stream_id(code), config.threads};

  std::vector<std::size_t> weights;
  switch (config.schedule.kind) {
    case WeightSchedule::Kind::list:
      weights = config.schedule.weights;
      for (auto a : weights) {
        if (a > code.n) throw DimensionError("scheduled weight exceeds n");
      }
      std::sort(weights.begin(), weights.end());
      weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
      break;
    case WeightSchedule::Kind::automatic:
      if (code.n > config.full_schedule_max_n) {
        const std::size_t m0 = std::max<std::size_t>(32, config.trials_per_weight / 10);
        std::vector<WeightRecord> pilot;
        for (auto a : coarse_weight_grid(code.n)) pilot.push_back(run_trials(ctx, a, m0));
        weights = refine_weight_grid(code.n, pilot);
        break;
      }
      [[fallthrough]];
    case WeightSchedule::Kind::all:
      weights.resize(code.n + 1);
      std::iota(weights.begin(), weights.end(), std::size_t{0});
      break;
  }

  FailureCurve curve;
  curve.family = code.metadata.family;
  curve.variant = code.metadata.variant;
  curve.radius = code.metadata.radius;
  curve.n = code.n;
  curve.k = code.k();
  curve.target = config.target;
  for (auto a : weights) curve.records.push_back(run_trials(ctx, a, config.trials_per_weight));
  return curve;
}

namespace {

constexpr const char* kCsvHeader = "family,variant,R,n,k,target,a,m,f,P,sigma,timeouts";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::size_t parse_count(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "'");
  }
  if (used != s.size()) throw ParseError("bad number '" + s + "'");
  return v;
}

}  // namespace

void write_curve_csv(std::ostream& out, const FailureCurve& curve, bool header) {
  if (header) out << kCsvHeader << '\n';
  for (const auto& r : curve.records) {
    out << curve.family << ',' << curve.variant << ',' << curve.radius << ',' << curve.n << ',' << curve.k << ','
        << curve.target << ',' << r.a << ',' << r.m << ',' << r.f << ',' << format_double(r.p) << ','
        << format_double(r.sigma) << ',' << r.timeouts << '\n';
  }
}

void write_curve_csv(const std::string& path, const FailureCurve& curve) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_curve_csv(out, curve);
  if (!out) throw ParseError("failed writing '" + path + "'");
}

FailureCurve read_curve_csv(std::istream& in) {
  FailureCurve curve;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty failure-curve file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError("unexpected failure-curve header '" + line + "'");
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 12) throw ParseError("failure-curve row needs 12 fields: '" + line + "'");
    FailureCurve head;
    head.family = f[0];
    head.variant = f[1];
    head.radius = parse_count(f[2]);
    head.n = parse_count(f[3]);
    head.k = parse_count(f[4]);
    head.target = parse_count(f[5]);
    if (first) {
      curve = head;
      first = false;
    } else if (head.family != curve.family || head.variant != curve.variant || head.radius != curve.radius ||
               head.n != curve.n || head.k != curve.k || head.target != curve.target) {
      throw ParseError("failure-curve file mixes several curves");
    }
    WeightRecord r;
    r.a = parse_count(f[6]);
    r.m = parse_count(f[7]);
    r.f = parse_count(f[8]);
    r.p = parse_double(f[9]);
    r.sigma = parse_double(f[10]);
    r.timeouts = parse_count(f[11]);
    if (r.f > r.m || r.a > head.n) throw ParseError("inconsistent failure-curve row '" + line + "'");
    curve.records.push_back(r);
  }
  if (first) throw ParseError("failure-curve file has no rows");
  return curve;
}

FailureCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_curve_csv(in);
}

}  // namespace holocode
