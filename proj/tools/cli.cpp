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


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "holocode/code_builder.hpp"
#include "holocode/decoder.hpp"
#include "holocode/distance.hpp"
#include "holocode/errors.hpp"
#include "holocode/seed_codes.hpp"
#include "holocode/sim_harness.hpp"
#include "holocode/tiling.hpp"

namespace holocode::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

// Boundary-qubit counts of the three tabulated families for radius 1..6.
struct CountRow {
  Family family;
  RateVariant variant;
  std::size_t n[6];
};
constexpr CountRow kReferenceCounts[] = {
    {Family::heptagon, RateVariant::max, {7, 42, 203, 973, 4662, 22337}},
    {Family::pentagon, RateVariant::reduced, {5, 25, 75, 255, 745, 2525}},
    {Family::pentagon, RateVariant::zero, {5, 25, 95, 355, 1325, 4945}},
};

// Largest radius each pipeline handles comfortably on one machine.
constexpr std::size_t kDeskDistanceRadius = 4;
constexpr std::size_t kDeskSimulationRadius = 3;

struct CodeSource {
  std::string code_path;
  std::string family = "heptagon";
  std::string variant = "max";
  std::size_t radius = 2;
  std::string seed_code;
};

struct Common {
  std::string config;
  std::optional<std::size_t> threads;
};

struct DecoderFlags {
  std::string mode = "auto";
  std::string objective = "pauli";
  std::string solver = "auto";
  double timeout = 60.0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "JSON config file or manifest; flags take precedence");
  sub->add_option("--threads", c.threads, "Worker threads (default: HOLOCODE_THREADS, then hardware)");
}

void add_code_source(CLI::App* sub, CodeSource& s) {
  sub->add_option("--code", s.code_path, "Code file written by `build` (overrides the family options)");
  sub->add_option("--family", s.family, "heptagon or pentagon")->capture_default_str();
  sub->add_option("--variant", s.variant, "max, reduced or zero")->capture_default_str();
  sub->add_option("--radius", s.radius, "Tiling radius (1 = central tile only)")->capture_default_str();
  sub->add_option("--seed-code", s.seed_code, "steane, scf or five-qubit (default per family)");
}

void add_decoder_flags(CLI::App* sub, DecoderFlags& d) {
  sub->add_option("--mode", d.mode, "auto, css or symplectic")->capture_default_str();
  sub->add_option("--objective", d.objective, "pauli or hamming")->capture_default_str();
  sub->add_option("--solver", d.solver, "auto, bnb or network")->capture_default_str();
  sub->add_option("--timeout", d.timeout, "Seconds per branch-and-bound solve")->capture_default_str();
}

std::size_t resolve_threads(const Common& c) {
  if (c.threads) return std::max<std::size_t>(*c.threads, 1);
  if (const char* env = std::getenv("HOLOCODE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("HOLOCODE_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
}

DecoderOptions decoder_options(const DecoderFlags& d) {
  DecoderOptions o;
  if (d.mode != "auto") o.mode = parse_mode(d.mode);
  o.objective = parse_objective(d.objective);
  o.solver = parse_solver(d.solver);
  o.limits.timeout_seconds = d.timeout;
  return o;
}

HolographicCode obtain_code(const CodeSource& s) {
  if (!s.code_path.empty()) return load_code(s.code_path);
  const Family f = parse_family(s.family);
  const RateVariant v = parse_variant(s.variant);
  if (s.radius == 0) throw DimensionError("radius must be at least 1");
  std::optional<SeedAssignment> seeds;
  if (!s.seed_code.empty()) seeds = SeedAssignment::from_logical(seed_by_name(s.seed_code));
  return build_code(f, s.radius, v, seeds);
}

std::size_t parse_target(const std::string& t, const HolographicCode& code) {
  if (t == "central") return code.central_qubit();
  std::size_t pos = 0;
  std::size_t id = 0;
  try {
    id = std::stoul(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("target must be 'central' or a qubit index, got '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("target must be 'central' or a qubit index, got '" + t + "'");
  if (id >= code.k()) throw DimensionError("target qubit " + t + " out of range");
  return id;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  const WeightSchedule w = WeightSchedule::parse(s);
  if (w.kind != WeightSchedule::Kind::list) throw ParseError("expected a comma separated list, got '" + s + "'");
  return w.weights;
}

// Config values come back as option strings.
std::vector<std::string> json_to_results(const json& v) {
  std::vector<std::string> out;
  auto scalar = [](const json& x) -> std::string {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_boolean()) return x.get<bool>() ? "true" : "false";
    return x.dump();
  };
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(scalar(x));
  } else {
    out.push_back(scalar(v));
  }
  return out;
}

void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("config '" + path + "': " + e.what());
  }
  const json& cfg = doc.contains("config") ? doc.at("config") : doc;
  if (!cfg.is_object()) throw ParseError("config '" + path + "' is not a JSON object");
  for (CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (opt->count() > 0 || name == "config" || name == "help" || !cfg.contains(name)) continue;
    for (const auto& r : json_to_results(cfg.at(name))) opt->add_result(r);
    opt->run_callback();
  }
}

json config_json(CLI::App* sub) {
  json cfg = json::object();
  for (CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "config" || name == "help") continue;
    if (opt->count() > 0) {
      const auto& r = opt->results();
      if (opt->get_items_expected_max() > 1) {
        cfg[name] = r;
      } else {
        cfg[name] = r.back();
      }
    } else if (!opt->get_default_str().empty()) {
      cfg[name] = opt->get_default_str();
    }
  }
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ParseError("failed writing '" + path + "'");
}

void write_manifest(const std::string& path, CLI::App* sub, const std::vector<std::string>& outputs) {
  json m;
  m["tool"] = "holocode";
  m["version"] = std::string(kVersion);
  m["command"] = sub->get_name();
  m["config"] = config_json(sub);
  m["outputs"] = outputs;
  write_text(path, m.dump(2) + "\n");
}

std::string manifest_for(const std::string& out) { return out + ".manifest.json"; }

// ---- build ----

int cmd_build(CLI::App* sub, const CodeSource& src, const std::string& out_arg, std::ostream& out) {
  const HolographicCode code = obtain_code(src);
  const std::string path = out_arg.empty() ? code.metadata.family + "-" + code.metadata.variant + "-R" +
                                                 std::to_string(code.metadata.radius) + ".code"
                                           : out_arg;
  save_code(code, path);
  write_manifest(manifest_for(path), sub, {path, path + ".json"});
  out << "n=" << code.n << " k=" << code.k() << " rate=" << static_cast<double>(code.k()) / static_cast<double>(code.n)
      << " css=" << (code.css ? "true" : "false") << " file=" << path << '\n';
  return kSuccess;
}

// ---- verify ----

struct Report {
  std::ostream& out;
  std::size_t failures = 0;

  void check(bool ok, const std::string& what, const std::string& detail = "") {
    out << (ok ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
    if (!ok) ++failures;
  }
};

void verify_seeds(Report& rep, const std::string& name) {
  struct Expect {
    std::string name;
    bool block_perfect;
    bool perfect;
  };
  const std::vector<Expect> expected = {{"steane", true, false}, {"scf", true, false}, {"five-qubit", true, true}};
  for (const auto& e : expected) {
    if (!name.empty() && name != "all" && seed_by_name(name).name != seed_by_name(e.name).name) continue;
    const SeedCode seed = seed_by_name(e.name);
    try {
      validate_seed(seed);
      rep.check(true, "seed " + e.name + " tableau");
    } catch (const std::exception& ex) {
      rep.check(false, "seed " + e.name + " tableau", ex.what());
      continue;
    }
    const bool bp = is_block_perfect(seed);
    const bool p = is_perfect(seed);
    rep.check(bp == e.block_perfect, "seed " + e.name + " block-perfect: " + (bp ? "true" : "false"));
    rep.check(p == e.perfect, "seed " + e.name + " perfect: " + (p ? "true" : "false"));
  }
}

void verify_tilings(Report& rep) {
  std::size_t matched = 0;
  std::size_t total = 0;
  for (const auto& row : kReferenceCounts) {
    for (std::size_t r = 1; r <= 6; ++r) {
      ++total;
      const TileGraph g = build_tiling(row.family, r, row.variant);
      validate_tiling(g);
      const std::size_t n = g.boundary.size();
      const bool ok = n == row.n[r - 1];
      matched += ok ? 1 : 0;
      std::ostringstream what;
      what << "tiling " << to_string(row.family) << "/" << to_string(row.variant) << " R=" << r << " n=" << n;
      if (!ok) what << " (expected " << row.n[r - 1] << ")";
      rep.check(ok, what.str());
    }
  }
  rep.check(matched == total, "tiling counts " + std::to_string(matched) + "/" + std::to_string(total) + " match");
}

void verify_code(Report& rep, const CodeSource& src) {
  const HolographicCode code = obtain_code(src);
  const std::string label = "code " + code.metadata.family + "/" + code.metadata.variant + " R=" +
                            std::to_string(code.metadata.radius);
  try {
    validate_code(code);
    rep.check(true, label + " invariants", "n=" + std::to_string(code.n) + " k=" + std::to_string(code.k()));
  } catch (const InvariantError& e) {
    rep.check(false, label + " invariants", e.what());
  }
  try {
    const Decoder decoder(std::make_shared<const HolographicCode>(code));
    rep.check(true, label + " decoder setup", decoder.uses_network() ? "network solver" : "branch and bound");
  } catch (const std::exception& e) {
    rep.check(false, label + " decoder setup", e.what());
  }
}

int cmd_verify(const std::string& what, const std::string& name, const CodeSource& src, std::ostream& out) {
  Report rep{out};
  if (what != "all" && what != "seed" && what != "tiling" && what != "code") {
    throw ParseError("verify target must be all, seed, tiling or code");
  }
  if (what == "all" || what == "seed") verify_seeds(rep, name);
  if (what == "all" || what == "tiling") verify_tilings(rep);
  if (what == "all" || what == "code") verify_code(rep, src);
  out << (rep.failures == 0 ? "all checks passed" : std::to_string(rep.failures) + " check(s) failed") << '\n';
  return rep.failures == 0 ? kSuccess : kInvariantFailure;
}

// ---- decode ----

std::string effect_string(const std::vector<unsigned>& effect) {
  std::string s;
  for (const unsigned e : effect) s.push_back("IXZY"[e & 3U]);
  return s;
}

int cmd_decode(CLI::App* sub, const CodeSource& src, const DecoderFlags& flags, const std::string& syndrome_arg,
               const std::string& error_arg, const std::string& out_path, std::ostream& out) {
  if (syndrome_arg.empty() == error_arg.empty()) throw ParseError("give exactly one of --syndrome and --error");
  auto code = std::make_shared<const HolographicCode>(obtain_code(src));
  const Decoder decoder(code, decoder_options(flags));
  std::optional<PauliVector> error;
  BitVec syn;
  if (!error_arg.empty()) {
    error = PauliVector::from_string(error_arg);
    if (error->size() != code->n) throw DimensionError("error length does not match n");
    syn = decoder.syndrome_of(*error);
  } else {
    syn = BitVec::from_string(syndrome_arg);
  }
  const DecodeResult r = decoder.decode(syn);
  json j;
  j["n"] = code->n;
  j["syndrome"] = syn.to_string();
  j["correction"] = r.correction.to_string();
  j["weight"] = r.correction.weight();
  j["mode"] = std::string(to_string(decoder.mode()));
  j["solver"] = decoder.uses_network() ? "network" : "bnb";
  j["certified"] = r.certified;
  j["sectors"] = json::array();
  for (const auto& c : r.sectors) j["sectors"].push_back({{"weight", c.weight}, {"certified", c.certified}});
  if (error) {
    PauliVector net = *error;
    net *= r.correction;
    const LogicalEffect e = net_logical_effect(*code, net);
    j["error"] = error->to_string();
    j["logical_effect"] = effect_string(e.effect);
    j["corrected"] = e.trivial();
  }
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
    write_manifest(manifest_for(out_path), sub, {out_path});
  }
  return r.timed_out ? kTimeoutBudget : kSuccess;
}

// ---- distance ----

json distance_row(const HolographicCode& code, const DistanceResult& r) {
  json j;
  j["family"] = code.metadata.family;
  j["variant"] = code.metadata.variant;
  j["R"] = code.metadata.radius;
  j["n"] = code.n;
  j["k"] = code.k();
  j["qubit"] = r.qubit;
  j["layer"] = code.logicals[r.qubit].layer;
  j["sector"] = std::string(to_string(r.sector));
  j["d_B"] = r.bit.value();
  j["d_W"] = r.word.value();
  j["d_B_bracket"] = {r.bit.lower, r.bit.upper};
  j["d_W_bracket"] = {r.word.lower, r.word.upper};
  j["certified"] = r.bit.certified && r.word.certified;
  return j;
}

std::vector<std::size_t> parse_qubits(const std::string& q, const HolographicCode& code) {
  if (q == "all") {
    std::vector<std::size_t> all(code.k());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  return {parse_target(q, code)};
}

int cmd_distance(CLI::App* sub, const CodeSource& src, const Common& common, const std::string& qubit,
                 const std::string& sector, const std::string& solver, double timeout, const std::string& out_path,
                 std::ostream& out) {
  const HolographicCode code = obtain_code(src);
  DistanceOptions opts;
  opts.solver = parse_solver(solver);
  opts.timeout_seconds = timeout;
  std::optional<DistanceSector> sec;
  if (sector != "auto") sec = parse_distance_sector(sector);
  const auto results = qubit_distances(code, parse_qubits(qubit, code), opts, resolve_threads(common), sec);
  json rows = json::array();
  bool certified = true;
  for (const auto& r : results) {
    rows.push_back(distance_row(code, r));
    certified = certified && r.bit.certified && r.word.certified;
  }
  const std::string text = rows.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
    write_manifest(manifest_for(out_path), sub, {out_path});
  }
  return certified ? kSuccess : kTimeoutBudget;
}

// ---- simulate / threshold / plotdata ----

struct SimFlags {
  std::string weights = "auto";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string target = "central";
  long max_timeouts = 0;
};

void add_sim_flags(CLI::App* sub, SimFlags& s) {
  sub->add_option("--weights", s.weights, "all, auto or a list such as 0,1,2")->capture_default_str();
  sub->add_option("--trials-per-weight", s.trials, "Trials per error weight")->capture_default_str();
  sub->add_option("--seed", s.seed, "Global random seed")->capture_default_str();
  sub->add_option("--target", s.target, "central or a logical qubit index")->capture_default_str();
  sub->add_option("--max-timeouts", s.max_timeouts, "Decoder timeouts tolerated before exit code 3 (-1: any)")
      ->capture_default_str();
}

FailureCurve run_simulation(const HolographicCode& code, const SimFlags& s, const DecoderFlags& d,
                            std::size_t threads) {
  SimulationConfig cfg;
  cfg.schedule = WeightSchedule::parse(s.weights);
  cfg.trials_per_weight = s.trials;
  cfg.seed = s.seed;
  cfg.target = parse_target(s.target, code);
  cfg.threads = threads;
  cfg.decoder = decoder_options(d);
  return simulate(code, cfg);
}

bool over_budget(const FailureCurve& c, long max_timeouts) {
  return max_timeouts >= 0 && c.timeouts() > static_cast<std::size_t>(max_timeouts);
}

int cmd_simulate(CLI::App* sub, const CodeSource& src, const Common& common, const SimFlags& s,
                 const DecoderFlags& d, const std::string& out_path, std::ostream& out) {
  const HolographicCode code = obtain_code(src);
  const FailureCurve curve = run_simulation(code, s, d, resolve_threads(common));
  write_curve_csv(out_path, curve);
  write_manifest(manifest_for(out_path), sub, {out_path});
  out << "wrote " << curve.records.size() << " weights to " << out_path << " (timeouts " << curve.timeouts()
      << ")\n";
  return over_budget(curve, s.max_timeouts) ? kTimeoutBudget : kSuccess;
}

json threshold_json(const ThresholdEstimate& t) {
  json j;
  j["p_th"] = t.p_th;
  j["bracket"] = {t.lo, t.hi};
  j["pairs"] = json::array();
  for (const auto& c : t.pairs) j["pairs"].push_back({{"radii", {c.radius_a, c.radius_b}}, {"p", c.p}});
  return j;
}

int cmd_threshold(CLI::App* sub, const std::vector<std::string>& files, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  if (files.size() < 2) throw ParseError("threshold needs at least two result files");
  std::vector<FailureCurve> curves;
  for (const auto& f : files) curves.push_back(read_curve_csv(f));
  ThresholdEstimate t;
  try {
    t = estimate_threshold(curves);
  } catch (const NoCrossingError& e) {
    err << "no crossing: " << e.what() << '\n';
    return kInvariantFailure;
  }
  const std::string text = threshold_json(t).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
    write_manifest(manifest_for(out_path), sub, {out_path});
  }
  return kSuccess;
}

std::string plot_table(const std::vector<FailureCurve>& curves, double p_min, double p_max, std::size_t points) {
  if (points < 2 || !(p_min >= 0.0 && p_max <= 1.0 && p_min < p_max)) {
    throw DimensionError("plot range needs 0 <= p-min < p-max <= 1 and at least 2 points");
  }
  std::ostringstream s;
  s << "family,variant,R,p,p_failure,sigma\n";
  s << std::setprecision(17);
  for (const auto& c : curves) {
    const auto table = complete_records(c);
    for (std::size_t i = 0; i < points; ++i) {
      const double p = p_min + (p_max - p_min) * static_cast<double>(i) / static_cast<double>(points - 1);
      const MixedPoint m = binomial_mix(table, p);
      s << c.family << ',' << c.variant << ',' << c.radius << ',' << p << ',' << m.value << ',' << m.sigma << '\n';
    }
  }
  return s.str();
}

// ---- reproduce ----

struct Family3 {
  Family family;
  RateVariant variant;
};
constexpr Family3 kTableFamilies[] = {
    {Family::heptagon, RateVariant::max},
    {Family::pentagon, RateVariant::reduced},
    {Family::pentagon, RateVariant::zero},
};

struct ReproFlags {
  std::string id;
  std::size_t max_radius = 3;
  std::string radii = "2,3";
  std::size_t trials = 2000;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  double timeout = 3600.0;
  std::string weights = "auto";
};

json distance_rows(const ReproFlags& f, std::size_t threads, std::ostream& err, bool& certified) {
  json rows = json::array();
  DistanceOptions opts;
  opts.timeout_seconds = f.timeout;
  for (const auto& fam : kTableFamilies) {
    for (std::size_t r = 1; r <= f.max_radius; ++r) {
      if (r > kDeskDistanceRadius) {
        err << "warning: " << to_string(fam.family) << "/" << to_string(fam.variant) << " R=" << r
            << " is above desk scale; distances may only be bracketed\n";
      }
      const HolographicCode code = build_code(fam.family, r, fam.variant);
      const auto res = qubit_distances(code, {code.central_qubit()}, opts, threads);
      rows.push_back(distance_row(code, res.front()));
      certified = certified && res.front().bit.certified && res.front().word.certified;
    }
  }
  return rows;
}

std::string table3_csv(const json& rows) {
  std::ostringstream s;
  s << "family,variant,R,n,k,d_B,d_W,certified\n";
  for (const auto& r : rows) {
    s << r["family"].get<std::string>() << ',' << r["variant"].get<std::string>() << ',' << r["R"] << ','
      << r["n"] << ',' << r["k"] << ',' << r["d_B"] << ',' << r["d_W"] << ','
      << (r["certified"].get<bool>() ? "true" : "false") << '\n';
  }
  return s.str();
}

json fit_json(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 3) return {{"error", "fewer than 3 points"}};
  try {
    const ScalingFit fit = fit_distance_scaling(pts);
    return {{"exponent", fit.exponent},
            {"interval", {fit.exponent - fit.half_width, fit.exponent + fit.half_width}},
            {"confidence", fit.confidence},
            {"points", fit.points}};
  } catch (const DimensionError& e) {
    return {{"error", e.what()}};
  }
}

json fig5_json(const json& rows) {
  json out;
  out["points"] = rows;
  out["fits"] = json::array();
  for (const auto& fam : kTableFamilies) {
    std::vector<std::pair<double, double>> bit;
    std::vector<std::pair<double, double>> word;
    for (const auto& r : rows) {
      if (r["family"] != std::string(to_string(fam.family)) || r["variant"] != std::string(to_string(fam.variant))) {
        continue;
      }
      if (!r["certified"].get<bool>()) continue;
      bit.emplace_back(r["n"].get<double>(), r["d_B"].get<double>());
      word.emplace_back(r["n"].get<double>(), r["d_W"].get<double>());
    }
    out["fits"].push_back({{"family", std::string(to_string(fam.family))},
                           {"variant", std::string(to_string(fam.variant))},
                           {"d_B", fit_json(bit)},
                           {"d_W", fit_json(word)}});
  }
  return out;
}

int reproduce_curves(const ReproFlags& f, Family fam, RateVariant var, std::size_t threads,
                     std::vector<std::string>& outputs, std::ostream& err) {
  const fs::path dir(f.out_dir);
  std::vector<std::size_t> radii = parse_list(f.radii);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::vector<FailureCurve> curves;
  bool budget = true;
  for (const auto r : radii) {
    if (r == 0) throw DimensionError("radius must be at least 1");
    if (r > kDeskSimulationRadius) {
      err << "warning: R=" << r << " simulation is above desk scale\n";
    }
    const HolographicCode code = build_code(fam, r, var);
    SimFlags s;
    s.weights = f.weights;
    s.trials = f.trials;
    s.seed = f.seed;
    FailureCurve c = run_simulation(code, s, DecoderFlags{}, threads);
    budget = budget && !over_budget(c, 0);
    const std::string name = f.id + "-R" + std::to_string(r) + ".csv";
    write_curve_csv((dir / name).string(), c);
    outputs.push_back(name);
    curves.push_back(std::move(c));
  }
  write_text((dir / (f.id + "-plot.csv")).string(), plot_table(curves, 0.0, 0.3, 61));
  outputs.push_back(f.id + "-plot.csv");

  // The reduced-rate family alternates rate with radius parity, so its
  // crossings are taken within each parity class when possible.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (var == RateVariant::reduced) {
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (std::size_t j = i + 1; j < curves.size(); ++j) {
        if (curves[i].radius % 2 == curves[j].radius % 2) {
          pairs.emplace_back(i, j);
          break;
        }
      }
    }
  }
  if (pairs.empty()) {
    for (std::size_t i = 0; i + 1 < curves.size(); ++i) pairs.emplace_back(i, i + 1);
  }
  json th;
  th["pairs"] = json::array();
  std::vector<double> ps;
  for (const auto& [i, j] : pairs) {
    json p{{"radii", {curves[i].radius, curves[j].radius}}};
    try {
      const double x = find_crossing(complete_records(curves[i]), complete_records(curves[j]));
      p["p"] = x;
      ps.push_back(x);
    } catch (const NoCrossingError& e) {
      p["error"] = e.what();
    }
    th["pairs"].push_back(p);
  }
  if (!ps.empty()) {
    double sum = 0.0;
    for (const double x : ps) sum += x;
    th["p_th"] = sum / static_cast<double>(ps.size());
    th["bracket"] = {*std::min_element(ps.begin(), ps.end()), *std::max_element(ps.begin(), ps.end())};
  }
  write_text((dir / (f.id + "-threshold.json")).string(), th.dump(2) + "\n");
  outputs.push_back(f.id + "-threshold.json");
  return budget ? kSuccess : kTimeoutBudget;
}

int cmd_reproduce(CLI::App* sub, const ReproFlags& f, const Common& common, std::ostream& out, std::ostream& err) {
  const std::size_t threads = resolve_threads(common);
  const fs::path dir(f.out_dir);
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  int code = kSuccess;
  if (f.id == "table3" || f.id == "fig5") {
    bool certified = true;
    const json rows = distance_rows(f, threads, err, certified);
    if (f.id == "table3") {
      write_text((dir / "table3.json").string(), rows.dump(2) + "\n");
      write_text((dir / "table3.csv").string(), table3_csv(rows));
      outputs = {"table3.json", "table3.csv"};
    } else {
      write_text((dir / "fig5.json").string(), fig5_json(rows).dump(2) + "\n");
      outputs = {"fig5.json"};
    }
    code = certified ? kSuccess : kTimeoutBudget;
  } else if (f.id == "fig3a") {
    code = reproduce_curves(f, Family::heptagon, RateVariant::max, threads, outputs, err);
  } else if (f.id == "fig3b") {
    code = reproduce_curves(f, Family::pentagon, RateVariant::reduced, threads, outputs, err);
  } else if (f.id == "fig3c") {
    code = reproduce_curves(f, Family::pentagon, RateVariant::zero, threads, outputs, err);
  } else {
    throw ParseError("unknown reproduce id '" + f.id + "' (table3, fig3a, fig3b, fig3c, fig5)");
  }
  write_manifest((dir / "manifest.json").string(), sub, outputs);
  for (const auto& o : outputs) out << "wrote " << (dir / o).string() << '\n';
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holographic stabilizer code workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  // build
  auto* build = app.add_subcommand("build", "Build a code and write it to a file");
  Common build_common;
  CodeSource build_src;
  std::string build_out;
  add_common(build, build_common);
  add_code_source(build, build_src);
  build->add_option("--out", build_out, "Output code file");

  // verify
  auto* verify = app.add_subcommand("verify", "Check seed, tiling and code invariants");
  Common verify_common;
  CodeSource verify_src;
  std::string verify_what = "all";
  std::string verify_name = "all";
  add_common(verify, verify_common);
  verify->add_option("what", verify_what, "all, seed, tiling or code")->capture_default_str();
  verify->add_option("--name", verify_name, "Seed to check (steane, scf, five-qubit or all)")->capture_default_str();
  add_code_source(verify, verify_src);

  // decode
  auto* decode = app.add_subcommand("decode", "Decode one syndrome or error");
  Common decode_common;
  CodeSource decode_src;
  DecoderFlags decode_flags;
  std::string decode_syndrome;
  std::string decode_error;
  std::string decode_out;
  add_common(decode, decode_common);
  add_code_source(decode, decode_src);
  add_decoder_flags(decode, decode_flags);
  decode->add_option("--syndrome", decode_syndrome, "Syndrome bits in stabilizer order");
  decode->add_option("--error", decode_error, "Pauli error string over I, X, Y, Z");
  decode->add_option("--out", decode_out, "Write the JSON result here instead of stdout");

  // distance
  auto* distance = app.add_subcommand("distance", "Bit and word distances of logical qubits");
  Common distance_common;
  CodeSource distance_src;
  std::string distance_qubit = "central";
  std::string distance_sector = "auto";
  std::string distance_solver = "auto";
  double distance_timeout = 3600.0;
  std::string distance_out;
  add_common(distance, distance_common);
  add_code_source(distance, distance_src);
  distance->add_option("--qubit", distance_qubit, "central, all or an index")->capture_default_str();
  distance->add_option("--sector", distance_sector, "auto, X, Z or pauli")->capture_default_str();
  distance->add_option("--solver", distance_solver, "auto, bnb or network")->capture_default_str();
  distance->add_option("--timeout", distance_timeout, "Seconds per branch-and-bound problem")->capture_default_str();
  distance->add_option("--out", distance_out, "Write the JSON rows here instead of stdout");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo failure rates per error weight");
  Common sim_common;
  CodeSource sim_src;
  SimFlags sim_flags;
  DecoderFlags sim_decoder;
  std::string sim_out = "results.csv";
  add_common(sim, sim_common);
  add_code_source(sim, sim_src);
  add_sim_flags(sim, sim_flags);
  add_decoder_flags(sim, sim_decoder);
  sim->add_option("--out", sim_out, "Output CSV")->capture_default_str();

  // threshold
  auto* thr = app.add_subcommand("threshold", "Crossing of failure curves from several radii");
  Common thr_common;
  std::vector<std::string> thr_files;
  std::string thr_out;
  add_common(thr, thr_common);
  thr->add_option("files", thr_files, "Result CSV files from `simulate`");
  thr->add_option("--out", thr_out, "Write the JSON result here instead of stdout");

  // plotdata
  auto* plot = app.add_subcommand("plotdata", "Mixed failure curves p, p_failure, sigma");
  Common plot_common;
  std::vector<std::string> plot_files;
  double plot_min = 0.0;
  double plot_max = 0.3;
  std::size_t plot_points = 61;
  std::string plot_out;
  add_common(plot, plot_common);
  plot->add_option("files", plot_files, "Result CSV files from `simulate`");
  plot->add_option("--p-min", plot_min, "Smallest physical error rate")->capture_default_str();
  plot->add_option("--p-max", plot_max, "Largest physical error rate")->capture_default_str();
  plot->add_option("--points", plot_points, "Grid points")->capture_default_str();
  plot->add_option("--out", plot_out, "Write the CSV here instead of stdout");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Canned pipelines: table3, fig3a, fig3b, fig3c, fig5");
  Common repro_common;
  ReproFlags repro_flags;
  add_common(repro, repro_common);
  repro->add_option("id", repro_flags.id, "table3, fig3a, fig3b, fig3c or fig5");
  repro->add_option("--max-radius", repro_flags.max_radius, "Largest radius for distance rows")->capture_default_str();
  repro->add_option("--radii", repro_flags.radii, "Radii for failure curves")->capture_default_str();
  repro->add_option("--trials", repro_flags.trials, "Trials per weight")->capture_default_str();
  repro->add_option("--weights", repro_flags.weights, "all, auto or a list")->capture_default_str();
  repro->add_option("--seed", repro_flags.seed, "Global random seed")->capture_default_str();
  repro->add_option("--timeout", repro_flags.timeout, "Seconds per distance problem")->capture_default_str();
  repro->add_option("--out-dir", repro_flags.out_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kBadInput;
  }

  const std::vector<std::pair<CLI::App*, Common*>> commons = {
      {build, &build_common}, {verify, &verify_common}, {decode, &decode_common}, {distance, &distance_common},
      {sim, &sim_common},     {thr, &thr_common},       {plot, &plot_common},     {repro, &repro_common}};
  try {
    for (const auto& [sub, common] : commons) {
      if (sub->parsed() && !common->config.empty()) apply_config(sub, common->config);
    }
    if (build->parsed()) return cmd_build(build, build_src, build_out, out);
    if (verify->parsed()) return cmd_verify(verify_what, verify_name, verify_src, out);
    if (decode->parsed()) {
      return cmd_decode(decode, decode_src, decode_flags, decode_syndrome, decode_error, decode_out, out);
    }
    if (distance->parsed()) {
      return cmd_distance(distance, distance_src, distance_common, distance_qubit, distance_sector, distance_solver,
                          distance_timeout, distance_out, out);
    }
    if (sim->parsed()) return cmd_simulate(sim, sim_src, sim_common, sim_flags, sim_decoder, sim_out, out);
    if (thr->parsed()) return cmd_threshold(thr, thr_files, thr_out, out, err);
    if (plot->parsed()) {
      std::vector<FailureCurve> curves;
      for (const auto& f : plot_files) curves.push_back(read_curve_csv(f));
      if (curves.empty()) throw ParseError("plotdata needs at least one result file");
      const std::string text = plot_table(curves, plot_min, plot_max, plot_points);
      if (plot_out.empty()) {
        out << text;
      } else {
        write_text(plot_out, text);
        write_manifest(manifest_for(plot_out), plot, {plot_out});
      }
      return kSuccess;
    }
    if (repro->parsed()) return cmd_reproduce(repro, repro_flags, repro_common, out, err);
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariantFailure;
  } catch (const NoCrossingError& e) {
    err << "no crossing: " << e.what() << '\n';
    return kInvariantFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace holocode::cli
