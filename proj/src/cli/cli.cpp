/*
   Copyright 2026 The hullwalk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hullwalk/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "hullwalk/error.hpp"
#include "hullwalk/exact_oracles.hpp"
#include "hullwalk/verify.hpp"

#ifndef HULLWALK_VERSION
#define HULLWALK_VERSION "unknown"
#endif

namespace hullwalk::cli {

namespace pt = boost::property_tree;
using nlohmann::json;

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Line numbers of "section.key" entries, for diagnostics only.
std::map<std::string, int> key_lines(const std::string &text) {
  std::map<std::string, int> lines;
  std::istringstream is(text);
  std::string line, section;
  for (int number = 1; std::getline(is, line); ++number) {
    line = trim(line);
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
    } else if (const auto eq = line.find('='); eq != std::string::npos) {
      lines.emplace(section + "." + trim(line.substr(0, eq)), number);
    }
  }
  return lines;
}

class ConfigReader {
public:
  explicit ConfigReader(const std::string &text) : lines_(key_lines(text)) {
    std::istringstream is(text);
    try {
      pt::read_ini(is, tree_);
    } catch (const pt::ini_parser_error &e) {
      throw InputError("config line " + std::to_string(e.line()) + ": " + e.message());
    }
    for (const auto &[section, body] : tree_) {
      if (body.empty() && !body.data().empty()) {
        fail(section, "key outside of any section");
      }
      for (const auto &[key, value] : body) {
        echo_.emplace_back(section + "." + key, trim(value.data()));
      }
    }
  }

  [[noreturn]] void fail(const std::string &field, const std::string &what) const {
    const auto it = lines_.find(field);
    std::string where = it != lines_.end() ? "config line " + std::to_string(it->second) + ", "
                                           : "config ";
    throw InputError(where + "field " + field + ": " + what);
  }

  void allow(const std::string &section, std::initializer_list<const char *> keys) {
    known_sections_.insert(section);
    for (const char *k : keys) known_.insert(section + "." + k);
  }

  void reject_unknown() const {
    for (const auto &[field, value] : echo_) {
      const std::string section = field.substr(0, field.find('.'));
      if (!known_sections_.count(section)) fail(field, "unknown section [" + section + "]");
      if (!known_.count(field)) fail(field, "unknown key");
    }
  }

  std::optional<std::string> text(const std::string &field) const {
    const auto v = tree_.get_optional<std::string>(pt::ptree::path_type(field, '.'));
    if (!v) return std::nullopt;
    return trim(*v);
  }

  std::string required(const std::string &field) const {
    auto v = text(field);
    if (!v) fail(field, "missing");
    return *v;
  }

  double to_double(const std::string &field, const std::string &s) const {
    double x = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x)) {
      fail(field, "'" + s + "' is not a finite number");
    }
    return x;
  }

  std::uint64_t to_count(const std::string &field, const std::string &s) const {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && end == s.data() + s.size()) return v;
    // Also accept integral scientific notation such as 1e4.
    const double x = to_double(field, s);
    if (x < 0.0 || x != std::floor(x) || x > 9.0e15) {
      fail(field, "'" + s + "' is not a nonnegative integer");
    }
    return static_cast<std::uint64_t>(x);
  }

  std::vector<double> numbers(const std::string &field, const std::string &s) const {
    std::vector<double> out;
    std::string norm = s;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    for (const auto &tok : split(norm, ' ')) out.push_back(to_double(field, tok));
    return out;
  }

  bool to_bool(const std::string &field, const std::string &s) const {
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    fail(field, "'" + s + "' is not a boolean");
  }

  const std::vector<std::pair<std::string, std::string>> &echo() const { return echo_; }

private:
  pt::ptree tree_;
  std::map<std::string, int> lines_;
  std::vector<std::pair<std::string, std::string>> echo_;
  std::set<std::string> known_, known_sections_;
};

IncrementModel parse_model(const ConfigReader &cfg) {
  const auto name = cfg.text("model.name");
  const auto kind = cfg.text("model.kind");
  if (name && !kind) {
    try {
      return IncrementModel::builtin(*name);
    } catch (const InputError &e) {
      cfg.fail("model.name", e.what());
    }
  }
  if (!kind) cfg.fail("model.name", "missing (give a built-in name or a kind)");
  const std::string label = name.value_or("custom_" + *kind);
  try {
    if (*kind == "atoms") {
      std::vector<Atom> atoms;
      for (const auto &entry : split(cfg.required("model.atoms"), ';')) {
        const auto v = cfg.numbers("model.atoms", entry);
        if (v.size() != 3) cfg.fail("model.atoms", "each atom needs 'probability x y'");
        atoms.push_back({v[0], {v[1], v[2]}});
      }
      return IncrementModel::atoms(label, std::move(atoms));
    }
    if (*kind == "gaussian") {
      const auto mean = cfg.numbers("model.mean", cfg.text("model.mean").value_or("0 0"));
      const auto cov = cfg.numbers("model.covariance", cfg.required("model.covariance"));
      if (mean.size() != 2) cfg.fail("model.mean", "needs 2 numbers");
      if (cov.size() != 4) cfg.fail("model.covariance", "needs 4 numbers (row major)");
      return IncrementModel::gaussian(label, {mean[0], mean[1]}, {cov[0], cov[1], cov[2], cov[3]});
    }
    if (*kind == "spacetime") {
      const std::string vertical = cfg.required("model.vertical");
      if (vertical == "normal") {
        const double m = cfg.to_double("model.mean", cfg.text("model.mean").value_or("0"));
        const double s = cfg.to_double("model.stddev", cfg.text("model.stddev").value_or("1"));
        return IncrementModel::spacetime(label, ScalarNormal{m, s});
      }
      if (vertical == "atoms") {
        std::vector<ScalarAtom> atoms;
        for (const auto &entry : split(cfg.required("model.atoms"), ';')) {
          const auto v = cfg.numbers("model.atoms", entry);
          if (v.size() != 2) cfg.fail("model.atoms", "each atom needs 'probability value'");
          atoms.push_back({v[0], v[1]});
        }
        return IncrementModel::spacetime(label, std::move(atoms));
      }
      cfg.fail("model.vertical", "expected 'normal' or 'atoms'");
    }
  } catch (const InputError &e) {
    const std::string what = e.what();
    if (what.rfind("config ", 0) == 0) throw;
    cfg.fail("model.kind", what);
  }
  cfg.fail("model.kind", "unknown kind '" + *kind + "' (expected atoms, gaussian or spacetime)");
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write " + path.string());
  os << content;
  if (!os) throw InputError("cannot write " + path.string());
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json vec_json(const Vec2 &v) { return json::array({v.x, v.y}); }
json mat_json(const Mat2 &m) { return json::array({m.a, m.b, m.c, m.d}); }

} // namespace

RunConfig parse_config(const std::string &text) {
  ConfigReader cfg(text);
  cfg.allow("model", {"name", "kind", "atoms", "mean", "covariance", "vertical", "stddev"});
  cfg.allow("run", {"n", "n_grid", "replicas", "seed", "threads", "memory_cap_mb"});
  cfg.allow("outputs", {"metrics", "max_norm_p", "ks_reference"});
  cfg.reject_unknown();

  RunConfig rc;
  ExperimentConfig &c = rc.experiment;
  c.model = parse_model(cfg);

  const auto n = cfg.text("run.n");
  const auto grid = cfg.text("run.n_grid");
  if (!n && !grid) cfg.fail("run.n", "missing (give n or n_grid)");
  if (grid) {
    for (const auto &tok : split(*grid, ',')) c.n_grid.push_back(cfg.to_count("run.n_grid", tok));
    if (c.n_grid.empty()) cfg.fail("run.n_grid", "empty list");
  }
  c.n = n ? cfg.to_count("run.n", *n) : c.n_grid.back();
  c.replicas = cfg.to_count("run.replicas", cfg.required("run.replicas"));
  c.master_seed = cfg.to_count("run.seed", cfg.required("run.seed"));
  if (const auto t = cfg.text("run.threads")) {
    c.threads = static_cast<unsigned>(cfg.to_count("run.threads", *t));
  }
  if (const auto m = cfg.text("run.memory_cap_mb")) {
    c.memory_cap_bytes = cfg.to_count("run.memory_cap_mb", *m) << 20;
  }

  if (const auto metrics = cfg.text("outputs.metrics")) {
    c.outputs.perimeter = c.outputs.area = false;
    for (const auto &m : split(*metrics, ',')) {
      if (m == "perimeter" || m == "L") {
        c.outputs.perimeter = true;
      } else if (m == "area" || m == "A") {
        c.outputs.area = true;
      } else {
        cfg.fail("outputs.metrics", "unknown metric '" + m + "' (expected perimeter, area)");
      }
    }
  }
  if (const auto p = cfg.text("outputs.max_norm_p")) {
    c.outputs.max_norm_p = cfg.to_double("outputs.max_norm_p", *p);
  }
  if (const auto ks = cfg.text("outputs.ks_reference")) {
    c.ks_reference = cfg.to_bool("outputs.ks_reference", *ks);
  }
  if (c.ks_reference && !c.outputs.area) {
    cfg.fail("outputs.ks_reference", "needs the area metric");
  }

  try {
    c.validate();
  } catch (const InputError &e) {
    const std::string what = e.what();
    cfg.fail(what.find("replicas") != std::string::npos ? "run.replicas" : "run.n", what);
  }
  rc.echo = cfg.echo();
  return rc;
}

RunConfig load_config(const std::filesystem::path &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config(buf.str());
}

SimulationOutput run_simulation(const ExperimentConfig &config) {
  config.validate();
  SimulationOutput out;
  std::vector<std::size_t> lengths = config.n_grid;
  if (lengths.empty()) lengths.push_back(config.n);
  for (std::size_t n : lengths) {
    ExperimentConfig c = config;
    c.n = n;
    const auto start = std::chrono::steady_clock::now();
    const ReplicaSamples samples = simulate_replicas(c);
    EstimatorReport rep = summarize(c, samples);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (config.ks_reference) {
      // Area limits: a1 for zero drift (after dividing by sqrt det), atilde1 with drift.
      const WalkStats &s = rep.stats;
      const bool drift = !s.zero_drift();
      const double nn = static_cast<double>(n);
      const double scale = drift ? std::pow(nn, 1.5) * norm(s.mu) * std::sqrt(*s.sigma2_perp)
                                 : nn * std::sqrt(s.sigma_mat.det());
      if (scale > 0.0) {
        std::vector<double> scaled(samples.area);
        for (double &v : scaled) v /= scale;
        const ReferenceKind kind = drift ? ReferenceKind::atilde1 : ReferenceKind::a1;
        const Sample ref = brownian_reference(std::max<std::size_t>(n, 1000), c.replicas, kind,
                                              config.master_seed ^ 0x9e3779b97f4a7c15ULL,
                                              config.threads);
        out.ks.push_back({n, std::string("ks_A_") + to_string(kind),
                          ks_distance(Sample(std::move(scaled)), ref)});
      }
    }
    out.reports.push_back(std::move(rep));
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string simulation_csv(const SimulationOutput &out) {
  std::string csv = "n,metric,estimate,ci_half_width,scaled_estimate,scaled_target_if_known\n";
  const auto row = [&](std::size_t n, const std::string &metric, double est, double ci,
                       const ScaledConstant *sc) {
    csv += std::to_string(n) + "," + metric + "," + format_double(est) + ",";
    if (!std::isnan(ci)) csv += format_double(ci);
    csv += ",";
    if (sc) {
      csv += format_double(sc->estimate);
      csv += ",";
      if (sc->target) csv += format_double(*sc->target);
    } else {
      csv += ",";
    }
    csv += "\n";
  };
  for (const EstimatorReport &rep : out.reports) {
    const auto scaled_for = [&](const std::string &source) -> const ScaledConstant * {
      for (const auto &sc : rep.scaled) {
        if (sc.source == source) return &sc;
      }
      return nullptr;
    };
    for (const MetricSummary &m : rep.metrics) {
      row(rep.n, "mean_" + m.name, m.mean, m.mean_ci, scaled_for("mean_" + m.name));
      row(rep.n, "var_" + m.name, m.variance, m.variance_ci, scaled_for("var_" + m.name));
    }
    for (const KsRow &k : out.ks) {
      if (k.n == rep.n) row(rep.n, k.metric, k.distance, std::nan(""), nullptr);
    }
  }
  return csv;
}

json report_json(const EstimatorReport &rep) {
  json stats = {{"mu", vec_json(rep.stats.mu)},
                {"sigma", mat_json(rep.stats.sigma_mat)},
                {"sigma2", rep.stats.sigma2},
                {"lambda_max", rep.stats.lambda_max},
                {"zero_drift", rep.stats.zero_drift()}};
  if (!rep.stats.zero_drift()) {
    stats["mu_hat"] = vec_json(*rep.stats.mu_hat);
    stats["sigma2_mu"] = *rep.stats.sigma2_mu;
    stats["sigma2_perp"] = *rep.stats.sigma2_perp;
  }
  json metrics = json::array();
  for (const auto &m : rep.metrics) {
    metrics.push_back({{"name", m.name},
                       {"count", m.count},
                       {"mean", m.mean},
                       {"mean_ci_half_width", m.mean_ci},
                       {"variance", m.variance},
                       {"variance_ci_half_width", m.variance_ci}});
  }
  json scaled = json::array();
  for (const auto &s : rep.scaled) {
    json j = {{"name", s.name},
              {"source", s.source},
              {"exponent", s.exponent},
              {"normalizer", s.normalizer},
              {"estimate", s.estimate},
              {"ci_half_width", s.ci_half_width},
              {"target", s.target ? json(*s.target) : json(nullptr)}};
    if (s.target) j["target_exact"] = s.target_exact;
    scaled.push_back(std::move(j));
  }
  return {{"model", rep.model_name}, {"n", rep.n},
          {"replicas", rep.replicas}, {"master_seed", rep.master_seed},
          {"stats", stats},           {"metrics", metrics},
          {"scaled", scaled},         {"threads", rep.threads},
          {"wall_seconds", rep.wall_seconds}};
}

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out_dir;
  bool table2 = false;
  std::string model;
  std::vector<std::size_t> ns;
  double trace = 2.0;
  std::string suite;
  std::string reference_kind;
  std::size_t reference_m = 10'000;
  std::size_t reference_replicas = 10'000;
};

json manifest(const std::string &subcommand, const Options &o, const json &config_echo,
              const json &outputs, const std::string &started, std::uint64_t seed) {
  return {{"subcommand", subcommand},
          {"config_path", o.config.empty() ? json(nullptr) : json(o.config)},
          {"config", config_echo},
          {"outputs", outputs},
          {"started_utc", started},
          {"finished_utc", utc_now()},
          {"engine_version", HULLWALK_VERSION},
          {"master_seed", seed}};
}

int cmd_simulate(const Options &o, std::ostream &out) {
  const std::string started = utc_now();
  RunConfig rc = load_config(o.config);
  if (o.seed) rc.experiment.master_seed = *o.seed;
  if (o.threads) rc.experiment.threads = *o.threads;
  const SimulationOutput sim = run_simulation(rc.experiment);

  const std::filesystem::path dir = o.out_dir.empty() ? "." : o.out_dir;
  std::filesystem::create_directories(dir);
  const auto csv_path = dir / "simulate.csv";
  const auto json_path = dir / "report.json";
  const auto manifest_path = dir / "manifest.json";
  const std::string csv = simulation_csv(sim);
  write_file(csv_path, csv);

  json reports = json::array();
  for (const auto &r : sim.reports) reports.push_back(report_json(r));
  json ks = json::array();
  for (const auto &k : sim.ks) ks.push_back({{"n", k.n}, {"metric", k.metric}, {"ks", k.distance}});
  write_file(json_path, json{{"reports", reports}, {"ks", ks}}.dump(2) + "\n");

  json echo = json::object();
  for (const auto &[k, v] : rc.echo) echo[k] = v;
  if (o.seed) echo["override.seed"] = std::to_string(*o.seed);
  if (o.threads) echo["override.threads"] = std::to_string(*o.threads);
  const json outputs = {{"csv", csv_path.string()},
                        {"report", json_path.string()},
                        {"manifest", manifest_path.string()}};
  write_file(manifest_path,
             manifest("simulate", o, echo, outputs, started, rc.experiment.master_seed).dump(2) +
                 "\n");
  out << csv;
  return kExitOk;
}

int cmd_exact(const Options &o, std::ostream &out) {
  const IncrementModel model = IncrementModel::builtin(o.model);
  std::string csv = "n,expected_perimeter,expected_area,enumeration_depth,largest_table\n";
  for (std::size_t n : o.ns) {
    ExactExpectations e;
    try {
      e = exact_expectations(model, n);
    } catch (const ResourceError &err) {
      throw ResourceError(std::string(err.what()) + " at n = " + std::to_string(n) +
                          "; use 'hullwalk simulate' for this length");
    }
    csv += std::to_string(n) + "," + format_double(e.expected_perimeter) + "," +
           format_double(e.expected_area) + "," + std::to_string(e.enumeration_depth) + "," +
           std::to_string(e.largest_table) + "\n";
  }
  out << "# model " << model.name() << "\n" << csv;
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_file(std::filesystem::path(o.out_dir) / "exact.csv", csv);
  }
  return kExitOk;
}

int cmd_bounds(const Options &o, std::ostream &out) {
  const BoundsReport b = variance_bounds_for_trace(o.trace);
  if (o.table2) {
    if (std::fabs(o.trace - 2.0) > 1e-15) {
      out << "# the u0(I) row assumes Sigma = I (trace 2)\n";
    }
    const auto row = [&](const char *name, double lo, double hi) {
      out << std::left << std::setw(8) << name << std::setprecision(3) << std::defaultfloat
          << round_sig_down(lo, 3) << "  " << round_sig_up(hi, 3) << "\n";
    };
    out << "quantity lower  upper\n";
    row("u0(I)", b.u0_identity_lower, b.u0_upper);
    row("v0", b.v0_lower, b.v0_upper);
    row("v+", b.vplus_lower, b.vplus_upper);
    return kExitOk;
  }
  out << "trace_sigma " << format_double(b.trace_sigma) << "\n"
      << "u0_lower " << format_double(b.u0_lower) << "\n"
      << "u0_upper " << format_double(b.u0_upper) << "\n"
      << "u0_identity_lower " << format_double(b.u0_identity_lower) << "\n"
      << "v0_lower " << format_double(b.v0_lower) << "\n"
      << "v0_upper " << format_double(b.v0_upper) << "\n"
      << "vplus_lower " << format_double(b.vplus_lower) << "\n"
      << "vplus_upper " << format_double(b.vplus_upper) << "\n";
  return kExitOk;
}

int cmd_check(const Options &o, std::ostream &out) {
  const auto names = verify::suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw InputError("unknown suite '" + o.suite + "' (expected geometry, oracles or limits)");
  }
  const unsigned threads = o.threads.value_or(0);
  bool all = true;
  for (const auto &r : verify::run_suite(o.suite, threads)) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(2)
        << r.seconds << " s): " << r.detail << "\n";
    out.unsetf(std::ios::floatfield);
  }
  out << "suite " << o.suite << ": " << (all ? "passed" : "FAILED") << "\n";
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_reference(const Options &o, std::ostream &out) {
  const std::string started = utc_now();
  const ReferenceKind kind = parse_reference_kind(o.reference_kind);
  const std::uint64_t seed = o.seed.value_or(0);
  const Sample s =
      brownian_reference(o.reference_m, o.reference_replicas, kind, seed, o.threads.value_or(0));
  const MetricSummary m = summarize_metric(to_string(kind), s.values());
  out << to_string(kind) << " m = " << o.reference_m << " R = " << o.reference_replicas
      << ": mean " << format_double(m.mean) << " +- " << format_double(m.mean_ci) << ", variance "
      << format_double(m.variance) << " +- " << format_double(m.variance_ci) << "\n";
  if (!o.out_dir.empty()) {
    const std::filesystem::path dir = o.out_dir;
    std::filesystem::create_directories(dir);
    std::string csv = "value\n";
    for (double v : s.values()) csv += format_double(v) + "\n";
    const auto path = dir / (std::string("reference_") + to_string(kind) + ".csv");
    write_file(path, csv);
    const json echo = {{"kind", to_string(kind)},
                       {"m", o.reference_m},
                       {"replicas", o.reference_replicas}};
    write_file(dir / "manifest.json",
               manifest("reference", o, echo, {{"samples", path.string()}}, started, seed).dump(2) +
                   "\n");
  }
  return kExitOk;
}

} // namespace

int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Convex hulls of planar random walks: simulation, exact values and checks",
               "hullwalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HULLWALK_VERSION);
  Options o;
  const auto common = [&](CLI::App *sub) {
    sub->add_option("--seed", o.seed, "Master seed (overrides the config)");
    sub->add_option("--threads", o.threads, "Worker threads (default: available cores)");
    sub->add_option("--out", o.out_dir, "Output directory");
  };

  auto *simulate = app.add_subcommand("simulate", "Run a configured Monte Carlo experiment");
  simulate->add_option("--config", o.config, "Experiment config file")->required();
  common(simulate);

  auto *exact = app.add_subcommand("exact", "Exact E L_n and E A_n");
  exact->add_option("model", o.model, "Built-in model name")->required();
  exact->add_option("n", o.ns, "Walk lengths")->required();
  common(exact);

  auto *bounds = app.add_subcommand("bounds", "Bounds on the limiting variance constants");
  bounds->add_option("trace", o.trace, "Trace of the increment covariance")->capture_default_str();
  bounds->add_flag("--table2", o.table2, "Round the identity-covariance rows to 3 digits");
  common(bounds);

  auto *check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", o.suite, "geometry, oracles or limits")->required();
  common(check);

  auto *reference = app.add_subcommand("reference", "Sample a Brownian hull reference law");
  reference->add_option("kind", o.reference_kind, "ell1, a1 or atilde1")->required();
  reference->add_option("--m", o.reference_m, "Steps per reference walk")->capture_default_str();
  reference->add_option("--replicas", o.reference_replicas, "Number of samples")->capture_default_str();
  common(reference);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(o, out);
    if (*exact) return cmd_exact(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*check) return cmd_check(o, out);
    if (*reference) return cmd_reference(o, out);
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError &e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc &) {
    err << "resource error: out of memory\n";
    return kExitResource;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace hullwalk::cli
