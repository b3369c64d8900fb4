// Copyright 2026 The ghzmet Authors
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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <ostream>

#include "ghzmet/channel.hpp"
#include "ghzmet/coherence.hpp"
#include "ghzmet/error.hpp"
#include "ghzmet/metrology.hpp"
#include "ghzmet/montecarlo.hpp"
#include "ghzmet/scaling.hpp"
#include "ghzmet/states.hpp"
#include "output.hpp"

namespace ghzmet::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* basis_name(Basis b) { return b == Basis::kComputational ? "computational" : "hadamard"; }

NoiseModel parse_model(const json& s, const std::string& label) {
  if (!s.is_object()) throw ConfigError("'" + label + "' must be an object");
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it.key() != "gamma" && it.key() != "alpha_x" && it.key() != "alpha_y" && it.key() != "alpha_z") {
      throw ConfigError("unknown noise field '" + label + "." + it.key() + "'");
    }
  }
  NoiseModel m;
  m.gamma = get_number(s, "gamma", 0.0, 1e6);
  m.alpha_x = get_number(s, "alpha_x", 0.0, 1.0);
  m.alpha_y = get_number(s, "alpha_y", 0.0, 1.0);
  m.alpha_z = get_number(s, "alpha_z", 0.0, 1.0);
  try {
    m.validate();
  } catch (const Error& e) {
    throw ConfigError("'" + label + "': " + e.what());
  }
  return m;
}

double parse_omega(const json& cfg) { return get_number(cfg, "omega", -1e6, 1e6); }

json model_json(const NoiseModel& m) {
  return {{"gamma", m.gamma}, {"alpha_x", m.alpha_x}, {"alpha_y", m.alpha_y}, {"alpha_z", m.alpha_z}};
}

std::string model_tag(const NoiseModel& m) {
  return "gamma=" + format_number(m.gamma) + ";alpha=" + format_number(m.alpha_x) + "/" +
         format_number(m.alpha_y) + "/" + format_number(m.alpha_z);
}

void add_model_meta(CsvTable& table, const NoiseModel& m, double omega) {
  table.add_meta("gamma", format_number(m.gamma));
  table.add_meta("alpha_x", format_number(m.alpha_x));
  table.add_meta("alpha_y", format_number(m.alpha_y));
  table.add_meta("alpha_z", format_number(m.alpha_z));
  table.add_meta("omega", format_number(omega));
}

struct Writer {
  std::filesystem::path dir;
  std::vector<std::filesystem::path> files;

  void csv(const std::string& stem, const CsvTable& table) {
    files.push_back(dir / (stem + ".csv"));
    write_atomic(files.back(), table.render());
  }
  void summary(const std::string& stem, const json& doc) {
    files.push_back(dir / (stem + "_summary.json"));
    write_atomic(files.back(), render_json(doc));
  }
};

json summary_header(const std::string& command, const json& config_echo) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"config", config_echo}};
}

std::vector<std::string> file_names(const std::vector<std::filesystem::path>& files) {
  std::vector<std::string> out;
  for (const auto& f : files) out.push_back(f.filename().string());
  return out;
}

// ---------------------------------------------------------------- freeze

CommandResult cmd_freeze(const json& cfg, const std::filesystem::path& out_dir) {
  const std::size_t n = get_count(cfg, "freeze.n", 1, kMaxDenseQubits);
  const std::vector<double> grid = get_grid(cfg, "freeze.p_grid", 0.0, 1.0);

  CsvTable table("freeze", "coherence", {"prep_basis", "measure_basis", "p", "c_l1", "c_re"});
  table.add_meta("n", std::to_string(n));
  json cases = json::array();
  bool frozen = true, decays = true;
  const bool has_p1 = std::find(grid.begin(), grid.end(), 1.0) != grid.end();
  for (Basis prep : {Basis::kComputational, Basis::kHadamard}) {
    for (Basis measure : {Basis::kComputational, Basis::kHadamard}) {
      const auto records = freeze_sweep(n, prep, measure, grid);
      double lo_l1 = kInf, hi_l1 = -kInf, lo_re = kInf, hi_re = -kInf;
      bool monotone = true;
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        table.add_row({basis_name(prep), basis_name(measure), r.p, r.c_l1, r.c_re});
        lo_l1 = std::min(lo_l1, r.c_l1);
        hi_l1 = std::max(hi_l1, r.c_l1);
        lo_re = std::min(lo_re, r.c_re);
        hi_re = std::max(hi_re, r.c_re);
        if (i > 0) monotone = monotone && r.c_l1 <= records[i - 1].c_l1 + 1e-12 && r.c_re <= records[i - 1].c_re + 1e-12;
      }
      json entry{{"prep_basis", basis_name(prep)},
                 {"measure_basis", basis_name(measure)},
                 {"c_l1_spread", hi_l1 - lo_l1},
                 {"c_re_spread", hi_re - lo_re},
                 {"non_increasing", monotone}};
      if (measure == Basis::kComputational) {
        frozen = frozen && hi_l1 - lo_l1 < 1e-9 && hi_re - lo_re < 1e-9;
      } else {
        decays = decays && monotone;
        if (has_p1) {
          const auto& last = records[static_cast<std::size_t>(std::find(grid.begin(), grid.end(), 1.0) - grid.begin())];
          entry["value_at_p1"] = {{"c_l1", last.c_l1}, {"c_re", last.c_re}};
          decays = decays && std::abs(last.c_l1) <= 1e-9 && std::abs(last.c_re) <= 1e-9;
        }
      }
      cases.push_back(entry);
    }
  }
  Writer w{out_dir, {}};
  w.csv("freeze", table);
  json summary = summary_header("freeze", cfg.at("freeze"));
  summary["rows"] = table.rows();
  summary["cases"] = cases;
  summary["checks"] = {{"computational_measure_frozen", frozen}, {"hadamard_measure_decays", decays}};
  w.summary("freeze", summary);
  summary["files"] = file_names(w.files);
  return {kExitOk, w.files, summary};
}

// ------------------------------------------------------------- phase-qfi

CommandResult cmd_phase_qfi(const json& cfg, const std::filesystem::path& out_dir) {
  const std::size_t n = get_count(cfg, "phase_qfi.n", 1, kMaxDenseQubits);
  const std::vector<double> grid = get_grid(cfg, "phase_qfi.p_grid", 0.0, 1.0);

  CsvTable table("phase-qfi", "qfi", {"case", "p", "qfi"});
  table.add_meta("n", std::to_string(n));
  std::map<std::string, std::vector<double>> by_case;
  for (Basis prep : {Basis::kComputational, Basis::kHadamard}) {
    for (Basis measure : {Basis::kComputational, Basis::kHadamard}) {
      const std::string name = std::string(basis_name(prep)) + "/" + basis_name(measure);
      for (const auto& r : freeze_sweep(n, prep, measure, grid)) {
        table.add_row({name, r.p, r.qfi});
        by_case[name].push_back(r.qfi);
      }
    }
  }
  const double sql = 4.0 * static_cast<double>(n);
  for (double p : grid) {
    const double q = product_probe_qfi(n, p);
    table.add_row({std::string("product"), p, q});
    by_case["product"].push_back(q);
  }
  json cases = json::object();
  for (const auto& [name, values] : by_case) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    cases[name] = {{"min", *lo}, {"max", *hi}, {"first", values.front()}, {"last", values.back()}};
  }
  const auto& had = by_case["hadamard/computational"];
  const auto& comp = by_case["computational/computational"];
  const auto [hlo, hhi] = std::minmax_element(had.begin(), had.end());
  const bool had_constant = *hhi - *hlo <= 1e-8 && std::abs(*hlo - sql) <= 1e-8;
  const bool comp_above = *std::min_element(comp.begin(), comp.end()) >= sql - 1e-8;

  Writer w{out_dir, {}};
  w.csv("phase_qfi", table);
  json summary = summary_header("phase-qfi", cfg.at("phase_qfi"));
  summary["sql"] = sql;
  summary["cases"] = cases;
  summary["checks"] = {{"hadamard_prep_constant_at_sql", had_constant}, {"computational_prep_at_or_above_sql", comp_above}};
  w.summary("phase_qfi", summary);
  summary["files"] = file_names(w.files);
  return {kExitOk, w.files, summary};
}

// ------------------------------------------------------------- frequency

CommandResult cmd_frequency(const json& cfg, const std::filesystem::path& out_dir) {
  const NoiseModel model = parse_model(cfg.at("noise"), "noise");
  const double omega = parse_omega(cfg);
  const bool mc = get_bool(cfg, "frequency.monte_carlo.enabled");
  const std::vector<std::size_t> ns = get_count_list(cfg, "frequency.n", 1, mc ? 20 : 100000);
  const std::optional<double> h_cfg = get_optional_number(cfg, "frequency.stencil_h", 1e-6, 1.0);
  const std::optional<double> v_add = get_optional_number(cfg, "frequency.v_add", 0.0, 1.0);
  const std::size_t shots = get_count(cfg, "frequency.monte_carlo.shots", 1, 1000000000);
  const std::uint64_t seed = get_seed(cfg, "frequency.monte_carlo.seed");
  if (model.gamma == 0.0) throw ConfigError("frequency needs noise.gamma > 0: the noiseless precision has no optimum");
  const double v = v_add.value_or(1.0);

  CsvTable fringe("frequency", "fringe", {"n", "omega_perturbed", "px"});
  std::vector<std::string> cols{"n", "t_opt", "var_omega_T", "var_omega_T_stencil", "sql", "hl", "s_n"};
  if (v_add) cols.push_back("v_add");
  if (mc) {
    for (const char* c : {"mc_mean", "mc_stderr", "exact_px", "shots", "seed"}) cols.emplace_back(c);
  }
  CsvTable table("frequency", "precision", cols);
  add_model_meta(fringe, model, omega);
  add_model_meta(table, model, omega);
  table.add_meta("seed", std::to_string(seed));

  const double opt1 = optimize_time(1, model, omega).point.var_omega_T;
  json rows = json::array();
  std::vector<double> vars, s_values;
  bool sandwich = true;
  for (std::size_t n : ns) {
    TimeSearch search;
    search.visibility = v;
    const TimeOptimum opt = optimize_time(n, model, omega, search);
    const StencilConfig stencil = h_cfg ? StencilConfig::five_point(*h_cfg) : StencilConfig::table_default(n);
    const MetrologyPoint sp = precision(n, model, omega, opt.t, stencil, v);
    for (int k = -2; k <= 2; ++k) {
      const double w = omega + k * stencil.h;
      fringe.add_row({static_cast<std::int64_t>(n), w, v * parity_expectation(n, coefficients(model, w, opt.t))});
    }
    const ReferenceBounds b = sql_hl_bounds(n, opt1);
    const double s_n = fisher_per_qubit(opt.point);
    std::vector<Cell> row{static_cast<std::int64_t>(n), opt.t, opt.point.var_omega_T, sp.var_omega_T, b.sql, b.hl, s_n};
    if (v_add) row.emplace_back(v);
    json entry{{"n", n}, {"t_opt", opt.t}, {"var_omega_T", opt.point.var_omega_T}, {"s_n", s_n}};
    if (mc) {
      TrajectoryConfig tc;
      tc.n = n;
      tc.shots = shots;
      tc.seed = seed;
      const SampleEstimate e = simulate_parity(n, model, omega, opt.t, tc, v);
      const double exact = v * parity_expectation(n, coefficients(model, omega, opt.t));
      for (Cell c : std::vector<Cell>{e.mean, e.std_error, exact, static_cast<std::int64_t>(shots),
                                      std::to_string(seed)}) {
        row.push_back(c);
      }
      entry["mc"] = {{"mean", e.mean}, {"stderr", e.std_error}, {"within_4_sigma", std::abs(e.mean - exact) <= 4 * e.std_error}};
    }
    table.add_row(row);
    rows.push_back(entry);
    vars.push_back(opt.point.var_omega_T);
    s_values.push_back(s_n);
    if (n >= 2 && v == 1.0) sandwich = sandwich && b.hl < opt.point.var_omega_T && opt.point.var_omega_T <= b.sql * (1 + 1e-9);
  }
  bool decreasing = true, nondecreasing = true, strictly_from_2 = true;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    decreasing = decreasing && (ns[i] <= ns[i - 1] || vars[i] < vars[i - 1]);
    if (ns[i] > ns[i - 1]) {
      nondecreasing = nondecreasing && s_values[i] >= s_values[i - 1] - 1e-9;
      if (ns[i - 1] >= 2) strictly_from_2 = strictly_from_2 && s_values[i] > s_values[i - 1];
    }
  }

  Writer w{out_dir, {}};
  w.csv("frequency_fringe", fringe);
  w.csv("frequency_precision", table);
  json echo = cfg.at("frequency");
  echo["noise"] = model_json(model);
  echo["omega"] = omega;
  json summary = summary_header("frequency", echo);
  summary["single_qubit_optimum"] = opt1;
  summary["points"] = rows;
  summary["checks"] = {{"var_strictly_decreasing", decreasing},
                       {"s_n_nondecreasing", nondecreasing},
                       {"s_n_strictly_increasing_from_n2", strictly_from_2}};
  if (v == 1.0) summary["checks"]["sandwiched_by_sql_hl"] = sandwich;
  w.summary("frequency", summary);
  summary["files"] = file_names(w.files);
  return {kExitOk, w.files, summary};
}

// --------------------------------------------------------------- scaling

CommandResult cmd_scaling(const json& cfg, const std::filesystem::path& out_dir) {
  const NoiseModel model = parse_model(cfg.at("noise"), "noise");
  const double omega = parse_omega(cfg);
  const std::vector<double> f0s = get_number_list(cfg, "scaling.f0", std::numeric_limits<double>::min(), 1.0);
  const std::vector<double> fixed = get_number_list(cfg, "scaling.fixed_noise", 0.0, 1.0);
  const std::size_t n_min = get_count(cfg, "scaling.n_min", 1, 10000000);
  const std::size_t n_max = get_count(cfg, "scaling.n_max", n_min, 10000000);
  const std::size_t count = get_count(cfg, "scaling.count", 3, 100000);
  const std::vector<double> window = get_number_list(cfg, "scaling.window", 1.0, 1e12);
  const std::string rule = get_string(cfg, "scaling.t_rule", {"optimize", "proportional"});
  const double c = get_number(cfg, "scaling.proportional_c", 1e-9, 1e9);
  if (window.size() != 2 || !(window[0] < window[1])) throw ConfigError("'scaling.window' must be [n_lo, n_hi] with n_lo < n_hi");
  if (f0s.empty() && fixed.empty()) throw ConfigError("scaling needs at least one f0 or fixed_noise curve");
  for (double f : fixed) {
    if (f >= 1.0) throw ConfigError("'scaling.fixed_noise' entries must be < 1");
  }
  if (model.gamma == 0.0 && rule == "optimize") throw ConfigError("optimize rule needs noise.gamma > 0");

  ScalingConfig base;
  base.n_grid = log_spaced_sizes(n_min, n_max, count);
  base.t_rule = rule == "optimize" ? ScalingConfig::TimeRule::kOptimize : ScalingConfig::TimeRule::kProportional;
  base.proportional_c = c;
  const FitWindow fit{window[0], window[1]};
  const double opt1 = optimize_time(1, model, omega).point.var_omega_T;

  CsvTable table("scaling", "curves", {"f0_or_fixed", "n", "t", "var_omega_T", "sql", "hl"});
  CsvTable slopes("scaling", "slopes", {"f0_or_fixed", "fitted_slope", "window_min", "window_max", "points", "skipped"});
  for (CsvTable* t : {&table, &slopes}) {
    add_model_meta(*t, model, omega);
    t->add_meta("t_rule", rule);
  }
  json curves = json::array();
  auto run_curve = [&](const std::string& label, ScalingConfig sc) {
    const ScalingCurve curve = scaling_sweep(sc, model, omega, fit);
    for (const ScalingPoint& p : curve.points) {
      const ReferenceBounds b = sql_hl_bounds(p.n, opt1);
      table.add_row({label, static_cast<std::int64_t>(p.n), p.t_used, p.var_omega_T, b.sql, b.hl});
    }
    slopes.add_row({label, curve.fitted_slope, curve.window.n_min, curve.window.n_max,
                    static_cast<std::int64_t>(curve.points.size()), static_cast<std::int64_t>(curve.skipped.size())});
    curves.push_back({{"curve", label},
                      {"fitted_slope", curve.fitted_slope},
                      {"window", {curve.window.n_min, curve.window.n_max}},
                      {"points", curve.points.size()},
                      {"skipped_n", curve.skipped}});
  };
  for (double f0 : f0s) {
    ScalingConfig sc = base;
    sc.f0 = f0;
    run_curve("f0=" + format_number(f0), sc);
  }
  for (double f : fixed) {
    ScalingConfig sc = base;
    sc.fixed_noise = f;
    run_curve("fixed=" + format_number(f), sc);
  }

  Writer w{out_dir, {}};
  w.csv("scaling", table);
  w.csv("scaling_slopes", slopes);
  json echo = cfg.at("scaling");
  echo["noise"] = model_json(model);
  echo["omega"] = omega;
  json summary = summary_header("scaling", echo);
  summary["single_qubit_optimum"] = opt1;
  summary["curves"] = curves;
  w.summary("scaling", summary);
  summary["files"] = file_names(w.files);
  return {kExitOk, w.files, summary};
}

// ------------------------------------------------------ channel-validate

CommandResult cmd_channel_validate(const json& cfg, const std::filesystem::path& out_dir) {
  const double omega = parse_omega(cfg);
  const std::vector<double> ts = get_grid(cfg, "channel_validate.t_grid", 0.0, 100.0);
  const double tol = get_number(cfg, "channel_validate.tolerance", 1e-15, 1.0);
  const bool fault = get_bool(cfg, "channel_validate.inject_fault");
  const double fault_size = get_number(cfg, "channel_validate.fault_size", 0.0, 1.0);
  const json& model_list = cfg.at("channel_validate").at("models");
  if (!model_list.is_array() || model_list.empty()) throw ConfigError("'channel_validate.models' must be a non-empty list");
  std::vector<NoiseModel> models;
  for (std::size_t i = 0; i < model_list.size(); ++i) {
    models.push_back(parse_model(model_list[i], "channel_validate.models[" + std::to_string(i) + "]"));
  }

  auto closed_form = [&](const NoiseModel& m, double w, double t) {
    CoefficientSet c = coefficients(m, w, t);
    if (fault) c.b += fault_size;
    return c;
  };

  CsvTable table("channel-validate", "grid",
                 {"model", "t", "distance", "completeness_residue", "unitarity_residue", "min_probability", "trace_residue", "status"});
  table.add_meta("fault", fault ? format_number(fault_size) : "none");
  double worst_distance = 0.0, worst_kraus = 0.0, worst_trace = 0.0;
  std::size_t breaches = 0;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const NoiseModel& m = models[mi];
    for (double t : ts) {
      const CoefficientSet c = closed_form(m, omega, t);
      const double distance = channel_distance(s_matrix(c), s_matrix_from_master_equation(m, omega, t));
      const double trace = std::abs(c.a + c.d - 1.0);
      double completeness = 0.0, unitarity = 0.0, min_p = 0.0;
      std::string status = "ok";
      try {
        const KrausSet k = kraus(c);
        completeness = k.completeness_residue();
        unitarity = k.unitarity_residue();
        min_p = *std::min_element(k.probs.begin(), k.probs.end());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNegativeProbability) throw;
        completeness = unitarity = std::numeric_limits<double>::quiet_NaN();
        min_p = -kInf;
        status = "negative_probability";
      }
      const bool ok = status == "ok" && distance <= tol && completeness <= 1e-10 && unitarity <= 1e-10 &&
                      min_p >= -1e-12 && trace <= 1e-10;
      if (!ok) {
        ++breaches;
        if (status == "ok") status = "breach";
      }
      worst_distance = std::max(worst_distance, distance);
      if (std::isfinite(completeness)) worst_kraus = std::max({worst_kraus, completeness, unitarity});
      worst_trace = std::max(worst_trace, trace);
      table.add_row({model_tag(m), t, distance, completeness, unitarity, min_p, trace, status});
    }
  }

  // Limit checks on the closed form: identity at t = 0, pure rotation without
  // noise, and a = 1, d = f = 0 for parallel noise.
  CsvTable limits("channel-validate", "limits", {"check", "model", "max_deviation", "tolerance", "pass"});
  json limit_json = json::array();
  auto record = [&](const std::string& check, const std::string& model, double dev, double limit) {
    const bool pass = dev <= limit;
    if (!pass) ++breaches;
    limits.add_row({check, model, dev, limit, std::string(pass ? "true" : "false")});
    limit_json.push_back({{"check", check}, {"model", model}, {"max_deviation", dev}, {"pass", pass}});
  };
  for (const NoiseModel& m : models) {
    const CoefficientSet c0 = closed_form(m, omega, 0.0);
    record("identity_at_t0", model_tag(m),
           std::max({std::abs(c0.a - 1), std::abs(c0.b - 1), std::abs(c0.c), std::abs(c0.d), std::abs(c0.f)}), 1e-12);
    if (m.alpha_z == 1.0) {
      double dev = 0.0;
      for (double t : ts) {
        const CoefficientSet c = closed_form(m, omega, t);
        dev = std::max({dev, std::abs(c.a - 1), std::abs(c.d), std::abs(c.f)});
      }
      record("parallel_structure", model_tag(m), dev, 1e-12);
    }
  }
  {
    double dev = 0.0;
    for (double t : ts) {
      const CoefficientSet c = closed_form(NoiseModel::noiseless(), omega, t);
      dev = std::max({dev, std::abs(c.a - 1), std::abs(c.d), std::abs(c.f), std::abs(c.b - std::cos(omega * t)),
                      std::abs(c.c - std::sin(omega * t))});
    }
    record("noiseless_rotation", model_tag(NoiseModel::noiseless()), dev, 1e-10);
  }

  Writer w{out_dir, {}};
  w.csv("channel_validate", table);
  w.csv("channel_limits", limits);
  json echo = cfg.at("channel_validate");
  echo["omega"] = omega;
  json summary = summary_header("channel-validate", echo);
  summary["max_distance"] = worst_distance;
  summary["max_kraus_residue"] = worst_kraus;
  summary["max_trace_residue"] = worst_trace;
  summary["limit_checks"] = limit_json;
  summary["breaches"] = breaches;
  summary["status"] = breaches == 0 ? "pass" : "fail";
  w.summary("channel_validate", summary);
  summary["files"] = file_names(w.files);
  return {breaches == 0 ? kExitOk : kExitFailure, w.files, summary};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"freeze", "phase-qfi", "frequency", "scaling", "channel-validate"};
  return names;
}

CommandResult run_command(const std::string& name, const json& cfg, const std::filesystem::path& out_dir) {
  using Fn = std::function<CommandResult(const json&, const std::filesystem::path&)>;
  static const std::map<std::string, Fn> table{{"freeze", cmd_freeze},
                                               {"phase-qfi", cmd_phase_qfi},
                                               {"frequency", cmd_frequency},
                                               {"scaling", cmd_scaling},
                                               {"channel-validate", cmd_channel_validate}};
  const auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown command '" + name + "'");
  return it->second(cfg, out_dir);
}

int execute(const std::string& name, const json& cfg, const std::filesystem::path& out_dir, std::ostream& err) {
  try {
    const CommandResult r = run_command(name, cfg, out_dir);
    if (r.exit_code != kExitOk) err << "ghzmet " << name << ": tolerance check failed\n";
    return r.exit_code;
  } catch (const ConfigError& e) {
    err << "ghzmet " << name << ": config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    err << "ghzmet " << name << ": config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "ghzmet " << name << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ghzmet::cli
