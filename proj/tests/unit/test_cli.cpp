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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "doctest.h"
#include "output.hpp"

namespace fs = std::filesystem;
using namespace ghzmet::cli;

namespace {

struct Csv {
  std::string comment;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    FAIL("missing column " << name);
    return 0;
  }
  double num(std::size_t row, const std::string& name) const { return std::stod(rows[row][col(name)]); }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Csv read_csv(const fs::path& p) {
  std::ifstream in(p);
  Csv csv;
  std::string line;
  std::getline(in, csv.comment);
  std::getline(in, line);
  csv.header = split(line);
  while (std::getline(in, line)) csv.rows.push_back(split(line));
  return csv;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ghzmet_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

CommandResult run(const std::string& command, const std::vector<std::string>& overrides, const fs::path& dir) {
  return run_command(command, load_config(std::nullopt, overrides), dir);
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GHZMET_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("numbers are written with 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.5e-20) == "1.5e-20");
}

TEST_CASE("config overrides") {
  json cfg = default_config();
  apply_override(cfg, "frequency.n=[1,2]");
  CHECK(cfg["frequency"]["n"] == json::array({1, 2}));
  apply_override(cfg, "scaling.t_rule=proportional");
  CHECK(cfg["scaling"]["t_rule"] == "proportional");
  apply_override(cfg, "noise={\"gamma\":0.5}");
  CHECK(cfg["noise"]["gamma"] == 0.5);
  CHECK(cfg["noise"]["alpha_x"] == 1.0);
  CHECK_THROWS_AS(apply_override(cfg, "frequency.bogus=1"), ConfigError);
  CHECK_THROWS_AS(apply_override(cfg, "no_equals_sign"), ConfigError);
  CHECK_THROWS_AS(apply_override(cfg, "freeze..n=1"), ConfigError);
}

TEST_CASE("config files merge over defaults and reject unknown keys") {
  const fs::path dir = fresh_dir("config");
  fs::create_directories(dir);
  std::ofstream(dir / "good.json") << R"({"freeze": {"n": 3}, "omega": 2.0})";
  std::ofstream(dir / "typo.json") << R"({"freez": {"n": 3}})";
  std::ofstream(dir / "broken.json") << "{not json";
  const json cfg = load_config((dir / "good.json").string(), {});
  CHECK(cfg["freeze"]["n"] == 3);
  CHECK(cfg["omega"] == 2.0);
  CHECK(cfg["freeze"]["p_grid"]["count"] == 11);
  CHECK_THROWS_AS(load_config((dir / "typo.json").string(), {}), ConfigError);
  CHECK_THROWS_AS(load_config((dir / "broken.json").string(), {}), ConfigError);
  CHECK_THROWS_AS(load_config((dir / "missing.json").string(), {}), ConfigError);
}

TEST_CASE("freeze: default config gives 44 rows with the expected shapes") {
  const fs::path dir = fresh_dir("freeze");
  const CommandResult r = run("freeze", {}, dir);
  CHECK(r.exit_code == kExitOk);
  const Csv csv = read_csv(dir / "freeze.csv");
  CHECK(csv.comment.rfind("# ghzmet-csv schema=1 command=freeze", 0) == 0);
  CHECK(csv.header == std::vector<std::string>{"prep_basis", "measure_basis", "p", "c_l1", "c_re"});
  REQUIRE(csv.rows.size() == 44);
  std::map<std::string, std::vector<std::size_t>> cases;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) cases[csv.rows[i][0] + "/" + csv.rows[i][1]].push_back(i);
  CHECK(cases.size() == 4);
  for (const auto& [name, idx] : cases) {
    if (name.ends_with("/computational")) {
      for (std::size_t i : idx) {
        CHECK(std::abs(csv.num(i, "c_l1") - csv.num(idx.front(), "c_l1")) < 1e-9);
        CHECK(std::abs(csv.num(i, "c_re") - csv.num(idx.front(), "c_re")) < 1e-9);
      }
    } else {
      CHECK(csv.num(idx.back(), "p") == 1.0);
      CHECK(std::abs(csv.num(idx.back(), "c_l1")) <= 1e-9);
      CHECK(std::abs(csv.num(idx.back(), "c_re")) <= 1e-9);
    }
  }
  CHECK(r.summary["checks"]["computational_measure_frozen"] == true);
  CHECK(r.summary["checks"]["hadamard_measure_decays"] == true);
  CHECK(fs::exists(dir / "freeze_summary.json"));
}

TEST_CASE("phase-qfi: Heisenberg start, frozen hadamard case, product line") {
  const fs::path dir = fresh_dir("phase");
  run("phase-qfi", {}, dir);
  const Csv csv = read_csv(dir / "phase_qfi.csv");
  CHECK(csv.rows.size() == 5 * 11);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const std::string& name = csv.rows[i][0];
    const double p = csv.num(i, "p"), q = csv.num(i, "qfi");
    if (name == "computational/computational") {
      if (p == 0.0) CHECK(q == doctest::Approx(64.0));
      CHECK(q >= 16.0 - 1e-8);
    }
    if (name == "hadamard/computational" || name == "product") CHECK(q == doctest::Approx(16.0).epsilon(1e-10));
  }
}

TEST_CASE("frequency: optimal times, decreasing precision, fringe table") {
  const fs::path dir = fresh_dir("frequency");
  const CommandResult r = run("frequency", {}, dir);
  const Csv csv = read_csv(dir / "frequency_precision.csv");
  const std::vector<double> t_expected{1.5490, 0.7745, 0.5684, 0.4650, 0.3508};
  REQUIRE(csv.rows.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(csv.num(i, "t_opt") - t_expected[i]) <= 5e-4);
    if (i > 0) CHECK(csv.num(i, "var_omega_T") < csv.num(i - 1, "var_omega_T"));
  }
  const Csv fringe = read_csv(dir / "frequency_fringe.csv");
  CHECK(fringe.header == std::vector<std::string>{"n", "omega_perturbed", "px"});
  CHECK(fringe.rows.size() == 25);
  CHECK(fringe.num(2, "omega_perturbed") == 1.0);
  CHECK(fringe.num(7, "omega_perturbed") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.summary["checks"]["var_strictly_decreasing"] == true);
  CHECK(r.summary["checks"]["sandwiched_by_sql_hl"] == true);
}

TEST_CASE("frequency: white noise keeps S_N ordered") {
  const fs::path dir = fresh_dir("white");
  const CommandResult r = run("frequency", {"frequency.v_add=0.93", "frequency.n=[1,2,3,4]"}, dir);
  const Csv csv = read_csv(dir / "frequency_precision.csv");
  REQUIRE(csv.rows.size() == 4);
  CHECK(csv.num(0, "v_add") == 0.93);
  CHECK(std::abs(csv.num(1, "s_n") - csv.num(0, "s_n")) <= 1e-9);
  CHECK(csv.num(2, "s_n") > csv.num(1, "s_n"));
  CHECK(csv.num(3, "s_n") > csv.num(2, "s_n"));
  CHECK(r.summary["checks"]["s_n_nondecreasing"] == true);
  CHECK(r.summary["checks"]["s_n_strictly_increasing_from_n2"] == true);
}

TEST_CASE("frequency: Monte Carlo columns echo shots and seed") {
  const fs::path dir = fresh_dir("mc");
  run("frequency", {"frequency.n=[1,3]", "frequency.monte_carlo.enabled=true", "frequency.monte_carlo.shots=20000",
                    "frequency.monte_carlo.seed=5"},
      dir);
  const Csv csv = read_csv(dir / "frequency_precision.csv");
  REQUIRE(csv.rows.size() == 2);
  CHECK(csv.comment.find("seed=5") != std::string::npos);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(csv.num(i, "shots") == 20000);
    CHECK(csv.rows[i][csv.col("seed")] == "5");
    CHECK(std::abs(csv.num(i, "mc_mean") - csv.num(i, "exact_px")) <= 4 * csv.num(i, "mc_stderr"));
  }
}

TEST_CASE("scaling: five default curves and the ideal slope") {
  const fs::path dir = fresh_dir("scaling");
  const CommandResult r = run("scaling", {}, dir);
  const Csv slopes = read_csv(dir / "scaling_slopes.csv");
  REQUIRE(slopes.rows.size() == 5);
  CHECK(slopes.rows[0][0] == "f0=1");
  CHECK(slopes.rows[4][0] == "fixed=0.07");
  CHECK(std::abs(slopes.num(0, "fitted_slope") + 5.0 / 3.0) <= 0.05);
  CHECK(r.summary["curves"].size() == 5);
  const Csv curves = read_csv(dir / "scaling.csv");
  CHECK(curves.header == std::vector<std::string>{"f0_or_fixed", "n", "t", "var_omega_T", "sql", "hl"});
}

TEST_CASE("scaling output is byte-identical across runs") {
  const std::vector<std::string> small{"scaling.n_max=5000", "scaling.count=40", "scaling.window=[50,5000]"};
  const fs::path a = fresh_dir("scaling_a"), b = fresh_dir("scaling_b");
  run("scaling", small, a);
  run("scaling", small, b);
  for (const char* f : {"scaling.csv", "scaling_slopes.csv", "scaling_summary.json"}) CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("channel-validate: default grid passes and t = 0 has zero distance") {
  const fs::path dir = fresh_dir("validate");
  const CommandResult r = run("channel-validate", {}, dir);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.summary["max_distance"].get<double>() <= 1e-7);
  const Csv csv = read_csv(dir / "channel_validate.csv");
  CHECK(csv.rows.size() == 3 * 21);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    if (csv.num(i, "t") == 0.0) CHECK(csv.num(i, "distance") == 0.0);
    CHECK(csv.rows[i][csv.col("status")] == "ok");
  }
  for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().extension() != ".tmp");
}

TEST_CASE("channel-validate: an injected coefficient fault trips the gate") {
  const fs::path dir = fresh_dir("fault");
  const CommandResult r = run("channel-validate", {"channel_validate.inject_fault=true"}, dir);
  CHECK(r.exit_code == kExitFailure);
  CHECK(r.summary["status"] == "fail");
  CHECK(r.summary["max_distance"].get<double>() >= 1e-4);
}

TEST_CASE("config errors are rejected before any output") {
  const fs::path dir = fresh_dir("bad");
  CHECK_THROWS_AS(run("freeze", {"freeze.p_grid=[0, 1.5]"}, dir), ConfigError);
  CHECK_THROWS_AS(run("freeze", {"freeze.n=9"}, dir), ConfigError);
  CHECK_THROWS_AS(run("frequency", {"noise.alpha_y=0.5"}, dir), ConfigError);
  CHECK_THROWS_AS(run("frequency", {"noise.gamma=0"}, dir), ConfigError);
  CHECK_THROWS_AS(run("scaling", {"scaling.t_rule=\"sometimes\""}, dir), ConfigError);
  CHECK_THROWS_AS(run("channel-validate", {"channel_validate.models=[{\"gamma\":1,\"alpha_q\":1}]"}, dir), ConfigError);
  CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("binary exit codes") {
  const fs::path dir = fresh_dir("binary");
  const std::string out = " -o " + dir.string();
  CHECK(run_binary("channel-validate" + out) == 0);
  CHECK(run_binary("channel-validate --set channel_validate.inject_fault=true" + out) == 1);
  CHECK(run_binary("freeze --set freeze.p_grid=[2]" + out) == 2);
  CHECK(run_binary("freeze --set nonsense=1" + out) == 2);
  CHECK(run_binary("no-such-command") == 2);
  CHECK(run_binary("freeze --config /nonexistent.json" + out) == 2);
  CHECK(run_binary("freeze --print-config") == 0);
}
