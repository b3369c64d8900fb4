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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

const char* describe(const std::string& name) {
  if (name == "freeze") return "Coherence of noisy GHZ probes in both bases (CSV of c_l1, c_re vs p)";
  if (name == "phase-qfi") return "Phase-estimation QFI with bit-flip noise before imprinting";
  if (name == "frequency") return "Fringes, optimal times and precision for frequency estimation";
  if (name == "scaling") return "Large-N precision scaling under preparation noise";
  return "Closed-form channel vs master-equation self-test (exit 1 on breach)";
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = ghzmet::cli;
  CLI::App app{"ghzmet: noisy GHZ metrology simulations"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::vector<std::string> overrides;
  std::optional<std::string> out_dir;
  bool print_config = false;

  for (const std::string& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("-c,--config", config_path, "JSON config document (merged over the built-in defaults)");
    sub->add_option("-s,--set", overrides, "Override a config field, e.g. --set frequency.v_add=0.93")
        ->allow_extra_args(false);
    sub->add_option("-o,--out-dir", out_dir, "Output directory (default: output.dir from the config)");
    sub->add_flag("--print-config", print_config, "Print the effective config and exit");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  cli::json cfg;
  std::string dir;
  try {
    cfg = cli::load_config(config_path, overrides);
    dir = out_dir ? *out_dir : cli::get_string(cfg, "output.dir", {});
  } catch (const cli::ConfigError& e) {
    std::cerr << "ghzmet " << command << ": config error: " << e.what() << "\n";
    return cli::kExitConfig;
  }
  if (print_config) {
    std::cout << cfg.dump(2) << "\n";
    return cli::kExitOk;
  }
  const int code = cli::execute(command, cfg, dir, std::cerr);
  if (code == cli::kExitOk || code == cli::kExitFailure) {
    std::cout << "ghzmet " << command << ": outputs in " << dir << "\n";
  }
  return code;
}
