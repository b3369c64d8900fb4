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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace ghzmet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> files;
  json summary;
};

const std::vector<std::string>& command_names();

// Validates the relevant config sections, runs the command and writes its
// outputs under `out_dir`. Throws ConfigError before any computation when the
// config is invalid; library errors propagate as ghzmet::Error.
CommandResult run_command(const std::string& name, const json& cfg, const std::filesystem::path& out_dir);

// Wraps run_command and maps failures to exit codes, logging to `err`.
int execute(const std::string& name, const json& cfg, const std::filesystem::path& out_dir, std::ostream& err);

}  // namespace ghzmet::cli
