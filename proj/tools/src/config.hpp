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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

namespace ghzmet::cli {

using nlohmann::json;

// Raised for anything wrong with the run configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

json default_config();

// Deep-merges `overlay` into `base`. Keys absent from `base` are rejected.
void merge_into(json& base, const json& overlay, const std::string& where = "");

// Applies one "dotted.key=value" override. The value is parsed as JSON when
// possible and kept as a string otherwise.
void apply_override(json& cfg, const std::string& assignment);

json load_config(const std::optional<std::string>& path, const std::vector<std::string>& overrides);

// Typed accessors with range checks; `key` is a dotted path.
double get_number(const json& cfg, const std::string& key, double lo, double hi);
std::size_t get_count(const json& cfg, const std::string& key, std::size_t lo, std::size_t hi);
std::uint64_t get_seed(const json& cfg, const std::string& key);
bool get_bool(const json& cfg, const std::string& key);
std::string get_string(const json& cfg, const std::string& key, const std::vector<std::string>& allowed);
std::optional<double> get_optional_number(const json& cfg, const std::string& key, double lo, double hi);
std::vector<double> get_number_list(const json& cfg, const std::string& key, double lo, double hi);
std::vector<std::size_t> get_count_list(const json& cfg, const std::string& key, std::size_t lo, std::size_t hi);

// A list of numbers, or {"start", "stop", "count"} expanded to an inclusive
// linear grid.
std::vector<double> get_grid(const json& cfg, const std::string& key, double lo, double hi);

}  // namespace ghzmet::cli
