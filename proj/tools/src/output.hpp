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
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "nlohmann/json.hpp"

namespace ghzmet::cli {

using Cell = std::variant<std::string, double, std::int64_t>;

// Numbers are printed with 12 significant digits.
std::string format_number(double x);

class CsvTable {
 public:
  CsvTable(std::string command, std::string table, std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);
  // Extra `key=value` pairs echoed in the schema comment line.
  void add_meta(const std::string& key, const std::string& value);

  std::size_t rows() const { return rows_.size(); }
  std::string render() const;

 private:
  std::string command_;
  std::string table_;
  std::vector<std::string> columns_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::vector<Cell>> rows_;
};

// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string render_json(const nlohmann::json& doc);

}  // namespace ghzmet::cli
