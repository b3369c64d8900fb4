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

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "config.hpp"

namespace ghzmet::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

CsvTable::CsvTable(std::string command, std::string table, std::vector<std::string> columns)
    : command_(std::move(command)), table_(std::move(table)), columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("CSV row width mismatch in " + table_);
  rows_.push_back(std::move(row));
}

void CsvTable::add_meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }

std::string CsvTable::render() const {
  std::string out = "# ghzmet-csv schema=" + std::to_string(kSchemaVersion) + " command=" + command_ +
                    " table=" + table_;
  for (const auto& [k, v] : meta_) out += " " + k + "=" + v;
  out += "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + columns_[i];
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        out += *s;
      } else if (const auto* d = std::get_if<double>(&row[i])) {
        out += format_number(*d);
      } else {
        out += std::to_string(std::get<std::int64_t>(row[i]));
      }
    }
    out += "\n";
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string render_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ghzmet::cli
