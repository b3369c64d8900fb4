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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ghzmet::cli {

namespace {

json::json_pointer pointer_for(const std::string& key) {
  std::string p;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty()) throw ConfigError("malformed key '" + key + "'");
    p += "/" + part;
  }
  return json::json_pointer(p);
}

const json& lookup(const json& cfg, const std::string& key) {
  const auto ptr = pointer_for(key);
  if (!cfg.contains(ptr)) throw ConfigError("missing config key '" + key + "'");
  return cfg.at(ptr);
}

std::string describe(double lo, double hi) {
  std::ostringstream os;
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

double as_number(const json& v, const std::string& key, double lo, double hi) {
  if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x) || x < lo || x > hi) {
    throw ConfigError("'" + key + "' = " + v.dump() + " outside " + describe(lo, hi));
  }
  return x;
}

std::size_t as_count(const json& v, const std::string& key, std::size_t lo, std::size_t hi) {
  if (!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0)) {
    throw ConfigError("'" + key + "' must be a non-negative integer");
  }
  const auto x = v.get<std::uint64_t>();
  if (x < lo || x > hi) {
    throw ConfigError("'" + key + "' = " + v.dump() + " outside " +
                      describe(static_cast<double>(lo), static_cast<double>(hi)));
  }
  return static_cast<std::size_t>(x);
}

}  // namespace

json default_config() {
  return json::parse(R"({
    "output": {"dir": "ghzmet_out"},
    "noise": {"gamma": 1.0, "alpha_x": 1.0, "alpha_y": 0.0, "alpha_z": 0.0},
    "omega": 1.0,
    "freeze": {
      "n": 4,
      "p_grid": {"start": 0.0, "stop": 1.0, "count": 11}
    },
    "phase_qfi": {
      "n": 4,
      "p_grid": {"start": 0.0, "stop": 1.0, "count": 11}
    },
    "frequency": {
      "n": [1, 2, 3, 4, 6],
      "stencil_h": null,
      "v_add": null,
      "monte_carlo": {"enabled": false, "shots": 100000, "seed": 20260101}
    },
    "scaling": {
      "f0": [1.0, 0.9837, 0.9999, 0.99999],
      "fixed_noise": [0.07],
      "n_min": 1,
      "n_max": 100000,
      "count": 200,
      "window": [100, 100000],
      "t_rule": "optimize",
      "proportional_c": 1.55
    },
    "channel_validate": {
      "t_grid": {"start": 0.0, "stop": 2.0, "count": 21},
      "models": [
        {"gamma": 1.0, "alpha_x": 1.0, "alpha_y": 0.0, "alpha_z": 0.0},
        {"gamma": 1.0, "alpha_x": 0.0, "alpha_y": 0.0, "alpha_z": 1.0},
        {"gamma": 1.0, "alpha_x": 0.5, "alpha_y": 0.3, "alpha_z": 0.2}
      ],
      "tolerance": 1e-7,
      "inject_fault": false,
      "fault_size": 1e-3
    }
  })");
}

void merge_into(json& base, const json& overlay, const std::string& where) {
  if (!overlay.is_object()) throw ConfigError("config " + (where.empty() ? "document" : "'" + where + "'") + " must be an object");
  for (auto it = overlay.begin(); it != overlay.end(); ++it) {
    const std::string key = where.empty() ? it.key() : where + "." + it.key();
    if (!base.contains(it.key())) throw ConfigError("unknown config key '" + key + "'");
    json& slot = base[it.key()];
    if (slot.is_object() && it.value().is_object()) {
      merge_into(slot, it.value(), key);
    } else {
      slot = it.value();
    }
  }
}

void apply_override(json& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  const auto ptr = pointer_for(key);
  if (!cfg.contains(ptr)) throw ConfigError("unknown config key '" + key + "'");
  json& slot = cfg[ptr];
  if (slot.is_object() && value.is_object()) {
    merge_into(slot, value, key);
  } else {
    slot = std::move(value);
  }
}

json load_config(const std::optional<std::string>& path, const std::vector<std::string>& overrides) {
  json cfg = default_config();
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot open config file '" + *path + "'");
    json doc = json::parse(in, nullptr, false, true);
    if (doc.is_discarded()) throw ConfigError("config file '" + *path + "' is not valid JSON");
    merge_into(cfg, doc);
  }
  for (const auto& o : overrides) apply_override(cfg, o);
  return cfg;
}

double get_number(const json& cfg, const std::string& key, double lo, double hi) {
  return as_number(lookup(cfg, key), key, lo, hi);
}

std::size_t get_count(const json& cfg, const std::string& key, std::size_t lo, std::size_t hi) {
  return as_count(lookup(cfg, key), key, lo, hi);
}

std::uint64_t get_seed(const json& cfg, const std::string& key) {
  const json& v = lookup(cfg, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError("'" + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

bool get_bool(const json& cfg, const std::string& key) {
  const json& v = lookup(cfg, key);
  if (!v.is_boolean()) throw ConfigError("'" + key + "' must be true or false");
  return v.get<bool>();
}

std::string get_string(const json& cfg, const std::string& key, const std::vector<std::string>& allowed) {
  const json& v = lookup(cfg, key);
  if (!v.is_string()) throw ConfigError("'" + key + "' must be a string");
  const auto s = v.get<std::string>();
  if (allowed.empty()) return s;
  for (const auto& a : allowed) {
    if (s == a) return s;
  }
  std::string options;
  for (const auto& a : allowed) options += (options.empty() ? "" : ", ") + a;
  throw ConfigError("'" + key + "' = \"" + s + "\" must be one of: " + options);
}

std::optional<double> get_optional_number(const json& cfg, const std::string& key, double lo, double hi) {
  const json& v = lookup(cfg, key);
  if (v.is_null()) return std::nullopt;
  return as_number(v, key, lo, hi);
}

std::vector<double> get_number_list(const json& cfg, const std::string& key, double lo, double hi) {
  const json& v = lookup(cfg, key);
  if (!v.is_array()) throw ConfigError("'" + key + "' must be a list");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], key + "[" + std::to_string(i) + "]", lo, hi));
  return out;
}

std::vector<std::size_t> get_count_list(const json& cfg, const std::string& key, std::size_t lo, std::size_t hi) {
  const json& v = lookup(cfg, key);
  if (!v.is_array() || v.empty()) throw ConfigError("'" + key + "' must be a non-empty list");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_count(v[i], key + "[" + std::to_string(i) + "]", lo, hi));
  return out;
}

std::vector<double> get_grid(const json& cfg, const std::string& key, double lo, double hi) {
  const json& v = lookup(cfg, key);
  std::vector<double> out;
  if (v.is_array()) {
    out = get_number_list(cfg, key, lo, hi);
  } else if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.key() != "start" && it.key() != "stop" && it.key() != "count") {
        throw ConfigError("unknown grid field '" + key + "." + it.key() + "'");
      }
    }
    const double start = get_number(cfg, key + ".start", lo, hi);
    const double stop = get_number(cfg, key + ".stop", lo, hi);
    const std::size_t count = get_count(cfg, key + ".count", 1, 1000000);
    if (count == 1) {
      out.push_back(start);
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        // Snap to the exact end points so 0 and 1 stay representable.
        out.push_back(i + 1 == count ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1));
      }
    }
  } else {
    throw ConfigError("'" + key + "' must be a list or {start, stop, count}");
  }
  if (out.empty()) throw ConfigError("'" + key + "' is empty");
  return out;
}

}  // namespace ghzmet::cli
