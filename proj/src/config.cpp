// Copyright 2026 the nmbloch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmbloch/config.hpp"

#include <cmath>
#include <fstream>

#include "nmbloch/errors.hpp"

namespace nmbloch {

namespace {

using nlohmann::json;

const json* find_field(const json& doc, const std::string& path) {
  const json* node = &doc;
  std::size_t begin = 0;
  while (begin <= path.size()) {
    const std::size_t dot = path.find('.', begin);
    const std::string key = path.substr(begin, dot - begin);
    if (!node->is_object() || !node->contains(key)) {
      return nullptr;
    }
    node = &(*node)[key];
    if (dot == std::string::npos) {
      break;
    }
    begin = dot + 1;
  }
  return node;
}

double require_number(const json& doc, const std::string& path) {
  const json* node = find_field(doc, path);
  if (node == nullptr) {
    throw config_error("config: missing field " + path);
  }
  if (!node->is_number()) {
    throw config_error("config: " + path + " must be a number");
  }
  return node->get<double>();
}

bool require_bool(const json& doc, const std::string& path) {
  const json* node = find_field(doc, path);
  if (node == nullptr) {
    throw config_error("config: missing field " + path);
  }
  if (!node->is_boolean()) {
    throw config_error("config: " + path + " must be a boolean");
  }
  return node->get<bool>();
}

int require_int(const json& doc, const std::string& path) {
  const json* node = find_field(doc, path);
  if (node == nullptr) {
    throw config_error("config: missing field " + path);
  }
  if (!node->is_number_integer()) {
    throw config_error("config: " + path + " must be an integer");
  }
  return node->get<int>();
}

Complex require_complex(const json& doc, const std::string& path) {
  const json* node = find_field(doc, path);
  if (node == nullptr) {
    throw config_error("config: missing field " + path);
  }
  if (node->is_number()) {
    return {node->get<double>(), 0.0};
  }
  if (node->is_array() && node->size() == 2 && (*node)[0].is_number() &&
      (*node)[1].is_number()) {
    return {(*node)[0].get<double>(), (*node)[1].get<double>()};
  }
  throw config_error("config: " + path +
                     " must be a number or a [re, im] pair");
}

json complex_to_json(const Complex& z) {
  if (z.imag() == 0.0) {
    return json(z.real());
  }
  return json::array({z.real(), z.imag()});
}

BathParams bath_from_json(const json& doc, const std::string& prefix) {
  BathParams bath;
  bath.Gamma = require_number(doc, prefix + ".Gamma");
  bath.gamma = require_number(doc, prefix + ".gamma");
  return bath;
}

}  // namespace

RunConfig config_from_json(const json& doc) {
  RunConfig config;
  config.t_end = require_number(doc, "t_end");
  config.dt = require_number(doc, "dt");
  config.sample_every = require_number(doc, "sample_every");
  config.N = require_int(doc, "N");
  config.params.omega1 = require_number(doc, "params.omega1");
  config.params.omega2 = require_number(doc, "params.omega2");
  config.params.omega3 = require_number(doc, "params.omega3");
  config.params.Omega1 = require_complex(doc, "params.Omega1");
  config.params.Omega2 = require_complex(doc, "params.Omega2");
  config.baths.a = bath_from_json(doc, "baths.a");
  config.baths.b = bath_from_json(doc, "baths.b");
  config.pulse.enabled = require_bool(doc, "pulse.enabled");
  config.pulse.h = require_number(doc, "pulse.h");
  config.pulse.tau = require_number(doc, "pulse.tau");
  config.pulse.delta = require_number(doc, "pulse.delta");
  config.validate();
  return config;
}

json config_to_json(const RunConfig& config) {
  json doc;
  doc["t_end"] = config.t_end;
  doc["dt"] = config.dt;
  doc["sample_every"] = config.sample_every;
  doc["N"] = config.N;
  doc["params"]["omega1"] = config.params.omega1;
  doc["params"]["omega2"] = config.params.omega2;
  doc["params"]["omega3"] = config.params.omega3;
  doc["params"]["Omega1"] = complex_to_json(config.params.Omega1);
  doc["params"]["Omega2"] = complex_to_json(config.params.Omega2);
  doc["baths"]["a"]["Gamma"] = config.baths.a.Gamma;
  doc["baths"]["a"]["gamma"] = config.baths.a.gamma;
  doc["baths"]["b"]["Gamma"] = config.baths.b.Gamma;
  doc["baths"]["b"]["gamma"] = config.baths.b.gamma;
  doc["pulse"]["enabled"] = config.pulse.enabled;
  doc["pulse"]["h"] = config.pulse.h;
  doc["pulse"]["tau"] = config.pulse.tau;
  doc["pulse"]["delta"] = config.pulse.delta;
  return doc;
}

void apply_override(json& doc, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw config_error("override '" + assignment +
                       "' is not of the form key=value");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::exception&) {
    throw config_error("override " + path + ": cannot parse value '" + value +
                       "'");
  }

  json* node = &doc;
  std::size_t begin = 0;
  while (true) {
    const std::size_t dot = path.find('.', begin);
    const std::string key = path.substr(begin, dot - begin);
    if (key.empty()) {
      throw config_error("override " + path + ": empty path segment");
    }
    if (dot == std::string::npos) {
      (*node)[key] = parsed;
      return;
    }
    node = &(*node)[key];
    begin = dot + 1;
  }
}

const std::vector<std::string> kSweepAxes = {"Gamma", "gamma", "N",
                                             "h",     "tau",   "delta"};

void apply_axis_value(json& doc, const std::string& axis, double value) {
  if (axis == "Gamma") {
    doc["baths"]["a"]["Gamma"] = value;
    doc["baths"]["b"]["Gamma"] = value;
  } else if (axis == "gamma") {
    doc["baths"]["a"]["gamma"] = value;
    doc["baths"]["b"]["gamma"] = value;
  } else if (axis == "N") {
    if (value != std::floor(value)) {
      throw config_error("sweep: N values must be integers");
    }
    doc["N"] = static_cast<int>(value);
  } else if (axis == "h" || axis == "tau" || axis == "delta") {
    doc["pulse"][axis] = value;
  } else {
    throw config_error("sweep: unknown axis '" + axis +
                       "'; expected one of Gamma, gamma, N, h, tau, delta");
  }
}

json load_config_file(const std::filesystem::path& path,
                      const std::vector<std::string>& overrides) {
  std::ifstream file(path);
  if (!file) {
    throw config_error("config: cannot open " + path.string());
  }
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw config_error("config: " + path.string() + ": " + e.what());
  }
  for (const std::string& assignment : overrides) {
    apply_override(doc, assignment);
  }
  return doc;
}

}  // namespace nmbloch
