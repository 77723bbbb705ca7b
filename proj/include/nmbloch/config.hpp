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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmbloch/integrator.hpp"

namespace nmbloch {

// Config documents mirror RunConfig field names:
//
// {
//   "t_end": 50.0, "dt": 0.001, "sample_every": 0.05, "N": 10,
//   "params": {"omega1": -1.0, "omega2": -1.2, "omega3": 0.0,
//              "Omega1": 0.5, "Omega2": 0.2},
//   "baths": {"a": {"Gamma": 0.1, "gamma": 0.6},
//             "b": {"Gamma": 0.1, "gamma": 0.6}},
//   "pulse": {"enabled": false, "h": 0.0, "tau": 0.2, "delta": 0.1}
// }
//
// Drive couplings accept a number or a [re, im] pair.

// Throws config_error with the offending field path.
RunConfig config_from_json(const nlohmann::json& doc);

// Canonical snapshot; config_from_json(config_to_json(c)) reproduces c
// exactly.
nlohmann::json config_to_json(const RunConfig& config);

// Applies a dotted-path override of the form "baths.a.Gamma=0.5" to a
// config document. Values are parsed as JSON scalars.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Sweep axes: Gamma and gamma address both baths at once; h, tau and
// delta address the pulse; N the truncation order.
extern const std::vector<std::string> kSweepAxes;
void apply_axis_value(nlohmann::json& doc, const std::string& axis,
                      double value);

nlohmann::json load_config_file(const std::filesystem::path& path,
                                const std::vector<std::string>& overrides);

}  // namespace nmbloch
