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

#include <string>
#include <utility>
#include <vector>

namespace nmbloch {

struct PlotCurve {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Deterministic multi-curve line chart. Throws config_error on an empty
// curve list.
std::string render_line_chart(const std::vector<PlotCurve>& curves,
                              const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label);

}  // namespace nmbloch
