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

#include <algorithm>
#include <cmath>
#include <vector>

#include "nmbloch/model.hpp"

namespace nmbloch {

// Ordered breakpoints of a propagation: every sample time (multiples of
// sample_every) and every pulse edge (l*tau, l*tau + delta). Steps never
// straddle a breakpoint, so the generator is smooth inside each segment
// and the control amplitude is constant there.
struct TimeGrid {
  struct Point {
    double t = 0.0;
    bool sample = false;
  };

  std::vector<Point> points;

  static TimeGrid build(double t_end, double sample_every,
                        const PulseTrain& pulse);
};

namespace detail {

// Classical RK4 over a TimeGrid. Each segment is covered by equal
// sub-steps of size <= dt. The control amplitude is sampled once per step
// at the step midpoint; edge alignment guarantees it is constant across
// the step, so discontinuities never enter a stage evaluation from the
// wrong side.
//
// Rhs:     rhs(double t, double control, const State& y, State& dy)
// Sampler: sample(double t, const State& y)
template <class State, class Rhs, class Sampler>
void propagate_rk4(State& y, const TimeGrid& grid, double dt,
                   const PulseTrain& pulse, Rhs&& rhs, Sampler&& sample) {
  State k1 = y;
  State k2 = y;
  State k3 = y;
  State k4 = y;
  State tmp = y;
  if (!grid.points.empty() && grid.points.front().sample) {
    sample(grid.points.front().t, y);
  }
  for (std::size_t i = 0; i + 1 < grid.points.size(); ++i) {
    const double a = grid.points[i].t;
    const double b = grid.points[i + 1].t;
    const double len = b - a;
    const int steps = std::max(1, static_cast<int>(std::ceil(len / dt - 1e-9)));
    const double h = len / steps;
    for (int s = 0; s < steps; ++s) {
      const double t0 = a + s * h;
      const double control = pulse.value_at(a + (s + 0.5) * h);
      rhs(t0, control, y, k1);
      tmp = y + (0.5 * h) * k1;
      rhs(t0 + 0.5 * h, control, tmp, k2);
      tmp = y + (0.5 * h) * k2;
      rhs(t0 + 0.5 * h, control, tmp, k3);
      tmp = y + h * k3;
      rhs(t0 + h, control, tmp, k4);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (grid.points[i + 1].sample) {
      sample(b, y);
    }
  }
}

}  // namespace detail

}  // namespace nmbloch
