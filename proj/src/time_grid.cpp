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

#include "nmbloch/time_grid.hpp"

#include "nmbloch/errors.hpp"

namespace nmbloch {

TimeGrid TimeGrid::build(double t_end, double sample_every,
                         const PulseTrain& pulse) {
  if (!(t_end > 0.0) || !(sample_every > 0.0)) {
    throw config_error("time grid: t_end and sample_every must be > 0");
  }
  const double tol = 1e-9 * std::max(1.0, t_end);

  struct Raw {
    double t;
    bool sample;
  };
  std::vector<Raw> raw;

  const long n_samples = static_cast<long>(std::floor(t_end / sample_every + tol));
  for (long k = 0; k <= n_samples; ++k) {
    raw.push_back({std::min(k * sample_every, t_end), true});
  }
  if (pulse.enabled && pulse.h != 0.0) {
    const long n_periods = static_cast<long>(std::floor(t_end / pulse.tau + tol));
    for (long l = 0; l <= n_periods; ++l) {
      const double on = l * pulse.tau;
      if (on < t_end - tol) {
        raw.push_back({on, false});
      }
      const double off = on + pulse.delta;
      if (off < t_end - tol) {
        raw.push_back({off, false});
      }
    }
  }
  raw.push_back({t_end, false});

  std::sort(raw.begin(), raw.end(),
            [](const Raw& x, const Raw& y) { return x.t < y.t; });

  TimeGrid grid;
  for (const Raw& r : raw) {
    if (!grid.points.empty() && r.t - grid.points.back().t <= tol) {
      grid.points.back().sample = grid.points.back().sample || r.sample;
    } else {
      grid.points.push_back({r.t, r.sample});
    }
  }
  return grid;
}

}  // namespace nmbloch
