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

#include "nmbloch/integrator.hpp"

#include <cmath>
#include <sstream>

#include "nmbloch/errors.hpp"
#include "nmbloch/generator.hpp"
#include "nmbloch/time_grid.hpp"

namespace nmbloch {

namespace {

// Propagation gates are looser than the model default: hierarchy
// truncation legitimately produces larger residuals than roundoff.
constexpr double kRunTolerance = 1e-6;

void check_trace(double t, const TraceRow& row) {
  if (!(std::abs(row.trace - 1.0) <= kRunTolerance)) {  // NaN must fail too
    std::ostringstream msg;
    msg << "propagate: tr rho = " << row.trace << " at t = " << t
        << "; dt too large or truncation order too small";
    throw numerical_error(msg.str());
  }
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  baths.validate();
  pulse.validate();
  if (N < 0) {
    throw config_error("N: truncation order must be >= 0");
  }
  if (!(dt > 0.0)) {
    throw config_error("dt: must be > 0");
  }
  if (!(dt <= sample_every)) {
    throw config_error("sample_every: must be >= dt");
  }
  if (!(sample_every <= t_end)) {
    throw config_error("t_end: must be >= sample_every");
  }
  if (pulse.enabled && !(dt <= 0.5 * pulse.delta)) {
    throw config_error("dt: must be <= pulse.delta / 2 to resolve each pulse");
  }
}

PropagateResult propagate(const RunConfig& config) {
  config.validate();
  PropagateResult result;
  result.final_state = init_state(config.N, config.params);
  HierarchyState& state = result.final_state;

  const int count = state.layout.count();
  Eigen::MatrixXcd la(9, count);
  Eigen::MatrixXcd lb(9, count);

  const TimeGrid grid =
      TimeGrid::build(config.t_end, config.sample_every, config.pulse);

  auto rhs_eval = [&](double t, double control, const Eigen::MatrixXcd& y,
                      Eigen::MatrixXcd& dy) {
    const Generator9 H = system_matrix(config.params, control, t);
    hierarchy_rhs(state.layout, y, H, config.baths, la, lb, dy);
  };
  auto sampler = [&](double t, const Eigen::MatrixXcd& y) {
    const DensityMatrix rho = bloch_to_density(y.col(0));
    TraceRow row = make_trace_row(t, rho, config.params, kRunTolerance);
    check_trace(t, row);
    result.trace.rows.push_back(row);
  };

  detail::propagate_rk4(state.nodes, grid, config.dt, config.pulse, rhs_eval,
                        sampler);
  state.t = config.t_end;
  return result;
}

MarkovResult propagate_markov(const RunConfig& config) {
  config.validate();
  MarkovResult result;
  const Vector3c d = dark_state(config.params, 0.0);
  result.final_state = density_to_bloch(d * d.adjoint());

  const TimeGrid grid =
      TimeGrid::build(config.t_end, config.sample_every, config.pulse);

  auto rhs_eval = [&](double t, double control, const BlochVector& y,
                      BlochVector& dy) {
    const Generator9 G =
        markov_limit_generator(config.params, config.baths, control, t);
    dy.noalias() = G * y;
  };
  auto sampler = [&](double t, const BlochVector& y) {
    const DensityMatrix rho = bloch_to_density(y);
    TraceRow row = make_trace_row(t, rho, config.params, kRunTolerance);
    check_trace(t, row);
    result.trace.rows.push_back(row);
  };

  detail::propagate_rk4(result.final_state, grid, config.dt, config.pulse,
                        rhs_eval, sampler);
  return result;
}

}  // namespace nmbloch
