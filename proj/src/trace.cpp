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

#include "nmbloch/trace.hpp"

#include <cmath>

#include "nmbloch/errors.hpp"

namespace nmbloch {

TraceRow make_trace_row(double t, const DensityMatrix& rho,
                        const SystemParams& params, double fidelity_tol) {
  TraceRow row;
  row.t = t;
  row.fidelity = fidelity(rho, params, t, fidelity_tol);
  row.rho11 = rho(0, 0).real();
  row.rho22 = rho(1, 1).real();
  row.rho33 = rho(2, 2).real();
  row.re_rho12 = rho(0, 1).real();
  row.im_rho12 = rho(0, 1).imag();
  row.trace = (rho(0, 0) + rho(1, 1) + rho(2, 2)).real();
  row.herm_err = hermiticity_error(rho);
  return row;
}

double max_fidelity_difference(const FidelityTrace& lhs,
                               const FidelityTrace& rhs) {
  if (lhs.rows.size() != rhs.rows.size()) {
    throw config_error("trace comparison: sample counts differ");
  }
  double diff = 0.0;
  for (std::size_t i = 0; i < lhs.rows.size(); ++i) {
    if (std::abs(lhs.rows[i].t - rhs.rows[i].t) > 1e-9) {
      throw config_error("trace comparison: sample grids differ");
    }
    diff = std::max(diff, std::abs(lhs.rows[i].fidelity - rhs.rows[i].fidelity));
  }
  return diff;
}

}  // namespace nmbloch
