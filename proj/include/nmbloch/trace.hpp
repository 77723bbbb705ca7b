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

#include <vector>

#include "nmbloch/model.hpp"

namespace nmbloch {

// One sampled instant of a propagation.
struct TraceRow {
  double t = 0.0;
  double fidelity = 0.0;
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  double re_rho12 = 0.0;
  double im_rho12 = 0.0;
  double trace = 0.0;
  double herm_err = 0.0;
};

struct FidelityTrace {
  std::vector<TraceRow> rows;
};

// Builds a row from the reduced density matrix; fidelity gated with the
// supplied tolerance.
TraceRow make_trace_row(double t, const DensityMatrix& rho,
                        const SystemParams& params, double fidelity_tol);

// max_t |F_1(t) - F_2(t)|; throws config_error if the sample grids differ.
double max_fidelity_difference(const FidelityTrace& lhs,
                               const FidelityTrace& rhs);

}  // namespace nmbloch
