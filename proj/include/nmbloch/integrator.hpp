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

#include "nmbloch/hierarchy.hpp"
#include "nmbloch/model.hpp"
#include "nmbloch/trace.hpp"
#include "nmbloch/types.hpp"

namespace nmbloch {

// One propagation job. Times are in units of 1/omega with
// omega = omega3 - omega1.
struct RunConfig {
  double t_end = 50.0;
  double dt = 1e-3;
  double sample_every = 0.05;
  int N = 10;  // hierarchy truncation order
  SystemParams params;
  BathPair baths;
  PulseTrain pulse;

  void validate() const;
};

struct PropagateResult {
  FidelityTrace trace;
  HierarchyState final_state;
};

// Fixed-step RK4 propagation of the hierarchy from t = 0 to t_end, with
// steps split so pulse edges and sample times land exactly on step
// boundaries. Throws numerical_error when the trace drifts beyond 1e-6
// or the fidelity overlap leaves [-1e-6, 1 + 1e-6].
PropagateResult propagate(const RunConfig& config);

struct MarkovResult {
  FidelityTrace trace;
  BlochVector final_state;
};

// Same contract, integrating a single Bloch vector under the
// gamma -> infinity closure generator.
MarkovResult propagate_markov(const RunConfig& config);

}  // namespace nmbloch
