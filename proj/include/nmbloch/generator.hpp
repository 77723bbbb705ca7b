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

#include <utility>

#include "nmbloch/model.hpp"
#include "nmbloch/types.hpp"

namespace nmbloch {

// Time-dependent generator H(t) of the quantum Bloch equation, with the
// control amplitude pinned to an explicit value. The drives enter as
// Omega_i(t) = Omega_i * e^{-i delta3i t}; a nonzero control shifts the
// four detuning entries i*delta31 -> i*(delta31 + c) on the A31 row,
// i*delta32 -> i*(delta32 + c) on the A32 row and the conjugates on the
// A13/A23 rows. Control pulses act on the level splittings only, never on
// the fixed drive phases.
Generator9 system_matrix(const SystemParams& params, double control,
                         double t);

// Same with the control amplitude read from the pulse train at time t.
Generator9 system_matrix(const SystemParams& params, const PulseTrain& pulse,
                         double t);

// The constant bath-coupling matrices (L_a, L_b). Each has exactly 12
// nonzero entries, all +-i.
std::pair<Generator9, Generator9> coupling_matrices();

// gamma -> infinity closure: H(t) + (Gamma_a/2) L_a^2 + (Gamma_b/2) L_b^2,
// obtained by adiabatically eliminating the first hierarchy tier.
Generator9 markov_limit_generator(const SystemParams& params,
                                  const BathPair& baths,
                                  const PulseTrain& pulse, double t);

Generator9 markov_limit_generator(const SystemParams& params,
                                  const BathPair& baths, double control,
                                  double t);

}  // namespace nmbloch
