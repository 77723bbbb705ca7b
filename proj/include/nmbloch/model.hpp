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

#include "nmbloch/errors.hpp"
#include "nmbloch/types.hpp"

namespace nmbloch {

// Driven Lambda-type three-level system. Level |3> is the upper level,
// the dipole transition 1<->2 is forbidden. Frequencies are expressed in
// units where omega3 - omega1 = 1. Both pump fields are resonant: the
// drive on 1<->3 runs at delta31(), the drive on 2<->3 at delta32().
struct SystemParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  Complex Omega1{0.0, 0.0};  // coupling of the 1<->3 pump
  Complex Omega2{0.0, 0.0};  // coupling of the 2<->3 pump

  double delta31() const { return omega3 - omega1; }
  double delta32() const { return omega3 - omega2; }
  double delta21() const { return omega2 - omega1; }

  // Combined drive strength sqrt(|Omega1|^2 + |Omega2|^2).
  double Omega() const;

  // Throws config_error unless Omega() > 0 and both detunings delta31,
  // delta32 are positive.
  void validate() const;
};

// One zero-temperature bosonic bath with Ornstein-Uhlenbeck correlation
// alpha(t,s) = (Gamma*gamma/2) * exp(-gamma*|t-s|). Gamma is the coupling
// strength (the Markovian decay rate), 1/gamma the bath correlation time.
struct BathParams {
  double Gamma = 0.0;
  double gamma = 1.0;

  Complex correlation(double tau) const;

  // Throws config_error unless Gamma >= 0 and gamma > 0.
  void validate() const;
};

struct BathPair {
  BathParams a;
  BathParams b;

  void validate() const;
};

// Rectangular leakage-elimination pulse train: the control amplitude is
// c(t) = h on [l*tau, l*tau + delta) for l = 0, 1, 2, ... and zero
// elsewhere.
struct PulseTrain {
  bool enabled = false;
  double h = 0.0;      // pulse strength
  double tau = 1.0;    // pulse period
  double delta = 0.0;  // per-pulse duration

  // c(t); identically zero when disabled.
  double value_at(double t) const;

  void validate() const;
};

// Instantaneous dark state |D(t)> = (Omega2/Omega) e^{-i omega1 t} |1>
//                                 - (Omega1/Omega) e^{-i omega2 t} |2>.
Vector3c dark_state(const SystemParams& params, double t);

// Orthogonal lower-level superposition coupled to |3> by the drives.
Vector3c bright_state(const SystemParams& params, double t);

// Conversions between the 9-component operator-expectation vector and the
// density matrix. The slot for A_ij holds <|i><j|> = rho_ji, so the two
// representations differ by a transpose on the coherences.
DensityMatrix bloch_to_density(const BlochVector& v);
BlochVector density_to_bloch(const DensityMatrix& rho);

// max_ij |rho_ij - conj(rho_ji)|.
double hermiticity_error(const DensityMatrix& rho);

// Dark-state fidelity sqrt(<D(t)|rho|D(t)>), clamped to [0, 1]. Throws
// numerical_error if the pre-clamp overlap leaves [-tol, 1 + tol].
double fidelity(const DensityMatrix& rho, const SystemParams& params,
                double t, double tol = 1e-8);

// Coefficients of the system-bath coupling rewritten in the dark/bright
// basis: |D(t)><3| and |B(t)><3| against each bath. There is no direct
// dark<->bright term, which is why pulsing |3> alone stops the leakage.
struct DarkBrightCoefficients {
  Complex dark_a;    // |D><3| coupling to bath a
  Complex dark_b;    // |D><3| coupling to bath b
  Complex bright_a;  // |B><3| coupling to bath a
  Complex bright_b;  // |B><3| coupling to bath b
};

DarkBrightCoefficients db_basis_coefficients(const SystemParams& params,
                                             double t);

}  // namespace nmbloch
