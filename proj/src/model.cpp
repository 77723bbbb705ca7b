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

#include "nmbloch/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nmbloch {

double SystemParams::Omega() const {
  return std::sqrt(std::norm(Omega1) + std::norm(Omega2));
}

void SystemParams::validate() const {
  if (!(Omega() > 0.0)) {
    throw config_error("params: Omega1 and Omega2 are both zero, the dark state is undefined");
  }
  if (!(delta31() > 0.0)) {
    throw config_error("params: omega3 must lie above omega1");
  }
  if (!(delta32() > 0.0)) {
    throw config_error("params: omega3 must lie above omega2");
  }
}

Complex BathParams::correlation(double tau) const {
  return 0.5 * Gamma * gamma * std::exp(-gamma * std::abs(tau));
}

void BathParams::validate() const {
  if (!(Gamma >= 0.0)) {
    throw config_error("bath: Gamma must be >= 0");
  }
  if (!(gamma > 0.0)) {
    throw config_error("bath: gamma must be > 0");
  }
}

void BathPair::validate() const {
  a.validate();
  b.validate();
}

double PulseTrain::value_at(double t) const {
  if (!enabled || h == 0.0) {
    return 0.0;
  }
  double phase = std::fmod(t, tau);
  if (phase < 0.0) {
    phase += tau;
  }
  return phase < delta ? h : 0.0;
}

void PulseTrain::validate() const {
  if (!(h >= 0.0)) {
    throw config_error("pulse: h must be >= 0");
  }
  if (!(tau > 0.0)) {
    throw config_error("pulse: tau must be > 0");
  }
  if (!(delta >= 0.0 && delta <= tau)) {
    throw config_error("pulse: delta must lie in [0, tau]");
  }
}

Vector3c dark_state(const SystemParams& params, double t) {
  const double norm = params.Omega();
  Vector3c d;
  d(0) = params.Omega2 / norm * std::polar(1.0, -params.omega1 * t);
  d(1) = -params.Omega1 / norm * std::polar(1.0, -params.omega2 * t);
  d(2) = 0.0;
  return d;
}

Vector3c bright_state(const SystemParams& params, double t) {
  const double norm = params.Omega();
  Vector3c b;
  b(0) = params.Omega1 / norm * std::polar(1.0, -params.omega1 * t);
  b(1) = params.Omega2 / norm * std::polar(1.0, -params.omega2 * t);
  b(2) = 0.0;
  return b;
}

DensityMatrix bloch_to_density(const BlochVector& v) {
  DensityMatrix rho;
  rho(0, 0) = v(bloch::a11);
  rho(1, 1) = v(bloch::a22);
  rho(2, 2) = v(bloch::a33);
  rho(0, 2) = v(bloch::a31);
  rho(1, 2) = v(bloch::a32);
  rho(0, 1) = v(bloch::a21);
  rho(2, 0) = v(bloch::a13);
  rho(2, 1) = v(bloch::a23);
  rho(1, 0) = v(bloch::a12);
  return rho;
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  BlochVector v;
  v(bloch::a11) = rho(0, 0);
  v(bloch::a22) = rho(1, 1);
  v(bloch::a33) = rho(2, 2);
  v(bloch::a31) = rho(0, 2);
  v(bloch::a32) = rho(1, 2);
  v(bloch::a21) = rho(0, 1);
  v(bloch::a13) = rho(2, 0);
  v(bloch::a23) = rho(2, 1);
  v(bloch::a12) = rho(1, 0);
  return v;
}

double hermiticity_error(const DensityMatrix& rho) {
  double err = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      err = std::max(err, std::abs(rho(i, j) - std::conj(rho(j, i))));
    }
  }
  return err;
}

double fidelity(const DensityMatrix& rho, const SystemParams& params,
                double t, double tol) {
  const Vector3c d = dark_state(params, t);
  const Complex overlap = d.dot(rho * d);  // <D|rho|D>
  const double value = overlap.real();
  if (!(value >= -tol && value <= 1.0 + tol)) {  // NaN fails this gate too
    std::ostringstream msg;
    msg << "fidelity: <D|rho|D> = " << value << " outside [" << -tol << ", "
        << 1.0 + tol << "] at t = " << t;
    throw numerical_error(msg.str());
  }
  return std::sqrt(std::clamp(value, 0.0, 1.0));
}

DarkBrightCoefficients db_basis_coefficients(const SystemParams& params,
                                             double t) {
  const double norm = params.Omega();
  const Complex phase1 = std::polar(1.0, params.omega1 * t);
  const Complex phase2 = std::polar(1.0, params.omega2 * t);
  DarkBrightCoefficients c;
  c.dark_a = std::conj(params.Omega2) / norm * phase1;
  c.dark_b = -std::conj(params.Omega1) / norm * phase2;
  c.bright_a = std::conj(params.Omega1) / norm * phase1;
  c.bright_b = std::conj(params.Omega2) / norm * phase2;
  return c;
}

}  // namespace nmbloch
