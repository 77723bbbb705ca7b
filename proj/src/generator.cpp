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

#include "nmbloch/generator.hpp"

#include <cmath>

namespace nmbloch {

using namespace bloch;

Generator9 system_matrix(const SystemParams& p, double control, double t) {
  const Complex o1 = p.Omega1 * std::polar(1.0, -p.delta31() * t);
  const Complex o2 = p.Omega2 * std::polar(1.0, -p.delta32() * t);
  const Complex o1c = std::conj(o1);
  const Complex o2c = std::conj(o2);
  const double d31 = p.delta31() + control;
  const double d32 = p.delta32() + control;
  const double d21 = p.delta21();

  Generator9 H = Generator9::Zero();

  // population rows
  H(a11, a31) = kI * o1;
  H(a11, a13) = -kI * o1c;
  H(a22, a32) = kI * o2;
  H(a22, a23) = -kI * o2c;
  H(a33, a31) = -kI * o1;
  H(a33, a32) = -kI * o2;
  H(a33, a13) = kI * o1c;
  H(a33, a23) = kI * o2c;

  // coherence rows
  H(a31, a11) = kI * o1c;
  H(a31, a33) = -kI * o1c;
  H(a31, a31) = kI * d31;
  H(a31, a21) = kI * o2c;

  H(a32, a22) = kI * o2c;
  H(a32, a33) = -kI * o2c;
  H(a32, a32) = kI * d32;
  H(a32, a12) = kI * o1c;

  H(a21, a31) = kI * o2;
  H(a21, a21) = kI * d21;
  H(a21, a23) = -kI * o1c;

  H(a13, a11) = -kI * o1;
  H(a13, a33) = kI * o1;
  H(a13, a13) = -kI * d31;
  H(a13, a12) = -kI * o2;

  H(a23, a22) = -kI * o2;
  H(a23, a33) = kI * o2;
  H(a23, a23) = -kI * d32;
  H(a23, a21) = -kI * o1;

  H(a12, a32) = kI * o1;
  H(a12, a13) = -kI * o2c;
  H(a12, a12) = -kI * d21;

  return H;
}

Generator9 system_matrix(const SystemParams& params, const PulseTrain& pulse,
                         double t) {
  return system_matrix(params, pulse.value_at(t), t);
}

std::pair<Generator9, Generator9> coupling_matrices() {
  Generator9 La = Generator9::Zero();
  La(a11, a31) = kI;
  La(a11, a13) = -kI;
  La(a33, a31) = -kI;
  La(a33, a13) = kI;
  La(a31, a11) = kI;
  La(a31, a33) = -kI;
  La(a32, a12) = kI;
  La(a21, a23) = -kI;
  La(a13, a11) = -kI;
  La(a13, a33) = kI;
  La(a23, a21) = -kI;
  La(a12, a32) = kI;

  Generator9 Lb = Generator9::Zero();
  Lb(a22, a32) = kI;
  Lb(a22, a23) = -kI;
  Lb(a33, a32) = -kI;
  Lb(a33, a23) = kI;
  Lb(a31, a21) = kI;
  Lb(a32, a22) = kI;
  Lb(a32, a33) = -kI;
  Lb(a21, a31) = kI;
  Lb(a13, a12) = -kI;
  Lb(a23, a22) = -kI;
  Lb(a23, a33) = kI;
  Lb(a12, a13) = -kI;

  return {La, Lb};
}

Generator9 markov_limit_generator(const SystemParams& params,
                                  const BathPair& baths, double control,
                                  double t) {
  static const std::pair<Generator9, Generator9> L = coupling_matrices();
  static const Generator9 La2 = L.first * L.first;
  static const Generator9 Lb2 = L.second * L.second;
  Generator9 G = system_matrix(params, control, t);
  G += 0.5 * baths.a.Gamma * La2;
  G += 0.5 * baths.b.Gamma * Lb2;
  return G;
}

Generator9 markov_limit_generator(const SystemParams& params,
                                  const BathPair& baths,
                                  const PulseTrain& pulse, double t) {
  return markov_limit_generator(params, baths, pulse.value_at(t), t);
}

}  // namespace nmbloch
