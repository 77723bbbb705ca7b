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

#include <cmath>
#include <random>

#include <doctest.h>

#include "nmbloch/errors.hpp"
#include "nmbloch/model.hpp"

using namespace nmbloch;

namespace {

// The parameter set used for all published fidelity curves.
SystemParams reference_params() {
  SystemParams p;
  p.omega1 = -1.0;
  p.omega2 = -1.2;
  p.omega3 = 0.0;
  p.Omega1 = 0.5;
  p.Omega2 = 0.2;
  return p;
}

SystemParams random_params(std::mt19937& rng, bool complex_drives = false) {
  std::uniform_real_distribution<double> lower(-2.0, -0.3);
  std::uniform_real_distribution<double> drive(0.05, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  SystemParams p;
  p.omega1 = lower(rng);
  p.omega2 = lower(rng);
  p.omega3 = 0.0;
  if (complex_drives) {
    p.Omega1 = std::polar(drive(rng), angle(rng));
    p.Omega2 = std::polar(drive(rng), angle(rng));
  } else {
    p.Omega1 = drive(rng);
    p.Omega2 = drive(rng);
  }
  return p;
}

}  // namespace

TEST_CASE("system params derived quantities and validation") {
  const SystemParams p = reference_params();
  CHECK(p.delta31() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.delta32() == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(p.delta21() == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(p.Omega() == doctest::Approx(std::sqrt(0.29)).epsilon(1e-15));
  CHECK_NOTHROW(p.validate());

  SystemParams bad = p;
  bad.Omega1 = 0.0;
  bad.Omega2 = 0.0;
  CHECK_THROWS_AS(bad.validate(), config_error);
  bad = p;
  bad.omega1 = 0.5;  // omega3 - omega1 < 0
  CHECK_THROWS_AS(bad.validate(), config_error);
}

TEST_CASE("bath params") {
  BathParams bath;
  bath.Gamma = 0.1;
  bath.gamma = 0.6;
  CHECK_NOTHROW(bath.validate());
  CHECK(bath.correlation(0.0).real() == doctest::Approx(0.03).epsilon(1e-15));
  CHECK(bath.correlation(2.0).real() ==
        doctest::Approx(0.03 * std::exp(-1.2)).epsilon(1e-15));
  CHECK(bath.correlation(-2.0).real() ==
        doctest::Approx(bath.correlation(2.0).real()).epsilon(1e-15));

  bath.gamma = 0.0;
  CHECK_THROWS_AS(bath.validate(), config_error);
  bath.gamma = 0.6;
  bath.Gamma = -0.1;
  CHECK_THROWS_AS(bath.validate(), config_error);
}

TEST_CASE("pulse train amplitude") {
  PulseTrain pulse;
  pulse.enabled = true;
  pulse.h = 6.0;
  pulse.tau = 0.25;
  pulse.delta = 0.125;
  CHECK_NOTHROW(pulse.validate());

  CHECK(pulse.value_at(0.0) == 6.0);
  CHECK(pulse.value_at(0.1) == 6.0);
  CHECK(pulse.value_at(0.125) == 0.0);  // pulse window is half open
  CHECK(pulse.value_at(0.2) == 0.0);
  CHECK(pulse.value_at(0.25) == 6.0);
  CHECK(pulse.value_at(7 * 0.25 + 0.06) == 6.0);
  CHECK(pulse.value_at(7 * 0.25 + 0.2) == 0.0);

  pulse.enabled = false;
  CHECK(pulse.value_at(0.1) == 0.0);

  pulse.enabled = true;
  pulse.delta = 0.3;  // exceeds tau
  CHECK_THROWS_AS(pulse.validate(), config_error);
}

TEST_CASE("dark state amplitudes") {
  const SystemParams p = reference_params();
  const Vector3c d = dark_state(p, 0.0);
  // direct evaluation: (0.2, -0.5, 0) / sqrt(0.29)
  CHECK(d(0).real() == doctest::Approx(0.2 / std::sqrt(0.29)).epsilon(1e-14));
  CHECK(d(1).real() == doctest::Approx(-0.5 / std::sqrt(0.29)).epsilon(1e-14));
  CHECK(std::abs(d(2)) == 0.0);
  CHECK(d(0).real() == doctest::Approx(0.37139).epsilon(1e-4));
  CHECK(d(1).real() == doctest::Approx(-0.92848).epsilon(1e-4));

  SystemParams single = p;
  single.Omega1 = 0.0;
  single.Omega2 = 1.0;
  const double t = 0.73;
  const Vector3c ds = dark_state(single, t);
  CHECK(std::abs(ds(0) - std::polar(1.0, -single.omega1 * t)) < 1e-15);
  CHECK(std::abs(ds(1)) == 0.0);

  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    const SystemParams q = random_params(rng, i % 2 == 1);
    const double tt = 10.0 * i / 50.0;
    CHECK(dark_state(q, tt).norm() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("bright state amplitudes and orthogonality") {
  const SystemParams p = reference_params();
  const Vector3c b = bright_state(p, 0.0);
  CHECK(b(0).real() == doctest::Approx(0.5 / std::sqrt(0.29)).epsilon(1e-14));
  CHECK(b(1).real() == doctest::Approx(0.2 / std::sqrt(0.29)).epsilon(1e-14));
  CHECK(b(0).real() == doctest::Approx(0.92848).epsilon(1e-4));
  CHECK(b(1).real() == doctest::Approx(0.37139).epsilon(1e-4));

  SystemParams single = p;
  single.Omega1 = 1.0;
  single.Omega2 = 0.0;
  CHECK(std::abs(bright_state(single, 0.0)(0) - 1.0) < 1e-15);

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const SystemParams q = random_params(rng);  // real drives
    const double t = 0.37 * i;
    CHECK(bright_state(q, t).norm() == doctest::Approx(1.0).epsilon(1e-13));
    const Complex overlap = bright_state(q, t).dot(dark_state(q, t));
    CHECK(std::abs(overlap) < 1e-14);
  }
}

TEST_CASE("bloch vector <-> density matrix") {
  BlochVector pure = BlochVector::Zero();
  pure(bloch::a11) = 1.0;
  const DensityMatrix rho = bloch_to_density(pure);
  CHECK(std::abs(rho(0, 0) - 1.0) < 1e-15);
  CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    BlochVector v;
    for (int k = 0; k < 9; ++k) {
      v(k) = Complex(u(rng), u(rng));
    }
    const BlochVector back = density_to_bloch(bloch_to_density(v));
    CHECK((back - v).norm() == 0.0);  // exact bijection
  }
}

TEST_CASE("dark state projector in bloch form") {
  const SystemParams p = reference_params();
  const Vector3c d = dark_state(p, 0.0);
  const DensityMatrix rho = d * d.adjoint();
  const BlochVector v = density_to_bloch(rho);
  CHECK(v(bloch::a11).real() == doctest::Approx(0.04 / 0.29).epsilon(1e-14));
  CHECK(v(bloch::a22).real() == doctest::Approx(0.25 / 0.29).epsilon(1e-14));
  CHECK(std::abs(v(bloch::a33)) < 1e-15);
  // both 1-2 coherence slots carry -0.10/0.29 for these real drives
  CHECK(v(bloch::a21).real() == doctest::Approx(-0.10 / 0.29).epsilon(1e-14));
  CHECK(v(bloch::a12).real() == doctest::Approx(-0.10 / 0.29).epsilon(1e-14));
  CHECK(std::abs(v(bloch::a31)) < 1e-15);
  CHECK(std::abs(v(bloch::a13)) < 1e-15);
}

TEST_CASE("fidelity") {
  const SystemParams p = reference_params();

  for (double t : {0.0, 1.3, 17.0}) {
    const Vector3c d = dark_state(p, t);
    const DensityMatrix projector = d * d.adjoint();
    CHECK(fidelity(projector, p, t) == doctest::Approx(1.0).epsilon(1e-12));
  }

  DensityMatrix upper = DensityMatrix::Zero();
  upper(2, 2) = 1.0;
  CHECK(fidelity(upper, p, 0.0) == doctest::Approx(0.0).epsilon(1e-12));

  const DensityMatrix mixed = DensityMatrix::Identity() / 3.0;
  CHECK(fidelity(mixed, p, 0.4) ==
        doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));

  // broken propagation must be reported, not clamped away
  const Vector3c d = dark_state(p, 0.0);
  const DensityMatrix overgrown = 2.0 * (d * d.adjoint());
  CHECK_THROWS_AS(fidelity(overgrown, p, 0.0), numerical_error);
  const DensityMatrix negative = -0.1 * (d * d.adjoint());
  CHECK_THROWS_AS(fidelity(negative, p, 0.0), numerical_error);

  // tolerance gate is configurable
  const DensityMatrix slightly = (1.0 + 1e-7) * (d * d.adjoint());
  CHECK_THROWS_AS(fidelity(slightly, p, 0.0, 1e-8), numerical_error);
  CHECK(fidelity(slightly, p, 0.0, 1e-6) == 1.0);  // clamped
}

TEST_CASE("hermiticity error") {
  DensityMatrix rho = DensityMatrix::Zero();
  rho(0, 1) = Complex(0.25, 0.5);
  rho(1, 0) = std::conj(rho(0, 1));
  CHECK(hermiticity_error(rho) == 0.0);
  rho(1, 0) += Complex(0.0, 2e-7);
  CHECK(hermiticity_error(rho) == doctest::Approx(2e-7).epsilon(1e-9));
}

TEST_CASE("dark/bright basis coupling coefficients") {
  const SystemParams p = reference_params();
  const DarkBrightCoefficients c = db_basis_coefficients(p, 0.0);
  const double s = std::sqrt(0.29);
  CHECK(c.dark_a.real() == doctest::Approx(0.2 / s).epsilon(1e-14));
  CHECK(c.dark_b.real() == doctest::Approx(-0.5 / s).epsilon(1e-14));
  CHECK(c.bright_a.real() == doctest::Approx(0.5 / s).epsilon(1e-14));
  CHECK(c.bright_b.real() == doctest::Approx(0.2 / s).epsilon(1e-14));

  SystemParams single = p;
  single.Omega1 = 0.0;
  single.Omega2 = 1.0;
  const double t = 1.9;
  const DarkBrightCoefficients cs = db_basis_coefficients(single, t);
  CHECK(std::abs(cs.dark_a - std::polar(1.0, single.omega1 * t)) < 1e-15);
  CHECK(std::abs(cs.dark_b) == 0.0);
}

TEST_CASE("dark/bright coefficients reconstruct the bare coupling") {
  // Rewriting the system-bath coupling in the dark/bright basis must give
  // back |1><3| for bath a and |2><3| for bath b, with no dark<->bright
  // slot anywhere. Checked by expanding the coefficients against the
  // {|1>,|2>,|3>} basis for real drives.
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const SystemParams p = random_params(rng);  // real drives
    const double t = 2.1 * i / 7.0;
    const DarkBrightCoefficients c = db_basis_coefficients(p, t);
    const Vector3c d = dark_state(p, t);
    const Vector3c b = bright_state(p, t);

    const Vector3c bath_a_vector = c.dark_a * d + c.bright_a * b;
    const Vector3c bath_b_vector = c.dark_b * d + c.bright_b * b;
    CHECK(std::abs(bath_a_vector(0) - 1.0) < 1e-12);
    CHECK(std::abs(bath_a_vector(1)) < 1e-12);
    CHECK(std::abs(bath_a_vector(2)) < 1e-12);
    CHECK(std::abs(bath_b_vector(0)) < 1e-12);
    CHECK(std::abs(bath_b_vector(1) - 1.0) < 1e-12);
    CHECK(std::abs(bath_b_vector(2)) < 1e-12);
  }

  // the row-normalization identity holds for complex drives too
  std::mt19937 rng2(13);
  for (int i = 0; i < 40; ++i) {
    const SystemParams p = random_params(rng2, true);
    const DarkBrightCoefficients c = db_basis_coefficients(p, 0.61 * i);
    CHECK(std::norm(c.dark_a) + std::norm(c.dark_b) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::norm(c.bright_a) + std::norm(c.bright_b) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}
