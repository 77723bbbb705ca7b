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

#include "nmbloch/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nmbloch/errors.hpp"
#include "nmbloch/time_grid.hpp"

namespace nmbloch {

namespace {

constexpr std::size_t kMaxBasisStates = 4'000'000;

// Exact binomial coefficient; inputs stay small enough for the running
// product to be exact in 64 bits.
std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

double DiscretizedBath::coupling_power() const {
  double sum = 0.0;
  for (double g : couplings) {
    sum += g * g;
  }
  return sum;
}

Complex DiscretizedBath::correlation(double tau) const {
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < couplings.size(); ++k) {
    sum += couplings[k] * couplings[k] *
           std::polar(1.0, -frequencies[k] * tau);
  }
  return sum;
}

double DiscretizedBath::max_correlation_error(double tau_max,
                                              int samples) const {
  double err = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double tau = tau_max * i / (samples - 1);
    err = std::max(err, std::abs(correlation(tau) - parent.correlation(tau)));
  }
  return err;
}

DiscretizedBath discretize_bath(const BathParams& bath, int modes,
                                double window) {
  bath.validate();
  if (modes < 2) {
    throw config_error("discretize_bath: need at least 2 modes");
  }
  if (!(window > 2.0 * bath.gamma)) {
    throw config_error(
        "discretize_bath: window must exceed 2*gamma to resolve the "
        "Lorentzian weight");
  }
  DiscretizedBath out;
  out.parent = bath;
  out.frequencies.resize(modes);
  out.couplings.resize(modes);
  const double dw = 2.0 * window / (modes - 1);
  const double g = bath.gamma;
  for (int k = 0; k < modes; ++k) {
    const double w = -window + k * dw;
    out.frequencies[k] = w;
    const double weight =
        bath.Gamma * g * g / (2.0 * std::numbers::pi * (g * g + w * w));
    out.couplings[k] = std::sqrt(weight * dw);
  }
  return out;
}

FockBasis::FockBasis(int modes, int n_max) : modes_(modes), n_max_(n_max) {
  if (modes < 1) {
    throw config_error("fock basis: need at least one mode");
  }
  if (n_max < 1) {
    throw config_error("fock basis: excitation cutoff must be >= 1");
  }
  offsets_.resize(n_max + 2);
  offsets_[0] = 0;
  for (int r = 0; r <= n_max; ++r) {
    offsets_[r + 1] =
        offsets_[r] + binomial(static_cast<std::size_t>(modes) + r - 1, r);
  }
  if (size() > kMaxBasisStates) {
    std::ostringstream msg;
    msg << "fock basis: " << size() << " states exceeds the "
        << kMaxBasisStates << "-state limit; lower n_max or the mode count";
    throw config_error(msg.str());
  }
}

std::size_t FockBasis::rank(std::span<const int> sorted_modes) const {
  const std::size_t r = sorted_modes.size();
  std::size_t within = 0;
  for (std::size_t j = 0; j < r; ++j) {
    within += binomial(static_cast<std::size_t>(sorted_modes[j]) + j, j + 1);
  }
  return offsets_[r] + within;
}

void FockBasis::for_each_in_sector(
    int r,
    const std::function<void(std::size_t, std::span<const int>)>& f) const {
  if (r == 0) {
    f(0, {});
    return;
  }
  // Colex odometer over nondecreasing mode tuples; visiting order matches
  // rank().
  std::vector<int> idx(r, 0);
  std::size_t bath_rank = offsets_[r];
  while (true) {
    f(bath_rank, std::span<const int>(idx));
    ++bath_rank;
    int p = 0;
    while (p < r) {
      const int limit = (p + 1 < r) ? idx[p + 1] : modes_ - 1;
      if (idx[p] < limit) {
        break;
      }
      ++p;
    }
    if (p == r) {
      return;
    }
    ++idx[p];
    for (int q = 0; q < p; ++q) {
      idx[q] = 0;
    }
  }
}

OracleSimulator::OracleSimulator(const SystemParams& params,
                                 const DiscretizedBath& bath_a,
                                 const DiscretizedBath& bath_b, int n_max,
                                 bool rwa)
    : params_(params),
      basis_(static_cast<int>(bath_a.frequencies.size() +
                              bath_b.frequencies.size()),
             n_max) {
  params.validate();
  const int modes_a = static_cast<int>(bath_a.frequencies.size());
  const int total_modes = basis_.modes();

  std::vector<double> freq(total_modes);
  std::vector<double> coupling(total_modes);
  for (int k = 0; k < modes_a; ++k) {
    freq[k] = bath_a.frequencies[k];
    coupling[k] = bath_a.couplings[k];
  }
  for (int k = modes_a; k < total_modes; ++k) {
    freq[k] = bath_b.frequencies[k - modes_a];
    coupling[k] = bath_b.couplings[k - modes_a];
  }

  const std::size_t states = basis_.size();
  top_sector_begin_ = 3 * basis_.sector_offset(n_max);

  // Static diagonal: level energies plus the mode energies of the bath
  // configuration.
  diag_.resize(states);
  const double level_energy[3] = {params.omega1, params.omega2, params.omega3};
  for (int r = 0; r <= n_max; ++r) {
    basis_.for_each_in_sector(
        r, [&](std::size_t bath_rank, std::span<const int> modes) {
          double e_bath = 0.0;
          for (int m : modes) {
            e_bath += freq[m];
          }
          for (int lvl = 0; lvl < 3; ++lvl) {
            diag_[3 * bath_rank + lvl] = level_energy[lvl] + e_bath;
          }
        });
  }

  // Interaction: walk every creation edge bath_state -> bath_state + mode
  // by enumerating the target sectors; <target| a_k^dag |source> =
  // sqrt(n_k(target)). Bath a flips 1<->3, bath b flips 2<->3. The
  // rotating part pairs photon emission with 3 -> 1 (or 3 -> 2); the
  // counter-rotating part pairs creation with 1 -> 3 (2 -> 3) and is
  // dropped under the RWA.
  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<int> source;
  for (int r = 1; r <= n_max; ++r) {
    basis_.for_each_in_sector(
        r, [&](std::size_t target_rank, std::span<const int> modes) {
          for (std::size_t pos = 0; pos < modes.size(); ++pos) {
            if (pos > 0 && modes[pos] == modes[pos - 1]) {
              continue;  // one edge per distinct mode
            }
            const int k = modes[pos];
            int multiplicity = 0;
            for (int m : modes) {
              multiplicity += (m == k);
            }
            source.assign(modes.begin(), modes.end());
            source.erase(source.begin() + pos);
            const std::size_t source_rank = basis_.rank(source);
            const double amp =
                coupling[k] * std::sqrt(static_cast<double>(multiplicity));
            if (amp == 0.0) {
              continue;
            }
            const int lower = (k < modes_a) ? 0 : 1;  // level 1 or 2
            const auto add = [&](std::size_t row, std::size_t col) {
              triplets.emplace_back(static_cast<int>(row),
                                    static_cast<int>(col), amp);
              triplets.emplace_back(static_cast<int>(col),
                                    static_cast<int>(row), amp);
            };
            // rotating: emit photon while 3 drops to the lower level
            add(3 * target_rank + lower, 3 * source_rank + 2);
            if (!rwa) {
              // counter-rotating: create photon while climbing to 3
              add(3 * target_rank + 2, 3 * source_rank + lower);
            }
          }
        });
  }
  interaction_.resize(static_cast<Eigen::Index>(states),
                      static_cast<Eigen::Index>(states));
  interaction_.setFromTriplets(triplets.begin(), triplets.end());
  interaction_.makeCompressed();
}

Eigen::VectorXcd OracleSimulator::initial_state() const {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis_.size());
  const Vector3c d = dark_state(params_, 0.0);
  psi(0) = d(0);
  psi(1) = d(1);
  psi(2) = d(2);
  return psi;
}

void OracleSimulator::apply_hamiltonian(double t, double control,
                                        const Eigen::VectorXcd& psi,
                                        Eigen::VectorXcd& out) const {
  const std::size_t states = basis_.size();
  const Complex drive1 = params_.Omega1 * std::polar(1.0, -params_.delta31() * t);
  const Complex drive2 = params_.Omega2 * std::polar(1.0, -params_.delta32() * t);
  const Complex drive1c = std::conj(drive1);
  const Complex drive2c = std::conj(drive2);

  // diagonal, the leakage-elimination shift -c(t) on levels 1 and 2, and
  // the drive blocks (diagonal in the bath configuration)
  for (std::size_t b = 0; b < states; b += 3) {
    const Complex p0 = psi[b];
    const Complex p1 = psi[b + 1];
    const Complex p2 = psi[b + 2];
    out[b] = (diag_[b] - control) * p0 + drive1c * p2;
    out[b + 1] = (diag_[b + 1] - control) * p1 + drive2c * p2;
    out[b + 2] = diag_[b + 2] * p2 + drive1 * p0 + drive2 * p1;
  }

  // sparse interaction, real-valued CSR against the complex vector
  const double* values = interaction_.valuePtr();
  const int* cols = interaction_.innerIndexPtr();
  const int* rows = interaction_.outerIndexPtr();
  for (std::size_t row = 0; row < states; ++row) {
    Complex acc{0.0, 0.0};
    for (int p = rows[row]; p < rows[row + 1]; ++p) {
      acc += values[p] * psi[cols[p]];
    }
    out[row] += acc;
  }
}

DensityMatrix OracleSimulator::reduced_density(
    const Eigen::VectorXcd& psi) const {
  DensityMatrix rho = DensityMatrix::Zero();
  const std::size_t states = basis_.size();
  for (std::size_t b = 0; b < states; b += 3) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        rho(i, j) += psi[b + i] * std::conj(psi[b + j]);
      }
    }
  }
  return rho;
}

double OracleSimulator::excitation_expectation(
    const Eigen::VectorXcd& psi) const {
  double total = 0.0;
  for (int r = 0; r <= basis_.max_excitations(); ++r) {
    const std::size_t begin = 3 * basis_.sector_offset(r);
    const std::size_t end = 3 * basis_.sector_offset(r + 1);
    for (std::size_t s = begin; s < end; s += 3) {
      total += r * (std::norm(psi[s]) + std::norm(psi[s + 1])) +
               (r + 1.0) * std::norm(psi[s + 2]);
    }
  }
  return total;
}

double OracleSimulator::top_sector_population(
    const Eigen::VectorXcd& psi) const {
  return psi.tail(basis_.size() - top_sector_begin_).squaredNorm();
}

FidelityTrace OracleSimulator::propagate(
    const OracleRun& run,
    const std::function<void(double, const Eigen::VectorXcd&)>& observer)
    const {
  run.pulse.validate();
  Eigen::VectorXcd psi = initial_state();
  const TimeGrid grid = TimeGrid::build(run.t_end, run.sample_every, run.pulse);

  FidelityTrace trace;
  auto rhs_eval = [&](double t, double control, const Eigen::VectorXcd& y,
                      Eigen::VectorXcd& dy) {
    apply_hamiltonian(t, control, y, dy);
    dy *= -kI;
  };
  auto sampler = [&](double t, const Eigen::VectorXcd& y) {
    const double norm_drift = std::abs(y.norm() - 1.0);
    if (norm_drift > 1e-6) {
      std::ostringstream msg;
      msg << "oracle: state norm drifted by " << norm_drift << " at t = " << t;
      throw numerical_error(msg.str());
    }
    const double top = top_sector_population(y);
    if (top > run.leakage_tol) {
      std::ostringstream msg;
      msg << "oracle: population " << top
          << " at the excitation cutoff exceeds " << run.leakage_tol
          << " at t = " << t << "; raise n_max or shorten the run";
      throw cutoff_leakage_error(msg.str());
    }
    trace.rows.push_back(
        make_trace_row(t, reduced_density(y), params_, 1e-6));
    if (observer) {
      observer(t, y);
    }
  };
  detail::propagate_rk4(psi, grid, run.dt, run.pulse, rhs_eval, sampler);
  return trace;
}

FidelityTrace schrodinger_propagate(const SystemParams& params,
                                    const DiscretizedBath& bath_a,
                                    const DiscretizedBath& bath_b,
                                    const OracleRun& run) {
  const OracleSimulator sim(params, bath_a, bath_b, run.n_max, run.rwa);
  return sim.propagate(run);
}

}  // namespace nmbloch
