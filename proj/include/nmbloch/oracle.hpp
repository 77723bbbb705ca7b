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

#include <Eigen/SparseCore>
#include <functional>
#include <span>
#include <vector>

#include "nmbloch/model.hpp"
#include "nmbloch/trace.hpp"
#include "nmbloch/types.hpp"

namespace nmbloch {

// Equally spaced frequency comb on [-window, window] carrying the
// full-line Lorentzian weight (Gamma gamma^2 / 2 pi) / (gamma^2 + w^2),
// whose Fourier transform is the Ornstein-Uhlenbeck correlation
// (Gamma gamma / 2) e^{-gamma |tau|}. The symmetric window (negative
// frequencies included) is what reproduces the pure exponential exactly;
// it is a modeling consequence of the correlation choice, not a claim
// about a physical spectrum.
struct DiscretizedBath {
  BathParams parent;
  std::vector<double> frequencies;  // omega_k
  std::vector<double> couplings;    // g_k >= 0

  // sum_k g_k^2, the discrete alpha(0).
  double coupling_power() const;

  // sum_k g_k^2 e^{-i omega_k tau}.
  Complex correlation(double tau) const;

  // max_tau |discrete correlation - parent correlation| on a uniform
  // grid of `samples` points over [0, tau_max].
  double max_correlation_error(double tau_max, int samples) const;
};

// Throws config_error unless modes >= 2 and window > 2 * gamma.
DiscretizedBath discretize_bath(const BathParams& bath, int modes,
                                double window);

// Occupation basis for the two combined mode lists with a hard cap on the
// total excitation number. Bath states are ranked in colex order within
// each excitation sector; full states interleave the three system levels
// fastest: state = 3 * bath_rank + level.
class FockBasis {
 public:
  // Throws config_error when n_max < 1 or the basis would be too large.
  FockBasis(int modes, int n_max);

  int modes() const { return modes_; }
  int max_excitations() const { return n_max_; }
  std::size_t bath_states() const { return offsets_.back(); }
  std::size_t size() const { return 3 * bath_states(); }

  std::size_t sector_offset(int r) const { return offsets_[r]; }
  std::size_t sector_size(int r) const {
    return offsets_[r + 1] - offsets_[r];
  }

  // Rank of a nondecreasing mode multiset (size = excitation number).
  std::size_t rank(std::span<const int> sorted_modes) const;

  // Visits sector r in rank order; f(bath_rank, sorted_modes).
  void for_each_in_sector(
      int r,
      const std::function<void(std::size_t, std::span<const int>)>& f) const;

 private:
  int modes_;
  int n_max_;
  std::vector<std::size_t> offsets_;  // n_max_ + 2 entries, cumulative
};

struct OracleRun {
  int n_max = 2;
  bool rwa = false;
  PulseTrain pulse;
  double t_end = 2.0;
  double dt = 5e-3;
  double sample_every = 0.05;
  double leakage_tol = 1e-3;  // max allowed population in the top sector
};

// Explicit Schroedinger propagation of system x discretized baths from
// |D(0)> x |vac>, with or without the counter-rotating interaction terms.
// Built once per (bath, n_max, rwa) combination; propagation is a sparse
// matrix-vector RK4 in the truncated Fock space.
class OracleSimulator {
 public:
  OracleSimulator(const SystemParams& params, const DiscretizedBath& bath_a,
                  const DiscretizedBath& bath_b, int n_max, bool rwa);

  const FockBasis& basis() const { return basis_; }

  // Throws cutoff_leakage_error when the top-sector population exceeds
  // run.leakage_tol, numerical_error when the norm drifts beyond 1e-6.
  // The observer, when set, sees every sampled state vector.
  FidelityTrace propagate(
      const OracleRun& run,
      const std::function<void(double, const Eigen::VectorXcd&)>& observer =
          {}) const;

  Eigen::VectorXcd initial_state() const;
  DensityMatrix reduced_density(const Eigen::VectorXcd& psi) const;

  // <excitation number + |3><3|>; conserved along RWA trajectories from
  // the dark state.
  double excitation_expectation(const Eigen::VectorXcd& psi) const;

  double top_sector_population(const Eigen::VectorXcd& psi) const;

 private:
  void apply_hamiltonian(double t, double control,
                         const Eigen::VectorXcd& psi,
                         Eigen::VectorXcd& out) const;

  SystemParams params_;
  FockBasis basis_;
  Eigen::VectorXd diag_;  // level + bath mode energies
  Eigen::SparseMatrix<double, Eigen::RowMajor> interaction_;
  std::size_t top_sector_begin_;  // first state index of the top sector
};

// One-call convenience wrapper.
FidelityTrace schrodinger_propagate(const SystemParams& params,
                                    const DiscretizedBath& bath_a,
                                    const DiscretizedBath& bath_b,
                                    const OracleRun& run);

}  // namespace nmbloch
