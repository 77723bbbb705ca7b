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

#include <ostream>
#include <string>
#include <vector>

namespace nmbloch {

// Everything a subcommand needs, already parsed. Paths are taken as
// given; out_dir is created on demand.
struct JobSpec {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;  // dotted key=value assignments
  int workers = 1;

  // sweep
  std::string axis;
  std::vector<double> values;
  double fixed_pulse_area = 0.0;  // > 0: tau sweep with delta = tau/2,
                                  // h = area / delta

  // convergence
  std::vector<int> orders;
  double threshold = 1e-5;

  // validate
  int oracle_modes = 401;
  double oracle_window = 12.0;
  int oracle_nmax = 2;
  double oracle_t_end = 2.0;
  double oracle_dt = 5e-3;
  double oracle_leakage_tol = 1e-3;  // top-sector population gate
  double gate_threshold = 5e-3;     // oracle self-convergence gate
  double oracle_threshold = 1e-2;   // hierarchy vs oracle
  double rwa_threshold = 1e-3;      // RWA persistence
  double markov_gamma = 20.0;
  double markov_t_end = 50.0;
  double markov_threshold = 2e-2;   // hierarchy vs Markov closure

  // plot
  std::vector<std::string> plot_inputs;
  std::string manifest_path;
  std::string title;
};

// Each job returns a process exit code: 0 success, 4 when a configured
// verdict fails. Config and numerical failures are raised as exceptions
// and mapped by the caller.
int run_simulate_job(const JobSpec& spec, std::ostream& out);
int run_sweep_job(const JobSpec& spec, std::ostream& out);
int run_convergence_job(const JobSpec& spec, std::ostream& out);
int run_validate_job(const JobSpec& spec, std::ostream& out);
int run_plot_job(const JobSpec& spec, std::ostream& out);

}  // namespace nmbloch
