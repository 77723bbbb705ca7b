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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nmbloch/errors.hpp"
#include "nmbloch/jobs.hpp"
#include "nmbloch/version.hpp"

namespace {

// exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 validation FAIL
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> values;
  std::size_t begin = 0;
  while (begin <= csv.size()) {
    const std::size_t comma = csv.find(',', begin);
    const std::string item = csv.substr(begin, comma - begin);
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw nmbloch::config_error("cannot parse number '" + item + "'");
    }
    if (comma == std::string::npos) {
      break;
    }
    begin = comma + 1;
  }
  return values;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> values;
  for (double v : parse_doubles(csv)) {
    values.push_back(static_cast<int>(v));
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  nmbloch::JobSpec spec;
  std::string values_csv;
  std::string orders_csv;

  CLI::App app{"Non-Markovian quantum Bloch equation solver for a driven "
               "three-level Lambda system"};
  app.set_version_flag("--version", nmbloch::kToolVersion);
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* config_opt =
        cmd->add_option("--config", spec.config_path, "JSON config file");
    if (needs_config) {
      config_opt->required();
    }
    cmd->add_option("--out", spec.out_dir, "output directory")
        ->envname("NMBLOCH_OUT_DIR");
    cmd->add_option("--set", spec.overrides,
                    "dotted-path override, e.g. baths.a.Gamma=0.5 "
                    "(repeatable)");
    cmd->add_option("--workers", spec.workers, "concurrent runs");
  };

  CLI::App* simulate =
      app.add_subcommand("simulate", "propagate one configuration to a CSV");
  add_common(simulate, true);

  CLI::App* sweep =
      app.add_subcommand("sweep", "propagate one configuration per axis value");
  add_common(sweep, true);
  sweep->add_option("--axis", spec.axis,
                    "one of Gamma, gamma, N, h, tau, delta")
      ->required();
  sweep->add_option("--values", values_csv, "comma-separated values")
      ->required();
  sweep->add_option(
      "--fixed-pulse-area", spec.fixed_pulse_area,
      "tau sweeps only: enable pulses with delta = tau/2, h = area/delta");

  CLI::App* convergence = app.add_subcommand(
      "convergence", "compare runs across hierarchy truncation orders");
  add_common(convergence, true);
  convergence->add_option("--orders", orders_csv, "comma-separated N values")
      ->required();
  convergence->add_option("--threshold", spec.threshold,
                          "max allowed pairwise max|dF|");

  CLI::App* validate = app.add_subcommand(
      "validate",
      "cross-check the hierarchy against the brute-force oracle and the "
      "Markov-limit closure");
  add_common(validate, true);
  validate->add_option("--oracle-modes", spec.oracle_modes,
                       "bath modes per bath for the oracle");
  validate->add_option("--oracle-window", spec.oracle_window,
                       "frequency window half-width");
  validate->add_option("--oracle-nmax", spec.oracle_nmax,
                       "excitation cutoff");
  validate->add_option("--oracle-t-end", spec.oracle_t_end,
                       "oracle propagation time");
  validate->add_option("--oracle-dt", spec.oracle_dt, "oracle step size");
  validate->add_option("--oracle-leakage-tol", spec.oracle_leakage_tol,
                       "max tolerated population at the excitation cutoff");
  validate->add_option("--markov-gamma", spec.markov_gamma,
                       "gamma for the Markov-limit comparison");
  validate->add_option("--markov-t-end", spec.markov_t_end,
                       "Markov comparison time span");

  CLI::App* plot =
      app.add_subcommand("plot", "render fidelity curves from trace CSVs");
  plot->add_option("csvs", spec.plot_inputs, "input trace CSVs");
  plot->add_option("--out", spec.out_dir, "output directory")
      ->envname("NMBLOCH_OUT_DIR");
  plot->add_option("--manifest", spec.manifest_path,
                   "manifest supplying legend labels");
  plot->add_option("--title", spec.title, "chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (simulate->parsed()) {
      return nmbloch::run_simulate_job(spec, std::cout);
    }
    if (sweep->parsed()) {
      spec.values = parse_doubles(values_csv);
      return nmbloch::run_sweep_job(spec, std::cout);
    }
    if (convergence->parsed()) {
      spec.orders = parse_ints(orders_csv);
      return nmbloch::run_convergence_job(spec, std::cout);
    }
    if (validate->parsed()) {
      return nmbloch::run_validate_job(spec, std::cout);
    }
    if (plot->parsed()) {
      return nmbloch::run_plot_job(spec, std::cout);
    }
  } catch (const nmbloch::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const nmbloch::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
