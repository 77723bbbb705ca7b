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

#include "nmbloch/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "nmbloch/config.hpp"
#include "nmbloch/csv.hpp"
#include "nmbloch/errors.hpp"
#include "nmbloch/integrator.hpp"
#include "nmbloch/oracle.hpp"
#include "nmbloch/svg_plot.hpp"
#include "nmbloch/version.hpp"

namespace nmbloch {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

json base_manifest(const std::string& command) {
  json manifest;
  manifest["tool"] = kToolName;
  manifest["version"] = kToolVersion;
  manifest["command"] = command;
  return manifest;
}

void write_manifest(const fs::path& dir, const json& manifest) {
  std::ofstream file(dir / "manifest.json");
  if (!file) {
    throw config_error("cannot write manifest in " + dir.string());
  }
  file << manifest.dump(2) << '\n';
}

class WallClock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first
// exception wins and is rethrown after every worker joined.
void run_parallel(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn) {
  const int pool_size =
      std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (pool_size == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(pool_size);
  for (int w = 0; w < pool_size; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

struct Verdict {
  std::string name;
  double metric = 0.0;
  double threshold = 0.0;
  std::string status;  // PASS | FAIL | INCONCLUSIVE
  std::string note;
};

void print_verdicts(std::ostream& out, const std::vector<Verdict>& verdicts) {
  for (const Verdict& v : verdicts) {
    out << v.status << "  " << v.name << "  metric=" << v.metric
        << " threshold=" << v.threshold;
    if (!v.note.empty()) {
      out << "  (" << v.note << ")";
    }
    out << '\n';
  }
}

json verdicts_to_json(const std::vector<Verdict>& verdicts) {
  json arr = json::array();
  for (const Verdict& v : verdicts) {
    json item;
    item["name"] = v.name;
    item["metric"] = v.metric;
    item["threshold"] = v.threshold;
    item["status"] = v.status;
    if (!v.note.empty()) {
      item["note"] = v.note;
    }
    arr.push_back(item);
  }
  return arr;
}

}  // namespace

int run_simulate_job(const JobSpec& spec, std::ostream& out) {
  WallClock clock;
  const json doc = load_config_file(spec.config_path, spec.overrides);
  const RunConfig config = config_from_json(doc);
  fs::create_directories(spec.out_dir);

  const PropagateResult result = propagate(config);
  const fs::path csv_path = fs::path(spec.out_dir) / "trace.csv";
  write_trace_csv(csv_path, result.trace);

  json manifest = base_manifest("simulate");
  manifest["config"] = config_to_json(config);
  manifest["outputs"] = json::array(
      {{{"label", "run"}, {"csv", "trace.csv"}}});
  manifest["wall_clock_seconds"] = clock.seconds();
  write_manifest(spec.out_dir, manifest);

  const TraceRow& last = result.trace.rows.back();
  out << "simulate: F(" << last.t << ") = " << last.fidelity << ", trace -> "
      << csv_path.string() << '\n';
  return 0;
}

int run_sweep_job(const JobSpec& spec, std::ostream& out) {
  WallClock clock;
  if (std::find(kSweepAxes.begin(), kSweepAxes.end(), spec.axis) ==
      kSweepAxes.end()) {
    throw config_error("sweep: unknown axis '" + spec.axis + "'");
  }
  if (spec.values.empty()) {
    throw config_error("sweep: value list must not be empty");
  }
  if (spec.fixed_pulse_area > 0.0 && spec.axis != "tau") {
    throw config_error("sweep: --fixed-pulse-area requires --axis tau");
  }
  const json base = load_config_file(spec.config_path, spec.overrides);
  fs::create_directories(spec.out_dir);

  struct Point {
    json config;
    std::string label;
    std::string filename;
    FidelityTrace trace;
  };
  std::vector<Point> points(spec.values.size());
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    const double value = spec.values[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (format_value(spec.values[j]) == format_value(value)) {
        throw config_error("sweep: duplicate value " + format_value(value));
      }
    }
    points[i].config = base;
    apply_axis_value(points[i].config, spec.axis, value);
    if (spec.fixed_pulse_area > 0.0) {
      // fixed pulse area per period: delta = tau/2, h = area/delta
      points[i].config["pulse"]["enabled"] = true;
      points[i].config["pulse"]["delta"] = 0.5 * value;
      points[i].config["pulse"]["h"] = spec.fixed_pulse_area / (0.5 * value);
    }
    points[i].label = spec.axis + "=" + format_value(value);
    points[i].filename = spec.axis + "_" + format_value(value) + ".csv";
  }

  run_parallel(points.size(), spec.workers, [&](std::size_t i) {
    const RunConfig config = config_from_json(points[i].config);
    points[i].trace = propagate(config).trace;
  });

  // single collector writes all files
  json outputs = json::array();
  for (const Point& point : points) {
    write_trace_csv(fs::path(spec.out_dir) / point.filename, point.trace);
    json entry;
    entry["label"] = point.label;
    entry["csv"] = point.filename;
    entry["config"] = config_to_json(config_from_json(point.config));
    outputs.push_back(entry);
    out << "sweep: " << point.label << "  F(" << point.trace.rows.back().t
        << ") = " << point.trace.rows.back().fidelity << '\n';
  }

  json manifest = base_manifest("sweep");
  manifest["config"] = base;
  manifest["axis"] = spec.axis;
  manifest["outputs"] = outputs;
  manifest["wall_clock_seconds"] = clock.seconds();
  write_manifest(spec.out_dir, manifest);
  return 0;
}

int run_convergence_job(const JobSpec& spec, std::ostream& out) {
  WallClock clock;
  if (spec.orders.empty()) {
    throw config_error("convergence: need at least one truncation order");
  }
  const json base = load_config_file(spec.config_path, spec.overrides);
  fs::create_directories(spec.out_dir);

  std::vector<FidelityTrace> traces(spec.orders.size());
  run_parallel(traces.size(), spec.workers, [&](std::size_t i) {
    json doc = base;
    doc["N"] = spec.orders[i];
    traces[i] = propagate(config_from_json(doc)).trace;
  });

  json outputs = json::array();
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    const std::string filename =
        "N_" + std::to_string(spec.orders[i]) + ".csv";
    write_trace_csv(fs::path(spec.out_dir) / filename, traces[i]);
    outputs.push_back(
        {{"label", "N=" + std::to_string(spec.orders[i])}, {"csv", filename}});
  }

  bool pass = true;
  json pairs = json::array();
  out << "convergence: threshold " << spec.threshold << '\n';
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.orders.size(); ++j) {
      const double diff = max_fidelity_difference(traces[i], traces[j]);
      const bool ok = diff < spec.threshold;
      pass = pass && ok;
      out << "  N=" << spec.orders[i] << " vs N=" << spec.orders[j]
          << "  max|dF| = " << diff << "  " << (ok ? "PASS" : "FAIL") << '\n';
      pairs.push_back({{"n1", spec.orders[i]},
                       {"n2", spec.orders[j]},
                       {"max_diff", diff},
                       {"pass", ok}});
    }
  }
  out << "convergence: " << (pass ? "PASS" : "FAIL") << '\n';

  json manifest = base_manifest("convergence");
  manifest["config"] = base;
  manifest["outputs"] = outputs;
  manifest["verdicts"] = {{"pairs", pairs},
                          {"threshold", spec.threshold},
                          {"pass", pass}};
  manifest["wall_clock_seconds"] = clock.seconds();
  write_manifest(spec.out_dir, manifest);
  return pass ? 0 : 4;
}

int run_validate_job(const JobSpec& spec, std::ostream& out) {
  WallClock clock;
  const json base = load_config_file(spec.config_path, spec.overrides);
  const RunConfig config = config_from_json(base);
  fs::create_directories(spec.out_dir);

  std::vector<Verdict> verdicts;
  const double sample_every = std::min(config.sample_every, spec.oracle_t_end);

  // 0. Quality of the bath discretization itself: max deviation of the
  // discrete correlation from the OU exponential over three correlation
  // times. The frequency window truncation bounds this from below, so the
  // check is absolute.
  {
    Verdict v{"bath_correlation", 0.0, 2e-3, "PASS", ""};
    for (const BathParams& bath : {config.baths.a, config.baths.b}) {
      const DiscretizedBath disc =
          discretize_bath(bath, spec.oracle_modes, spec.oracle_window);
      v.metric = std::max(
          v.metric, disc.max_correlation_error(3.0 / bath.gamma, 201));
    }
    v.status = v.metric < v.threshold ? "PASS" : "FAIL";
    verdicts.push_back(v);
  }

  // 1. Dark-state persistence under the rotating-wave interaction.
  {
    Verdict v{"rwa_persistence", 0.0, spec.rwa_threshold, "PASS",
              "oracle with rotating terms only"};
    try {
      const DiscretizedBath bath_a =
          discretize_bath(config.baths.a, spec.oracle_modes, spec.oracle_window);
      const DiscretizedBath bath_b =
          discretize_bath(config.baths.b, spec.oracle_modes, spec.oracle_window);
      OracleRun run;
      run.n_max = spec.oracle_nmax;
      run.rwa = true;
      run.t_end = spec.oracle_t_end;
      run.dt = spec.oracle_dt;
      run.sample_every = sample_every;
      run.leakage_tol = spec.oracle_leakage_tol;
      const FidelityTrace trace =
          schrodinger_propagate(config.params, bath_a, bath_b, run);
      for (const TraceRow& row : trace.rows) {
        v.metric = std::max(v.metric, std::abs(row.fidelity - 1.0));
      }
      v.status = v.metric < v.threshold ? "PASS" : "FAIL";
    } catch (const cutoff_leakage_error& e) {
      v.status = "INCONCLUSIVE";
      v.note = e.what();
    }
    verdicts.push_back(v);
  }

  // 2/3. Full oracle at two mode counts: the coarse/fine difference gates
  // the cross-validation, then the fine oracle is compared against the
  // hierarchy on the same sample grid.
  {
    Verdict gate{"oracle_discretization_gate", 0.0, spec.gate_threshold,
                 "PASS", "fine vs coarse mode count"};
    Verdict cross{"hierarchy_vs_oracle", 0.0, spec.oracle_threshold, "PASS",
                  ""};
    try {
      const int coarse_modes = spec.oracle_modes / 2 + 1;
      OracleRun run;
      run.n_max = spec.oracle_nmax;
      run.rwa = false;
      run.t_end = spec.oracle_t_end;
      run.dt = spec.oracle_dt;
      run.sample_every = sample_every;
      run.leakage_tol = spec.oracle_leakage_tol;

      const FidelityTrace fine = schrodinger_propagate(
          config.params,
          discretize_bath(config.baths.a, spec.oracle_modes, spec.oracle_window),
          discretize_bath(config.baths.b, spec.oracle_modes, spec.oracle_window),
          run);
      const FidelityTrace coarse = schrodinger_propagate(
          config.params,
          discretize_bath(config.baths.a, coarse_modes, spec.oracle_window),
          discretize_bath(config.baths.b, coarse_modes, spec.oracle_window),
          run);
      gate.metric = max_fidelity_difference(fine, coarse);
      gate.status = gate.metric < gate.threshold ? "PASS" : "FAIL";

      if (gate.status == "PASS") {
        RunConfig short_run = config;
        short_run.t_end = spec.oracle_t_end;
        short_run.sample_every = sample_every;
        const FidelityTrace hier = propagate(short_run).trace;
        cross.metric = max_fidelity_difference(hier, fine);
        cross.status = cross.metric < cross.threshold ? "PASS" : "FAIL";
      } else {
        cross.status = "INCONCLUSIVE";
        cross.note = "discretization gate failed";
      }
    } catch (const cutoff_leakage_error& e) {
      gate.status = "INCONCLUSIVE";
      gate.note = e.what();
      cross.status = "INCONCLUSIVE";
      cross.note = "oracle hit the excitation cutoff";
    }
    verdicts.push_back(gate);
    verdicts.push_back(cross);
  }

  // 4. Large-gamma hierarchy against the Markov-limit closure.
  {
    Verdict v{"hierarchy_vs_markov_closure", 0.0, spec.markov_threshold,
              "PASS", "gamma = " + format_value(spec.markov_gamma)};
    RunConfig markov_run = config;
    markov_run.t_end = spec.markov_t_end;
    markov_run.baths.a.gamma = spec.markov_gamma;
    markov_run.baths.b.gamma = spec.markov_gamma;
    const FidelityTrace hier = propagate(markov_run).trace;
    const FidelityTrace closure = propagate_markov(markov_run).trace;
    v.metric = max_fidelity_difference(hier, closure);
    v.status = v.metric < v.threshold ? "PASS" : "FAIL";
    verdicts.push_back(v);
  }

  print_verdicts(out, verdicts);
  const bool fail = std::any_of(
      verdicts.begin(), verdicts.end(),
      [](const Verdict& v) { return v.status == "FAIL"; });
  out << "validate: " << (fail ? "FAIL" : "PASS") << '\n';

  json manifest = base_manifest("validate");
  manifest["config"] = base;
  manifest["outputs"] = json::array();
  manifest["verdicts"] = verdicts_to_json(verdicts);
  manifest["wall_clock_seconds"] = clock.seconds();
  write_manifest(spec.out_dir, manifest);
  return fail ? 4 : 0;
}

int run_plot_job(const JobSpec& spec, std::ostream& out) {
  if (spec.plot_inputs.empty()) {
    throw config_error("plot: no input CSVs given");
  }
  std::map<std::string, std::string> labels;
  if (!spec.manifest_path.empty()) {
    std::ifstream file(spec.manifest_path);
    if (!file) {
      throw config_error("plot: cannot open manifest " + spec.manifest_path);
    }
    json manifest;
    try {
      manifest = json::parse(file);
    } catch (const json::exception& e) {
      throw config_error(std::string("plot: malformed manifest: ") + e.what());
    }
    for (const auto& entry : manifest.value("outputs", json::array())) {
      labels[entry.at("csv").get<std::string>()] =
          entry.at("label").get<std::string>();
    }
  }

  std::vector<PlotCurve> curves;
  for (const std::string& input : spec.plot_inputs) {
    const FidelityTrace trace = read_trace_csv(input);
    PlotCurve curve;
    const std::string filename = fs::path(input).filename().string();
    curve.label = labels.count(filename) ? labels[filename]
                                         : fs::path(input).stem().string();
    for (const TraceRow& row : trace.rows) {
      curve.points.emplace_back(row.t, row.fidelity);
    }
    curves.push_back(std::move(curve));
  }

  const std::string svg =
      render_line_chart(curves, spec.title, "t", "fidelity");
  fs::create_directories(spec.out_dir);
  const fs::path svg_path = fs::path(spec.out_dir) / "plot.svg";
  std::ofstream file(svg_path, std::ios::binary);
  if (!file) {
    throw config_error("plot: cannot write " + svg_path.string());
  }
  file << svg;
  out << "plot: " << curves.size() << " curve(s) -> " << svg_path.string()
      << '\n';
  return 0;
}

}  // namespace nmbloch
