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

#include "nmbloch/csv.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nmbloch/errors.hpp"

namespace nmbloch {

namespace {

void append_double(std::string& out, double value) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  out += buf.data();
}

}  // namespace

std::string trace_to_csv(const FidelityTrace& trace) {
  std::string out = kTraceCsvHeader;
  out += '\n';
  for (const TraceRow& row : trace.rows) {
    const double fields[9] = {row.t,        row.fidelity, row.rho11,
                              row.rho22,    row.rho33,    row.re_rho12,
                              row.im_rho12, row.trace,    row.herm_err};
    for (int i = 0; i < 9; ++i) {
      if (i > 0) {
        out += ',';
      }
      append_double(out, fields[i]);
    }
    out += '\n';
  }
  return out;
}

void write_trace_csv(const std::filesystem::path& path,
                     const FidelityTrace& trace) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw config_error("csv: cannot open " + path.string() + " for writing");
  }
  file << trace_to_csv(trace);
}

FidelityTrace read_trace_csv(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw config_error("csv: cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(file, line) || line != kTraceCsvHeader) {
    throw config_error("csv: " + path.string() +
                       " does not match the trace schema");
  }
  FidelityTrace trace;
  while (std::getline(file, line)) {
    if (line.empty()) {
      continue;
    }
    double fields[9];
    const char* cursor = line.c_str();
    for (int i = 0; i < 9; ++i) {
      char* end = nullptr;
      fields[i] = std::strtod(cursor, &end);
      if (end == cursor || (i < 8 && *end != ',')) {
        throw config_error("csv: malformed row in " + path.string());
      }
      cursor = (i < 8) ? end + 1 : end;
    }
    TraceRow row;
    row.t = fields[0];
    row.fidelity = fields[1];
    row.rho11 = fields[2];
    row.rho22 = fields[3];
    row.rho33 = fields[4];
    row.re_rho12 = fields[5];
    row.im_rho12 = fields[6];
    row.trace = fields[7];
    row.herm_err = fields[8];
    trace.rows.push_back(row);
  }
  return trace;
}

}  // namespace nmbloch
