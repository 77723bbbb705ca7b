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

#include <stdexcept>
#include <string>

namespace nmbloch {

// Invalid parameters, malformed config files, schema mismatches.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken numerical invariants during propagation (trace drift, fidelity
// out of range, lost norm). Signals that dt is too large or the
// truncation too low, not a recoverable condition.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Population reached the excitation cutoff of the brute-force oracle;
// the run is inconclusive rather than wrong.
class cutoff_leakage_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace nmbloch
