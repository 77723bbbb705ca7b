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

#include <Eigen/Dense>
#include <complex>

namespace nmbloch {

using Complex = std::complex<double>;
using Vector3c = Eigen::Vector3cd;

// Expectation values of the nine system operators |i><j|, stacked in the
// fixed ordering (A11, A22, A33, A31, A32, A21, A13, A23, A12).
using BlochVector = Eigen::Matrix<Complex, 9, 1>;

// 3x3 reduced density matrix of the three-level system, levels {1,2,3}.
using DensityMatrix = Eigen::Matrix3cd;

// 9x9 generator acting on BlochVector.
using Generator9 = Eigen::Matrix<Complex, 9, 9>;

inline constexpr Complex kI{0.0, 1.0};

// Slot names for the BlochVector components.
namespace bloch {
inline constexpr int a11 = 0;
inline constexpr int a22 = 1;
inline constexpr int a33 = 2;
inline constexpr int a31 = 3;
inline constexpr int a32 = 4;
inline constexpr int a21 = 5;
inline constexpr int a13 = 6;
inline constexpr int a23 = 7;
inline constexpr int a12 = 8;
}  // namespace bloch

}  // namespace nmbloch
