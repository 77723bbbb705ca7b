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

#include <vector>

#include "nmbloch/generator.hpp"
#include "nmbloch/model.hpp"
#include "nmbloch/types.hpp"

namespace nmbloch {

// Dense triangular layout of the hierarchy nodes A^(m,n) with
// m + n <= order, ordered by tier m+n, then by m within each tier.
// Neighbor columns are precomputed so the right-hand side stays
// allocation-free.
struct HierarchyLayout {
  struct Node {
    int m = 0;
    int n = 0;
    int up_a = -1;    // column of A^(m+1,n), -1 if truncated
    int down_a = -1;  // column of A^(m-1,n)
    int up_b = -1;    // column of A^(m,n+1)
    int down_b = -1;  // column of A^(m,n-1)
  };

  int order = 0;
  std::vector<Node> nodes;

  static HierarchyLayout build(int order);

  int count() const { return static_cast<int>(nodes.size()); }

  // Column of node (m, n); -1 when out of range.
  int index(int m, int n) const;
};

// Full hierarchy state: one BlochVector per node, stored as the columns
// of a 9 x count matrix.
struct HierarchyState {
  HierarchyLayout layout;
  double t = 0.0;
  Eigen::MatrixXcd nodes;  // 9 x layout.count()
};

// State at t = 0: the top node carries the Bloch vector of
// |D(0)><D(0)|, every other node is zero.
HierarchyState init_state(int order, const SystemParams& params);

// 12-entry kernels applying L_a / L_b to every column of `in`.
void apply_coupling_a(const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out);
void apply_coupling_b(const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out);

// Right-hand side of the hierarchical equation with a preassembled
// generator H. Scratch buffers la/lb must be 9 x count; out is
// overwritten.
void hierarchy_rhs(const HierarchyLayout& layout, const Eigen::MatrixXcd& nodes,
                   const Generator9& H, const BathPair& baths,
                   Eigen::MatrixXcd& la, Eigen::MatrixXcd& lb,
                   Eigen::MatrixXcd& out);

// Convenience form evaluating H(t) internally; allocates the result.
Eigen::MatrixXcd rhs(const HierarchyState& state, double t,
                     const SystemParams& params, const BathPair& baths,
                     const PulseTrain& pulse);

// Reduced density matrix carried by the top node (0, 0).
DensityMatrix top_density(const HierarchyState& state);

}  // namespace nmbloch
