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

#include "nmbloch/hierarchy.hpp"

#include "nmbloch/errors.hpp"

namespace nmbloch {

using namespace bloch;

HierarchyLayout HierarchyLayout::build(int order) {
  if (order < 0) {
    throw config_error("hierarchy: truncation order must be >= 0");
  }
  HierarchyLayout layout;
  layout.order = order;
  layout.nodes.reserve(static_cast<std::size_t>(order + 1) * (order + 2) / 2);
  for (int tier = 0; tier <= order; ++tier) {
    for (int m = 0; m <= tier; ++m) {
      Node node;
      node.m = m;
      node.n = tier - m;
      layout.nodes.push_back(node);
    }
  }
  for (auto& node : layout.nodes) {
    node.up_a = layout.index(node.m + 1, node.n);
    node.down_a = layout.index(node.m - 1, node.n);
    node.up_b = layout.index(node.m, node.n + 1);
    node.down_b = layout.index(node.m, node.n - 1);
  }
  return layout;
}

int HierarchyLayout::index(int m, int n) const {
  if (m < 0 || n < 0 || m + n > order) {
    return -1;
  }
  const int tier = m + n;
  return tier * (tier + 1) / 2 + m;
}

HierarchyState init_state(int order, const SystemParams& params) {
  HierarchyState state;
  state.layout = HierarchyLayout::build(order);
  state.t = 0.0;
  state.nodes = Eigen::MatrixXcd::Zero(9, state.layout.count());
  const Vector3c d = dark_state(params, 0.0);
  state.nodes.col(0) = density_to_bloch(d * d.adjoint());
  return state;
}

void apply_coupling_a(const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out) {
  for (Eigen::Index j = 0; j < in.cols(); ++j) {
    const auto v = in.col(j);
    auto o = out.col(j);
    o(a11) = kI * (v(a31) - v(a13));
    o(a22) = 0.0;
    o(a33) = kI * (v(a13) - v(a31));
    o(a31) = kI * (v(a11) - v(a33));
    o(a32) = kI * v(a12);
    o(a21) = -kI * v(a23);
    o(a13) = kI * (v(a33) - v(a11));
    o(a23) = -kI * v(a21);
    o(a12) = kI * v(a32);
  }
}

void apply_coupling_b(const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out) {
  for (Eigen::Index j = 0; j < in.cols(); ++j) {
    const auto v = in.col(j);
    auto o = out.col(j);
    o(a11) = 0.0;
    o(a22) = kI * (v(a32) - v(a23));
    o(a33) = kI * (v(a23) - v(a32));
    o(a31) = kI * v(a21);
    o(a32) = kI * (v(a22) - v(a33));
    o(a21) = kI * v(a31);
    o(a13) = -kI * v(a12);
    o(a23) = kI * (v(a33) - v(a22));
    o(a12) = -kI * v(a13);
  }
}

void hierarchy_rhs(const HierarchyLayout& layout, const Eigen::MatrixXcd& nodes,
                   const Generator9& H, const BathPair& baths,
                   Eigen::MatrixXcd& la, Eigen::MatrixXcd& lb,
                   Eigen::MatrixXcd& out) {
  apply_coupling_a(nodes, la);
  apply_coupling_b(nodes, lb);
  const double feed_a = 0.5 * baths.a.Gamma * baths.a.gamma;
  const double feed_b = 0.5 * baths.b.Gamma * baths.b.gamma;
  for (int j = 0; j < layout.count(); ++j) {
    const auto& node = layout.nodes[j];
    auto o = out.col(j);
    o.noalias() = H * nodes.col(j);
    if (node.m != 0 || node.n != 0) {
      o -= (node.m * baths.a.gamma + node.n * baths.b.gamma) * nodes.col(j);
    }
    if (node.down_a >= 0) {
      o += (node.m * feed_a) * la.col(node.down_a);
    }
    if (node.up_a >= 0) {
      o += la.col(node.up_a);
    }
    if (node.down_b >= 0) {
      o += (node.n * feed_b) * lb.col(node.down_b);
    }
    if (node.up_b >= 0) {
      o += lb.col(node.up_b);
    }
  }
}

Eigen::MatrixXcd rhs(const HierarchyState& state, double t,
                     const SystemParams& params, const BathPair& baths,
                     const PulseTrain& pulse) {
  const Generator9 H = system_matrix(params, pulse, t);
  Eigen::MatrixXcd la(9, state.layout.count());
  Eigen::MatrixXcd lb(9, state.layout.count());
  Eigen::MatrixXcd out(9, state.layout.count());
  hierarchy_rhs(state.layout, state.nodes, H, baths, la, lb, out);
  return out;
}

DensityMatrix top_density(const HierarchyState& state) {
  return bloch_to_density(state.nodes.col(0));
}

}  // namespace nmbloch
