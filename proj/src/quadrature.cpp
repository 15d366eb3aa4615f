// Copyright 2026 The lqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqc/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "lqc/errors.hpp"

namespace lqc {
namespace {

// L_n(x) and L_{n-1}(x) times e^{-log_scale}. The recurrence is renormalized
// whenever it grows large, so it neither overflows nor underflows for nodes
// far out on the real axis. Extended precision keeps the weights accurate to
// about 1e-15 for rules with a thousand nodes.
struct ScaledLaguerre {
  long double value;
  long double previous;
  long double log_scale;
};

ScaledLaguerre scaled_laguerre(int n, long double x) {
  long double p1 = 1.0L;
  long double p2 = 0.0L;
  long double log_scale = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const long double p3 = p2;
    p2 = p1;
    p1 = ((2.0L * j - 1.0L - x) * p2 - (j - 1.0L) * p3) / j;
    const long double mag = std::fabs(p1) + std::fabs(p2);
    if (mag > 1e150L) {
      p1 /= mag;
      p2 /= mag;
      log_scale += std::log(mag);
    }
  }
  return {p1, p2, log_scale};
}

}  // namespace

GaussLaguerreRule gauss_laguerre(int n) {
  if (n < 1) throw ValidationError("quad_points", "need at least one node");

  // Jacobi matrix of the Laguerre weight: diagonal 2i+1, off-diagonal i.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = i;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw ConvergenceError("Gauss-Laguerre eigenvalue solve failed");

  GaussLaguerreRule rule;
  rule.nodes.resize(n);
  rule.log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    long double z = eig.eigenvalues()[i];
    ScaledLaguerre p{};
    long double dp = 0.0L;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      p = scaled_laguerre(n, z);
      // d/dx L_n = n (L_n - L_{n-1}) / x; the common scale cancels in the step.
      dp = n * (p.value - p.previous) / z;
      const long double step = p.value / dp;
      z -= step;
      if (std::fabs(step) <= 1e-14L * std::max(1.0L, std::fabs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged || !(z > 0.0L)) {
      throw ConvergenceError("Gauss-Laguerre node " + std::to_string(i) + " of " +
                             std::to_string(n) + " did not converge");
    }
    p = scaled_laguerre(n, z);
    dp = n * (p.value - p.previous) / z;
    // w = -1 / (n L'_n L_{n-1}), each factor carrying e^{-log_scale}.
    rule.nodes[i] = static_cast<double>(z);
    rule.log_weights[i] = static_cast<double>(-std::log(-(n * dp * p.previous)) - 2.0L * p.log_scale);
  }
  return rule;
}

}  // namespace lqc
