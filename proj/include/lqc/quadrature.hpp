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

#pragma once

#include <vector>

namespace lqc {

/// n-point Gauss-Laguerre rule for integrals of the form int_0^inf e^-x f(x) dx.
/// Weights are stored as logarithms; the outer weights underflow a double
/// well before the rule stops being useful.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> log_weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Nodes start from the eigenvalues of the Jacobi matrix and are polished by
/// Newton iteration on the Laguerre recurrence.
/// Throws ValidationError for n < 1, ConvergenceError if a root fails to converge.
GaussLaguerreRule gauss_laguerre(int n);

}  // namespace lqc
