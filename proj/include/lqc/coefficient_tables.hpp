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

#include <array>
#include <span>

namespace lqc::tables {

/// coeff * t1^e1 * t2^e2, exponents on the amplitude coefficients t_j.
struct Monomial {
  int coeff;
  int e1;
  int e2;
};

using Polynomial = std::span<const Monomial>;

double evaluate(Polynomial poly, double t1, double t2);
/// Same sum in extended precision. The printed tables cancel heavily at large
/// r (the a_i collapse to (1 - tanh^2 r)^4 at full transmission).
long double evaluate_extended(Polynomial poly, long double t1, long double t2);

/// Success-probability coefficients a_0..a_4 (multiplying tanh^(2i) r).
std::span<const Polynomial> success_a();
/// <a^dag a> coefficients x_0..x_9 (multiplying tanh^i r).
std::span<const Polynomial> moment_x();
/// <b^dag b> coefficients y_0..y_9.
std::span<const Polynomial> moment_y();
/// <a b> coefficients z_0..z_8.
std::span<const Polynomial> moment_z();
/// Teleportation-fidelity coefficients m_0..m_4.
std::span<const Polynomial> fidelity_m();

}  // namespace lqc::tables
