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

#include "lqc/params.hpp"
#include "lqc/spectrum.hpp"

namespace lqc {

/// Catalysed state written as (c0 + c1 a^dag b^dag + c2 a^dag^2 b^dag^2) S2(lambda)|0,0>.
struct StateCoefficients {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double lambda = 0.0;
};

/// Heralding probability p0 * sum_i a_i tanh^(2i) r with p0 = cosh^10(lambda) / cosh^2(r).
double success_probability(const CatalysisParams &params);

/// Schmidt weight of |n,n> before the 1/sqrt(p_cd) normalization:
/// ((n+1)T1 - n)((n+1)T2 - n)(t1 t2)^(n-1) tanh^n r / cosh r.
/// At n = 0 the factor T1 T2 / (t1 t2) is evaluated as t1 t2.
double schmidt_coefficient_unnormalized(const CatalysisParams &params, int n);

/// Normalized Schmidt weight, dividing by sqrt(success_probability(params)).
double schmidt_coefficient(const CatalysisParams &params, int n);

/// Full normalized spectrum. Starts from choose_truncation(params, eps) and
/// grows N until the discarded weight relative to p_cd is below eps.
SchmidtSpectrum schmidt_spectrum(const CatalysisParams &params, double eps = kDefaultTruncationEps);

StateCoefficients state_coefficients(const CatalysisParams &params);

/// Second moments of the catalysed state from the printed x, y, z tables.
struct MomentsClosed {
  double a_dag_a = 0.0;
  double b_dag_b = 0.0;
  double ab = 0.0;  // equals <a^dag b^dag>
};

MomentsClosed epr_moments_closed(const CatalysisParams &params);

/// 2 (1 + <a^dag a> + <b^dag b> - 2 <ab>) from the printed moment tables.
double epr_closed(const CatalysisParams &params);

/// The printed fidelity polynomial p0 / (4 p_cd) * sum_i m_i tanh^i r, with no
/// cross-check attached.
double fidelity_printed(const CatalysisParams &params);

/// Discrepancy threshold between the printed fidelity and the quadrature oracle.
inline constexpr double kFidelityFlagTolerance = 1e-6;

struct FidelityClosed {
  double value = 0.0;   // printed polynomial
  double oracle = 0.0;  // cf_fidelity_oracle on the closed-form spectrum
  bool flagged = false; // |value - oracle| > kFidelityFlagTolerance
};

FidelityClosed fidelity_closed(const CatalysisParams &params);

/// Entanglement of the uncatalysed TMSVS in bits:
/// cosh^2 r log2 cosh^2 r - sinh^2 r log2 sinh^2 r.
double tmsvs_entropy(double r);
/// 2 e^{-2r}
double tmsvs_epr(double r);
/// (1 + tanh r) / 2
double tmsvs_fidelity(double r);

}  // namespace lqc
