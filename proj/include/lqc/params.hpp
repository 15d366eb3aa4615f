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

namespace lqc {

/// One experiment point: input squeezing r and the two beam-splitter
/// transmittances. Immutable once built by make_params().
class CatalysisParams {
 public:
  double r() const noexcept { return r_; }
  double T1() const noexcept { return T1_; }
  double T2() const noexcept { return T2_; }
  /// Amplitude transmission coefficients, non-negative branch.
  double t1() const noexcept { return t1_; }
  double t2() const noexcept { return t2_; }
  /// Reflection coefficients sqrt(1 - T).
  double r1() const noexcept { return refl1_; }
  double r2() const noexcept { return refl2_; }
  /// Effective squeezing of the catalysed state: tanh(lambda) = t1 t2 tanh(r).
  double lambda() const noexcept { return lambda_; }
  double tanh_lambda() const noexcept { return tanh_lambda_; }

  /// Same point with the two beam splitters exchanged.
  CatalysisParams swapped() const;

  friend CatalysisParams make_params(double r, double T1, double T2);

 private:
  CatalysisParams() = default;

  double r_ = 0.0;
  double T1_ = 1.0;
  double T2_ = 1.0;
  double t1_ = 1.0;
  double t2_ = 1.0;
  double refl1_ = 0.0;
  double refl2_ = 0.0;
  double lambda_ = 0.0;
  double tanh_lambda_ = 0.0;
};

/// Validates (r >= 0, T1, T2 in [0,1], all finite) and fills derived fields.
/// Throws ValidationError naming the offending field.
CatalysisParams make_params(double r, double T1, double T2);

}  // namespace lqc
