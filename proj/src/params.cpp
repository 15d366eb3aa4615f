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

#include "lqc/params.hpp"

#include <cmath>
#include <string>

#include "lqc/errors.hpp"

namespace lqc {
namespace {

void check_transmittance(const char *field, double T) {
  if (!std::isfinite(T) || T < 0.0 || T > 1.0) {
    throw ValidationError(field, "transmittance must lie in [0, 1], got " + std::to_string(T));
  }
}

}  // namespace

CatalysisParams make_params(double r, double T1, double T2) {
  if (!std::isfinite(r) || r < 0.0) {
    throw ValidationError("r", "squeezing must be finite and >= 0, got " + std::to_string(r));
  }
  check_transmittance("T1", T1);
  check_transmittance("T2", T2);

  CatalysisParams p;
  p.r_ = r;
  p.T1_ = T1;
  p.T2_ = T2;
  p.t1_ = std::sqrt(T1);
  p.t2_ = std::sqrt(T2);
  p.refl1_ = std::sqrt(1.0 - T1);
  p.refl2_ = std::sqrt(1.0 - T2);
  p.tanh_lambda_ = p.t1_ * p.t2_ * std::tanh(r);
  // With full transmission lambda equals r exactly; atanh would lose it for large r.
  p.lambda_ = (T1 == 1.0 && T2 == 1.0) ? r : std::atanh(p.tanh_lambda_);
  return p;
}

CatalysisParams CatalysisParams::swapped() const { return make_params(r_, T2_, T1_); }

}  // namespace lqc
