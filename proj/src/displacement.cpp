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

#include <cmath>
#include <string>

#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"

#include "laguerre_band.hpp"

namespace lqc {

void displacement_band(int k, double s, std::span<double> out) {
  if (k < 0) throw ValidationError("k", "band offset must be non-negative");
  if (!(s >= 0.0)) throw ValidationError("s", "|z|^2 must be non-negative");
  detail::LaguerreBand(k, out.size()).eval(s, out);
}

double displacement_element(int m, int n, double s) {
  if (m < 0 || n < 0) throw ValidationError("m,n", "Fock indices must be non-negative");
  if (m + n > kMaxDisplacementOrder) {
    throw ValidationError("m,n", "m + n exceeds " + std::to_string(kMaxDisplacementOrder));
  }
  const int k = std::abs(m - n);
  const int j = std::min(m, n);
  std::vector<double> band(static_cast<std::size_t>(j) + 1);
  displacement_band(k, s, band);
  return band.back();
}

}  // namespace lqc
