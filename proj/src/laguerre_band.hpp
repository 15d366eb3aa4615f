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

#include <cmath>
#include <span>
#include <vector>

namespace lqc::detail {

// Orthonormal Laguerre functions
//   phi_j(s) = sqrt(j!/(j+k)!) s^{k/2} e^{-s/2} L_j^{(k)}(s),  j = 0..len-1,
// which are the radial factors of <j|D|j+k>. Recurrence coefficients depend
// only on (k, j) and are tabulated once per band.
class LaguerreBand {
 public:
  LaguerreBand(int k, std::size_t len) : k_(k), diag_(len), back_(len), inv_(len) {
    for (std::size_t j = 0; j < len; ++j) {
      const double jd = static_cast<double>(j);
      diag_[j] = 2.0 * jd + k + 1.0;
      back_[j] = std::sqrt(jd * (jd + k));
      inv_[j] = 1.0 / std::sqrt((jd + 1.0) * (jd + k + 1.0));
    }
  }

  void eval(double s, std::span<double> out) const {
    if (out.empty()) return;
    if (s == 0.0) {
      // D(0) is the identity.
      for (double &v : out) v = k_ == 0 ? 1.0 : 0.0;
      return;
    }
    // The running values are kept as cur * e^{log_scale} so that e^{-s/2}
    // cannot underflow the whole band for large s.
    double log_scale = 0.5 * (k_ * std::log(s) - s - std::lgamma(k_ + 1.0));
    double factor = std::exp(log_scale);
    double prev = 0.0;
    double cur = 1.0;
    out[0] = factor;
    for (std::size_t j = 0; j + 1 < out.size(); ++j) {
      const double next = ((diag_[j] - s) * cur - back_[j] * prev) * inv_[j];
      prev = cur;
      cur = next;
      const double mag = std::abs(cur);
      if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
        prev /= mag;
        cur /= mag;
        log_scale += std::log(mag);
        factor = std::exp(log_scale);
      }
      out[j + 1] = cur * factor;
    }
  }

 private:
  int k_;
  std::vector<double> diag_;
  std::vector<double> back_;
  std::vector<double> inv_;
};

}  // namespace lqc::detail
