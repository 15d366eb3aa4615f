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

#include <span>
#include <vector>

#include "lqc/params.hpp"

namespace lqc {

inline constexpr double kDefaultTruncationEps = 1e-14;
inline constexpr int kMinTruncation = 30;

/// Schmidt weights w_n of a state sum_n w_n |n,n>, normalized so that
/// sum w_n^2 = 1. Weights keep their sign.
class SchmidtSpectrum {
 public:
  /// Normalizes `raw` by its Euclidean norm. `tail_bound` is an upper bound
  /// on the squared weight discarded beyond the last retained level, already
  /// expressed relative to the normalized state.
  /// Throws DegeneratePostselectionError if the norm underflows.
  static SchmidtSpectrum from_unnormalized(std::vector<double> raw, double tail_bound = 0.0);

  std::span<const double> weights() const noexcept { return weights_; }
  double operator[](std::size_t n) const { return weights_.at(n); }
  std::size_t size() const noexcept { return weights_.size(); }
  /// Highest photon number retained.
  int truncation() const noexcept { return static_cast<int>(weights_.size()) - 1; }
  double tail_bound() const noexcept { return tail_bound_; }
  /// Squared norm of the raw weights the spectrum was built from.
  double raw_norm2() const noexcept { return raw_norm2_; }

 private:
  std::vector<double> weights_;
  double tail_bound_ = 0.0;
  double raw_norm2_ = 1.0;
};

/// Upper bound on sum_{n>N} of the unnormalized squared weights
/// (t1 t2)^(2n-2) ((n+1)T1-n)^2 ((n+1)T2-n)^2 tanh^(2n) r / cosh^2 r.
/// Uses |(n+1)T-n| <= 1 + n(1-T) and a geometric tail from the first
/// dropped term, which is exact at T1 = T2 = 1.
double truncation_tail_bound(const CatalysisParams &params, int N);

/// Smallest N >= kMinTruncation with truncation_tail_bound(params, N) < eps.
int choose_truncation(const CatalysisParams &params, double eps = kDefaultTruncationEps);

/// Von Neumann entropy of either reduced state, in bits.
double entropy_of(const SchmidtSpectrum &spectrum);

/// Total variance Var(x_a - x_b) + Var(p_a + p_b) of a twin-Fock-diagonal
/// state: 2 (1 + 2 sum n w_n^2 - 2 sum (n+1) w_n w_{n+1}).
double epr_of(const SchmidtSpectrum &spectrum);

}  // namespace lqc
