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

#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"

namespace lqc {

TruncatedTwoModeState TruncatedTwoModeState::squeezed_vacuum(double r, int N) {
  if (N < 0) throw ValidationError("N", "truncation must be non-negative");
  Eigen::MatrixXd amps = Eigen::MatrixXd::Zero(N + 1, N + 1);
  const double u = std::tanh(r);
  double w = 1.0 / std::cosh(r);
  for (int n = 0; n <= N; ++n) {
    amps(n, n) = w;
    w *= u;
  }
  return TruncatedTwoModeState(std::move(amps));
}

double TruncatedTwoModeState::off_diagonal_max() const {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < amps_.cols(); ++j) {
    for (Eigen::Index i = 0; i < amps_.rows(); ++i) {
      if (i != j) worst = std::max(worst, std::abs(amps_(i, j)));
    }
  }
  return worst;
}

TruncatedTwoModeState TruncatedTwoModeState::heralded_catalysis(double theta, int axis) const {
  if (axis != 0 && axis != 1) throw ValidationError("axis", "mode index must be 0 or 1");
  const int N = truncation();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int k = 0; k <= N; ++k) {
    // Input |k>|1>_ancilla lives in sector k + 1 at basis index 1. Heralding
    // one ancilla photon keeps only the output component |k>|1>, which sits
    // at the same index, so the mode keeps its photon number.
    const double amp = bs_sector_column(theta, k + 1, 1)[1];
    if (axis == 0) {
      out.row(k) = amp * amps_.row(k);
    } else {
      out.col(k) = amp * amps_.col(k);
    }
  }
  return TruncatedTwoModeState(std::move(out));
}

namespace {

constexpr double kOracleDegenerateProbability = 1e-28;

}  // namespace

OracleResult catalyze_oracle(const CatalysisParams &params, int N) {
  if (N < 0) throw ValidationError("N", "truncation must be non-negative");
  const double theta1 = beam_splitter_angle(params.T1());
  const double theta2 = beam_splitter_angle(params.T2());

  const auto state = TruncatedTwoModeState::squeezed_vacuum(params.r(), N)
                         .heralded_catalysis(theta1, 0)
                         .heralded_catalysis(theta2, 1);

  // cos(acos(0)) leaves amplitudes of order 1e-16 where the exact value is
  // zero, so anything below their square is round-off, not a heralding event.
  const double p_cd = state.norm2();
  if (!(p_cd >= kOracleDegenerateProbability)) {
    throw DegeneratePostselectionError("heralding probability is zero to working precision (p_cd < 1e-28)");
  }
  if (state.off_diagonal_max() > 1e-12 * std::sqrt(p_cd)) {
    throw ConvergenceError("catalysed state is not twin-Fock diagonal");
  }

  std::vector<double> raw(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) raw[n] = state.amps()(n, n);
  const double tail = truncation_tail_bound(params, N) / p_cd;
  return {SchmidtSpectrum::from_unnormalized(std::move(raw), tail), p_cd};
}

}  // namespace lqc
