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

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "lqc/params.hpp"
#include "lqc/spectrum.hpp"

namespace lqc {

/// Beam splitter exp[theta (a^dag c - a c^dag)] restricted to the sector of
/// total photon number m, in the basis |m-j>_system |j>_ancilla, j = 0..m.
struct SectorUnitary {
  int total_photons = 0;
  Eigen::MatrixXd matrix;

  /// max |U^T U - I|
  double orthogonality_defect() const;
};

/// Exact (up to round-off) sector unitary from exponentiating the
/// (m+1)-dimensional antisymmetric generator. Throws ValidationError for m < 0.
SectorUnitary bs_sector(double theta, int m);

/// Column `j` of the sector unitary, i.e. exp(theta G_m) e_j, without
/// forming the full matrix.
std::vector<double> bs_sector_column(double theta, int m, int j);

/// <n,1| B(theta) |n,1>: amplitude for a system Fock state |n> to leave the
/// beam splitter as |n> while the single ancilla photon is heralded.
double catalysis_amplitude(double theta, int n);

/// Beam-splitter angle with cos(theta) = t = sqrt(T).
double beam_splitter_angle(double transmittance);

/// Real amplitudes c(m, n) over |m>_a |n>_b, levels 0..N on each mode.
class TruncatedTwoModeState {
 public:
  explicit TruncatedTwoModeState(Eigen::MatrixXd amps) : amps_(std::move(amps)) {}

  /// Two-mode squeezed vacuum truncated at N.
  static TruncatedTwoModeState squeezed_vacuum(double r, int N);

  const Eigen::MatrixXd &amps() const noexcept { return amps_; }
  int truncation() const noexcept { return static_cast<int>(amps_.rows()) - 1; }
  double norm2() const { return amps_.squaredNorm(); }
  /// Largest |c(m, n)| with m != n.
  double off_diagonal_max() const;

  /// Mix mode a (axis 0) or mode b (axis 1) with a single photon on a beam
  /// splitter of angle theta and project the ancilla output on |1>.
  /// The result is unnormalized.
  TruncatedTwoModeState heralded_catalysis(double theta, int axis) const;

 private:
  Eigen::MatrixXd amps_;
};

struct OracleResult {
  SchmidtSpectrum spectrum;
  double p_cd = 0.0;
};

/// Simulates the two heralded beam splitters acting on a TMSVS truncated at N
/// and returns the normalized Schmidt spectrum together with the heralding
/// probability (squared norm of the projected state).
/// Throws DegeneratePostselectionError when p_cd < 1e-300 and ConvergenceError
/// if the output is not twin-Fock diagonal.
OracleResult catalyze_oracle(const CatalysisParams &params, int N);

/// Largest m + n accepted by displacement_element.
inline constexpr int kMaxDisplacementOrder = 4000;

/// Radial factor of <m|D(z)|n> at s = |z|^2:
/// sqrt(min!/max!) s^{|m-n|/2} e^{-s/2} L_min^{(|m-n|)}(s).
/// Computed from the orthonormal Laguerre-function recurrence, which stays
/// bounded by 1 in magnitude. Throws ValidationError on negative indices,
/// s < 0, or m + n > kMaxDisplacementOrder.
double displacement_element(int m, int n, double s);

/// Fills out[j] with displacement_element(j, j + k, s) for j = 0..out.size()-1.
void displacement_band(int k, double s, std::span<double> out);

inline constexpr int kDefaultQuadPoints = 120;

/// Teleportation fidelity of a coherent state through the Braunstein-Kimble
/// protocol with the twin-Fock-diagonal resource `spectrum`:
///   F = sum_{m,n} w_m w_n int_0^inf e^{-s} R_mn(s)^2 ds,
/// by Gauss-Laguerre quadrature. The node count is raised to at least
/// truncation + 1 so that every polynomial in the sum is integrated exactly,
/// then checked against a rule with twice as many nodes.
/// Throws ConvergenceError when the two differ by more than 1e-9 relative.
double cf_fidelity_oracle(const SchmidtSpectrum &spectrum, int quad_points = kDefaultQuadPoints);

/// Overlap kernel K(m, n) = int_0^inf e^{-s} R_mn(s)^2 ds for m, n <= N using
/// `nodes` quadrature points. Results are cached and shared between threads.
const Eigen::MatrixXd &fidelity_kernel(int N, int nodes);

}  // namespace lqc
