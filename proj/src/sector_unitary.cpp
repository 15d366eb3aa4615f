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

#include <algorithm>
#include <cmath>

#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"

namespace lqc {
namespace {

// Generator a^dag c - a c^dag on the m-photon sector, basis |m-j, j>.
// It is tridiagonal and antisymmetric: (G v)_i = e_i v_{i+1} - e_{i-1} v_{i-1}
// with e_j = sqrt((m-j)(j+1)).
class SectorGenerator {
 public:
  explicit SectorGenerator(int m) : coupling_(static_cast<std::size_t>(m)) {
    for (int j = 0; j < m; ++j) {
      coupling_[j] = std::sqrt(static_cast<double>(m - j) * (j + 1));
    }
  }

  std::size_t dim() const noexcept { return coupling_.size() + 1; }

  double max_coupling() const {
    return coupling_.empty() ? 0.0 : *std::max_element(coupling_.begin(), coupling_.end());
  }

  void apply(const std::vector<double> &in, std::vector<double> &out) const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      if (i + 1 < d) acc += coupling_[i] * in[i + 1];
      if (i > 0) acc -= coupling_[i - 1] * in[i - 1];
      out[i] = acc;
    }
  }

 private:
  std::vector<double> coupling_;
};

// exp(theta G) v by scaled Taylor steps. Each step has ||h G|| <= 1, and the
// series is summed until the next term is below double resolution.
void expm_action(const SectorGenerator &gen, double theta, std::vector<double> &v) {
  const double norm = 2.0 * std::abs(theta) * gen.max_coupling();
  if (norm == 0.0) return;
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const double h = theta / steps;

  std::vector<double> term(v.size());
  std::vector<double> next(v.size());
  for (int s = 0; s < steps; ++s) {
    term = v;
    for (int k = 1; k < 64; ++k) {
      gen.apply(term, next);
      double term_max = 0.0;
      double v_max = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        term[i] = next[i] * h / k;
        v[i] += term[i];
        term_max = std::max(term_max, std::abs(term[i]));
        v_max = std::max(v_max, std::abs(v[i]));
      }
      if (term_max <= 1e-18 * v_max) break;
    }
  }
}

}  // namespace

double SectorUnitary::orthogonality_defect() const {
  const Eigen::MatrixXd gram = matrix.transpose() * matrix;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

std::vector<double> bs_sector_column(double theta, int m, int j) {
  if (m < 0) throw ValidationError("m", "photon number must be non-negative");
  if (j < 0 || j > m) throw ValidationError("j", "basis index outside the sector");
  const SectorGenerator gen(m);
  std::vector<double> v(gen.dim(), 0.0);
  v[static_cast<std::size_t>(j)] = 1.0;
  expm_action(gen, theta, v);
  return v;
}

SectorUnitary bs_sector(double theta, int m) {
  if (m < 0) throw ValidationError("m", "photon number must be non-negative");
  SectorUnitary u;
  u.total_photons = m;
  u.matrix.resize(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) {
    const auto col = bs_sector_column(theta, m, j);
    for (int i = 0; i <= m; ++i) u.matrix(i, j) = col[i];
  }
  return u;
}

double catalysis_amplitude(double theta, int n) {
  if (n < 0) throw ValidationError("n", "photon number must be non-negative");
  // Sector n + 1; |n, 1> is basis index j = 1.
  return bs_sector_column(theta, n + 1, 1)[1];
}

double beam_splitter_angle(double transmittance) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw ValidationError("T", "transmittance must lie in [0, 1]");
  }
  return std::acos(std::sqrt(transmittance));
}

}  // namespace lqc
