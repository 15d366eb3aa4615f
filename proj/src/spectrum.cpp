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

#include "lqc/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "lqc/errors.hpp"

namespace lqc {

SchmidtSpectrum SchmidtSpectrum::from_unnormalized(std::vector<double> raw, double tail_bound) {
  if (raw.empty()) {
    throw ValidationError("weights", "spectrum needs at least one level");
  }
  // Sum in long double; p_cd can be small and the weights span many decades.
  long double norm2 = 0.0L;
  for (double w : raw) norm2 += static_cast<long double>(w) * w;
  if (!(norm2 > 1e-300L)) {
    throw DegeneratePostselectionError("heralding probability underflows (p_cd < 1e-300)");
  }
  const double inv = static_cast<double>(1.0L / std::sqrt(norm2));
  for (double &w : raw) w *= inv;

  SchmidtSpectrum s;
  s.weights_ = std::move(raw);
  s.tail_bound_ = tail_bound;
  s.raw_norm2_ = static_cast<double>(norm2);
  return s;
}

double truncation_tail_bound(const CatalysisParams &params, int N) {
  // |(n+1)T - n| <= 1 + n(1 - T), so each squared weight is at most
  // h1(n)^2 h2(n)^2 rho^(n-1) u^2 / cosh^2 r with h(n) = 1 + n(1 - T),
  // rho = T1 T2 u^2, u = tanh r. The ratio of consecutive bounds decreases
  // in n, so the tail is dominated by a geometric series from its first term.
  const double u = std::tanh(params.r());
  const double rho = params.T1() * params.T2() * u * u;
  const double c = u * u / std::pow(std::cosh(params.r()), 2);
  if (c == 0.0) return 0.0;
  const int first = std::max(N + 1, 1);
  const double a1 = 1.0 - params.T1();
  const double a2 = 1.0 - params.T2();
  auto h2 = [&](double n) { return std::pow((1.0 + n * a1) * (1.0 + n * a2), 2); };
  const double n1 = first;
  if (rho == 0.0) {
    // Only n = 1 can be nonzero.
    return first == 1 ? h2(1.0) * c : 0.0;
  }
  const double term = h2(n1) * std::pow(rho, n1 - 1.0) * c;
  const double ratio = h2(n1 + 1.0) / h2(n1) * rho;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return term / (1.0 - ratio);
}

int choose_truncation(const CatalysisParams &params, double eps) {
  if (!(eps > 0.0)) throw ValidationError("eps", "truncation tolerance must be positive");
  int N = kMinTruncation;
  while (!(truncation_tail_bound(params, N) < eps)) {
    if (++N > (1 << 20)) {
      throw ConvergenceError("no truncation satisfies the tail criterion (squeezing too large)");
    }
  }
  return N;
}

double entropy_of(const SchmidtSpectrum &spectrum) {
  double e = 0.0;
  for (double w : spectrum.weights()) {
    const double p = w * w;
    if (p > 0.0) e -= p * std::log2(p);
  }
  return std::max(e, 0.0);
}

double epr_of(const SchmidtSpectrum &spectrum) {
  const auto w = spectrum.weights();
  double photons = 0.0;
  double pair = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    photons += static_cast<double>(n) * w[n] * w[n];
    if (n + 1 < w.size()) pair += static_cast<double>(n + 1) * w[n] * w[n + 1];
  }
  return 2.0 * (1.0 + 2.0 * photons - 2.0 * pair);
}

}  // namespace lqc
