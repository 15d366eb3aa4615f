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

#include "lqc/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "lqc/coefficient_tables.hpp"
#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"

namespace lqc {
namespace {

double catalysis_factor(double T, double t, int n) {
  if (n == 0) return t;  // T / t with T = t^2
  return ((n + 1) * T - n) * std::pow(t, n - 1);
}

void check_level(int n) {
  if (n < 0) throw ValidationError("n", "photon number must be non-negative");
}

// cosh^k(lambda) / cosh^2(r), evaluated as a ratio so large r does not overflow
// when lambda is close to r.
double cosh_ratio(const CatalysisParams &p, int k) {
  const long double lam = p.lambda();
  const long double r = p.r();
  return static_cast<double>(std::exp(k * std::log(std::cosh(lam)) - 2.0L * std::log(std::cosh(r))));
}

}  // namespace

double success_probability(const CatalysisParams &params) {
  const double t1 = params.t1();
  const double t2 = params.t2();
  const long double u = std::tanh(static_cast<long double>(params.r()));
  long double series = 0.0L;
  long double power = 1.0L;
  for (const auto &a : tables::success_a()) {
    series += tables::evaluate_extended(a, t1, t2) * power;
    power *= u * u;
  }
  return cosh_ratio(params, 10) * static_cast<double>(series);
}

double schmidt_coefficient_unnormalized(const CatalysisParams &params, int n) {
  check_level(n);
  const double u = std::tanh(params.r());
  return catalysis_factor(params.T1(), params.t1(), n) *
         catalysis_factor(params.T2(), params.t2(), n) * std::pow(u, n) / std::cosh(params.r());
}

double schmidt_coefficient(const CatalysisParams &params, int n) {
  const double p = success_probability(params);
  if (!(p >= 1e-300)) {
    throw DegeneratePostselectionError("heralding probability underflows (p_cd < 1e-300)");
  }
  return schmidt_coefficient_unnormalized(params, n) / std::sqrt(p);
}

SchmidtSpectrum schmidt_spectrum(const CatalysisParams &params, double eps) {
  int N = choose_truncation(params, eps);
  for (;;) {
    std::vector<double> raw(static_cast<std::size_t>(N) + 1);
    long double norm2 = 0.0L;
    for (int n = 0; n <= N; ++n) {
      raw[n] = schmidt_coefficient_unnormalized(params, n);
      norm2 += static_cast<long double>(raw[n]) * raw[n];
    }
    if (!(norm2 > 1e-300L)) {
      throw DegeneratePostselectionError("heralding probability underflows (p_cd < 1e-300)");
    }
    const double tail = truncation_tail_bound(params, N) / static_cast<double>(norm2);
    if (tail < eps) return SchmidtSpectrum::from_unnormalized(std::move(raw), tail);
    if (N > (1 << 20)) throw ConvergenceError("spectrum truncation does not converge");
    N *= 2;
  }
}

StateCoefficients state_coefficients(const CatalysisParams &params) {
  const double p = success_probability(params);
  if (!(p >= 1e-300)) {
    throw DegeneratePostselectionError("heralding probability underflows (p_cd < 1e-300)");
  }
  const double t1s = params.T1();
  const double t2s = params.T2();
  const double r1s = 1.0 - t1s;
  const double r2s = 1.0 - t2s;
  const double u = std::tanh(params.r());
  const double norm = std::sqrt(p) * std::cosh(params.r());
  const double ch = std::cosh(params.lambda());
  const double sh = std::sinh(params.lambda());

  StateCoefficients c;
  c.lambda = params.lambda();
  c.c0 = params.t1() * params.t2() * ch / norm;
  c.c1 = (r1s * r2s - r1s * t2s - r2s * t1s) * u * ch / norm;
  c.c2 = r1s * r2s * u * sh / norm;
  return c;
}

MomentsClosed epr_moments_closed(const CatalysisParams &params) {
  const double t1 = params.t1();
  const double t2 = params.t2();
  const double u = std::tanh(params.r());
  const double p = success_probability(params);
  if (!(p >= 1e-300)) {
    throw DegeneratePostselectionError("heralding probability underflows (p_cd < 1e-300)");
  }
  const double base = cosh_ratio(params, 12) / p;
  const double M = base * u;
  const double N = base * params.tanh_lambda();

  const long double ul = std::tanh(static_cast<long double>(params.r()));
  auto series = [&](std::span<const tables::Polynomial> coeffs) {
    long double sum = 0.0L;
    long double power = 1.0L;
    for (const auto &c : coeffs) {
      sum += tables::evaluate_extended(c, t1, t2) * power;
      power *= ul;
    }
    return static_cast<double>(sum);
  };

  MomentsClosed m;
  m.a_dag_a = M * series(tables::moment_x());
  m.b_dag_b = M * series(tables::moment_y());
  m.ab = N * series(tables::moment_z());
  return m;
}

double epr_closed(const CatalysisParams &params) {
  const MomentsClosed m = epr_moments_closed(params);
  return 2.0 * (1.0 + m.a_dag_a + m.b_dag_b - 2.0 * m.ab);
}

double fidelity_printed(const CatalysisParams &params) {
  const double t1 = params.t1();
  const double t2 = params.t2();
  const double p = success_probability(params);
  if (!(p >= 1e-300)) {
    throw DegeneratePostselectionError("heralding probability underflows (p_cd < 1e-300)");
  }
  const long double ul = std::tanh(static_cast<long double>(params.r()));
  long double series = 0.0L;
  long double power = 1.0L;
  for (const auto &m : tables::fidelity_m()) {
    series += tables::evaluate_extended(m, t1, t2) * power;
    power *= ul;
  }
  return cosh_ratio(params, 10) / (4.0 * p) * static_cast<double>(series);
}

FidelityClosed fidelity_closed(const CatalysisParams &params) {
  FidelityClosed f;
  f.value = fidelity_printed(params);
  f.oracle = cf_fidelity_oracle(schmidt_spectrum(params));
  f.flagged = std::abs(f.value - f.oracle) > kFidelityFlagTolerance;
  return f;
}

double tmsvs_entropy(double r) {
  if (!(r >= 0.0)) throw ValidationError("r", "squeezing must be >= 0");
  const double c2 = std::pow(std::cosh(r), 2);
  const double s2 = std::pow(std::sinh(r), 2);
  const double e = c2 * std::log2(c2) - (s2 > 0.0 ? s2 * std::log2(s2) : 0.0);
  return std::max(e, 0.0);
}

double tmsvs_epr(double r) {
  if (!(r >= 0.0)) throw ValidationError("r", "squeezing must be >= 0");
  return 2.0 * std::exp(-2.0 * r);
}

double tmsvs_fidelity(double r) {
  if (!(r >= 0.0)) throw ValidationError("r", "squeezing must be >= 0");
  return 0.5 * (1.0 + std::tanh(r));
}

}  // namespace lqc
