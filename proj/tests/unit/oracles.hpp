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

// Test-side reference computations. None of these share code with the
// library: they are written from the textbook definitions so that agreement
// is evidence rather than tautology.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace lqc::testing {

// Normalized TMSVS weights tanh^n r / cosh r.
inline std::vector<double> tmsvs_weights(double r, int N) {
  std::vector<double> w(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) w[n] = std::pow(std::tanh(r), n) / std::cosh(r);
  return w;
}

// <m|D(alpha)|n> from the finite double sum
//   e^{-|a|^2/2} sqrt(m! n!) sum_k a^{m-k} (-a*)^{n-k} / (k! (m-k)! (n-k)!).
inline std::complex<long double> displacement_sum(int m, int n, std::complex<long double> a) {
  using C = std::complex<long double>;
  C sum = 0.0L;
  for (int k = 0; k <= std::min(m, n); ++k) {
    const long double log_den = std::lgamma(k + 1.0L) + std::lgamma(m - k + 1.0L) + std::lgamma(n - k + 1.0L);
    sum += std::pow(a, m - k) * std::pow(-std::conj(a), n - k) * std::exp(-log_den);
  }
  const long double log_norm = 0.5L * (std::lgamma(m + 1.0L) + std::lgamma(n + 1.0L)) - 0.5L * std::norm(a);
  return sum * std::exp(log_norm);
}

// |<m|D(a)|n>| for real a >= 0 from the same finite sum in 50-digit
// arithmetic. The alternating terms cancel badly once a^2 exceeds a few.
inline double displacement_magnitude_mp(int m, int n, double s) {
  using mp = boost::multiprecision::cpp_bin_float_50;
  const mp a2 = mp(s);
  mp sum = 0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    const mp log_den = boost::multiprecision::lgamma(mp(k + 1)) + boost::multiprecision::lgamma(mp(m - k + 1)) +
                       boost::multiprecision::lgamma(mp(n - k + 1));
    const mp term = boost::multiprecision::pow(a2, (m + n - 2 * k) / 2.0) * boost::multiprecision::exp(-log_den);
    sum += ((n - k) % 2 ? -term : term);
  }
  const mp log_norm = (boost::multiprecision::lgamma(mp(m + 1)) + boost::multiprecision::lgamma(mp(n + 1))) / 2 - a2 / 2;
  return static_cast<double>(boost::multiprecision::abs(sum * boost::multiprecision::exp(log_norm)));
}

// Displacement operator on a `levels`-dimensional truncation by dense matrix
// exponential of alpha a^dag - alpha* a.
inline Eigen::MatrixXcd displacement_matrix(std::complex<double> alpha, int levels) {
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(levels, levels);
  for (int n = 0; n + 1 < levels; ++n) {
    const double s = std::sqrt(n + 1.0);
    gen(n + 1, n) += alpha * s;
    gen(n, n + 1) -= std::conj(alpha) * s;
  }
  return gen.exp();
}

// exp[theta (a^dag c - a c^dag)] on two modes each truncated to `levels`,
// indexed |n_a, n_c> -> n_a * levels + n_c.
inline Eigen::MatrixXd two_mode_beam_splitter(double theta, int levels) {
  const int dim = levels * levels;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(dim, dim);
  auto idx = [&](int a, int c) { return a * levels + c; };
  for (int a = 0; a < levels; ++a) {
    for (int c = 0; c < levels; ++c) {
      // a^dag c |a, c> = sqrt((a+1) c) |a+1, c-1>
      if (a + 1 < levels && c >= 1) gen(idx(a + 1, c - 1), idx(a, c)) += theta * std::sqrt((a + 1.0) * c);
      // a c^dag |a, c> = sqrt(a (c+1)) |a-1, c+1>
      if (a >= 1 && c + 1 < levels) gen(idx(a - 1, c + 1), idx(a, c)) -= theta * std::sqrt(a * (c + 1.0));
    }
  }
  return gen.exp();
}

// Gauss-Hermite rule for int e^{-x^2} f(x) dx by Golub-Welsch.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline HermiteRule gauss_hermite(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) J(i, i - 1) = J(i - 1, i) = std::sqrt(i / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
  HermiteRule rule;
  for (int i = 0; i < n; ++i) {
    rule.nodes.push_back(eig.eigenvalues()[i]);
    const double v = eig.eigenvectors()(0, i);
    rule.weights.push_back(std::sqrt(M_PI) * v * v);
  }
  return rule;
}

// Teleportation fidelity of a coherent input through a Schmidt-diagonal
// resource sum_n w_n |n,n>, integrating
//   F = int d^2z/pi e^{-|z|^2} <psi| D_a(z*) D_b(z) |psi>
// over the plane on a Cartesian Gauss-Hermite grid.
inline double cartesian_fidelity(const std::vector<double> &w, int nodes) {
  const HermiteRule rule = gauss_hermite(nodes);
  const int N = static_cast<int>(w.size()) - 1;
  long double total = 0.0L;
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      const std::complex<long double> z(rule.nodes[i], rule.nodes[j]);
      std::complex<long double> cf = 0.0L;
      for (int m = 0; m <= N; ++m) {
        for (int n = 0; n <= N; ++n) {
          cf += static_cast<long double>(w[m] * w[n]) * displacement_sum(m, n, std::conj(z)) *
                displacement_sum(m, n, z);
        }
      }
      total += static_cast<long double>(rule.weights[i] * rule.weights[j]) * cf.real();
    }
  }
  return static_cast<double>(total / M_PI);
}

}  // namespace lqc::testing
