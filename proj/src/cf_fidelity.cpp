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
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"
#include "lqc/parallel.hpp"
#include "lqc/quadrature.hpp"

#include "laguerre_band.hpp"

namespace lqc {
namespace {

// Kernels are keyed by (N, nodes) and never evicted, so references handed
// out stay valid for the life of the process. Each key is built once; other
// threads asking for it meanwhile wait on the same future.
class KernelCache {
 public:
  const Eigen::MatrixXd &get(int N, int nodes) {
    const auto key = std::make_pair(N, nodes);
    {
      std::shared_lock lock(mutex_);
      if (auto it = kernels_.find(key); it != kernels_.end()) return it->second.get();
    }
    std::promise<Eigen::MatrixXd> promise;
    std::shared_future<Eigen::MatrixXd> future;
    bool builder = false;
    {
      std::unique_lock lock(mutex_);
      auto [it, inserted] = kernels_.try_emplace(key, promise.get_future().share());
      future = it->second;
      builder = inserted;
    }
    if (builder) {
      try {
        promise.set_value(compute(N, nodes));
      } catch (...) {
        promise.set_exception(std::current_exception());
        std::unique_lock lock(mutex_);
        kernels_.erase(key);
        throw;
      }
    }
    return future.get();
  }

 private:
  static Eigen::MatrixXd compute(int N, int nodes) {
    const GaussLaguerreRule rule = gauss_laguerre(nodes);
    // Substituting u = 2s turns e^{-s} R_mn(s)^2 ds into e^{-u} times a
    // polynomial of degree m + n, which the rule integrates exactly when
    // m + n < 2 * nodes.
    std::vector<double> scale;
    std::vector<double> radius2;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double w = 0.5 * std::exp(rule.log_weights[i] + 0.5 * rule.nodes[i]);
      if (w == 0.0) continue;
      scale.push_back(w);
      radius2.push_back(0.5 * rule.nodes[i]);
    }

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N + 1, N + 1);
    // Callers are often parallel loops themselves; the build still fans out
    // because they are blocked on it.
    parallel_for(
        static_cast<std::size_t>(N) + 1,
        [&](std::size_t kk) {
          const int k = static_cast<int>(kk);
          const std::size_t len = static_cast<std::size_t>(N - k) + 1;
          const detail::LaguerreBand recurrence(k, len);
          std::vector<double> band(len);
          std::vector<double> acc(len, 0.0);
          for (std::size_t i = 0; i < scale.size(); ++i) {
            recurrence.eval(radius2[i], band);
            for (std::size_t j = 0; j < len; ++j) acc[j] += scale[i] * band[j] * band[j];
          }
          for (std::size_t j = 0; j < len; ++j) {
            K(j, j + k) = acc[j];
            K(j + k, j) = acc[j];
          }
        },
        /*allow_nested=*/true);
    return K;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::shared_future<Eigen::MatrixXd>> kernels_;
};

KernelCache &kernel_cache() {
  static KernelCache cache;
  return cache;
}

double quadratic_form(const Eigen::MatrixXd &K, std::span<const double> w) {
  const Eigen::Index n = static_cast<Eigen::Index>(w.size());
  const Eigen::Map<const Eigen::VectorXd> v(w.data(), n);
  return v.dot(K.topLeftCorner(n, n) * v);
}

}  // namespace

const Eigen::MatrixXd &fidelity_kernel(int N, int nodes) {
  if (N < 0) throw ValidationError("N", "truncation must be non-negative");
  if (nodes < 1) throw ValidationError("quad_points", "need at least one node");
  return kernel_cache().get(N, nodes);
}

double cf_fidelity_oracle(const SchmidtSpectrum &spectrum, int quad_points) {
  if (quad_points < 1) throw ValidationError("quad_points", "need at least one node");
  const int N = spectrum.truncation();
  // Round N up to a power of two so sweeps touching many truncations share a
  // handful of cached kernels. Kernel entries do not depend on the bucket
  // once the rule is exact, so the leading block serves any smaller N.
  int bucket = 64;
  while (bucket < N) bucket *= 2;
  if (2 * bucket > kMaxDisplacementOrder) {
    throw ValidationError("spectrum", "truncation too large for the displacement kernel");
  }
  const int nodes = std::max(quad_points, bucket + 1);

  const double coarse = quadratic_form(fidelity_kernel(bucket, nodes), spectrum.weights());
  const double fine = quadratic_form(fidelity_kernel(bucket, 2 * nodes), spectrum.weights());
  if (std::abs(fine - coarse) > 1e-9 * std::abs(fine)) {
    throw ConvergenceError("fidelity quadrature did not converge: " + std::to_string(coarse) +
                           " vs " + std::to_string(fine));
  }
  return fine;
}

}  // namespace lqc
