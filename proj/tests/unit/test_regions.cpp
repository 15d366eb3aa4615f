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
#include <functional>
#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "lqc/errors.hpp"
#include "lqc/regions.hpp"

using namespace lqc;

namespace {

// 4-connected components of enhanced cells on the (T1, T2) slice at ir = 0.
int lobe_count(const RegionGrid &g) {
  const int n1 = static_cast<int>(g.axis_T1.size());
  const int n2 = static_cast<int>(g.axis_T2.size());
  std::vector<char> seen(static_cast<std::size_t>(n1 * n2), 0);
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i < 0 || j < 0 || i >= n1 || j >= n2) return;
    const std::size_t k = static_cast<std::size_t>(i * n2 + j);
    if (seen[k] || !g.at(0, i, j).enhanced()) return;
    seen[k] = 1;
    fill(i + 1, j);
    fill(i - 1, j);
    fill(i, j + 1);
    fill(i, j - 1);
  };
  int lobes = 0;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (!seen[static_cast<std::size_t>(i * n2 + j)] && g.at(0, i, j).enhanced()) {
        ++lobes;
        fill(i, j);
      }
    }
  }
  return lobes;
}

bool overlaps(const std::vector<Interval> &iv, double lo, double hi) {
  for (const auto &i : iv) {
    if (i.lo < hi && i.hi > lo) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("regions") {
  TEST_CASE("quantity names round trip") {
    for (Quantity q : {Quantity::Entropy, Quantity::Epr, Quantity::Fidelity, Quantity::Pcd, Quantity::Common}) {
      CHECK(parse_quantity(quantity_name(q)) == q);
    }
    CHECK_FALSE(parse_quantity("purity").has_value());
  }

  TEST_CASE("linspace") {
    const auto v = linspace(0.0, 1.0, 5);
    REQUIRE(v.size() == 5);
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 1.0);
    CHECK(v[2] == doctest::Approx(0.5));
    CHECK(linspace(0.3, 0.7, 1) == std::vector<double>{0.3});
  }

  TEST_CASE("p_cd sweep at full transmission is one") {
    const auto g = sweep(Quantity::Pcd, {0.5}, {1.0}, {1.0});
    CHECK(g.at(0, 0, 0).value == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("p_cd is low at low transmissivity") {
    const auto g = sweep(Quantity::Pcd, {0.5}, {0.05, 0.95}, {0.05, 0.95});
    CHECK(g.at(0, 0, 0).value < g.at(0, 1, 1).value);
  }

  TEST_CASE("entropy enhancement at r = 0.5 splits into three lobes") {
    const auto ax = linspace(0.01, 0.99, 99);
    const auto g = sweep(Quantity::Entropy, {0.5}, ax, ax);
    CHECK(lobe_count(g) == 3);
  }

  TEST_CASE("epr enhancement at r = 0.5 is a single low-transmission lobe") {
    const auto ax = linspace(0.01, 0.99, 99);
    const auto g = sweep(Quantity::Epr, {0.5}, ax, ax);
    CHECK(lobe_count(g) == 1);
    for (std::size_t i = 0; i < ax.size(); ++i) {
      for (std::size_t j = 0; j < ax.size(); ++j) {
        if (g.at(0, i, j).enhanced()) CHECK(ax[i] + ax[j] < 1.0);
      }
    }
  }

  TEST_CASE("deltas vanish on the T = 1 line") {
    for (Quantity q : {Quantity::Entropy, Quantity::Epr, Quantity::Fidelity}) {
      const auto g = sweep_symmetric(q, linspace(0.0, 1.5, 7), {1.0});
      for (const auto &v : g.values) {
        CHECK(std::abs(v.delta) < 1e-10);
        CHECK_FALSE(v.enhanced());
      }
    }
  }

  TEST_CASE("sweep validation") {
    CHECK_THROWS_AS(sweep(Quantity::Entropy, {0.5}, {0.2, 0.1}, {0.5}), ValidationError);
    CHECK_THROWS_AS(sweep(Quantity::Entropy, {0.5}, {0.2, 1.1}, {0.5}), ValidationError);
    CHECK_THROWS_AS(sweep(Quantity::Entropy, {-0.5}, {0.2}, {0.5}), ValidationError);
    CHECK_THROWS_AS(sweep(Quantity::Entropy, {0.5}, {}, {0.5}), ValidationError);
    CHECK_THROWS_AS(sweep(Quantity::Entropy, {0.1, 0.2}, linspace(0, 1, 10), linspace(0, 1, 10), Engine::Reference, 100),
                    ValidationError);
  }

  TEST_CASE("sweeps are deterministic") {
    const auto ax = linspace(0.02, 0.98, 25);
    const auto a = sweep(Quantity::Fidelity, {0.3}, ax, ax);
    const auto b = sweep(Quantity::Fidelity, {0.3}, ax, ax);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i].value == b.values[i].value);
  }

  TEST_CASE("swap symmetry of a sweep") {
    const auto ax = linspace(0.05, 0.95, 19);
    const auto g = sweep(Quantity::Entropy, {0.4}, ax, ax);
    for (std::size_t i = 0; i < ax.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK(g.at(0, i, j).delta == doctest::Approx(g.at(0, j, i).delta).epsilon(1e-10));
    }
  }

  TEST_CASE("t_range examples") {
    const auto e = t_range(Quantity::Entropy, 0.2);
    REQUIRE(e.size() == 1);
    CHECK(e[0].lo == doctest::Approx(0.03).epsilon(0.2));
    CHECK(t_range(Quantity::Entropy, 0.9).empty());
    CHECK(overlaps(t_range(Quantity::Epr, 0.2), 0.12, 0.3));
  }

  TEST_CASE("t_range endpoints sit on the boundary") {
    const QuantityEvaluator eval(Quantity::Entropy, Engine::Reference);
    const auto base = eval.baselines(0.3);
    for (const auto &iv : t_range(Quantity::Entropy, 0.3, 1e-7)) {
      if (iv.lo > 0.0) CHECK_FALSE(eval.at(make_params(0.3, iv.lo - 1e-5, iv.lo - 1e-5), base).enhanced());
      CHECK(eval.at(make_params(0.3, iv.lo + 1e-5, iv.lo + 1e-5), base).enhanced());
      CHECK(eval.at(make_params(0.3, iv.hi - 1e-5, iv.hi - 1e-5), base).enhanced());
      if (iv.hi < 1.0) CHECK_FALSE(eval.at(make_params(0.3, iv.hi + 1e-5, iv.hi + 1e-5), base).enhanced());
    }
  }

  TEST_CASE("entropy threshold is stable under tolerance") {
    const auto a = threshold(Quantity::Entropy, 1e-3);
    const auto b = threshold(Quantity::Entropy, 1e-4);
    CHECK(a.r_lo < a.r_hi);
    CHECK(a.r_hi - a.r_lo <= 1e-3);
    CHECK(std::abs(a.r_star - b.r_star) <= 1e-3);
    CHECK(a.r_star == doctest::Approx(0.785).epsilon(0.002));
    CHECK_FALSE(a.t_range_examples.empty());
  }

  TEST_CASE("epr threshold is stable under tolerance") {
    const auto a = threshold(Quantity::Epr, 1e-3);
    const auto b = threshold(Quantity::Epr, 1e-4);
    CHECK(std::abs(a.r_star - b.r_star) <= 1e-3);
  }

  TEST_CASE("p_cd never improves on one") {
    CHECK_THROWS_AS(threshold(Quantity::Pcd), ConvergenceError);
  }

  TEST_CASE("common region is inside each single-quantity region") {
    const auto c = common_region(40);
    const std::vector<double> r(c.axis_r.begin(), c.axis_r.end());
    const std::vector<double> T(c.axis_T1.begin(), c.axis_T1.end());
    const auto e = sweep_symmetric(Quantity::Entropy, r, T);
    const auto p = sweep_symmetric(Quantity::Epr, r, T);
    const auto f = sweep_symmetric(Quantity::Fidelity, r, T);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      if (!c.values[i].enhanced()) continue;
      ++inside;
      CHECK(e.values[i].enhanced());
      CHECK(p.values[i].enhanced());
      CHECK(f.values[i].enhanced());
    }
    CHECK(inside > 0);
    // Small squeezing with low symmetric transmission sits in the common region.
    const QuantityEvaluator common(Quantity::Common, Engine::Reference);
    CHECK(common.at(make_params(0.2, 0.2, 0.2)).enhanced());
    CHECK_FALSE(common.at(make_params(0.9, 0.2, 0.2)).enhanced());
  }

  TEST_CASE("boundary segments outline the lobe") {
    const auto g = sweep_symmetric(Quantity::Entropy, linspace(0.05, 0.9, 30), linspace(0.01, 0.5, 30));
    const auto segs = g.boundary_segments();
    CHECK_FALSE(segs.empty());
    for (const auto &s : segs) {
      CHECK(s.x0 >= 0.01 - 1e-12);
      CHECK(s.x1 <= 0.5 + 1e-12);
      CHECK(s.y0 >= 0.05 - 1e-12);
      CHECK(s.y1 <= 0.9 + 1e-12);
    }
  }

  TEST_CASE("implication table shape") {
    const auto table = implication_table(60);
    for (const auto &pair : table) {
      CHECK(pair.antecedent != pair.consequent);
      INFO(std::string(quantity_name(pair.antecedent)), " => ", std::string(quantity_name(pair.consequent)));
      CHECK(pair.holds == !pair.witness.has_value());
      if (pair.witness) {
        CHECK(pair.witness_delta_a > kEnhancementGuard);
        CHECK(pair.witness_delta_b <= kEnhancementGuard);
      }
    }
  }
}
