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
#include <complex>

#include "doctest.h"
#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"
#include "oracles.hpp"

using namespace lqc;

TEST_SUITE("displacement") {
  TEST_CASE("vacuum overlap") {
    for (double s : {0.0, 0.3, 2.0, 17.0}) CHECK(displacement_element(0, 0, s) == doctest::Approx(std::exp(-s / 2)));
  }

  TEST_CASE("one-photon diagonal is (1 - s) e^{-s/2}") {
    for (double s : {0.0, 0.5, 1.0, 3.0}) {
      CHECK(displacement_element(1, 1, s) == doctest::Approx((1.0 - s) * std::exp(-s / 2)).epsilon(1e-14));
    }
  }

  TEST_CASE("s = 0 is the identity") {
    for (int m = 0; m < 6; ++m) {
      for (int n = 0; n < 6; ++n) CHECK(displacement_element(m, n, 0.0) == (m == n ? 1.0 : 0.0));
    }
  }

  TEST_CASE("symmetric in m and n") {
    CHECK(displacement_element(3, 7, 1.3) == displacement_element(7, 3, 1.3));
  }

  TEST_CASE("magnitudes match the finite-sum formula in 50-digit arithmetic") {
    for (int m = 0; m <= 25; ++m) {
      for (int n = 0; n <= 25; ++n) {
        for (double s : {0.01, 0.7, 4.0, 12.0}) {
          const double ref = testing::displacement_magnitude_mp(m, n, s);
          INFO("m=", m, " n=", n, " s=", s);
          CHECK(std::abs(std::abs(displacement_element(m, n, s)) - ref) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("phases cancel in <m|D(z*)|n><m|D(z)|n> (60-level matrix exponential)") {
    const int levels = 60;
    for (std::complex<double> z : {std::complex<double>(0.4, 0.0), std::complex<double>(0.3, -0.8),
                                   std::complex<double>(-1.1, 0.6), std::complex<double>(0.0, 1.3)}) {
      const Eigen::MatrixXcd Dz = testing::displacement_matrix(z, levels);
      const Eigen::MatrixXcd Dzc = testing::displacement_matrix(std::conj(z), levels);
      const double s = std::norm(z);
      for (int m = 0; m <= 12; ++m) {
        for (int n = 0; n <= 12; ++n) {
          const std::complex<double> prod = Dzc(m, n) * Dz(m, n);
          const double R = displacement_element(m, n, s);
          INFO("z=", z.real(), "+", z.imag(), "i m=", m, " n=", n);
          CHECK(std::abs(prod.imag()) < 1e-12);
          CHECK(std::abs(prod.real() - R * R) < 1e-12);
          CHECK(std::abs(std::abs(Dz(m, n)) - std::abs(R)) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("large s does not underflow the whole band") {
    // e^{-s/2} alone underflows here, but phi_j near j = s/4 is O(1e-2).
    const double s = 1600.0;
    const double v = displacement_element(400, 400, s);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) <= 1.0);
    std::vector<double> band(1200);
    displacement_band(0, s, band);
    double peak = 0.0;
    for (double b : band) peak = std::max(peak, std::abs(b));
    CHECK(peak > 1e-3);
  }

  TEST_CASE("band agrees with single elements") {
    std::vector<double> band(30);
    displacement_band(4, 2.5, band);
    for (int j = 0; j < 30; ++j) CHECK(band[j] == doctest::Approx(displacement_element(j, j + 4, 2.5)).epsilon(1e-13));
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(displacement_element(-1, 0, 1.0), ValidationError);
    CHECK_THROWS_AS(displacement_element(0, 0, -1.0), ValidationError);
    CHECK_THROWS_AS(displacement_element(kMaxDisplacementOrder, 1, 1.0), ValidationError);
  }
}
