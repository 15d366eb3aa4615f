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

#include "lqc/coefficient_tables.hpp"

#include <cmath>

// Integer monomial lists exactly as published. Exponents are powers of t_j,
// so "t1^2 t2^4" is {c, 2, 4}. Keep the term order of the printed tables so
// the lists stay diffable against the source.

namespace lqc::tables {
namespace {

// clang-format off
constexpr Monomial a0[] = {{1, 2, 2}};
constexpr Monomial a1[] = {{1, 0, 0}, {-4, 2, 0}, {4, 4, 0}, {-4, 0, 2}, {4, 0, 4}, {16, 2, 2},
                           {-16, 4, 2}, {-16, 2, 4}, {11, 4, 4}};
constexpr Monomial a2[] = {{11, 2, 2}, {-28, 4, 2}, {-28, 2, 4}, {64, 4, 4}, {16, 6, 2},
                           {16, 2, 6}, {-28, 4, 6}, {-28, 6, 4}, {11, 6, 6}};
constexpr Monomial a3[] = {{11, 4, 4}, {-16, 6, 4}, {-16, 4, 6}, {4, 8, 4}, {4, 4, 8},
                           {16, 6, 6}, {-4, 8, 6}, {-4, 6, 8}, {1, 8, 8}};
constexpr Monomial a4[] = {{1, 6, 6}};

constexpr Monomial x0[] = {{-2, 2, 4}, {2, 4, 4}};
constexpr Monomial x1[] = {{1, 0, 0}, {-4, 2, 0}, {4, 4, 0}, {-4, 0, 2}, {4, 0, 4}, {16, 2, 2}, {-16, 4, 2},
                           {-14, 2, 4}, {14, 4, 4}, {1, 2, 6}, {-2, 4, 6}, {1, 6, 6}};
constexpr Monomial x2[] = {{4, 2, 2}, {-12, 4, 2}, {8, 6, 2}, {-16, 2, 4}, {48, 4, 4},
                           {-32, 6, 4}, {14, 2, 6}, {-34, 4, 6}, {20, 6, 6}};
constexpr Monomial x3[] = {{22, 2, 2}, {-60, 4, 2}, {40, 6, 2}, {-56, 2, 4}, {146, 4, 4},
                           {-92, 6, 4}, {2, 8, 4}, {33, 2, 6}, {-92, 4, 6}, {61, 6, 6},
                           {-8, 8, 6}, {4, 4, 8}, {-8, 6, 8}, {4, 8, 8}};
constexpr Monomial x4[] = {{24, 4, 4}, {-52, 6, 4}, {28, 8, 4}, {-48, 4, 6}, {88, 6, 6},
                           {-40, 8, 6}, {20, 4, 8}, {-34, 6, 8}, {14, 8, 8}};
constexpr Monomial x5[] = {{40, 4, 4}, {-76, 6, 4}, {30, 8, 4}, {-76, 4, 6}, {140, 6, 6},
                           {-56, 8, 6}, {4, 10, 6}, {36, 4, 8}, {-58, 6, 8}, {26, 8, 8},
                           {-4, 10, 8}, {1, 6, 10}, {-2, 8, 10}, {1, 10, 10}};
constexpr Monomial x6[] = {{8, 6, 6}, {-8, 8, 6}, {-8, 6, 8}, {8, 8, 8}, {2, 6, 10}, {-2, 8, 10}};
constexpr Monomial x7[] = {{14, 6, 6}, {-16, 8, 6}, {4, 10, 6}, {-20, 6, 8}, {16, 8, 8},
                           {-4, 10, 8}, {5, 6, 10}, {-4, 8, 10}, {1, 10, 10}};
constexpr Monomial x9[] = {{1, 8, 8}};

constexpr Monomial y0[] = {{-2, 4, 2}, {2, 4, 4}};
constexpr Monomial y1[] = {{1, 0, 0}, {-4, 2, 0}, {4, 4, 0}, {-4, 0, 2}, {4, 0, 4}, {16, 2, 2}, {-16, 2, 4},
                           {-14, 4, 2}, {14, 4, 4}, {1, 6, 2}, {-2, 6, 4}, {1, 6, 6}};
constexpr Monomial y2[] = {{4, 2, 2}, {-16, 4, 2}, {14, 6, 2}, {-12, 2, 4}, {48, 4, 4},
                           {-34, 6, 4}, {8, 2, 6}, {-32, 4, 6}, {20, 6, 6}};
constexpr Monomial y3[] = {{22, 2, 2}, {-56, 4, 2}, {33, 6, 2}, {-60, 2, 4}, {146, 4, 4},
                           {-92, 6, 4}, {4, 8, 4}, {40, 2, 6}, {-92, 4, 6}, {61, 6, 6},
                           {-8, 8, 6}, {2, 4, 8}, {-8, 6, 8}, {4, 8, 8}};
constexpr Monomial y4[] = {{24, 4, 4}, {-48, 6, 4}, {20, 8, 4}, {-52, 4, 6}, {88, 6, 6},
                           {-34, 8, 6}, {28, 4, 8}, {-40, 6, 8}, {14, 8, 8}};
constexpr Monomial y5[] = {{40, 4, 4}, {-76, 6, 4}, {36, 8, 4}, {-76, 4, 6}, {140, 6, 6},
                           {-58, 8, 6}, {1, 10, 6}, {30, 4, 8}, {-56, 6, 8}, {26, 8, 8},
                           {-2, 10, 8}, {4, 6, 10}, {-4, 8, 10}, {1, 10, 10}};
constexpr Monomial y6[] = {{8, 6, 6}, {-8, 8, 6}, {-8, 6, 8}, {8, 8, 8}, {2, 10, 6}, {-2, 10, 8}};
constexpr Monomial y7[] = {{14, 6, 6}, {-20, 8, 6}, {5, 10, 6}, {-16, 6, 8}, {16, 8, 8},
                           {-4, 10, 8}, {4, 6, 10}, {-4, 8, 10}, {1, 10, 10}};
constexpr Monomial y9[] = {{1, 8, 8}};

constexpr Monomial z0[] = {{1, 0, 0}, {-2, 2, 0}, {-2, 0, 2}, {4, 2, 2}};
constexpr Monomial z1[] = {{-1, 2, 0}, {2, 4, 0}, {-1, 0, 2}, {2, 0, 4}, {6, 2, 2}, {-8, 4, 2},
                           {-8, 2, 4}, {8, 4, 4}};
constexpr Monomial z2[] = {{8, 0, 0}, {-27, 2, 0}, {22, 4, 0}, {-27, 0, 2}, {22, 0, 4}, {87, 2, 2},
                           {-67, 4, 2}, {2, 6, 2}, {-67, 2, 4}, {49, 4, 4}, {-6, 6, 4},
                           {2, 2, 6}, {-6, 4, 6}, {4, 6, 6}};
constexpr Monomial z3[] = {{14, 2, 2}, {-37, 4, 2}, {22, 6, 2}, {-37, 2, 4}, {92, 4, 4},
                           {-50, 6, 4}, {22, 2, 6}, {-50, 4, 6}, {24, 6, 6}};
constexpr Monomial z4[] = {{45, 2, 2}, {-98, 4, 2}, {48, 6, 2}, {-98, 2, 4}, {197, 4, 4},
                           {-90, 6, 4}, {4, 8, 4}, {48, 2, 6}, {-90, 4, 6}, {46, 6, 6},
                           {-6, 8, 6}, {4, 4, 8}, {-6, 6, 8}, {2, 8, 8}};
constexpr Monomial z5[] = {{20, 4, 4}, {-33, 6, 4}, {12, 8, 4}, {-33, 4, 6}, {46, 6, 6},
                           {-14, 8, 6}, {12, 4, 8}, {-14, 6, 8}, {4, 8, 8}};
constexpr Monomial z6[] = {{24, 4, 4}, {-31, 6, 4}, {8, 8, 4}, {-31, 4, 6}, {33, 6, 6},
                           {-9, 8, 6}, {8, 4, 8}, {-9, 6, 8}, {3, 8, 8}};
constexpr Monomial z7[] = {{2, 6, 6}, {-1, 8, 6}, {-1, 6, 8}};
constexpr Monomial z8[] = {{1, 6, 6}};

constexpr Monomial m0[] = {{2, 2, 2}};
constexpr Monomial m1[] = {{2, 1, 1}, {-4, 3, 1}, {-4, 1, 3}, {-2, 3, 3}};
constexpr Monomial m2[] = {{1, 0, 0}, {-4, 2, 0}, {4, 4, 0}, {-4, 0, 2}, {4, 0, 4}, {10, 2, 2},
                           {-2, 4, 2}, {-2, 2, 4}, {5, 4, 4}};
constexpr Monomial m3[] = {{1, 1, 1}, {-1, 3, 1}, {-2, 5, 1}, {-1, 1, 3}, {-2, 1, 5},
                           {-2, 3, 3}, {1, 5, 3}, {1, 3, 5}, {-3, 5, 5}};
constexpr Monomial m4[] = {{1, 2, 2}, {-1, 4, 2}, {1, 6, 2}, {-1, 2, 4}, {1, 2, 6},
                           {2, 4, 4}, {-1, 6, 4}, {-1, 4, 6}, {1, 6, 6}};
// clang-format on

const std::array<Polynomial, 5> kSuccessA = {a0, a1, a2, a3, a4};
const std::array<Polynomial, 10> kMomentX = {x0, x1, x2, x3, x4, x5, x6, x7, Polynomial{}, x9};
const std::array<Polynomial, 10> kMomentY = {y0, y1, y2, y3, y4, y5, y6, y7, Polynomial{}, y9};
const std::array<Polynomial, 9> kMomentZ = {z0, z1, z2, z3, z4, z5, z6, z7, z8};
const std::array<Polynomial, 5> kFidelityM = {m0, m1, m2, m3, m4};

}  // namespace

long double evaluate_extended(Polynomial poly, long double t1, long double t2) {
  long double sum = 0.0L;
  for (const Monomial &m : poly) {
    sum += m.coeff * std::pow(t1, m.e1) * std::pow(t2, m.e2);
  }
  return sum;
}

double evaluate(Polynomial poly, double t1, double t2) {
  return static_cast<double>(evaluate_extended(poly, t1, t2));
}

std::span<const Polynomial> success_a() { return kSuccessA; }
std::span<const Polynomial> moment_x() { return kMomentX; }
std::span<const Polynomial> moment_y() { return kMomentY; }
std::span<const Polynomial> moment_z() { return kMomentZ; }
std::span<const Polynomial> fidelity_m() { return kFidelityM; }

}  // namespace lqc::tables
