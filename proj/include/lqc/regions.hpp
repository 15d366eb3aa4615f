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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lqc/report.hpp"

namespace lqc {

/// Common is the smallest of the entropy, EPR and fidelity deltas, so it is
/// positive exactly where all three are enhanced.
enum class Quantity { Entropy, Epr, Fidelity, Pcd, Common };

std::string_view quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

/// Value of one quantity at one point. `delta` is oriented so positive means
/// enhanced. Points where heralding is impossible carry NaN.
struct PointValue {
  double value = 0.0;
  double baseline = 0.0;
  double delta = 0.0;
  bool enhanced() const { return is_enhanced(delta); }
};

/// Evaluates one quantity, caching nothing. `baseline_at(r)` is the same
/// quantity at (r, 1, 1).
class QuantityEvaluator {
 public:
  QuantityEvaluator(Quantity quantity, Engine engine) : quantity_(quantity), engine_(engine) {}

  Quantity quantity() const { return quantity_; }
  Engine engine() const { return engine_; }

  /// Baselines for entropy, epr and fidelity at squeezing r.
  QuantityValues baselines(double r) const;
  PointValue at(const CatalysisParams &params, const QuantityValues &baselines) const;
  PointValue at(const CatalysisParams &params) const { return at(params, baselines(params.r())); }

 private:
  Quantity quantity_;
  Engine engine_;
};

inline constexpr std::size_t kDefaultGridCap = 10'000'000;

struct Segment {
  double x0, y0, x1, y1;
};

/// Sampled deltas over r x T1 x T2, or r x T in symmetric mode (T1 = T2 = T,
/// axis_T2 empty). Values are row-major with r outermost.
struct RegionGrid {
  Quantity quantity = Quantity::Entropy;
  Engine engine = Engine::Reference;
  std::vector<double> axis_r;
  std::vector<double> axis_T1;
  std::vector<double> axis_T2;
  std::vector<PointValue> values;

  bool symmetric() const { return axis_T2.empty(); }
  std::size_t index(std::size_t ir, std::size_t i1, std::size_t i2 = 0) const;
  const PointValue &at(std::size_t ir, std::size_t i1, std::size_t i2 = 0) const {
    return values[index(ir, i1, i2)];
  }
  std::size_t enhanced_count() const;

  /// Marching-squares segments of the enhancement boundary delta = guard on a
  /// two-dimensional slice. Symmetric grids use (x, y) = (T, r); otherwise
  /// the slice is (T1, T2) at axis_r[ir]. Crossings are linearly interpolated.
  std::vector<Segment> boundary_segments(std::size_t ir = 0) const;
};

RegionGrid sweep(Quantity quantity, std::vector<double> r_values, std::vector<double> T1_values,
                 std::vector<double> T2_values, Engine engine = Engine::Reference,
                 std::size_t cap = kDefaultGridCap);

RegionGrid sweep_symmetric(Quantity quantity, std::vector<double> r_values,
                           std::vector<double> T_values, Engine engine = Engine::Reference,
                           std::size_t cap = kDefaultGridCap);

/// n evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct Interval {
  double lo;
  double hi;
};

inline constexpr double kRSearchLo = 0.01;
inline constexpr double kRSearchHi = 2.0;
inline constexpr double kTScanStep = 1e-3;

/// Enhancing intervals of symmetric T at fixed r, endpoints bisected to tol.
std::vector<Interval> t_range(Quantity quantity, double r, double tol = 1e-6,
                              Engine engine = Engine::Reference);

/// Largest delta over symmetric T at fixed r: a dense scan with step
/// kTScanStep followed by golden-section refinement around the best cell.
struct BestT {
  double T = 0.0;
  double delta = 0.0;
};
BestT best_symmetric_t(const QuantityEvaluator &eval, double r);

struct ThresholdResult {
  Quantity quantity = Quantity::Entropy;
  Engine engine = Engine::Reference;
  double r_star = 0.0;
  /// Bisection bracket: enhancement found at r_lo, none at r_hi.
  double r_lo = 0.0;
  double r_hi = 0.0;
  double tol = 0.0;
  struct Example {
    double r;
    std::vector<Interval> intervals;
  };
  std::vector<Example> t_range_examples;
};

/// Largest r with an enhancing symmetric T, by bisection over
/// [kRSearchLo, kRSearchHi]. Throws ConvergenceError if the predicate is false
/// at kRSearchLo (no enhancement anywhere) or still true at kRSearchHi.
ThresholdResult threshold(Quantity quantity, double tol = 1e-3, Engine engine = Engine::Reference);

/// Extremes of the enhancing T intervals over r in (0, r_max], scanned with
/// step r_step.
struct TExtent {
  double T_min = 0.0;
  double T_max = 0.0;
  double r_at_T_max = 0.0;
};
TExtent t_extent(Quantity quantity, double r_max, double r_step = 0.005,
                 Engine engine = Engine::Reference, double tol = 1e-6);

struct ImplicationPair {
  Quantity antecedent;
  Quantity consequent;
  bool holds = true;
  /// Counterexample with the largest margin min(delta_A, -delta_B).
  std::optional<CatalysisParams> witness;
  double witness_delta_a = 0.0;
  double witness_delta_b = 0.0;
  std::size_t antecedent_points = 0;
};

/// For each ordered pair of {entropy, epr, fidelity}, whether enhancement of
/// the first implies enhancement of the second at every point of a
/// resolution x resolution symmetric grid over r in (0, 0.8], T in (0, 1).
std::array<ImplicationPair, 6> implication_table(std::size_t resolution = 400,
                                                 Engine engine = Engine::Reference);

/// Symmetric-mode grid of the Common quantity over r in (0, 0.8], T in (0, 1).
RegionGrid common_region(std::size_t resolution = 200, Engine engine = Engine::Reference);

}  // namespace lqc
