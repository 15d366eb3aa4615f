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

#include <optional>
#include <string>
#include <string_view>

#include "lqc/fock_oracle.hpp"
#include "lqc/params.hpp"
#include "lqc/spectrum.hpp"

namespace lqc {

/// How a point is evaluated.
///   ClosedForm: printed formulas (Schmidt weights, p_cd, moment tables, fidelity polynomial).
///   Oracle:     circuit simulation spectrum, epr_of, characteristic-function quadrature.
///   Reference:  closed-form Schmidt weights, epr_of, characteristic-function quadrature.
/// Reference is what region analysis uses. It avoids the printed moment and
/// fidelity tables, which do not agree with the spectrum.
enum class Engine { ClosedForm, Oracle, Reference };

std::string_view engine_name(Engine engine);
std::optional<Engine> parse_engine(std::string_view name);

/// Deltas closer to zero than this are never counted as enhancement.
inline constexpr double kEnhancementGuard = 1e-12;

struct MeasureReport {
  CatalysisParams params;
  Engine engine = Engine::ClosedForm;
  double p_cd = 0.0;
  double entropy = 0.0;
  double epr = 0.0;
  double fidelity = 0.0;
  double baseline_entropy = 0.0;
  double baseline_epr = 0.0;
  double baseline_fidelity = 0.0;
  /// entropy - baseline
  double delta_entropy = 0.0;
  /// baseline - epr (lower variance is better)
  double delta_epr = 0.0;
  /// fidelity - baseline
  double delta_fidelity = 0.0;
  bool entropy_enhanced = false;
  bool epr_enhanced = false;
  bool fidelity_enhanced = false;
  /// ClosedForm only: set when the printed fidelity polynomial disagrees with
  /// the quadrature oracle on the same spectrum by more than 1e-6.
  bool fidelity_flagged = false;
  double fidelity_oracle = 0.0;
  int truncation = 0;
};

/// Numerical knobs. A truncation override must not be below
/// choose_truncation(params); quad_points feeds cf_fidelity_oracle.
struct EvalOptions {
  std::optional<int> truncation;
  int quad_points = kDefaultQuadPoints;
};

/// Evaluates every measure at `params`. Baselines are the same engine at
/// (r, 1, 1), where catalysis is the identity, so deltas vanish at T1 = T2 = 1.
MeasureReport report(const CatalysisParams &params, Engine engine = Engine::ClosedForm,
                     const EvalOptions &options = {});

inline bool is_enhanced(double delta) { return delta > kEnhancementGuard; }

/// Spectrum and heralding probability as produced by `engine`.
struct EngineState {
  SchmidtSpectrum spectrum;
  double p_cd = 0.0;
};

EngineState engine_state(const CatalysisParams &params, Engine engine,
                         const EvalOptions &options = {});

/// Raw measures at one point without baselines. The fidelity is skipped
/// (left at 0) unless `with_fidelity` is set, since it dominates the cost.
struct QuantityValues {
  double p_cd = 0.0;
  double entropy = 0.0;
  double epr = 0.0;
  double fidelity = 0.0;
};

QuantityValues evaluate_quantities(const CatalysisParams &params, Engine engine,
                                   bool with_fidelity = true, const EvalOptions &options = {});

}  // namespace lqc
