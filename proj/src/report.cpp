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

#include "lqc/report.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "lqc/closed_form.hpp"
#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"

namespace lqc {

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::ClosedForm:
      return "closed_form";
    case Engine::Oracle:
      return "oracle";
    case Engine::Reference:
      return "reference";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "closed_form") return Engine::ClosedForm;
  if (name == "oracle") return Engine::Oracle;
  if (name == "reference") return Engine::Reference;
  return std::nullopt;
}

EngineState engine_state(const CatalysisParams &params, Engine engine, const EvalOptions &options) {
  std::optional<int> N = options.truncation;
  if (N) {
    const int minimum = choose_truncation(params);
    if (*N < minimum) {
      throw ValidationError("truncation", "N = " + std::to_string(*N) +
                                              " is below the adaptive truncation " + std::to_string(minimum));
    }
  }
  if (engine == Engine::Oracle) {
    // Same adaptive N as the closed-form path, so the tail bound holds after
    // normalization by p_cd rather than only on the raw weights.
    OracleResult res = catalyze_oracle(params, N ? *N : schmidt_spectrum(params).truncation());
    return {std::move(res.spectrum), res.p_cd};
  }
  const double p_cd = success_probability(params);
  if (!N) return {schmidt_spectrum(params), p_cd};
  std::vector<double> raw(static_cast<std::size_t>(*N) + 1);
  double norm2 = 0.0;
  for (int n = 0; n <= *N; ++n) {
    raw[n] = schmidt_coefficient_unnormalized(params, n);
    norm2 += raw[n] * raw[n];
  }
  const double tail = norm2 > 0.0 ? truncation_tail_bound(params, *N) / norm2 : 0.0;
  return {SchmidtSpectrum::from_unnormalized(std::move(raw), tail), p_cd};
}

QuantityValues evaluate_quantities(const CatalysisParams &params, Engine engine,
                                   bool with_fidelity, const EvalOptions &options) {
  const EngineState st = engine_state(params, engine, options);
  QuantityValues v;
  v.p_cd = st.p_cd;
  v.entropy = entropy_of(st.spectrum);
  v.epr = engine == Engine::ClosedForm ? epr_closed(params) : epr_of(st.spectrum);
  if (with_fidelity) {
    v.fidelity = engine == Engine::ClosedForm ? fidelity_printed(params)
                                              : cf_fidelity_oracle(st.spectrum, options.quad_points);
  }
  return v;
}

namespace {

struct Measures {
  double p_cd = 0.0;
  double entropy = 0.0;
  double epr = 0.0;
  double fidelity = 0.0;
  double fidelity_oracle = 0.0;
  bool flagged = false;
  int truncation = 0;
};

Measures measures(const CatalysisParams &params, Engine engine, const EvalOptions &options) {
  EngineState st = engine_state(params, engine, options);
  Measures m;
  m.p_cd = st.p_cd;
  m.entropy = entropy_of(st.spectrum);
  m.truncation = st.spectrum.truncation();
  m.fidelity_oracle = cf_fidelity_oracle(st.spectrum, options.quad_points);
  if (engine == Engine::ClosedForm) {
    m.epr = epr_closed(params);
    m.fidelity = fidelity_printed(params);
    m.flagged = std::abs(m.fidelity - m.fidelity_oracle) > kFidelityFlagTolerance;
  } else {
    m.epr = epr_of(st.spectrum);
    m.fidelity = m.fidelity_oracle;
  }
  return m;
}

}  // namespace

MeasureReport report(const CatalysisParams &params, Engine engine, const EvalOptions &options) {
  const Measures cur = measures(params, engine, options);
  // The baseline keeps its own adaptive truncation: an override chosen for
  // the catalysed point need not cover the TMSVS tail.
  const Measures base = measures(make_params(params.r(), 1.0, 1.0), engine,
                                 EvalOptions{.truncation = std::nullopt, .quad_points = options.quad_points});

  MeasureReport rep{.params = params};
  rep.engine = engine;
  rep.p_cd = cur.p_cd;
  rep.entropy = cur.entropy;
  rep.epr = cur.epr;
  rep.fidelity = cur.fidelity;
  rep.baseline_entropy = base.entropy;
  rep.baseline_epr = base.epr;
  rep.baseline_fidelity = base.fidelity;
  rep.delta_entropy = cur.entropy - base.entropy;
  rep.delta_epr = base.epr - cur.epr;
  rep.delta_fidelity = cur.fidelity - base.fidelity;
  rep.entropy_enhanced = is_enhanced(rep.delta_entropy);
  rep.epr_enhanced = is_enhanced(rep.delta_epr);
  rep.fidelity_enhanced = is_enhanced(rep.delta_fidelity);
  rep.fidelity_flagged = cur.flagged;
  rep.fidelity_oracle = cur.fidelity_oracle;
  rep.truncation = cur.truncation;
  return rep;
}

}  // namespace lqc
