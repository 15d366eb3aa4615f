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

#include "lqc/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "lqc/cli/format.hpp"
#include "lqc/closed_form.hpp"
#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"
#include "lqc/parallel.hpp"

namespace lqc::cli {
namespace {

std::string point(const CatalysisParams &p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(r=%.6g, T1=%.6g, T2=%.6g)", p.r(), p.T1(), p.T2());
  return buf;
}

// Tracks the worst error of one check across points.
class Check {
 public:
  Check(std::string name, double tol, CheckStatus on_failure = CheckStatus::Fail)
      : on_failure_(on_failure) {
    res_.name = std::move(name);
    res_.tolerance = tol;
  }

  // A NaN error sticks: it is reported as the worst case and fails the check.
  void observe(double err, const std::string &where) {
    ++res_.points;
    if (std::isnan(res_.worst)) return;
    if (std::isnan(err) || res_.detail.empty() || err > res_.worst) {
      res_.worst = err;
      res_.detail = where;
    }
  }

  CheckResult finish() {
    const bool ok = !std::isnan(res_.worst) && res_.worst <= res_.tolerance;
    res_.status = ok ? CheckStatus::Pass : on_failure_;
    return res_;
  }

 private:
  CheckResult res_;
  CheckStatus on_failure_;
};

std::vector<CatalysisParams> build_grid(const std::string &grid) {
  std::vector<double> axis;
  if (grid == "coarse") {
    axis = {0.1, 0.5, 0.9};
  } else if (grid == "standard") {
    axis = {0.1, 0.3, 0.5, 0.7, 0.9};
  } else {
    throw ValidationError("grid", "expected 'coarse' or 'standard', got '" + grid + "'");
  }
  std::vector<CatalysisParams> pts;
  for (double r : axis) {
    for (double T1 : axis) {
      for (double T2 : axis) pts.push_back(make_params(r, T1, T2));
    }
  }
  return pts;
}

struct GridSample {
  double spectrum_err = 0.0;
  double pcd_rel = 0.0;
  double epr_closed = 0.0;
  double epr_oracle = 0.0;
  double fid_printed = 0.0;
  double fid_oracle = 0.0;
  double fid_engines = 0.0;
  double swap_err = 0.0;
  double duality_err = 0.0;
};

GridSample sample(const CatalysisParams &p) {
  GridSample s;
  const OracleResult oracle = catalyze_oracle(p, choose_truncation(p));
  const SchmidtSpectrum closed = schmidt_spectrum(p);
  for (int n = 0; n <= 10; ++n) {
    s.spectrum_err = std::max(s.spectrum_err, std::abs(schmidt_coefficient(p, n) - oracle.spectrum[n]));
  }
  const double pcd = success_probability(p);
  s.pcd_rel = std::abs(pcd - oracle.p_cd) / oracle.p_cd;
  s.epr_closed = epr_closed(p);
  s.epr_oracle = epr_of(oracle.spectrum);
  s.fid_printed = fidelity_printed(p);
  s.fid_oracle = cf_fidelity_oracle(oracle.spectrum);
  s.fid_engines = std::abs(cf_fidelity_oracle(closed) - s.fid_oracle);

  const CatalysisParams q = p.swapped();
  const SchmidtSpectrum sq = schmidt_spectrum(q);
  s.swap_err = std::max({std::abs(entropy_of(sq) - entropy_of(closed)), std::abs(epr_of(sq) - epr_of(closed)),
                         std::abs(cf_fidelity_oracle(sq) - cf_fidelity_oracle(closed))});
  s.duality_err = std::abs(epr_moments_closed(p).a_dag_a - epr_moments_closed(q).b_dag_b);
  return s;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.status == CheckStatus::Fail; });
}

std::string VerifyReport::text() const {
  std::string out;
  std::size_t warnings = 0;
  std::size_t failures = 0;
  for (const CheckResult &c : checks) {
    const char *tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Warn ? "WARNING" : "FAIL";
    if (c.status == CheckStatus::Warn) ++warnings;
    if (c.status == CheckStatus::Fail) ++failures;
    std::string name = c.name;
    name.resize(std::max<std::size_t>(name.size(), 44), ' ');
    char nums[96];
    std::snprintf(nums, sizeof nums, " worst=%.3e tol=%.0e points=%zu", c.worst, c.tolerance, c.points);
    out += std::string(tag) + std::string(8 - std::string(tag).size(), ' ') + name + nums + "\n";
    if (c.status != CheckStatus::Pass) out += "        at " + c.detail + "\n";
  }
  out += "summary: " + std::to_string(checks.size()) + " checks, " + std::to_string(failures) + " failed, " +
         std::to_string(warnings) + " warnings\n";
  out += passed() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

VerifyReport run_verify(const std::string &grid, bool strict) {
  const std::vector<CatalysisParams> pts = build_grid(grid);
  std::vector<GridSample> samples(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { samples[i] = sample(pts[i]); });

  const CheckStatus known = strict ? CheckStatus::Fail : CheckStatus::Warn;
  Check spectrum("spectrum closed vs oracle (n<=10)", 1e-10);
  Check pcd("p_cd closed vs oracle (relative)", 1e-10);
  Check epr("epr_closed vs epr_of(oracle)", 1e-9, known);
  Check fid("fidelity printed vs CF oracle", kFidelityFlagTolerance, known);
  Check engines("CF fidelity closed vs oracle spectrum", 1e-9);
  Check swap("T1<->T2 symmetry of measures", 1e-10);
  Check duality("moment tables x/y mode-swap duality", 1e-10);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const GridSample &s = samples[i];
    const std::string where = point(pts[i]);
    spectrum.observe(s.spectrum_err, where);
    pcd.observe(s.pcd_rel, where);
    epr.observe(std::abs(s.epr_closed - s.epr_oracle),
                where + " closed=" + format_double(s.epr_closed) + " oracle=" + format_double(s.epr_oracle));
    fid.observe(std::abs(s.fid_printed - s.fid_oracle),
                where + " printed=" + format_double(s.fid_printed) + " oracle=" + format_double(s.fid_oracle));
    engines.observe(s.fid_engines, where);
    swap.observe(s.swap_err, where);
    duality.observe(s.duality_err, where);
  }

  // Full transmission: catalysis is the identity.
  Check id_pcd("T=1: p_cd = 1", 1e-12);
  Check id_entropy("T=1: entropy = TMSVS entropy", 1e-10);
  Check id_epr_closed("T=1: epr_closed = 2 exp(-2r)", 1e-10);
  Check id_epr("T=1: epr_of = 2 exp(-2r)", 1e-10);
  Check id_fid("T=1: CF fidelity = (1 + tanh r)/2", 1e-8);
  for (int i = 0; i <= 8; ++i) {
    const double r = 0.25 * i;
    const CatalysisParams p = make_params(r, 1.0, 1.0);
    const SchmidtSpectrum sp = schmidt_spectrum(p);
    const std::string where = point(p);
    id_pcd.observe(std::abs(success_probability(p) - 1.0), where);
    id_entropy.observe(std::abs(entropy_of(sp) - tmsvs_entropy(r)), where);
    id_epr_closed.observe(std::abs(epr_closed(p) - tmsvs_epr(r)), where);
    id_epr.observe(std::abs(epr_of(sp) - tmsvs_epr(r)), where);
    id_fid.observe(std::abs(cf_fidelity_oracle(sp) - tmsvs_fidelity(r)), where);
  }

  // A transmittance of zero leaves the twin single-photon state |1,1>.
  Check fock_w("T1=0: spectrum is |1,1>", 1e-12);
  Check fock_measures("T1=0: E=0, EPR=6, F=1/4", 1e-12);
  Check fock_pcd("T1=0: p_cd = (1-2T2)^2 tanh^2 r / cosh^2 r", 1e-12);
  for (double r : {0.25, 0.5, 1.0}) {
    for (double T2 : {0.3, 0.7}) {
      const CatalysisParams p = make_params(r, 0.0, T2);
      const std::string where = point(p);
      const OracleResult o = catalyze_oracle(p, choose_truncation(p));
      const SchmidtSpectrum c = schmidt_spectrum(p);
      double werr = 0.0;
      for (const SchmidtSpectrum *sp : {&o.spectrum, &c}) {
        for (std::size_t n = 0; n < sp->size(); ++n) {
          werr = std::max(werr, std::abs(std::abs((*sp)[n]) - (n == 1 ? 1.0 : 0.0)));
        }
      }
      fock_w.observe(werr, where);
      fock_measures.observe(std::max({std::abs(entropy_of(c)), std::abs(epr_of(c) - 6.0),
                                      std::abs(cf_fidelity_oracle(c) - 0.25)}),
                            where);
      const double expect = std::pow((1 - 2 * T2) * std::tanh(r) / std::cosh(r), 2);
      fock_pcd.observe(std::max(std::abs(success_probability(p) - expect), std::abs(o.p_cd - expect)), where);
    }
  }

  VerifyReport rep;
  for (Check *c : {&spectrum, &pcd, &engines, &swap, &duality, &id_pcd, &id_entropy, &id_epr_closed, &id_epr,
                   &id_fid, &fock_w, &fock_measures, &fock_pcd, &epr, &fid}) {
    rep.checks.push_back(c->finish());
  }
  return rep;
}

}  // namespace lqc::cli
