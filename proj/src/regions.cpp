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

#include "lqc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lqc/errors.hpp"
#include "lqc/parallel.hpp"

namespace lqc {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool needs_fidelity(Quantity q) { return q == Quantity::Fidelity || q == Quantity::Common; }

void check_axis(const std::vector<double> &axis, const char *field, double lo, double hi) {
  if (axis.empty()) throw ValidationError(field, "axis must not be empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double v = axis[i];
    if (!std::isfinite(v) || v < lo || v > hi) {
      throw ValidationError(field, "value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                                       ", " + std::to_string(hi) + "]");
    }
    if (i > 0 && !(v > axis[i - 1])) throw ValidationError(field, "axis must be strictly increasing");
  }
}

std::vector<QuantityValues> baselines_for(const QuantityEvaluator &eval, const std::vector<double> &rs) {
  std::vector<QuantityValues> out(rs.size());
  parallel_for(rs.size(), [&](std::size_t i) { out[i] = eval.baselines(rs[i]); });
  return out;
}

// Delta with NaN mapped below every finite value, for maximization.
double rank(double delta) { return std::isnan(delta) ? -std::numeric_limits<double>::infinity() : delta; }

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Entropy:
      return "entropy";
    case Quantity::Epr:
      return "epr";
    case Quantity::Fidelity:
      return "fidelity";
    case Quantity::Pcd:
      return "pcd";
    case Quantity::Common:
      return "common";
  }
  return "unknown";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::Entropy, Quantity::Epr, Quantity::Fidelity, Quantity::Pcd, Quantity::Common}) {
    if (quantity_name(q) == name) return q;
  }
  return std::nullopt;
}

QuantityValues QuantityEvaluator::baselines(double r) const {
  return evaluate_quantities(make_params(r, 1.0, 1.0), engine_, needs_fidelity(quantity_));
}

PointValue QuantityEvaluator::at(const CatalysisParams &params, const QuantityValues &base) const {
  QuantityValues v;
  try {
    v = evaluate_quantities(params, engine_, needs_fidelity(quantity_));
  } catch (const DegeneratePostselectionError &) {
    return {kNaN, kNaN, kNaN};
  }
  switch (quantity_) {
    case Quantity::Entropy:
      return {v.entropy, base.entropy, v.entropy - base.entropy};
    case Quantity::Epr:
      return {v.epr, base.epr, base.epr - v.epr};
    case Quantity::Fidelity:
      return {v.fidelity, base.fidelity, v.fidelity - base.fidelity};
    case Quantity::Pcd:
      return {v.p_cd, base.p_cd, v.p_cd - base.p_cd};
    case Quantity::Common: {
      const double d = std::min({v.entropy - base.entropy, base.epr - v.epr, v.fidelity - base.fidelity});
      return {d, 0.0, d};
    }
  }
  return {kNaN, kNaN, kNaN};
}

std::size_t RegionGrid::index(std::size_t ir, std::size_t i1, std::size_t i2) const {
  const std::size_t n2 = symmetric() ? 1 : axis_T2.size();
  return (ir * axis_T1.size() + i1) * n2 + i2;
}

std::size_t RegionGrid::enhanced_count() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const PointValue &p) { return p.enhanced(); }));
}

std::vector<Segment> RegionGrid::boundary_segments(std::size_t ir) const {
  const std::vector<double> &xs = axis_T1;
  const std::vector<double> &ys = symmetric() ? axis_r : axis_T2;
  auto field = [&](std::size_t ix, std::size_t iy) {
    const double d = symmetric() ? at(iy, ix).delta : at(ir, ix, iy).delta;
    return std::isnan(d) ? -1.0 : d - kEnhancementGuard;
  };

  std::vector<Segment> out;
  if (xs.size() < 2 || ys.size() < 2) return out;
  for (std::size_t iy = 0; iy + 1 < ys.size(); ++iy) {
    for (std::size_t ix = 0; ix + 1 < xs.size(); ++ix) {
      const double cx[4] = {xs[ix], xs[ix + 1], xs[ix + 1], xs[ix]};
      const double cy[4] = {ys[iy], ys[iy], ys[iy + 1], ys[iy + 1]};
      const double f[4] = {field(ix, iy), field(ix + 1, iy), field(ix + 1, iy + 1), field(ix, iy + 1)};
      double px[4], py[4];
      int hits = 0;
      for (int e = 0; e < 4; ++e) {
        const int a = e;
        const int b = (e + 1) % 4;
        if ((f[a] > 0) == (f[b] > 0)) continue;
        const double w = f[a] / (f[a] - f[b]);
        px[hits] = cx[a] + w * (cx[b] - cx[a]);
        py[hits] = cy[a] + w * (cy[b] - cy[a]);
        ++hits;
      }
      if (hits == 2) {
        out.push_back({px[0], py[0], px[1], py[1]});
      } else if (hits == 4) {
        // Saddle: resolve by the sign of the cell average.
        const bool center = (f[0] + f[1] + f[2] + f[3]) > 0;
        const bool corner0 = f[0] > 0;
        if (center == corner0) {
          out.push_back({px[0], py[0], px[1], py[1]});
          out.push_back({px[2], py[2], px[3], py[3]});
        } else {
          out.push_back({px[0], py[0], px[3], py[3]});
          out.push_back({px[1], py[1], px[2], py[2]});
        }
      }
    }
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

static RegionGrid sweep_impl(Quantity quantity, std::vector<double> r_values, std::vector<double> T1_values,
                             std::vector<double> T2_values, Engine engine, std::size_t cap, bool symmetric) {
  check_axis(r_values, "r", 0.0, std::numeric_limits<double>::max());
  check_axis(T1_values, symmetric ? "T" : "T1", 0.0, 1.0);
  if (!symmetric) check_axis(T2_values, "T2", 0.0, 1.0);

  const std::size_t n2 = symmetric ? 1 : T2_values.size();
  const double total = static_cast<double>(r_values.size()) * static_cast<double>(T1_values.size()) * n2;
  if (total > static_cast<double>(cap)) {
    throw ValidationError("grid", "grid has " + std::to_string(static_cast<long long>(total)) +
                                      " points, above the cap of " + std::to_string(cap));
  }

  RegionGrid grid;
  grid.quantity = quantity;
  grid.engine = engine;
  grid.axis_r = std::move(r_values);
  grid.axis_T1 = std::move(T1_values);
  if (!symmetric) grid.axis_T2 = std::move(T2_values);
  grid.values.resize(static_cast<std::size_t>(total));

  const QuantityEvaluator eval(quantity, engine);
  const std::vector<QuantityValues> base = baselines_for(eval, grid.axis_r);
  const std::size_t per_r = grid.axis_T1.size() * n2;
  parallel_for(grid.values.size(), [&](std::size_t idx) {
    const std::size_t ir = idx / per_r;
    const std::size_t rem = idx % per_r;
    const double T1 = grid.axis_T1[rem / n2];
    const double T2 = symmetric ? T1 : grid.axis_T2[rem % n2];
    grid.values[idx] = eval.at(make_params(grid.axis_r[ir], T1, T2), base[ir]);
  });
  return grid;
}

RegionGrid sweep(Quantity quantity, std::vector<double> r_values, std::vector<double> T1_values,
                 std::vector<double> T2_values, Engine engine, std::size_t cap) {
  return sweep_impl(quantity, std::move(r_values), std::move(T1_values), std::move(T2_values), engine, cap, false);
}

RegionGrid sweep_symmetric(Quantity quantity, std::vector<double> r_values, std::vector<double> T_values,
                           Engine engine, std::size_t cap) {
  return sweep_impl(quantity, std::move(r_values), std::move(T_values), {}, engine, cap, true);
}

namespace {

std::vector<double> t_scan_axis() {
  const auto n = static_cast<std::size_t>(std::lround(1.0 / kTScanStep)) - 1;
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = kTScanStep * static_cast<double>(i + 1);
  return ts;
}

std::vector<double> scan_deltas(const QuantityEvaluator &eval, double r, const QuantityValues &base,
                                const std::vector<double> &ts) {
  std::vector<double> d(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { d[i] = eval.at(make_params(r, ts[i], ts[i]), base).delta; });
  return d;
}

// Locates delta = guard between a (enhanced == a_in) and b by bisection.
double bisect_edge(const QuantityEvaluator &eval, double r, const QuantityValues &base, double a, double b,
                   bool a_in, double tol) {
  while (std::abs(b - a) > tol) {
    const double m = 0.5 * (a + b);
    const bool in = is_enhanced(eval.at(make_params(r, m, m), base).delta);
    if (in == a_in) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

BestT best_symmetric_t(const QuantityEvaluator &eval, double r) {
  const QuantityValues base = eval.baselines(r);
  const std::vector<double> ts = t_scan_axis();
  const std::vector<double> d = scan_deltas(eval, r, base, ts);
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (rank(d[i]) > rank(d[best])) best = i;
  }

  // Golden-section maximization on the two cells around the best sample.
  auto f = [&](double T) { return rank(eval.at(make_params(r, T, T), base).delta); };
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(ts[best] - kTScanStep, 0.0);
  double b = std::min(ts[best] + kTScanStep, 1.0);
  double c = b - invphi * (b - a);
  double e = a + invphi * (b - a);
  double fc = f(c);
  double fe = f(e);
  for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + invphi * (b - a);
      fe = f(e);
    }
  }
  BestT out{ts[best], rank(d[best])};
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  if (fm > out.delta) out = {mid, fm};
  return out;
}

std::vector<Interval> t_range(Quantity quantity, double r, double tol, Engine engine) {
  if (!(tol > 0.0)) throw ValidationError("tol", "tolerance must be positive");
  if (!(r >= 0.0) || !std::isfinite(r)) throw ValidationError("r", "squeezing must be finite and >= 0");
  const QuantityEvaluator eval(quantity, engine);
  const QuantityValues base = eval.baselines(r);

  // Scan includes both ends of [0, 1] so intervals touching them are closed off.
  std::vector<double> ts = t_scan_axis();
  ts.insert(ts.begin(), 0.0);
  ts.push_back(1.0);
  const std::vector<double> d = scan_deltas(eval, r, base, ts);

  std::vector<Interval> out;
  std::optional<double> open;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const bool in = is_enhanced(d[i]);
    if (in && !open) {
      open = i == 0 ? 0.0 : bisect_edge(eval, r, base, ts[i - 1], ts[i], false, tol);
    } else if (!in && open) {
      out.push_back({*open, bisect_edge(eval, r, base, ts[i - 1], ts[i], true, tol)});
      open.reset();
    }
  }
  if (open) out.push_back({*open, 1.0});
  return out;
}

ThresholdResult threshold(Quantity quantity, double tol, Engine engine) {
  if (!(tol > 0.0)) throw ValidationError("tol", "tolerance must be positive");
  const QuantityEvaluator eval(quantity, engine);
  auto pred = [&](double r) { return is_enhanced(best_symmetric_t(eval, r).delta); };

  double lo = kRSearchLo;
  double hi = kRSearchHi;
  if (!pred(lo)) {
    throw ConvergenceError("no enhancement anywhere: " + std::string(quantity_name(quantity)) +
                           " is not enhanced for any T at r = " + std::to_string(lo));
  }
  if (pred(hi)) {
    throw ConvergenceError(std::string(quantity_name(quantity)) + " is still enhanced at r = " +
                           std::to_string(hi));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  ThresholdResult res;
  res.quantity = quantity;
  res.engine = engine;
  res.r_lo = lo;
  res.r_hi = hi;
  res.r_star = 0.5 * (lo + hi);
  res.tol = tol;
  for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}) {
    if (r < lo) res.t_range_examples.push_back({r, t_range(quantity, r, 1e-6, engine)});
  }
  return res;
}

TExtent t_extent(Quantity quantity, double r_max, double r_step, Engine engine, double tol) {
  if (!(r_step > 0.0)) throw ValidationError("r_step", "step must be positive");
  if (!(r_max > 0.0)) throw ValidationError("r_max", "must be positive");
  const auto n = static_cast<std::size_t>(std::floor(r_max / r_step + 1e-9));
  std::vector<std::vector<Interval>> ranges(n);
  parallel_for(n, [&](std::size_t i) {
    ranges[i] = t_range(quantity, r_step * static_cast<double>(i + 1), tol, engine);
  });

  TExtent ext{1.0, 0.0, 0.0};
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Interval &iv : ranges[i]) {
      any = true;
      ext.T_min = std::min(ext.T_min, iv.lo);
      if (iv.hi > ext.T_max) {
        ext.T_max = iv.hi;
        ext.r_at_T_max = r_step * static_cast<double>(i + 1);
      }
    }
  }
  if (!any) ext = {kNaN, kNaN, kNaN};
  return ext;
}

namespace {

struct TriDelta {
  double d[3];
};

std::vector<double> open_unit_axis(std::size_t n, double scale, bool include_end) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = include_end ? scale * static_cast<double>(i + 1) / static_cast<double>(n)
                         : scale * static_cast<double>(i + 1) / static_cast<double>(n + 1);
  }
  return out;
}

}  // namespace

std::array<ImplicationPair, 6> implication_table(std::size_t resolution, Engine engine) {
  if (resolution < 2) throw ValidationError("resolution", "must be at least 2");
  const std::vector<double> rs = open_unit_axis(resolution, 0.8, true);
  const std::vector<double> ts = open_unit_axis(resolution, 1.0, false);

  // One evaluation per point feeds all three quantities.
  std::vector<QuantityValues> base(rs.size());
  parallel_for(rs.size(), [&](std::size_t i) { base[i] = evaluate_quantities(make_params(rs[i], 1, 1), engine); });
  std::vector<TriDelta> deltas(rs.size() * ts.size());
  parallel_for(deltas.size(), [&](std::size_t idx) {
    const std::size_t ir = idx / ts.size();
    const double T = ts[idx % ts.size()];
    const QuantityValues &b = base[ir];
    try {
      const QuantityValues v = evaluate_quantities(make_params(rs[ir], T, T), engine);
      deltas[idx] = {{v.entropy - b.entropy, b.epr - v.epr, v.fidelity - b.fidelity}};
    } catch (const DegeneratePostselectionError &) {
      deltas[idx] = {{kNaN, kNaN, kNaN}};
    }
  });

  constexpr Quantity qs[3] = {Quantity::Entropy, Quantity::Epr, Quantity::Fidelity};
  std::array<ImplicationPair, 6> table;
  std::size_t slot = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      ImplicationPair &p = table[slot++];
      p.antecedent = qs[a];
      p.consequent = qs[b];
      double best_margin = -1.0;
      std::size_t best_idx = 0;
      for (std::size_t idx = 0; idx < deltas.size(); ++idx) {
        const double da = deltas[idx].d[a];
        const double db = deltas[idx].d[b];
        if (!is_enhanced(da)) continue;
        ++p.antecedent_points;
        if (is_enhanced(db)) continue;
        p.holds = false;
        const double margin = std::min(da, std::isnan(db) ? da : -db);
        if (margin > best_margin) {
          best_margin = margin;
          best_idx = idx;
        }
      }
      if (!p.holds) {
        const double T = ts[best_idx % ts.size()];
        p.witness = make_params(rs[best_idx / ts.size()], T, T);
        p.witness_delta_a = deltas[best_idx].d[a];
        p.witness_delta_b = deltas[best_idx].d[b];
      }
    }
  }
  return table;
}

RegionGrid common_region(std::size_t resolution, Engine engine) {
  if (resolution < 2) throw ValidationError("resolution", "must be at least 2");
  return sweep_symmetric(Quantity::Common, open_unit_axis(resolution, 0.8, true),
                         open_unit_axis(resolution, 1.0, false), engine);
}

}  // namespace lqc
