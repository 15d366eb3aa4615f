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

#include "lqc/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "lqc/cli/format.hpp"
#include "lqc/cli/verify.hpp"
#include "lqc/errors.hpp"
#include "lqc/regions.hpp"
#include "lqc/report.hpp"

namespace lqc::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes the whole payload at once so a failed run leaves no partial file.
void emit(const std::string &payload, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << payload;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

Engine engine_or_throw(const std::string &name) {
  if (auto e = parse_engine(name)) return *e;
  throw ValidationError("engine", "unknown engine '" + name + "' (closed_form, oracle, reference)");
}

Quantity quantity_or_throw(const std::string &name) {
  if (auto q = parse_quantity(name)) return *q;
  throw ValidationError("quantity", "unknown quantity '" + name + "' (entropy, epr, fidelity, pcd, common)");
}

std::string meta_line(const std::string &command, std::initializer_list<std::pair<const char *, std::string>> kv) {
  std::string m = "lqc " + std::string(kToolVersion) + " " + command;
  for (const auto &[k, v] : kv) m += std::string(" ") + k + "=" + v;
  return m;
}

// Shared --out / --no-meta flags.
struct OutputFlags {
  std::string path;
  bool no_meta = false;

  void attach(CLI::App *sub, bool with_meta) {
    sub->add_option("--out,-o", path, "Output file (default: stdout)");
    if (with_meta) sub->add_flag("--no-meta", no_meta, "Omit the leading metadata comment line");
  }
};

struct MeasureFlags {
  double r = 0.0;
  std::optional<double> T;
  std::optional<double> T1;
  std::optional<double> T2;
  std::string engine = "closed_form";
  std::string format = "text";
  std::optional<int> truncation;
  int quad_points = kDefaultQuadPoints;
  OutputFlags output;
};

int cmd_measure(const MeasureFlags &f, std::ostream &out) {
  double T1 = 0.0;
  double T2 = 0.0;
  if (f.T) {
    T1 = T2 = *f.T;
  } else if (f.T1 && f.T2) {
    T1 = *f.T1;
    T2 = *f.T2;
  } else {
    throw ValidationError("T", "give --t, or both --t1 and --t2");
  }
  if (f.format != "text" && f.format != "json") throw ValidationError("format", "expected text or json");
  if (f.quad_points < 1) throw ValidationError("quad_points", "need at least one node");
  const CatalysisParams params = make_params(f.r, T1, T2);
  const EvalOptions opts{.truncation = f.truncation, .quad_points = f.quad_points};

  if (f.engine == "both") {
    const MeasureReport cf = report(params, Engine::ClosedForm, opts);
    const MeasureReport orc = report(params, Engine::Oracle, opts);
    const double d_pcd = std::abs(cf.p_cd - orc.p_cd);
    const double d_entropy = std::abs(cf.entropy - orc.entropy);
    const double d_epr = std::abs(cf.epr - orc.epr);
    const double d_fid = std::abs(cf.fidelity - orc.fidelity);
    if (f.format == "json") {
      nlohmann::ordered_json j;
      j["closed_form"] = report_json(cf);
      j["oracle"] = report_json(orc);
      j["abs_diff"] = {{"p_cd", d_pcd}, {"entropy", d_entropy}, {"epr", d_epr}, {"fidelity", d_fid}};
      emit(dump(j), f.output.path, out);
    } else {
      std::string text = "[closed_form]\n" + report_text(cf) + "\n[oracle]\n" + report_text(orc) + "\n[abs_diff]\n";
      text += "p_cd                " + format_double(d_pcd) + "\n";
      text += "entropy             " + format_double(d_entropy) + "\n";
      text += "epr                 " + format_double(d_epr) + "\n";
      text += "fidelity            " + format_double(d_fid) + "\n";
      emit(text, f.output.path, out);
    }
    return kExitOk;
  }

  const MeasureReport rep = report(params, engine_or_throw(f.engine), opts);
  emit(f.format == "json" ? dump(report_json(rep)) : report_text(rep), f.output.path, out);
  return kExitOk;
}

struct SweepFlags {
  std::string quantity;
  std::string r = "0.5";
  std::string T;
  std::string T1;
  std::string T2;
  std::string engine = "reference";
  std::size_t cap = kDefaultGridCap;
  OutputFlags output;
};

int cmd_sweep(const SweepFlags &f, std::ostream &out) {
  const Quantity q = quantity_or_throw(f.quantity);
  const Engine e = engine_or_throw(f.engine);
  const std::vector<double> rs = parse_axis(f.r, "r");
  RegionGrid grid;
  if (!f.T.empty()) {
    grid = sweep_symmetric(q, rs, parse_axis(f.T, "T"), e, f.cap);
  } else {
    const std::string t1 = f.T1.empty() ? "0.01:0.99:99" : f.T1;
    const std::string t2 = f.T2.empty() ? "0.01:0.99:99" : f.T2;
    grid = sweep(q, rs, parse_axis(t1, "T1"), parse_axis(t2, "T2"), e, f.cap);
  }
  const std::string meta =
      f.output.no_meta ? "" : meta_line("sweep", {{"quantity", f.quantity}, {"engine", f.engine}, {"r", f.r},
                                                  {"t", f.T}, {"t1", f.T1}, {"t2", f.T2}});
  emit(sweep_csv(grid, meta), f.output.path, out);
  return kExitOk;
}

struct ThresholdFlags {
  std::string quantity;
  double tol = 1e-3;
  std::string engine = "reference";
  OutputFlags output;
};

int cmd_threshold(const ThresholdFlags &f, std::ostream &out) {
  const ThresholdResult res = threshold(quantity_or_throw(f.quantity), f.tol, engine_or_throw(f.engine));
  emit(dump(threshold_json(res)), f.output.path, out);
  return kExitOk;
}

struct RegionsFlags {
  std::string quantity = "common";
  std::size_t resolution = 200;
  double r_max = 0.8;
  std::optional<double> at_r;
  std::string engine = "reference";
  std::string boundary;
  OutputFlags output;
};

int cmd_regions(const RegionsFlags &f, std::ostream &out) {
  const Quantity q = quantity_or_throw(f.quantity);
  const Engine e = engine_or_throw(f.engine);
  if (f.resolution < 2) throw ValidationError("resolution", "must be at least 2");
  if (!(f.r_max > 0.0)) throw ValidationError("r_max", "must be positive");
  const std::size_t n = f.resolution;
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);

  RegionGrid grid;
  if (f.at_r) {
    grid = sweep(q, {*f.at_r}, ts, ts, e);
  } else {
    std::vector<double> rs(n);
    for (std::size_t i = 0; i < n; ++i) rs[i] = f.r_max * static_cast<double>(i + 1) / static_cast<double>(n);
    grid = sweep_symmetric(q, rs, ts, e);
  }
  const std::string meta =
      f.output.no_meta ? ""
                       : meta_line("regions", {{"quantity", f.quantity},
                                               {"engine", f.engine},
                                               {"resolution", std::to_string(f.resolution)},
                                               {"r_max", format_double(f.r_max)},
                                               {"at_r", f.at_r ? format_double(*f.at_r) : std::string("none")}});
  emit(sweep_csv(grid, meta), f.output.path, out);
  if (!f.boundary.empty()) {
    const std::string bmeta = meta.empty() ? "" : meta + (grid.symmetric() ? " x=T y=r" : " x=T1 y=T2");
    emit(segments_csv(grid.boundary_segments(), bmeta), f.boundary, out);
  }
  return kExitOk;
}

struct TableFlags {
  std::size_t resolution = 400;
  std::string engine = "reference";
  OutputFlags output;
};

int cmd_table(const TableFlags &f, std::ostream &out) {
  const Engine e = engine_or_throw(f.engine);
  emit(dump(table_json(implication_table(f.resolution, e), f.resolution, e)), f.output.path, out);
  return kExitOk;
}

struct VerifyFlags {
  std::string grid = "coarse";
  bool strict = false;
  OutputFlags output;
};

int cmd_verify(const VerifyFlags &f, std::ostream &out) {
  const VerifyReport rep = run_verify(f.grid, f.strict);
  emit(rep.text(), f.output.path, out);
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Numerical laboratory for locally catalysed two-mode squeezed vacuum states", "lqc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  MeasureFlags mf;
  auto *measure = app.add_subcommand("measure", "Evaluate every measure at one point");
  measure->add_option("--r", mf.r, "Squeezing parameter r >= 0")->required();
  auto *t_opt = measure->add_option("--t", mf.T, "Transmittance of both beam splitters");
  auto *t1_opt = measure->add_option("--t1", mf.T1, "Transmittance T1 of the first beam splitter");
  auto *t2_opt = measure->add_option("--t2", mf.T2, "Transmittance T2 of the second beam splitter");
  t_opt->excludes(t1_opt)->excludes(t2_opt);
  measure->add_option("--engine", mf.engine, "closed_form, oracle, reference or both")->capture_default_str();
  measure->add_option("--format", mf.format, "text or json")->capture_default_str();
  measure->add_option("--truncation", mf.truncation, "Override the photon-number truncation N");
  measure->add_option("--quad-points", mf.quad_points, "Gauss-Laguerre nodes for the fidelity")->capture_default_str();
  mf.output.attach(measure, false);

  SweepFlags sf;
  auto *sweep_cmd = app.add_subcommand("sweep", "Grid sweep of one quantity to CSV");
  sweep_cmd->add_option("--quantity", sf.quantity, "entropy, epr, fidelity, pcd or common")->required();
  sweep_cmd->add_option("--r", sf.r, "r axis: value, list a,b,c or range lo:hi:count")->capture_default_str();
  auto *st = sweep_cmd->add_option("--t", sf.T, "Symmetric T axis (T1 = T2 = T)");
  auto *st1 = sweep_cmd->add_option("--t1", sf.T1, "T1 axis (default 0.01:0.99:99)");
  auto *st2 = sweep_cmd->add_option("--t2", sf.T2, "T2 axis (default 0.01:0.99:99)");
  st->excludes(st1)->excludes(st2);
  sweep_cmd->add_option("--engine", sf.engine, "closed_form, oracle or reference")->capture_default_str();
  sweep_cmd->add_option("--cap", sf.cap, "Maximum number of grid points")->capture_default_str();
  sf.output.attach(sweep_cmd, true);

  ThresholdFlags tf;
  auto *thr = app.add_subcommand("threshold", "Largest r with an enhancing symmetric T");
  thr->add_option("--quantity", tf.quantity, "entropy, epr, fidelity or common")->required();
  thr->add_option("--tol", tf.tol, "Bisection tolerance on r")->capture_default_str();
  thr->add_option("--engine", tf.engine, "closed_form, oracle or reference")->capture_default_str();
  tf.output.attach(thr, false);

  RegionsFlags rf;
  auto *reg = app.add_subcommand("regions", "Enhancement region grid and boundary segments");
  reg->add_option("--quantity", rf.quantity, "entropy, epr, fidelity, pcd or common")->capture_default_str();
  reg->add_option("--resolution", rf.resolution, "Points per axis")->capture_default_str();
  reg->add_option("--r-max", rf.r_max, "Upper end of the r axis (symmetric mode)")->capture_default_str();
  reg->add_option("--at-r", rf.at_r, "Sample the (T1, T2) plane at this r instead");
  reg->add_option("--engine", rf.engine, "closed_form, oracle or reference")->capture_default_str();
  reg->add_option("--boundary", rf.boundary, "Also write marching-squares boundary segments here");
  rf.output.attach(reg, true);

  TableFlags tbf;
  auto *tab = app.add_subcommand("table", "Implication audit between enhancement regions");
  tab->add_option("--resolution", tbf.resolution, "Points per axis")->capture_default_str();
  tab->add_option("--engine", tbf.engine, "closed_form, oracle or reference")->capture_default_str();
  tbf.output.attach(tab, false);

  VerifyFlags vf;
  auto *ver = app.add_subcommand("verify", "Cross-check printed formulas against the circuit oracle");
  ver->add_option("--grid", vf.grid, "coarse or standard")->capture_default_str();
  ver->add_flag("--strict", vf.strict, "Treat the known printed-formula discrepancies as failures");
  vf.output.attach(ver, false);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("lqc");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*measure) return cmd_measure(mf, out);
    if (*sweep_cmd) return cmd_sweep(sf, out);
    if (*thr) return cmd_threshold(tf, out);
    if (*reg) return cmd_regions(rf, out);
    if (*tab) return cmd_table(tbf, out);
    if (*ver) return cmd_verify(vf, out);
  } catch (const ValidationError &e) {
    err << "error: invalid " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConvergenceError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitValidation;
}

}  // namespace lqc::cli
