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

#include "lqc/cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "lqc/errors.hpp"

namespace lqc::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // A non-C locale could have produced a comma.
  for (char &c : buf) {
    if (c == ',') c = '.';
  }
  return buf;
}

namespace {

double parse_number(std::string_view text, std::string_view field) {
  const std::string s(text);
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ValidationError(std::string(field), "cannot parse '" + s + "' as a number");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// JSON number that degrades to null for nan/inf.
nlohmann::ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::vector<double> parse_axis(std::string_view spec, std::string_view field) {
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ValidationError(std::string(field), "range must be lo:hi:count");
    const double lo = parse_number(parts[0], field);
    const double hi = parse_number(parts[1], field);
    const double count = parse_number(parts[2], field);
    if (count < 1 || count != std::floor(count) || count > 1e8) {
      throw ValidationError(std::string(field), "range count must be a positive integer");
    }
    if (count > 1 && !(hi > lo)) throw ValidationError(std::string(field), "range needs lo < hi");
    return linspace(lo, hi, static_cast<std::size_t>(count));
  }
  std::vector<double> out;
  for (std::string_view part : split(spec, ',')) out.push_back(parse_number(part, field));
  return out;
}

std::string_view quantity_label(Quantity q) {
  switch (q) {
    case Quantity::Entropy:
      return "E";
    case Quantity::Epr:
      return "EPR";
    case Quantity::Fidelity:
      return "F";
    default:
      return quantity_name(q);
  }
}

std::string sweep_csv(const RegionGrid &grid, std::string_view meta) {
  std::string out;
  if (!meta.empty()) {
    out += "# ";
    out += meta;
    out += '\n';
  }
  out += "r,T1,T2,quantity,value,baseline,delta,enhanced\n";
  const std::string q(quantity_name(grid.quantity));
  const std::size_t n2 = grid.symmetric() ? 1 : grid.axis_T2.size();
  for (std::size_t ir = 0; ir < grid.axis_r.size(); ++ir) {
    for (std::size_t i1 = 0; i1 < grid.axis_T1.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < n2; ++i2) {
        const PointValue &p = grid.at(ir, i1, i2);
        const double T1 = grid.axis_T1[i1];
        const double T2 = grid.symmetric() ? T1 : grid.axis_T2[i2];
        out += format_double(grid.axis_r[ir]);
        out += ',';
        out += format_double(T1);
        out += ',';
        out += format_double(T2);
        out += ',';
        out += q;
        out += ',';
        out += format_double(p.value);
        out += ',';
        out += format_double(p.baseline);
        out += ',';
        out += format_double(p.delta);
        out += ',';
        out += p.enhanced() ? "1" : "0";
        out += '\n';
      }
    }
  }
  return out;
}

std::string segments_csv(const std::vector<Segment> &segments, std::string_view meta) {
  std::string out;
  if (!meta.empty()) {
    out += "# ";
    out += meta;
    out += '\n';
  }
  out += "x0,y0,x1,y1\n";
  for (const Segment &s : segments) {
    out += format_double(s.x0) + ',' + format_double(s.y0) + ',' + format_double(s.x1) + ',' +
           format_double(s.y1) + '\n';
  }
  return out;
}

nlohmann::ordered_json report_json(const MeasureReport &rep) {
  nlohmann::ordered_json j;
  const CatalysisParams &p = rep.params;
  j["params"] = {{"r", p.r()}, {"T1", p.T1()}, {"T2", p.T2()}, {"t1", p.t1()},
                 {"t2", p.t2()}, {"lambda", p.lambda()}};
  j["engine"] = engine_name(rep.engine);
  j["p_cd"] = num(rep.p_cd);
  j["entropy"] = num(rep.entropy);
  j["epr"] = num(rep.epr);
  j["fidelity"] = num(rep.fidelity);
  j["baseline"] = {{"entropy", num(rep.baseline_entropy)},
                   {"epr", num(rep.baseline_epr)},
                   {"fidelity", num(rep.baseline_fidelity)}};
  j["delta"] = {{"entropy", num(rep.delta_entropy)},
                {"epr", num(rep.delta_epr)},
                {"fidelity", num(rep.delta_fidelity)}};
  j["enhanced"] = {{"entropy", rep.entropy_enhanced},
                   {"epr", rep.epr_enhanced},
                   {"fidelity", rep.fidelity_enhanced}};
  j["fidelity_oracle"] = num(rep.fidelity_oracle);
  j["fidelity_flagged"] = rep.fidelity_flagged;
  j["truncation"] = rep.truncation;
  return j;
}

std::string report_text(const MeasureReport &rep) {
  std::ostringstream os;
  auto line = [&](std::string_view key, const std::string &value) {
    os << key;
    for (std::size_t i = key.size(); i < 20; ++i) os << ' ';
    os << value << '\n';
  };
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  const CatalysisParams &p = rep.params;
  line("engine", std::string(engine_name(rep.engine)));
  line("r", format_double(p.r()));
  line("T1", format_double(p.T1()));
  line("T2", format_double(p.T2()));
  line("lambda", format_double(p.lambda()));
  line("truncation", std::to_string(rep.truncation));
  line("p_cd", format_double(rep.p_cd));
  line("entropy", format_double(rep.entropy));
  line("epr", format_double(rep.epr));
  line("fidelity", format_double(rep.fidelity));
  line("baseline_entropy", format_double(rep.baseline_entropy));
  line("baseline_epr", format_double(rep.baseline_epr));
  line("baseline_fidelity", format_double(rep.baseline_fidelity));
  line("delta_entropy", format_double(rep.delta_entropy));
  line("delta_epr", format_double(rep.delta_epr));
  line("delta_fidelity", format_double(rep.delta_fidelity));
  line("entropy_enhanced", yes_no(rep.entropy_enhanced));
  line("epr_enhanced", yes_no(rep.epr_enhanced));
  line("fidelity_enhanced", yes_no(rep.fidelity_enhanced));
  if (rep.engine == Engine::ClosedForm) {
    line("fidelity_oracle", format_double(rep.fidelity_oracle));
    line("fidelity_flagged", yes_no(rep.fidelity_flagged));
  }
  return os.str();
}

nlohmann::ordered_json threshold_json(const ThresholdResult &res) {
  nlohmann::ordered_json j;
  j["quantity"] = quantity_name(res.quantity);
  j["engine"] = engine_name(res.engine);
  j["r_star"] = res.r_star;
  j["r_lo"] = res.r_lo;
  j["r_hi"] = res.r_hi;
  j["tol"] = res.tol;
  auto examples = nlohmann::ordered_json::array();
  for (const auto &ex : res.t_range_examples) {
    auto ivs = nlohmann::ordered_json::array();
    for (const Interval &iv : ex.intervals) ivs.push_back({iv.lo, iv.hi});
    examples.push_back({{"r", ex.r}, {"intervals", ivs}});
  }
  j["t_range_examples"] = examples;
  return j;
}

nlohmann::ordered_json table_json(const std::array<ImplicationPair, 6> &table, std::size_t resolution,
                                  Engine engine) {
  nlohmann::ordered_json j;
  j["resolution"] = resolution;
  j["engine"] = engine_name(engine);
  auto pairs = nlohmann::ordered_json::array();
  for (const ImplicationPair &p : table) {
    nlohmann::ordered_json e;
    e["A"] = quantity_label(p.antecedent);
    e["B"] = quantity_label(p.consequent);
    e["holds"] = p.holds;
    if (p.witness) {
      e["witness"] = {{"r", p.witness->r()},
                      {"T1", p.witness->T1()},
                      {"T2", p.witness->T2()},
                      {"delta_A", num(p.witness_delta_a)},
                      {"delta_B", num(p.witness_delta_b)}};
    } else {
      e["witness"] = nullptr;
    }
    e["antecedent_points"] = p.antecedent_points;
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  return j;
}

std::string dump(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

}  // namespace lqc::cli
