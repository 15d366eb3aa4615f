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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lqc/regions.hpp"
#include "lqc/report.hpp"

namespace lqc::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// %.17g with '.' as decimal separator regardless of locale; nan and inf are
/// spelled "nan", "inf", "-inf".
std::string format_double(double v);

/// Axis specification: a single value "0.5", a list "0.1,0.2,0.4", or an
/// inclusive range "lo:hi:count". Throws ValidationError naming `field`.
std::vector<double> parse_axis(std::string_view spec, std::string_view field);

/// Short labels used in the implication table: E, EPR, F.
std::string_view quantity_label(Quantity q);

/// Sweep grid as CSV with header r,T1,T2,quantity,value,baseline,delta,enhanced.
/// Symmetric grids repeat T in both columns. `meta` is written as a leading
/// "# ..." line when non-empty.
std::string sweep_csv(const RegionGrid &grid, std::string_view meta);

/// Boundary segments as CSV with header x0,y0,x1,y1.
std::string segments_csv(const std::vector<Segment> &segments, std::string_view meta);

nlohmann::ordered_json report_json(const MeasureReport &rep);
std::string report_text(const MeasureReport &rep);

nlohmann::ordered_json threshold_json(const ThresholdResult &res);
nlohmann::ordered_json table_json(const std::array<ImplicationPair, 6> &table, std::size_t resolution,
                                  Engine engine);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::ordered_json &j);

}  // namespace lqc::cli
