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

#include <string>
#include <vector>

namespace lqc::cli {

enum class CheckStatus { Pass, Warn, Fail };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double worst = 0.0;      // largest observed error
  double tolerance = 0.0;
  std::size_t points = 0;
  std::string detail;      // where the worst error occurred, both values
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::string text() const;
};

/// Runs the closed-form versus oracle cross-checks and the limit identities.
/// `grid` is "coarse" (3 values per axis) or "standard" (5 values per axis,
/// r and T in {0.1, 0.3, 0.5, 0.7, 0.9}). The two printed formulas known to
/// disagree with the oracle (the moment tables behind epr_closed and the
/// fidelity polynomial) are reported as warnings unless `strict` is set.
VerifyReport run_verify(const std::string &grid, bool strict);

}  // namespace lqc::cli
