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

#include <stdexcept>
#include <string>

namespace lqc {

/// Raised when an input falls outside an operation's preconditions.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string &message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string &field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Raised when a numerical procedure fails to reach its accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The heralding event has (numerically) zero probability, so the
/// conditional state is undefined.
class DegeneratePostselectionError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace lqc
