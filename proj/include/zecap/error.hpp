// Copyright 2026 The zecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zecap {

enum class Errc {
  InvalidInput,
  NotPSD,
  NoSolution,
  NotAUnit,
  InvalidParameter,
  AsymmetricConnectionSet,
  InvalidPrime,
  DegenerateGraph,
  BudgetExceeded,
  InfiniteValue,
  NotALovaszMatrix,
  InconsistentInput,
  NotEdgeTransitive,
  IterationLimit,
  PreconditionFailed,
  BetaNotFound,
  CertificateInvalid,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotPSD: return "NotPSD";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::AsymmetricConnectionSet: return "AsymmetricConnectionSet";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::DegenerateGraph: return "DegenerateGraph";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InfiniteValue: return "InfiniteValue";
    case Errc::NotALovaszMatrix: return "NotALovaszMatrix";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::NotEdgeTransitive: return "NotEdgeTransitive";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::BetaNotFound: return "BetaNotFound";
    case Errc::CertificateInvalid: return "CertificateInvalid";
  }
  return "Unknown";
}

/// Every failure raised by the library. `residual` carries the numeric
/// evidence for NoSolution / CertificateInvalid style errors (0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, double residual = 0.0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        residual_(residual) {}

  Errc code() const noexcept { return code_; }
  double residual() const noexcept { return residual_; }

 private:
  Errc code_;
  double residual_;
};

}  // namespace zecap
