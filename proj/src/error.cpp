// Copyright 2026 The slfol Authors
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

#include "slfol/error.hpp"

namespace slfol {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::LogDomain: return "LogDomain";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::SplitTooSmall: return "SplitTooSmall";
    case ErrorCode::DegenerateComplex: return "DegenerateComplex";
    case ErrorCode::BrokenCycle: return "BrokenCycle";
    case ErrorCode::MissingCovering: return "MissingCovering";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NoProductStructure: return "NoProductStructure";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::CyclesDoNotSpan: return "CyclesDoNotSpan";
    case ErrorCode::BudgetInfeasible: return "BudgetInfeasible";
    case ErrorCode::NonRationalPeriods: return "NonRationalPeriods";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NoSubmersion: return "NoSubmersion";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

bool is_check_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotClosed:
    case ErrorCode::BudgetInfeasible:
    case ErrorCode::NoSubmersion:
    case ErrorCode::CheckFailed:
      return true;
    default:
      return false;
  }
}

}  // namespace slfol
