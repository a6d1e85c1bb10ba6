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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slfol/error.hpp"
#include "slfol/foliation.hpp"
#include "slfol/tischler.hpp"

namespace slfol::pipeline {

struct PipelineConfig {
  tischler::RationalizeConfig rationalize;
  int census_values = 10;
  int max_height = 8;  // bound on |a|, |b| in a w1 + b w2
  std::optional<tischler::HomologyData> homology;  // defaults to the grid torus data

  void validate() const;
};

struct Stage {
  std::string name;
  bool ok = true;
  std::string detail;
};

using Coefficients = std::array<int, 2>;

struct PipelineReport {
  std::string group;
  std::string split;
  std::vector<double> closedness;
  std::vector<Coefficients> tried;
  std::optional<Coefficients> chosen;
  std::optional<tischler::RationalizeResult> rationalized;
  std::optional<tischler::CircleMap> circle;
  std::optional<tischler::SubmersionReport> submersion;
  std::vector<tischler::FiberCensus> census;
  bool census_constant = false;
  std::vector<Stage> stages;  // execution order; a failed stage is last
  std::optional<ErrorCode> failure;
  std::string message;

  bool completed() const { return !failure; }
};

/// Candidates in selection order: (1, 0), (0, 1), then primitive pairs with
/// a > 0, b != 0 by height max(|a|, |b|), then a, then b.
std::vector<Coefficients> combination_order(int max_height);

/// SL(n) spec -> R^2 factor -> closed component -> rational periods -> circle
/// map with submersion check and fiber census. R^2 and R specs skip the
/// split. Errors are recorded in the report, not thrown.
PipelineReport pipeline_sln(const foliation::LieFoliationSpec& spec, const PipelineConfig& cfg = {},
                            const ToleranceContext& tol = {});

}  // namespace slfol::pipeline
