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

#include <string>
#include <vector>

#include "json.hpp"

#include "slfol/foliation.hpp"
#include "slfol/pipeline.hpp"
#include "slfol/tischler.hpp"

namespace slfol::io {

using json = nlohmann::ordered_json;

/// Rationals are written as "p/q" strings; numbers are read exactly.
Rational rational_from_json(const json& j);
double number_from_json(const json& j);
json to_json(const Rational& r);

FMatrix matrix_from_json(const json& j);
json to_json(const FMatrix& m);

/// {"torus": [m, ...]} or an explicit complex with "vertices", "edges",
/// "triangles", optional "simplices", "voltages" and "deck_rank".
forms::ComplexPtr complex_from_json(const json& j);
json complex_to_json(const forms::SimplicialComplex& c);

foliation::Group group_from_json(const json& j);
json to_json(const foliation::Group& g);
foliation::GroupElement element_from_json(const foliation::Group& g, const json& j);
json to_json(const foliation::GroupElement& a);

/// Parses without running the checks. A missing "cochain" is derived from the
/// developing map on canonical edge lifts.
foliation::LieFoliationSpec spec_from_json(const json& j);
json spec_to_json(const foliation::LieFoliationSpec& spec);

struct TischlerInput {
  forms::RationalCochain1 cochain;
  tischler::HomologyData homology;
};

/// {"complex", "cochain": {"u-v": value} or "slope": [...] on a torus,
/// optional "cycles" (closed vertex paths) and "dual_basis"}.
TischlerInput tischler_input_from_json(const json& j);

struct Outcome {
  json report;
  bool passed = false;
};

Outcome verify_brackets_report(int n);
Outcome decompose_report(const FMatrix& g, const ToleranceContext& tol);
Outcome check_foliation_report(const foliation::LieFoliationSpec& spec, const ToleranceContext& tol);
Outcome tischler_report(const TischlerInput& input, const tischler::RationalizeConfig& cfg,
                        const ToleranceContext& tol);
json pipeline_report_to_json(const pipeline::PipelineReport& r, const pipeline::PipelineConfig& cfg);

/// Built-in inputs: specs, Tischler inputs and matrices.
std::vector<std::string> example_names();
json example(const std::string& name);

/// Parses text, mapping syntax errors to InvalidInput.
json parse(const std::string& text);

}  // namespace slfol::io
