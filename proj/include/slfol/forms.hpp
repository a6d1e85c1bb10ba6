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

#include <vector>

#include "slfol/cochain.hpp"
#include "slfol/matrix.hpp"
#include "slfol/sl_algebra.hpp"

namespace slfol::forms {

/// Discrete Maurer-Cartan residual on triangle (a, b, c) with X = w(ab),
/// Y = w(bc): (dw)(abc) + 1/2 [X, Y]. Vanishes to third order in the mesh
/// size on cochains derived from a group-valued vertex map.
std::vector<algebra::FAlgebraElement> flatness_residual(const LieCochain1& w);

/// exp(w(ab)) exp(w(bc)) exp(w(ca)) - I per triangle.
std::vector<FMatrix> holonomy_residual(const LieCochain1& w);

/// Largest absolute coefficient of each residual.
std::vector<double> residual_norms(const std::vector<algebra::FAlgebraElement>& r);
std::vector<double> residual_norms(const std::vector<FMatrix>& r);

/// w(u, v) = log(g(u)^{-1} g(v)) for a vertex map into SL(n). Edges follow
/// their stored orientation; the map is read on the base complex, so it must
/// be single-valued there.
LieCochain1 log_derived_cochain(const ComplexPtr& complex, const std::vector<FMatrix>& g);

double max_abs(const algebra::FAlgebraElement& x);

}  // namespace slfol::forms
