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

#include "slfol/forms.hpp"

#include <algorithm>
#include <cmath>

#include "slfol/linalg.hpp"

namespace slfol::forms {

using algebra::FAlgebraElement;

void require_lie_dimension(const LieCochain1& w, int n) {
  for (const auto& x : w.values()) {
    if (x.n() != n) fail(ErrorCode::DimensionMismatch, "Lie cochain mixes algebra dimensions");
  }
}

double max_abs(std::span<const double> values) {
  double m = 0.0;
  for (double x : values) m = std::max(m, std::abs(x));
  return m;
}

Rational max_abs(std::span<const Rational> values) {
  Rational m(0);
  for (const auto& x : values) {
    Rational a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

double max_abs(const FAlgebraElement& x) { return max_abs(std::span<const double>(x.coeffs())); }

std::vector<FAlgebraElement> flatness_residual(const LieCochain1& w) {
  const auto& c = *w.complex();
  std::vector<FAlgebraElement> out;
  out.reserve(c.num_triangles());
  for (std::size_t t = 0; t < c.num_triangles(); ++t) {
    const auto& te = c.triangle_edges(t);
    const FAlgebraElement x = w.value(te[0]);
    const FAlgebraElement y = w.value(te[1]);
    FAlgebraElement r = x + y - w.value(te[2]);
    r += 0.5 * algebra::bracket(x, y);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<FMatrix> holonomy_residual(const LieCochain1& w) {
  const auto& c = *w.complex();
  std::vector<FMatrix> out;
  out.reserve(c.num_triangles());
  for (std::size_t t = 0; t < c.num_triangles(); ++t) {
    const auto& te = c.triangle_edges(t);
    const FMatrix ab = linalg::matrix_exp(w.value(te[0]).to_matrix());
    const FMatrix bc = linalg::matrix_exp(w.value(te[1]).to_matrix());
    const FMatrix ca = linalg::matrix_exp(w.value(te[2].reversed()).to_matrix());
    FMatrix loop = ab * bc * ca;
    out.push_back(loop - FMatrix::identity(loop.rows()));
  }
  return out;
}

std::vector<double> residual_norms(const std::vector<FAlgebraElement>& r) {
  std::vector<double> out;
  out.reserve(r.size());
  for (const auto& x : r) out.push_back(max_abs(x));
  return out;
}

std::vector<double> residual_norms(const std::vector<FMatrix>& r) {
  std::vector<double> out;
  out.reserve(r.size());
  for (const auto& x : r) out.push_back(slfol::max_abs(x));
  return out;
}

LieCochain1 log_derived_cochain(const ComplexPtr& complex, const std::vector<FMatrix>& g) {
  if (g.size() != static_cast<std::size_t>(complex->num_vertices())) {
    fail(ErrorCode::DimensionMismatch, "vertex map size differs from vertex count");
  }
  std::vector<FAlgebraElement> values;
  values.reserve(complex->num_edges());
  for (const auto& e : complex->edges()) {
    const FMatrix step = linalg::inverse(g[e[0]]) * g[e[1]];
    values.push_back(FAlgebraElement::from_matrix(linalg::matrix_log(step)));
  }
  return LieCochain1(complex, std::move(values));
}

}  // namespace slfol::forms
