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

#include "slfol/group.hpp"

#include <cmath>

#include "slfol/sl_algebra.hpp"

namespace slfol::foliation {

Group Group::abelian(int k) {
  if (k < 1) fail(ErrorCode::InvalidInput, "abelian group needs k >= 1");
  return {GroupKind::Abelian, k};
}

Group Group::sl(int n) {
  algebra::require_dimension(n);
  return {GroupKind::SL, n};
}

int Group::algebra_dim() const noexcept {
  switch (kind) {
    case GroupKind::Abelian: return dim;
    case GroupKind::GA: return 2;
    case GroupKind::SL: return dim * dim - 1;
  }
  return 0;
}

std::string Group::tag() const {
  switch (kind) {
    case GroupKind::Abelian: return "R^" + std::to_string(dim);
    case GroupKind::GA: return "GA";
    case GroupKind::SL: return "SL(" + std::to_string(dim) + ")";
  }
  return "?";
}

const FMatrix& as_matrix(const GroupElement& a) {
  if (const auto* m = std::get_if<FMatrix>(&a)) return *m;
  fail(ErrorCode::GroupMismatch, "expected a matrix group element");
}

const std::vector<double>& as_vector(const GroupElement& a) {
  if (const auto* v = std::get_if<std::vector<double>>(&a)) return *v;
  fail(ErrorCode::GroupMismatch, "expected a vector group element");
}

GroupElement identity(const Group& g) {
  if (g.kind == GroupKind::Abelian) return std::vector<double>(g.dim, 0.0);
  return FMatrix::identity(g.dim);
}

GroupElement compose(const Group& g, const GroupElement& a, const GroupElement& b) {
  if (g.kind == GroupKind::Abelian) {
    const auto& x = as_vector(a);
    const auto& y = as_vector(b);
    if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "translation lengths differ");
    std::vector<double> s(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) s[k] = x[k] + y[k];
    return s;
  }
  return as_matrix(a) * as_matrix(b);
}

GroupElement inverse(const Group& g, const GroupElement& a) {
  if (g.kind == GroupKind::Abelian) {
    std::vector<double> v = as_vector(a);
    for (auto& x : v) x = -x;
    return v;
  }
  return linalg::inverse(as_matrix(a));
}

double distance(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) fail(ErrorCode::GroupMismatch, "comparing elements of different groups");
  if (const auto* x = std::get_if<std::vector<double>>(&a)) {
    const auto& y = std::get<std::vector<double>>(b);
    if (x->size() != y.size()) fail(ErrorCode::DimensionMismatch, "translation lengths differ");
    double m = 0.0;
    for (std::size_t k = 0; k < x->size(); ++k) m = std::max(m, std::abs((*x)[k] - y[k]));
    return m;
  }
  return max_abs_diff(std::get<FMatrix>(a), std::get<FMatrix>(b));
}

void validate(const Group& g, const GroupElement& a, const ToleranceContext& tol) {
  if (g.kind == GroupKind::Abelian) {
    const auto& v = as_vector(a);
    if (v.size() != static_cast<std::size_t>(g.dim)) fail(ErrorCode::DimensionMismatch, "translation has wrong length");
    for (double x : v)
      if (!std::isfinite(x)) fail(ErrorCode::InvalidInput, "non-finite translation");
    return;
  }
  const auto& m = as_matrix(a);
  if (m.rows() != static_cast<std::size_t>(g.dim) || m.cols() != static_cast<std::size_t>(g.dim)) {
    fail(ErrorCode::DimensionMismatch, "element of " + g.tag() + " has shape " + m.shape());
  }
  decomp::require_unimodular(m, tol);
  if (g.kind == GroupKind::GA && (std::abs(m(1, 0)) > tol.eq_tol || !(m(0, 0) > 0.0))) {
    fail(ErrorCode::InvalidInput, "matrix is not in the image of GA");
  }
}

GroupElement from_ga(const decomp::GAElement& a) { return decomp::ga_embed(a); }

decomp::GAElement to_ga(const FMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) fail(ErrorCode::DimensionMismatch, "GA matrix must be 2x2");
  return decomp::make_ga(m(0, 0) * m(0, 0), m(0, 1) * m(0, 0));
}

std::vector<double> log_increment(const Group& g, const GroupElement& a, const GroupElement& b) {
  if (g.kind == GroupKind::Abelian) {
    const auto& x = as_vector(a);
    const auto& y = as_vector(b);
    std::vector<double> d(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) d[k] = y[k] - x[k];
    return d;
  }
  const FMatrix step = linalg::inverse(as_matrix(a)) * as_matrix(b);
  return algebra::FAlgebraElement::from_matrix(linalg::matrix_log(step)).coeffs();
}

}  // namespace slfol::foliation
