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

#include "slfol/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "slfol/forms.hpp"
#include "slfol/sl_algebra.hpp"

namespace slfol::foliation {

namespace {

std::vector<std::vector<int>> deck_window(int rank) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < rank; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int s = -1; s <= 1; ++s) {
        auto v = prefix;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

const forms::CoveringData& require_covering(const forms::SimplicialComplex& c) {
  if (!c.covering()) fail(ErrorCode::MissingCovering, "complex carries no covering data");
  return *c.covering();
}

std::vector<int> shifted(const std::vector<int>& deck, const std::vector<int>& by) {
  std::vector<int> out = deck;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += by[k];
  return out;
}

// Cochain from the developing map along each edge's canonical lift (u, 0) -> (v, voltage).
McCochain derive_cochain(const Group& group, const forms::ComplexPtr& complex, const DevelopingMap& dev) {
  const auto& cov = require_covering(*complex);
  const std::vector<int> origin(cov.rank, 0);
  std::vector<std::vector<double>> incs;
  incs.reserve(complex->num_edges());
  for (std::size_t e = 0; e < complex->num_edges(); ++e) {
    const auto [u, v] = complex->edges()[e];
    const GroupElement* du = dev.find({u, origin});
    const GroupElement* dv = dev.find({v, cov.voltage[e]});
    if (!du || !dv) fail(ErrorCode::InvalidInput, "developing map lacks the canonical lift of edge " + std::to_string(e));
    incs.push_back(log_increment(group, *du, *dv));
  }
  if (group.kind == GroupKind::Abelian) {
    std::vector<forms::ScalarCochain1> comps;
    for (int j = 0; j < group.dim; ++j) {
      std::vector<double> vals;
      vals.reserve(incs.size());
      for (const auto& inc : incs) vals.push_back(inc[j]);
      comps.emplace_back(complex, std::move(vals));
    }
    return comps;
  }
  std::vector<algebra::FAlgebraElement> vals;
  vals.reserve(incs.size());
  for (auto& inc : incs) vals.emplace_back(group.dim, std::move(inc));
  return forms::LieCochain1(complex, std::move(vals));
}

// Algebra coordinates of the cochain on one oriented edge.
std::vector<double> cochain_value(const McCochain& w, const forms::OrientedEdge& e) {
  if (const auto* lie = std::get_if<forms::LieCochain1>(&w)) return lie->value(e).coeffs();
  const auto& comps = std::get<std::vector<forms::ScalarCochain1>>(w);
  std::vector<double> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.value(e));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CocycleReport check_cocycle(const FoliatedCocycle& c, const ToleranceContext& tol) {
  const std::size_t charts = c.charts.size();
  if (c.submersions.size() != charts) fail(ErrorCode::InvalidInput, "one submersion per chart required");
  std::vector<std::vector<char>> member(charts, std::vector<char>(c.num_vertices, 0));
  for (std::size_t i = 0; i < charts; ++i) {
    for (int v : c.charts[i]) {
      if (v < 0 || v >= c.num_vertices) fail(ErrorCode::InvalidInput, "chart vertex out of range");
      member[i][v] = 1;
      if (!c.submersions[i].count(v)) {
        fail(ErrorCode::InvalidInput, "chart " + std::to_string(i) + " has no value at vertex " + std::to_string(v));
      }
    }
  }
  for (const auto& t : c.transitions) {
    if (t.from < 0 || t.to < 0 || t.from >= static_cast<int>(charts) || t.to >= static_cast<int>(charts)) {
      fail(ErrorCode::InvalidInput, "transition refers to a missing chart");
    }
    validate(c.group, t.element, tol);
  }

  CocycleReport report;
  for (int v = 0; v < c.num_vertices; ++v) {
    bool any = false;
    for (std::size_t i = 0; i < charts; ++i) any = any || member[i][v];
    if (!any) report.uncovered.push_back(v);
  }
  report.covers = report.uncovered.empty();

  auto lookup = [&](int i, int j, int v) -> std::optional<GroupElement> {
    for (const auto& t : c.transitions) {
      if (t.from == i && t.to == j &&
          (t.domain.empty() || std::find(t.domain.begin(), t.domain.end(), v) != t.domain.end())) {
        return t.element;
      }
    }
    if (i == j) return identity(c.group);
    for (const auto& t : c.transitions) {
      if (t.from == j && t.to == i &&
          (t.domain.empty() || std::find(t.domain.begin(), t.domain.end(), v) != t.domain.end())) {
        return inverse(c.group, t.element);
      }
    }
    return std::nullopt;
  };
  auto note = [&](double dev, const std::string& what) {
    report.max_violation = std::max(report.max_violation, dev);
    if (dev > tol.eq_tol) report.violations.push_back(what + ": " + std::to_string(dev));
  };

  for (const auto& t : c.transitions) {
    if (t.from == t.to) note(distance(t.element, identity(c.group)), "gamma_" + std::to_string(t.from) + std::to_string(t.to));
  }
  for (std::size_t i = 0; i < charts; ++i)
    for (std::size_t j = 0; j < charts; ++j) {
      if (i == j) continue;
      bool reported_missing = false;
      for (int v : c.charts[i]) {
        if (!member[j][v]) continue;
        auto g = lookup(static_cast<int>(i), static_cast<int>(j), v);
        if (!g) {
          if (!reported_missing) report.missing.push_back(std::to_string(i) + "->" + std::to_string(j));
          reported_missing = true;
          continue;
        }
        note(distance(c.submersions[j].at(v), compose(c.group, *g, c.submersions[i].at(v))),
             "f_" + std::to_string(j) + " vs gamma f_" + std::to_string(i) + " at " + std::to_string(v));
      }
    }
  for (std::size_t i = 0; i < charts; ++i)
    for (std::size_t j = 0; j < charts; ++j)
      for (std::size_t k = 0; k < charts; ++k) {
        if (i == j || j == k || i == k) continue;
        for (int v : c.charts[i]) {
          if (!member[j][v] || !member[k][v]) continue;
          auto gij = lookup(static_cast<int>(i), static_cast<int>(j), v);
          auto gjk = lookup(static_cast<int>(j), static_cast<int>(k), v);
          auto gik = lookup(static_cast<int>(i), static_cast<int>(k), v);
          if (!gij || !gjk || !gik) continue;
          note(distance(compose(c.group, *gjk, *gij), *gik),
               "cocycle " + std::to_string(i) + std::to_string(j) + std::to_string(k) + " at " + std::to_string(v));
        }
      }
  return report;
}

// ---------------------------------------------------------------------------

McReport check_mc(const LieFoliationSpec& spec, const ToleranceContext& tol) {
  const auto& complex = *spec.complex;
  McReport r;
  r.expected_rank = spec.group.algebra_dim();

  if (const auto* comps = std::get_if<std::vector<forms::ScalarCochain1>>(&spec.cochain)) {
    std::vector<double> worst(complex.num_triangles(), 0.0);
    for (const auto& c : *comps) {
      const auto d = forms::coboundary(c);
      for (std::size_t t = 0; t < d.size(); ++t) worst[t] = std::max(worst[t], std::abs(d[t]));
    }
    for (std::size_t t = 0; t < worst.size(); ++t) {
      r.max_flatness = std::max(r.max_flatness, worst[t]);
      if (worst[t] > tol.eq_tol) r.non_flat_triangles.push_back(t);
    }
  } else {
    const auto& w = std::get<forms::LieCochain1>(spec.cochain);
    const auto alg = forms::residual_norms(forms::flatness_residual(w));
    const auto hol = forms::residual_norms(forms::holonomy_residual(w));
    for (std::size_t t = 0; t < hol.size(); ++t) {
      r.max_flatness = std::max(r.max_flatness, alg[t]);
      r.max_holonomy = std::max(r.max_holonomy, hol[t]);
      if (hol[t] > tol.eq_tol) r.non_flat_triangles.push_back(t);
    }
  }
  r.flat = r.non_flat_triangles.empty();

  r.min_rank = r.expected_rank;
  for (int v = 0; v < complex.num_vertices(); ++v) {
    const auto& inc = complex.incident(v);
    std::vector<std::vector<double>> rows;
    for (const auto& e : inc) rows.push_back(cochain_value(spec.cochain, e));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    const int rank = static_cast<int>(linalg::numerical_rank(m, 1e-8));
    r.min_rank = std::min(r.min_rank, rank);
    if (rank < r.expected_rank) r.non_surjective_vertices.push_back(v);
  }
  r.surjective = r.non_surjective_vertices.empty();
  return r;
}

EquivarianceReport check_equivariance(const LieFoliationSpec& spec) {
  const auto& cov = require_covering(*spec.complex);
  if (spec.holonomy.generators.size() != static_cast<std::size_t>(cov.rank)) {
    fail(ErrorCode::InvalidInput, "holonomy needs one image per deck generator");
  }
  EquivarianceReport r;
  r.per_generator.assign(cov.rank, 0.0);
  for (const auto& [key, value] : spec.developing.samples) {
    for (int k = 0; k < cov.rank; ++k) {
      LiftKey moved = key;
      moved.deck[k] += 1;
      const GroupElement* target = spec.developing.find(moved);
      if (!target) continue;
      const double dev = distance(*target, compose(spec.group, spec.holonomy.generators[k], value));
      r.per_generator[k] = std::max(r.per_generator[k], dev);
      r.max_deviation = std::max(r.max_deviation, dev);
      ++r.checked;
    }
  }
  return r;
}

ConsistencyReport check_consistency(const LieFoliationSpec& spec) {
  const auto& complex = *spec.complex;
  const auto& cov = require_covering(complex);
  ConsistencyReport r;
  std::vector<std::vector<const LiftKey*>> by_vertex(complex.num_vertices());
  for (const auto& [key, value] : spec.developing.samples) by_vertex[key.vertex].push_back(&key);
  for (std::size_t e = 0; e < complex.num_edges(); ++e) {
    const auto [u, v] = complex.edges()[e];
    const auto expected = cochain_value(spec.cochain, {e, +1});
    for (const LiftKey* key : by_vertex[u]) {
      const GroupElement* head = spec.developing.find({v, shifted(key->deck, cov.voltage[e])});
      if (!head) continue;
      const auto inc = log_increment(spec.group, spec.developing.samples.at(*key), *head);
      for (std::size_t j = 0; j < inc.size(); ++j) {
        r.max_deviation = std::max(r.max_deviation, std::abs(inc[j] - expected[j]));
      }
      ++r.checked;
    }
  }
  const auto& gens = spec.holonomy.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      r.max_commutator = std::max(r.max_commutator, distance(compose(spec.group, gens[i], gens[j]),
                                                             compose(spec.group, gens[j], gens[i])));
    }
  return r;
}

void validate_spec(const LieFoliationSpec& spec, const ToleranceContext& tol) {
  tol.validate();
  if (!spec.complex) fail(ErrorCode::InvalidInput, "spec has no complex");
  const auto& cov = require_covering(*spec.complex);
  if (spec.holonomy.generators.size() != static_cast<std::size_t>(cov.rank)) {
    fail(ErrorCode::InvalidInput, "holonomy needs one image per deck generator");
  }
  for (const auto& h : spec.holonomy.generators) validate(spec.group, h, tol);
  for (const auto& [key, value] : spec.developing.samples) {
    if (key.vertex < 0 || key.vertex >= spec.complex->num_vertices() ||
        key.deck.size() != static_cast<std::size_t>(cov.rank)) {
      fail(ErrorCode::InvalidInput, "developing sample with invalid lift");
    }
    validate(spec.group, value, tol);
  }
  if (spec.group.kind == GroupKind::Abelian) {
    const auto* comps = std::get_if<std::vector<forms::ScalarCochain1>>(&spec.cochain);
    if (!comps || comps->size() != static_cast<std::size_t>(spec.group.dim)) {
      fail(ErrorCode::GroupMismatch, "R^k spec needs k scalar cochains");
    }
    for (const auto& c : *comps)
      if (c.complex() != spec.complex) fail(ErrorCode::InvalidInput, "cochain lives on another complex");
  } else {
    const auto* lie = std::get_if<forms::LieCochain1>(&spec.cochain);
    if (!lie) fail(ErrorCode::GroupMismatch, spec.group.tag() + " spec needs a Lie algebra valued cochain");
    if (lie->complex() != spec.complex) fail(ErrorCode::InvalidInput, "cochain lives on another complex");
    forms::require_lie_dimension(*lie, spec.group.dim);
    if (spec.group.kind == GroupKind::GA) {
      const auto lower = algebra::BasisIndex::off_diag(2, 1);
      for (const auto& x : lie->values()) {
        if (std::abs(x[lower]) > tol.residual_tol) fail(ErrorCode::InvalidInput, "GA cochain leaves the affine subalgebra");
      }
    }
  }
  const McReport mc = check_mc(spec, tol);
  if (!mc.flat) {
    fail(ErrorCode::CheckFailed, "Maurer-Cartan cochain is not flat on " + std::to_string(mc.non_flat_triangles.size()) +
                                     " triangles");
  }
  const ConsistencyReport cons = check_consistency(spec);
  if (cons.max_deviation > tol.residual_tol) {
    fail(ErrorCode::CheckFailed, "developing map disagrees with the cochain by " + std::to_string(cons.max_deviation));
  }
  if (cons.max_commutator > tol.eq_tol) {
    fail(ErrorCode::CheckFailed, "holonomy images do not commute");
  }
  const EquivarianceReport eq = check_equivariance(spec);
  if (eq.max_deviation > tol.residual_tol) {
    fail(ErrorCode::CheckFailed, "developing map is not equivariant: deviation " + std::to_string(eq.max_deviation));
  }
}

LieFoliationSpec develop_on_torus(const forms::TorusGrid& grid, const Group& group, HolonomyRep holonomy,
                                  const std::function<GroupElement(std::span<const double>)>& developing,
                                  const ToleranceContext& tol) {
  LieFoliationSpec spec{group, grid.complex(), McCochain{}, std::move(holonomy), {}};
  const auto window = deck_window(grid.dim());
  for (int v = 0; v < grid.complex()->num_vertices(); ++v) {
    const auto base = grid.position(v);
    for (const auto& deck : window) {
      std::vector<double> x = base;
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += deck[k];
      spec.developing.samples.emplace(LiftKey{v, deck}, developing(x));
    }
  }
  spec.cochain = derive_cochain(group, spec.complex, spec.developing);
  validate_spec(spec, tol);
  return spec;
}

LieFoliationSpec ga_suspension(const forms::TorusGrid& grid, const decomp::GAElement& holonomy, double wobble,
                               const ToleranceContext& tol) {
  if (grid.dim() > 1) fail(ErrorCode::InvalidInput, "GA suspension is built over a point or a circle");
  decomp::make_ga(holonomy.a, holonomy.b);
  HolonomyRep h;
  if (grid.dim() == 1) h.generators.push_back(from_ga(holonomy));
  return develop_on_torus(
      grid, Group::ga(), std::move(h),
      [&](std::span<const double> x) -> GroupElement {
        if (x.empty()) return from_ga(decomp::ga_identity());
        const double t = x[0];
        const decomp::GAElement periodic{1.0, wobble * std::sin(2.0 * std::numbers::pi * t)};
        return from_ga(decomp::ga_mul(decomp::ga_power(holonomy, t), periodic));
      },
      tol);
}

LieFoliationSpec product_foliation(const LieFoliationSpec& base, const Section& section, int circle_subdivisions,
                                   const ToleranceContext& tol) {
  if (base.group.kind != GroupKind::GA) fail(ErrorCode::GroupMismatch, "product foliation needs a GA base, got " + base.group.tag());
  const auto& shape = base.complex->grid_shape();
  const auto& base_cov = require_covering(*base.complex);
  if (static_cast<int>(shape.size()) != base_cov.rank) {
    fail(ErrorCode::InvalidInput, "product foliation needs a grid torus base");
  }
  std::vector<int> product_shape = shape;
  product_shape.push_back(circle_subdivisions);
  const forms::TorusGrid grid(product_shape);
  const int base_vertices = base.complex->num_vertices();

  LieFoliationSpec spec{Group::sl(2), grid.complex(), McCochain{}, base.holonomy, {}};
  spec.holonomy.generators.push_back(FMatrix::identity(2));
  for (const auto& [key, value] : base.developing.samples) {
    for (int j = 0; j < circle_subdivisions; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / circle_subdivisions;
      const FMatrix d = as_matrix(value) * section(theta);
      for (int s = -1; s <= 1; ++s) {
        LiftKey lifted{key.vertex + base_vertices * j, key.deck};
        lifted.deck.push_back(s);
        spec.developing.samples.emplace(std::move(lifted), d);
      }
    }
  }
  spec.cochain = derive_cochain(spec.group, spec.complex, spec.developing);
  validate_spec(spec, tol);
  return spec;
}

// ---------------------------------------------------------------------------

bool Projection::passed(const ToleranceContext& tol) const {
  for (double c : closedness)
    if (c > tol.eq_tol) return false;
  return flatness <= tol.eq_tol && equivariance <= tol.residual_tol && consistency <= tol.residual_tol;
}

Projection project_foliation_unchecked(const LieFoliationSpec& spec, const ProductStructure& product, int which,
                                       const ToleranceContext& tol) {
  if (which != 1 && which != 2) fail(ErrorCode::InvalidInput, "factor index must be 1 or 2");
  std::function<GroupElement(const GroupElement&)> project;
  Group target;
  switch (product.kind) {
    case ProductKind::AbelianSplit: {
      if (spec.group.kind != GroupKind::Abelian || product.first < 1 || product.first >= spec.group.dim) {
        fail(ErrorCode::NoProductStructure, spec.group.tag() + " has no split after coordinate " + std::to_string(product.first));
      }
      const int lo = which == 1 ? 0 : product.first;
      const int hi = which == 1 ? product.first : spec.group.dim;
      target = Group::abelian(hi - lo);
      project = [lo, hi](const GroupElement& g) -> GroupElement {
        const auto& v = as_vector(g);
        return std::vector<double>(v.begin() + lo, v.begin() + hi);
      };
      break;
    }
    case ProductKind::GACircle: {
      if (spec.group.kind != GroupKind::SL || spec.group.dim != 2) {
        fail(ErrorCode::NoProductStructure, "GA x S^1 splitting needs SL(2), got " + spec.group.tag());
      }
      if (which == 2) fail(ErrorCode::NoProductStructure, "the circle factor SL(2)/GA is not a group factor");
      target = Group::ga();
      project = [&tol](const GroupElement& g) -> GroupElement {
        return from_ga(decomp::iwasawa_sl2(as_matrix(g), tol).ga);
      };
      break;
    }
    case ProductKind::SLnChart: {
      if (spec.group.kind != GroupKind::SL) {
        fail(ErrorCode::NoProductStructure, "chart splitting needs SL(n), got " + spec.group.tag());
      }
      if (which == 1) fail(ErrorCode::NoProductStructure, "the SO(n) x R^{L-2} factor is not modelled as a group");
      decomp::factor_split(spec.group.dim);
      target = Group::abelian(2);
      project = [&tol](const GroupElement& g) -> GroupElement {
        const auto p = decomp::abelian_project(as_matrix(g), tol);
        return std::vector<double>{p[0], p[1]};
      };
      break;
    }
  }

  Projection out{LieFoliationSpec{target, spec.complex, McCochain{}, {}, {}}, {}, 0.0, 0.0, 0.0};
  for (const auto& h : spec.holonomy.generators) out.spec.holonomy.generators.push_back(project(h));
  for (const auto& [key, value] : spec.developing.samples) out.spec.developing.samples.emplace(key, project(value));

  if (product.kind == ProductKind::AbelianSplit) {
    const auto& comps = std::get<std::vector<forms::ScalarCochain1>>(spec.cochain);
    const int lo = which == 1 ? 0 : product.first;
    out.spec.cochain = std::vector<forms::ScalarCochain1>(comps.begin() + lo, comps.begin() + lo + target.dim);
  } else {
    out.spec.cochain = derive_cochain(target, spec.complex, out.spec.developing);
  }

  if (const auto* comps = std::get_if<std::vector<forms::ScalarCochain1>>(&out.spec.cochain)) {
    for (const auto& c : *comps) {
      const auto d = forms::coboundary(c);
      out.closedness.push_back(forms::max_abs(std::span<const double>(d)));
    }
  } else {
    const auto hol = forms::residual_norms(forms::holonomy_residual(std::get<forms::LieCochain1>(out.spec.cochain)));
    out.flatness = forms::max_abs(std::span<const double>(hol));
  }
  out.equivariance = check_equivariance(out.spec).max_deviation;
  out.consistency = check_consistency(out.spec).max_deviation;
  return out;
}

LieFoliationSpec project_foliation(const LieFoliationSpec& spec, const ProductStructure& product, int which,
                                   const ToleranceContext& tol) {
  Projection p = project_foliation_unchecked(spec, product, which, tol);
  if (!p.passed(tol)) {
    double worst = 0.0;
    for (double c : p.closedness) worst = std::max(worst, c);
    fail(ErrorCode::CheckFailed, "projected foliation fails re-check: closedness " + std::to_string(worst) +
                                     ", flatness " + std::to_string(p.flatness) + ", equivariance " +
                                     std::to_string(p.equivariance) + ", consistency " + std::to_string(p.consistency));
  }
  return std::move(p.spec);
}

}  // namespace slfol::foliation
