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

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slfol/cochain.hpp"
#include "slfol/group.hpp"
#include "slfol/group_decomp.hpp"
#include "slfol/linalg.hpp"
#include "slfol/torus.hpp"

namespace slfol::foliation {

// ---------------------------------------------------------------------------
// Foliated cocycles

/// gamma_{from -> to}, a left translation. An empty domain means the whole
/// overlap of the two charts; otherwise the transition applies on the listed
/// vertices only (one entry per overlap component).
struct Transition {
  int from = 0;
  int to = 0;
  std::vector<int> domain;
  GroupElement element;
};

struct FoliatedCocycle {
  Group group;
  int num_vertices = 0;
  std::vector<std::vector<int>> charts;
  std::vector<std::map<int, GroupElement>> submersions;  // f_i per chart
  std::vector<Transition> transitions;
};

struct CocycleReport {
  bool covers = true;
  double max_violation = 0.0;
  std::vector<int> uncovered;
  std::vector<std::string> missing;     // overlaps with no transition
  std::vector<std::string> violations;  // described, worst first is not implied

  bool passed(double tol) const { return covers && missing.empty() && max_violation <= tol; }
};

/// Verifies f_j = gamma_ij . f_i on every overlap vertex, gamma_ii = id, and
/// gamma_jk . gamma_ij = gamma_ik on triple overlaps.
CocycleReport check_cocycle(const FoliatedCocycle& c, const ToleranceContext& tol = {});

// ---------------------------------------------------------------------------
// Lie foliation data

/// Vertex of the covering complex: base vertex plus deck translation.
struct LiftKey {
  int vertex = 0;
  std::vector<int> deck;
  auto operator<=>(const LiftKey&) const = default;
};

struct HolonomyRep {
  std::vector<GroupElement> generators;  // image of each deck generator
};

struct DevelopingMap {
  std::map<LiftKey, GroupElement> samples;

  const GroupElement* find(const LiftKey& key) const {
    auto it = samples.find(key);
    return it == samples.end() ? nullptr : &it->second;
  }
};

using McCochain = std::variant<std::vector<forms::ScalarCochain1>, forms::LieCochain1>;

struct LieFoliationSpec {
  Group group;
  forms::ComplexPtr complex;  // base complex with covering data
  McCochain cochain;          // Lie cochain for GA / SL(n); k scalar cochains for R^k
  HolonomyRep holonomy;
  DevelopingMap developing;
};

struct McReport {
  int expected_rank = 0;
  bool flat = true;
  double max_flatness = 0.0;  // coboundary (R^k) or algebraic residual (matrix groups)
  double max_holonomy = 0.0;  // holonomy residual, matrix groups only
  std::vector<std::size_t> non_flat_triangles;
  bool surjective = true;
  int min_rank = 0;
  std::vector<int> non_surjective_vertices;

  bool passed() const { return flat && surjective; }
};

/// Condition (ii) per triangle: coboundary below eq_tol for R^k cochains,
/// holonomy residual below eq_tol for matrix groups (the algebraic residual
/// is reported alongside). Condition (i): at each vertex the values on the
/// incident edges span the Lie algebra (singular values above 1e-8 times
/// the largest).
McReport check_mc(const LieFoliationSpec& spec, const ToleranceContext& tol = {});

struct EquivarianceReport {
  std::size_t checked = 0;
  double max_deviation = 0.0;
  std::vector<double> per_generator;

  bool passed(double tol) const { return max_deviation <= tol; }
};

/// max |D(gamma . x) - h(gamma) . D(x)| over sampled lifts and generators.
/// Throws MissingCovering when the complex has no covering data.
EquivarianceReport check_equivariance(const LieFoliationSpec& spec);

struct ConsistencyReport {
  std::size_t checked = 0;
  double max_deviation = 0.0;          // cochain vs log of developing increments
  double max_commutator = 0.0;         // holonomy images of Z^d must commute
};

ConsistencyReport check_consistency(const LieFoliationSpec& spec);

/// Type invariants: well-formed data, flat MC cochain, developing map
/// consistent with the cochain within residual_tol, commuting holonomy, and
/// equivariance within residual_tol. Throws CheckFailed (or the input error)
/// otherwise. Surjectivity is reported by check_mc, not enforced here.
void validate_spec(const LieFoliationSpec& spec, const ToleranceContext& tol = {});

/// Builds a spec on a grid torus from a developing function on R^d: samples
/// D on the lifts (v, g) with g in {-1, 0, 1}^d, derives the cochain from the
/// canonical edge lifts, and validates.
LieFoliationSpec develop_on_torus(const forms::TorusGrid& grid, const Group& group, HolonomyRep holonomy,
                                  const std::function<GroupElement(std::span<const double>)>& developing,
                                  const ToleranceContext& tol = {});

/// GA suspension over a d-torus (d = 0 or 1): D0(t) = h^t . (1, wobble sin 2 pi t).
LieFoliationSpec ga_suspension(const forms::TorusGrid& grid, const decomp::GAElement& holonomy, double wobble,
                               const ToleranceContext& tol = {});

using Section = std::function<FMatrix(double theta)>;

/// Product with a triangulated circle of `circle_subdivisions` vertices:
/// D(x, y) = embed(D0(x)) . sigma(2 pi y); trivial holonomy on the circle.
LieFoliationSpec product_foliation(const LieFoliationSpec& base, const Section& section = decomp::rotation,
                                   int circle_subdivisions = 16, const ToleranceContext& tol = {});

// ---------------------------------------------------------------------------
// Factor projection

enum class ProductKind {
  AbelianSplit,  // R^k = R^{first} x R^{k - first}
  GACircle,      // SL(2) = GA x S^1; only the GA factor is a group
  SLnChart,      // SL(n) = (SO(n) x R^{L-2}) x R^2; only the R^2 factor is modelled
};

struct ProductStructure {
  ProductKind kind = ProductKind::AbelianSplit;
  int first = 1;  // AbelianSplit only
};

struct Projection {
  LieFoliationSpec spec;
  std::vector<double> closedness;  // max |d w| per scalar component (R^k results)
  double flatness = 0.0;           // max holonomy residual (matrix-group results)
  double equivariance = 0.0;
  double consistency = 0.0;

  bool passed(const ToleranceContext& tol) const;
};

/// Composes the developing map with the factor projection, projects the
/// holonomy, and derives the factor cochain from the canonical edge lifts.
/// Nothing is assumed about the result; the residuals are measured.
Projection project_foliation_unchecked(const LieFoliationSpec& spec, const ProductStructure& product, int which,
                                       const ToleranceContext& tol = {});

/// As above, but throws CheckFailed when the projected data fails closedness,
/// flatness, consistency, or equivariance.
LieFoliationSpec project_foliation(const LieFoliationSpec& spec, const ProductStructure& product, int which,
                                   const ToleranceContext& tol = {});

}  // namespace slfol::foliation
