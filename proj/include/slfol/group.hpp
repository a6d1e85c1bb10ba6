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
#include <variant>
#include <vector>

#include "slfol/group_decomp.hpp"
#include "slfol/linalg.hpp"
#include "slfol/matrix.hpp"

namespace slfol::foliation {

enum class GroupKind { Abelian, GA, SL };

/// Transverse model group. GA is carried through its embedding in SL(2, R),
/// so GA and SL(n) elements are both matrices; R^k elements are vectors.
struct Group {
  GroupKind kind = GroupKind::Abelian;
  int dim = 1;  // k for R^k, 2 for GA, n for SL(n)

  static Group abelian(int k);
  static Group ga() { return {GroupKind::GA, 2}; }
  static Group sl(int n);

  bool is_matrix() const noexcept { return kind != GroupKind::Abelian; }
  /// Dimension of the Lie algebra.
  int algebra_dim() const noexcept;
  std::string tag() const;
  bool operator==(const Group&) const = default;
};

using GroupElement = std::variant<std::vector<double>, FMatrix>;

GroupElement identity(const Group& g);
/// Left translation: a . b.
GroupElement compose(const Group& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const Group& g, const GroupElement& a);
/// Largest absolute entry of a - b.
double distance(const GroupElement& a, const GroupElement& b);
/// Throws InvalidInput (or NonUnimodular) when the element does not belong to g.
void validate(const Group& g, const GroupElement& a, const ToleranceContext& tol);

GroupElement from_ga(const decomp::GAElement& a);
/// Reads (a, b) back from an embedded GA matrix.
decomp::GAElement to_ga(const FMatrix& m);

/// Algebra coordinates of the step from a to b: b - a for R^k, otherwise the
/// sl(n) coefficients of log(a^{-1} b).
std::vector<double> log_increment(const Group& g, const GroupElement& a, const GroupElement& b);

const FMatrix& as_matrix(const GroupElement& a);
const std::vector<double>& as_vector(const GroupElement& a);

}  // namespace slfol::foliation
