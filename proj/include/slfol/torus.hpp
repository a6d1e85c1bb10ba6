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

#include <span>
#include <vector>

#include "slfol/cochain.hpp"
#include "slfol/complex.hpp"

namespace slfol::forms {

/// Flat torus R^d / Z^d triangulated on a grid (Kuhn/Freudenthal split of
/// each cell: for d = 2 every square is cut along its (+1, +1) diagonal).
/// Carries Z^d covering data, one homology generator per axis, and the
/// coordinate cochains dual to those generators. Supports 0 <= d <= 3 and
/// at least 3 subdivisions per axis.
class TorusGrid {
 public:
  explicit TorusGrid(std::vector<int> shape);
  /// Re-attaches to a complex built by the grid constructor (same shape,
  /// edges and triangles); cochains on `complex` stay compatible.
  explicit TorusGrid(ComplexPtr complex);

  int dim() const noexcept { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const noexcept { return shape_; }
  const ComplexPtr& complex() const noexcept { return complex_; }

  /// Axis 0 varies fastest. Coordinates are reduced mod the shape.
  int vertex(std::span<const int> coords) const;
  std::vector<int> coords(int v) const;
  /// Point of [0, 1)^d.
  std::vector<double> position(int v) const;

  std::vector<Cycle> homology_generators() const;
  /// dx_axis: value 1/m_axis on every edge that advances along the axis, so
  /// its period is 1 on generator `axis` and 0 on the others.
  RationalCochain1 coordinate_cochain(int axis) const;
  std::vector<RationalCochain1> dual_basis() const;
  /// sum_k slope[k] dx_k in floating point.
  ScalarCochain1 linear_cochain(std::span<const double> slope) const;

 private:
  std::vector<int> shape_;
  ComplexPtr complex_;
};

/// torus_complex(d, m): d-torus with m subdivisions on every axis.
TorusGrid torus_complex(int d, int m);

}  // namespace slfol::forms
