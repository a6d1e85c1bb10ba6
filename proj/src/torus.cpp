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

#include "slfol/torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace slfol::forms {

TorusGrid::TorusGrid(std::vector<int> shape) : shape_(std::move(shape)) {
  const int d = dim();
  if (d > 3) fail(ErrorCode::InvalidInput, "torus dimension must be at most 3");
  for (int m : shape_) {
    if (m < 3) fail(ErrorCode::DegenerateComplex, "torus needs at least 3 subdivisions per axis, got " + std::to_string(m));
  }
  int nv = 1;
  for (int m : shape_) nv *= m;

  std::vector<std::array<int, 2>> edges;
  CoveringData covering{d, {}};
  std::map<std::pair<int, int>, std::size_t> edge_index;
  // Steps along nonzero 0/1 vectors; each is an edge of the Kuhn split.
  for (int v = 0; v < nv; ++v) {
    const std::vector<int> c = coords(v);
    for (int mask = 1; mask < (1 << d); ++mask) {
      std::vector<int> moved = c;
      std::vector<int> volt(d, 0);
      for (int k = 0; k < d; ++k) {
        if (!(mask & (1 << k))) continue;
        moved[k] += 1;
        if (moved[k] == shape_[k]) volt[k] = 1;
      }
      const int w = vertex(moved);
      edge_index[{v, mask}] = edges.size();
      edges.push_back({v, w});
      covering.voltage.push_back(std::move(volt));
    }
  }

  std::vector<std::array<int, 3>> triangles;
  std::vector<std::vector<int>> tops;
  std::map<std::array<int, 3>, bool> seen;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int v = 0; v < nv; ++v) {
    const std::vector<int> c = coords(v);
    std::vector<int> p = perm;
    do {
      std::vector<int> simplex{v};
      std::vector<int> walk = c;
      for (int k : p) {
        walk[k] += 1;
        simplex.push_back(vertex(walk));
      }
      for (std::size_t a = 0; a < simplex.size(); ++a)
        for (std::size_t b = a + 1; b < simplex.size(); ++b)
          for (std::size_t e = b + 1; e < simplex.size(); ++e) {
            std::array<int, 3> t{simplex[a], simplex[b], simplex[e]};
            std::array<int, 3> sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (seen.emplace(sorted, true).second) triangles.push_back(t);
          }
      tops.push_back(std::move(simplex));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  SimplicialComplex::Options opts;
  opts.manifold_like = true;
  opts.top_simplices = std::move(tops);
  opts.covering = std::move(covering);
  opts.grid_shape = shape_;
  complex_ = std::make_shared<const SimplicialComplex>(nv, std::move(edges), std::move(triangles), std::move(opts));
}

TorusGrid::TorusGrid(ComplexPtr complex) : TorusGrid(complex ? complex->grid_shape() : std::vector<int>{}) {
  if (!complex || complex->edges() != complex_->edges() || complex->triangles() != complex_->triangles() ||
      complex->num_vertices() != complex_->num_vertices()) {
    fail(ErrorCode::InvalidInput, "complex is not a grid torus");
  }
  complex_ = std::move(complex);
}

int TorusGrid::vertex(std::span<const int> c) const {
  if (c.size() != shape_.size()) fail(ErrorCode::DimensionMismatch, "coordinate count differs from torus dimension");
  int v = 0;
  for (int k = dim() - 1; k >= 0; --k) {
    const int m = shape_[k];
    v = v * m + ((c[k] % m) + m) % m;
  }
  return v;
}

std::vector<int> TorusGrid::coords(int v) const {
  std::vector<int> c(shape_.size());
  for (std::size_t k = 0; k < shape_.size(); ++k) {
    c[k] = v % shape_[k];
    v /= shape_[k];
  }
  return c;
}

std::vector<double> TorusGrid::position(int v) const {
  const auto c = coords(v);
  std::vector<double> p(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) p[k] = static_cast<double>(c[k]) / shape_[k];
  return p;
}

std::vector<Cycle> TorusGrid::homology_generators() const {
  std::vector<Cycle> gens;
  for (int axis = 0; axis < dim(); ++axis) {
    std::vector<int> path;
    std::vector<int> c(dim(), 0);
    for (int s = 0; s <= shape_[axis]; ++s) {
      c[axis] = s;
      path.push_back(vertex(c));
    }
    gens.push_back(Cycle::from_vertices(*complex_, path));
  }
  return gens;
}

RationalCochain1 TorusGrid::coordinate_cochain(int axis) const {
  if (axis < 0 || axis >= dim()) fail(ErrorCode::IndexOutOfRange, "axis out of range");
  std::vector<Rational> v;
  v.reserve(complex_->num_edges());
  const Rational step(1, shape_[axis]);
  for (const auto& e : complex_->edges()) {
    const int from = coords(e[0])[axis];
    const int to = coords(e[1])[axis];
    v.push_back(from == to ? Rational(0) : step);
  }
  return RationalCochain1(complex_, std::move(v));
}

std::vector<RationalCochain1> TorusGrid::dual_basis() const {
  std::vector<RationalCochain1> out;
  for (int axis = 0; axis < dim(); ++axis) out.push_back(coordinate_cochain(axis));
  return out;
}

ScalarCochain1 TorusGrid::linear_cochain(std::span<const double> slope) const {
  if (slope.size() != shape_.size()) fail(ErrorCode::DimensionMismatch, "slope length differs from torus dimension");
  std::vector<double> v;
  v.reserve(complex_->num_edges());
  for (const auto& e : complex_->edges()) {
    const auto a = coords(e[0]);
    const auto b = coords(e[1]);
    double s = 0.0;
    for (int k = 0; k < dim(); ++k)
      if (a[k] != b[k]) s += slope[k] / shape_[k];
    v.push_back(s);
  }
  return ScalarCochain1(complex_, std::move(v));
}

TorusGrid torus_complex(int d, int m) {
  if (d < 0) fail(ErrorCode::InvalidInput, "torus dimension must be non-negative");
  return TorusGrid(std::vector<int>(d, m));
}

}  // namespace slfol::forms
