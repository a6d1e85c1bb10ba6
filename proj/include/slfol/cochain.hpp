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
#include <string>
#include <utility>
#include <vector>

#include "slfol/complex.hpp"
#include "slfol/error.hpp"
#include "slfol/rational.hpp"
#include "slfol/sl_algebra.hpp"

namespace slfol::forms {

/// Value per stored edge; reading an edge against its orientation negates.
template <class T>
class Cochain1 {
 public:
  Cochain1(ComplexPtr complex, T fill) : complex_(std::move(complex)), values_(complex_->num_edges(), fill) {}
  Cochain1(ComplexPtr complex, std::vector<T> values) : complex_(std::move(complex)), values_(std::move(values)) {
    if (values_.size() != complex_->num_edges()) {
      fail(ErrorCode::DimensionMismatch, "cochain has " + std::to_string(values_.size()) + " values for " +
                                             std::to_string(complex_->num_edges()) + " edges");
    }
  }

  const ComplexPtr& complex() const noexcept { return complex_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<T>& values() const noexcept { return values_; }

  const T& operator[](std::size_t edge) const { return values_[edge]; }
  T& operator[](std::size_t edge) { return values_[edge]; }

  T value(const OrientedEdge& e) const { return e.sign > 0 ? values_[e.edge] : T(-values_[e.edge]); }
  T value(int u, int v) const { return value(complex_->edge_between(u, v)); }

  Cochain1& operator+=(const Cochain1& o) {
    require_same(o);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
  }
  Cochain1& operator-=(const Cochain1& o) {
    require_same(o);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
  }
  template <class S>
  Cochain1& scale(const S& s) {
    for (auto& v : values_) v = s * v;
    return *this;
  }
  friend Cochain1 operator+(Cochain1 a, const Cochain1& b) { return a += b; }
  friend Cochain1 operator-(Cochain1 a, const Cochain1& b) { return a -= b; }

 private:
  void require_same(const Cochain1& o) const {
    if (complex_ != o.complex_) fail(ErrorCode::InvalidInput, "cochains live on different complexes");
  }

  ComplexPtr complex_;
  std::vector<T> values_;
};

using ScalarCochain1 = Cochain1<double>;
using RationalCochain1 = Cochain1<Rational>;
using LieCochain1 = Cochain1<algebra::FAlgebraElement>;

/// Throws DimensionMismatch unless every value lives in sl(n).
void require_lie_dimension(const LieCochain1& w, int n);

inline ScalarCochain1 to_float(const RationalCochain1& w) {
  std::vector<double> v;
  v.reserve(w.size());
  for (const auto& x : w.values()) v.push_back(x.get_d());
  return ScalarCochain1(w.complex(), std::move(v));
}

inline RationalCochain1 to_exact(const ScalarCochain1& w) {
  std::vector<Rational> v;
  v.reserve(w.size());
  for (double x : w.values()) v.push_back(exact_rational(x));
  return RationalCochain1(w.complex(), std::move(v));
}

/// df for a vertex function f: (df)(u, v) = f(v) - f(u).
template <class T>
Cochain1<T> gradient(const ComplexPtr& complex, std::span<const T> f) {
  if (f.size() != static_cast<std::size_t>(complex->num_vertices())) {
    fail(ErrorCode::DimensionMismatch, "vertex function size differs from vertex count");
  }
  std::vector<T> v;
  v.reserve(complex->num_edges());
  for (const auto& e : complex->edges()) v.push_back(T(f[e[1]] - f[e[0]]));
  return Cochain1<T>(complex, std::move(v));
}

/// (dw)(a, b, c) = w(a, b) + w(b, c) - w(a, c), one value per triangle.
template <class T>
std::vector<T> coboundary(const Cochain1<T>& w) {
  const auto& c = *w.complex();
  std::vector<T> out;
  out.reserve(c.num_triangles());
  for (std::size_t t = 0; t < c.num_triangles(); ++t) {
    const auto& te = c.triangle_edges(t);
    out.push_back(T(w.value(te[0]) + w.value(te[1]) - w.value(te[2])));
  }
  return out;
}

/// Sum of w along the cycle.
template <class T>
T period(const Cochain1<T>& w, const Cycle& cycle) {
  T sum(0);
  for (const auto& s : cycle.steps()) {
    if (s.edge >= w.size()) fail(ErrorCode::BrokenCycle, "cycle does not belong to the cochain's complex");
    sum += w.value(s);
  }
  return sum;
}

double max_abs(std::span<const double> values);
Rational max_abs(std::span<const Rational> values);

}  // namespace slfol::forms
