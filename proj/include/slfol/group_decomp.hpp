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

#include <array>
#include <cstddef>
#include <vector>

#include "slfol/linalg.hpp"
#include "slfol/matrix.hpp"

namespace slfol::decomp {

/// Orientation-preserving affine map x -> a x + b of the real line.
struct GAElement {
  double a = 1.0;
  double b = 0.0;
};

/// Throws NonPositiveScale unless a > 0 (and both finite).
GAElement make_ga(double a, double b);

GAElement ga_identity();
GAElement ga_mul(const GAElement& g, const GAElement& h);
GAElement ga_inv(const GAElement& g);
/// g^t along the one-parameter subgroup through g.
GAElement ga_power(const GAElement& g, double t);

/// (1/sqrt a) [[a, b], [0, 1]] in SL(2, R).
FMatrix ga_embed(const GAElement& g);

/// Point of R / 2 pi Z, stored in [0, 2 pi).
class CircleAngle {
 public:
  CircleAngle() = default;
  explicit CircleAngle(double theta);

  double value() const noexcept { return theta_; }

 private:
  double theta_ = 0.0;
};

/// sigma(theta) = [[cos, -sin], [sin, cos]].
FMatrix rotation(double theta);

/// Throws NonUnimodular unless g is square, finite, and |det g - 1| <= eq_tol.
void require_unimodular(const FMatrix& g, const ToleranceContext& tol);

struct SL2Factors {
  GAElement ga;
  CircleAngle angle;
};

/// g = ga_embed(ga) * rotation(angle).
SL2Factors iwasawa_sl2(const FMatrix& g, const ToleranceContext& tol = {});
FMatrix recompose_sl2(const SL2Factors& f);

/// Projection SL(2) -> SL(2)/GA = S^1 and its section.
CircleAngle circle_projection(const FMatrix& g, const ToleranceContext& tol = {});
inline FMatrix circle_section(const CircleAngle& angle) { return rotation(angle.value()); }

inline std::size_t chart_length(int n) { return static_cast<std::size_t>(n * (n + 1) / 2 - 1); }

/// g = A N K with K in SO(n), A positive diagonal, N unit upper triangular.
/// chart = (log A_11 .. log A_{n-1,n-1}, N strictly-upper entries row-major).
struct IwasawaFactors {
  FMatrix k;
  std::vector<double> chart;
};

IwasawaFactors iwasawa_sln(const FMatrix& g, const ToleranceContext& tol = {});
/// The A N part of a chart as an upper-triangular matrix.
FMatrix chart_to_upper(const std::vector<double>& chart, int n);
FMatrix recompose_sln(const IwasawaFactors& f);

/// SO(n) x R^{L-2} x R^2 with L the chart length; the R^2 factor is the last
/// two chart coordinates.
struct FactorSplit {
  int n = 2;
  std::size_t chart_len = 2;
  std::size_t g1_coords = 0;  // chart coordinates kept next to SO(n)
  std::size_t g2_begin = 0;   // index of the first R^2 coordinate
};

FactorSplit factor_split(int n);

/// The two R^2 coordinates of iwasawa_sln(g).
std::array<double, 2> abelian_project(const FMatrix& g, const ToleranceContext& tol = {});

}  // namespace slfol::decomp
