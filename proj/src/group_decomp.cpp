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

#include "slfol/group_decomp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slfol/sl_algebra.hpp"

namespace slfol::decomp {

GAElement make_ga(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) fail(ErrorCode::InvalidInput, "GA element must be finite");
  if (!(a > 0.0)) fail(ErrorCode::NonPositiveScale, "GA scale must be positive, got " + std::to_string(a));
  return {a, b};
}

GAElement ga_identity() { return {1.0, 0.0}; }

GAElement ga_mul(const GAElement& g, const GAElement& h) { return {g.a * h.a, g.a * h.b + g.b}; }

GAElement ga_inv(const GAElement& g) { return {1.0 / g.a, -g.b / g.a}; }

GAElement ga_power(const GAElement& g, double t) {
  const double at = std::pow(g.a, t);
  if (std::abs(g.a - 1.0) < 1e-12) return {at, g.b * t};
  return {at, g.b * (at - 1.0) / (g.a - 1.0)};
}

FMatrix ga_embed(const GAElement& g) {
  make_ga(g.a, g.b);
  const double s = 1.0 / std::sqrt(g.a);
  return FMatrix{{g.a * s, g.b * s}, {0.0, s}};
}

CircleAngle::CircleAngle(double theta) {
  if (!std::isfinite(theta)) fail(ErrorCode::InvalidInput, "angle must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  theta_ = r;
}

FMatrix rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return FMatrix{{c, -s}, {s, c}};
}

void require_unimodular(const FMatrix& g, const ToleranceContext& tol) {
  if (!g.is_square()) fail(ErrorCode::DimensionMismatch, "group element must be square, got " + g.shape());
  if (!all_finite(g)) fail(ErrorCode::InvalidInput, "matrix has non-finite entries");
  const double det = linalg::determinant(g);
  if (!(std::abs(det - 1.0) <= tol.eq_tol)) {
    fail(ErrorCode::NonUnimodular, "determinant " + std::to_string(det) + " is not 1");
  }
}

SL2Factors iwasawa_sl2(const FMatrix& g, const ToleranceContext& tol) {
  if (g.rows() != 2 || g.cols() != 2) fail(ErrorCode::DimensionMismatch, "iwasawa_sl2 needs a 2x2 matrix");
  require_unimodular(g, tol);
  const linalg::RQ f = linalg::rq_positive(g, tol);
  const double r11 = f.r(0, 0);
  return {GAElement{r11 * r11, f.r(0, 1) * r11}, CircleAngle(std::atan2(f.q(1, 0), f.q(0, 0)))};
}

FMatrix recompose_sl2(const SL2Factors& f) { return ga_embed(f.ga) * rotation(f.angle.value()); }

CircleAngle circle_projection(const FMatrix& g, const ToleranceContext& tol) { return iwasawa_sl2(g, tol).angle; }

IwasawaFactors iwasawa_sln(const FMatrix& g, const ToleranceContext& tol) {
  require_unimodular(g, tol);
  const int n = static_cast<int>(g.rows());
  algebra::require_dimension(n);
  const linalg::RQ f = linalg::rq_positive(g, tol);
  if (std::abs(linalg::determinant(f.q) - 1.0) > tol.residual_tol) {
    fail(ErrorCode::CheckFailed, "orthogonal factor does not have determinant +1");
  }
  IwasawaFactors out{f.q, {}};
  out.chart.reserve(chart_length(n));
  for (int i = 0; i + 1 < n; ++i) out.chart.push_back(std::log(f.r(i, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.chart.push_back(f.r(i, j) / f.r(i, i));
  return out;
}

FMatrix chart_to_upper(const std::vector<double>& chart, int n) {
  algebra::require_dimension(n);
  if (chart.size() != chart_length(n)) {
    fail(ErrorCode::DimensionMismatch, "chart for n=" + std::to_string(n) + " needs " +
                                           std::to_string(chart_length(n)) + " coordinates");
  }
  std::vector<double> diag(n);
  double log_sum = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    diag[i] = std::exp(chart[i]);
    log_sum += chart[i];
  }
  diag[n - 1] = std::exp(-log_sum);
  FMatrix upper(n, n);
  std::size_t k = static_cast<std::size_t>(n - 1);
  for (int i = 0; i < n; ++i) {
    upper(i, i) = diag[i];
    for (int j = i + 1; j < n; ++j) upper(i, j) = diag[i] * chart[k++];
  }
  return upper;
}

FMatrix recompose_sln(const IwasawaFactors& f) {
  const int n = static_cast<int>(f.k.rows());
  return chart_to_upper(f.chart, n) * f.k;
}

FactorSplit factor_split(int n) {
  if (n < 2) fail(ErrorCode::SplitTooSmall, "factor split needs n >= 2");
  algebra::require_dimension(n);
  const std::size_t len = chart_length(n);
  if (len < 2) fail(ErrorCode::SplitTooSmall, "chart too short for an R^2 factor");
  return {n, len, len - 2, len - 2};
}

std::array<double, 2> abelian_project(const FMatrix& g, const ToleranceContext& tol) {
  const IwasawaFactors f = iwasawa_sln(g, tol);
  const FactorSplit s = factor_split(static_cast<int>(g.rows()));
  return {f.chart[s.g2_begin], f.chart[s.g2_begin + 1]};
}

}  // namespace slfol::decomp
