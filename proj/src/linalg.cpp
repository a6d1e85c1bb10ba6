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

#include "slfol/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <utility>

#include "slfol/error.hpp"

namespace slfol {

void ToleranceContext::validate() const {
  if (!(eq_tol > 0.0 && eq_tol <= residual_tol && residual_tol < 1.0)) {
    fail(ErrorCode::InvalidInput, "tolerances must satisfy 0 < eq_tol <= residual_tol < 1");
  }
}

namespace linalg {

namespace {

void require_square(const auto& a, const char* what) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, std::string(what) + " needs a square matrix, got " + a.shape());
}

}  // namespace

Rational determinant(const RMatrix& a) {
  require_square(a, "determinant");
  RMatrix m = a;
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

double determinant(const FMatrix& a) {
  require_square(a, "determinant");
  FMatrix m = a;
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (m(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      double factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

FMatrix inverse(const FMatrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  FMatrix m = a;
  FMatrix inv = FMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (m(pivot, col) == 0.0) fail(ErrorCode::Singular, "matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(pivot, j), m(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const double p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0.0) continue;
      const double f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const RMatrix& a) {
  RMatrix m = a;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational factor = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t numerical_rank(const FMatrix& a, double rel_threshold) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > rel_threshold * s(0)) ++r;
  return r;
}

QR qr_positive(const FMatrix& a, const ToleranceContext& tol) {
  require_square(a, "qr_positive");
  if (!all_finite(a)) fail(ErrorCode::InvalidInput, "matrix has non-finite entries");
  if (std::abs(determinant(a)) <= tol.residual_tol) fail(ErrorCode::Singular, "qr_positive: matrix is singular");
  const std::size_t n = a.rows();
  FMatrix q(n, n);
  FMatrix r(n, n);
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) v[i] = a(i, j);
    // Two passes of modified Gram-Schmidt keep Q orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, k) * v[i];
        r(k, j) += dot;
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) fail(ErrorCode::Singular, "qr_positive: dependent columns");
    r(j, j) = norm;
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / norm;
  }
  return {std::move(q), std::move(r)};
}

RQ rq_positive(const FMatrix& a, const ToleranceContext& tol) {
  require_square(a, "rq_positive");
  const std::size_t n = a.rows();
  // With P the reversal permutation: (P a)^T = Q0 R0 gives a = (P R0^T P)(P Q0^T).
  FMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(n - 1 - j, i);
  QR f = qr_positive(b, tol);
  FMatrix r(n, n);
  FMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = f.r(n - 1 - j, n - 1 - i);
      q(i, j) = f.q(j, n - 1 - i);
    }
  return {std::move(r), std::move(q)};
}

double operator_norm_inf(const FMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

FMatrix matrix_exp(const FMatrix& a) {
  require_square(a, "matrix_exp");
  const std::size_t n = a.rows();
  const double norm = operator_norm_inf(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  FMatrix b = a * std::ldexp(1.0, -squarings);
  FMatrix sum = FMatrix::identity(n);
  FMatrix term = FMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = term * b;
    term *= 1.0 / k;
    sum += term;
    if (max_abs(term) <= 1e-18 * max_abs(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

namespace {

// Denman-Beavers iteration for the principal square root.
FMatrix sqrtm(const FMatrix& a) {
  const std::size_t n = a.rows();
  FMatrix y = a;
  FMatrix z = FMatrix::identity(n);
  for (int it = 0; it < 100; ++it) {
    FMatrix y_next = (y + inverse(z)) * 0.5;
    FMatrix z_next = (z + inverse(y)) * 0.5;
    const double change = max_abs_diff(y_next, y);
    y = std::move(y_next);
    z = std::move(z_next);
    if (change <= 1e-16 * std::max(1.0, max_abs(y))) break;
  }
  return y;
}

}  // namespace

FMatrix matrix_log(const FMatrix& a) {
  require_square(a, "matrix_log");
  const std::size_t n = a.rows();
  const FMatrix id = FMatrix::identity(n);
  const double dist = operator_norm_inf(a - id);
  if (!(dist < 1.0)) {
    fail(ErrorCode::LogDomain, "matrix_log requires ||a - I|| < 1, got " + std::to_string(dist));
  }
  FMatrix m = a;
  int roots = 0;
  while (operator_norm_inf(m - id) > 0.25 && roots < 20) {
    m = sqrtm(m);
    ++roots;
  }
  // log m = 2 * sum_{k odd} z^k / k with z = (m - I)(m + I)^{-1}.
  const FMatrix z = (m - id) * inverse(m + id);
  const FMatrix z2 = z * z;
  FMatrix power = z;
  FMatrix sum(n, n);
  for (int k = 1; k < 200; k += 2) {
    FMatrix term = power * (1.0 / k);
    sum += term;
    if (max_abs(term) <= 1e-18 * std::max(max_abs(sum), 1e-300)) break;
    power = power * z2;
  }
  return sum * std::ldexp(2.0, roots);
}

}  // namespace linalg
}  // namespace slfol
