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

#include "slfol/matrix.hpp"
#include "slfol/rational.hpp"

namespace slfol {

/// Numerical tolerances shared by every float-valued check.
struct ToleranceContext {
  double eq_tol = 1e-10;        // absolute comparison tolerance
  double residual_tol = 1e-9;   // reconstruction tolerance

  /// Throws InvalidInput unless 0 < eq_tol <= residual_tol < 1.
  void validate() const;
};

namespace linalg {

inline RMatrix multiply(const RMatrix& a, const RMatrix& b) { return a * b; }
inline FMatrix multiply(const FMatrix& a, const FMatrix& b) { return a * b; }

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(const RMatrix& a);
/// LU with partial pivoting.
double determinant(const FMatrix& a);

FMatrix inverse(const FMatrix& a);

/// Exact rank of an arbitrary (rows x cols) rational matrix.
std::size_t rank(const RMatrix& a);

/// Number of singular values above rel_threshold times the largest one.
std::size_t numerical_rank(const FMatrix& a, double rel_threshold);

struct QR {
  FMatrix q;
  FMatrix r;
};

/// a = Q R with Q orthogonal and R upper triangular with positive diagonal
/// (Gram-Schmidt, re-orthogonalized once). Unique under these constraints.
/// Throws Singular when |det a| <= tol.residual_tol.
QR qr_positive(const FMatrix& a, const ToleranceContext& tol = {});

struct RQ {
  FMatrix r;
  FMatrix q;
};

/// a = R Q with the same constraints on R and Q, obtained from qr_positive
/// of the row-reversed transpose.
RQ rq_positive(const FMatrix& a, const ToleranceContext& tol = {});

/// Max absolute row sum.
double operator_norm_inf(const FMatrix& a);

/// Scaling and squaring with a Taylor core.
FMatrix matrix_exp(const FMatrix& a);

/// Principal logarithm for ||a - I||_inf < 1 (induced infinity norm);
/// throws LogDomain otherwise. Inverse scaling and squaring with a Gregory
/// series core.
FMatrix matrix_log(const FMatrix& a);

}  // namespace linalg
}  // namespace slfol
