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
#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "slfol/matrix.hpp"
#include "slfol/rational.hpp"

namespace slfol::algebra {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

/// Throws IndexOutOfRange unless 2 <= n <= 8.
void require_dimension(int n);

/// One element of the basis {E_ij : i != j} u {Y_i : 2 <= i <= n} of sl(n),
/// 1-based. Diagonal entries use i == j and stand for Y_i = E_ii - E_11.
struct BasisIndex {
  int i = 1;
  int j = 2;

  static BasisIndex off_diag(int i, int j) { return {i, j}; }
  static BasisIndex diag(int i) { return {i, i}; }

  bool is_diag() const noexcept { return i == j; }
  auto operator<=>(const BasisIndex&) const = default;

  /// "[i,j]"; Y_i prints as "[i,i]".
  std::string label() const;
};

/// Basis ordering used for coefficient vectors: E_ij row-major, then Y_2..Y_n.
const std::vector<BasisIndex>& basis(int n);
std::size_t basis_position(const BasisIndex& idx, int n);
void require_valid(const BasisIndex& idx, int n);

struct Dims {
  int h;         // Cartan part: diagonal, trace zero
  int offdiag;   // span of E_ij, i != j
  int total;
};
Dims dims(int n);

template <class T>
Matrix<T> basis_matrix(const BasisIndex& idx, int n) {
  require_valid(idx, n);
  Matrix<T> m(n, n);
  if (idx.is_diag()) {
    m(0, 0) = T(-1);
    m(idx.i - 1, idx.i - 1) = T(1);
  } else {
    m(idx.i - 1, idx.j - 1) = T(1);
  }
  return m;
}

/// Element of sl(n) as a coefficient vector over basis(n).
template <class T>
class BasicAlgebraElement {
 public:
  BasicAlgebraElement() = default;
  explicit BasicAlgebraElement(int n) : n_(n), coeffs_(dims(n).total, T(0)) {}
  BasicAlgebraElement(int n, std::vector<T> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(dims(n).total)) {
      fail(ErrorCode::DimensionMismatch, "sl(" + std::to_string(n) + ") needs " +
                                             std::to_string(dims(n).total) + " coefficients, got " +
                                             std::to_string(coeffs_.size()));
    }
  }

  static BasicAlgebraElement unit(const BasisIndex& idx, int n) {
    BasicAlgebraElement e(n);
    e.coeffs_[basis_position(idx, n)] = T(1);
    return e;
  }

  /// Decomposes a traceless matrix; throws InvalidInput when the trace is
  /// not zero (exactly for Rational, to 1e-12 relative for double).
  static BasicAlgebraElement from_matrix(const Matrix<T>& m);

  int n() const noexcept { return n_; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  const T& operator[](const BasisIndex& idx) const { return coeffs_[basis_position(idx, n_)]; }
  T& operator[](const BasisIndex& idx) { return coeffs_[basis_position(idx, n_)]; }

  Matrix<T> to_matrix() const {
    Matrix<T> m(n_, n_);
    std::size_t k = 0;
    for (const auto& idx : basis(n_)) {
      const T& c = coeffs_[k++];
      if (c == T(0)) continue;
      if (idx.is_diag()) {
        m(0, 0) -= c;
        m(idx.i - 1, idx.i - 1) += c;
      } else {
        m(idx.i - 1, idx.j - 1) += c;
      }
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != T(0)) return false;
    return true;
  }

  BasicAlgebraElement& operator+=(const BasicAlgebraElement& o) {
    require_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BasicAlgebraElement& operator-=(const BasicAlgebraElement& o) {
    require_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  BasicAlgebraElement& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend BasicAlgebraElement operator+(BasicAlgebraElement a, const BasicAlgebraElement& b) { return a += b; }
  friend BasicAlgebraElement operator-(BasicAlgebraElement a, const BasicAlgebraElement& b) { return a -= b; }
  friend BasicAlgebraElement operator*(const T& s, BasicAlgebraElement a) { return a *= s; }
  friend BasicAlgebraElement operator-(BasicAlgebraElement a) { return a *= T(-1); }
  friend bool operator==(const BasicAlgebraElement& a, const BasicAlgebraElement& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same(const BasicAlgebraElement& o) const {
    if (n_ != o.n_) fail(ErrorCode::DimensionMismatch, "algebra elements of different dimension");
  }

  int n_ = 0;
  std::vector<T> coeffs_;
};

template <class T>
BasicAlgebraElement<T> BasicAlgebraElement<T>::from_matrix(const Matrix<T>& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "algebra element needs a square matrix");
  const int n = static_cast<int>(m.rows());
  require_dimension(n);
  const T tr = m.trace();
  if constexpr (std::is_floating_point_v<T>) {
    T scale = 1;
    for (const auto& x : m.data()) scale = std::max<T>(scale, std::abs(x));
    if (std::abs(tr) > 1e-12 * scale) fail(ErrorCode::InvalidInput, "matrix is not traceless");
  } else {
    if (tr != T(0)) fail(ErrorCode::InvalidInput, "matrix is not traceless");
  }
  BasicAlgebraElement e(n);
  std::size_t k = 0;
  for (const auto& idx : basis(n)) {
    e.coeffs_[k++] = idx.is_diag() ? m(idx.i - 1, idx.i - 1) : m(idx.i - 1, idx.j - 1);
  }
  return e;
}

using AlgebraElement = BasicAlgebraElement<Rational>;
using FAlgebraElement = BasicAlgebraElement<double>;

FAlgebraElement to_float(const AlgebraElement& x);

/// Commutator xy - yx, re-expressed in the basis.
template <class T>
BasicAlgebraElement<T> bracket(const BasicAlgebraElement<T>& x, const BasicAlgebraElement<T>& y) {
  if (x.n() != y.n()) fail(ErrorCode::DimensionMismatch, "bracket of elements of different dimension");
  const Matrix<T> a = x.to_matrix();
  const Matrix<T> b = y.to_matrix();
  return BasicAlgebraElement<T>::from_matrix(a * b - b * a);
}

struct CartanSplit {
  AlgebraElement h;
  AlgebraElement offdiag;
};
CartanSplit cartan_split(const AlgebraElement& x);

/// Full bracket table over basis pairs, indexed by basis positions.
class StructureTable {
 public:
  explicit StructureTable(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<BasisIndex>& basis_order() const noexcept { return basis_; }
  const AlgebraElement& operator()(std::size_t a, std::size_t b) const { return table_[a * basis_.size() + b]; }
  const AlgebraElement& at(const BasisIndex& x, const BasisIndex& y) const;

  /// Bracket computed bilinearly from the table.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Number of pairs with table[x,y] != -table[y,x].
  std::size_t antisymmetry_violations() const;
  /// Number of basis triples whose Jacobi sum is non-zero.
  std::size_t jacobi_violations() const;

 private:
  int n_;
  std::vector<BasisIndex> basis_;
  std::vector<AlgebraElement> table_;
};

StructureTable build_structure_table(int n);

struct IdentityAudit {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // e.g. "[1,2]x[2,3]"
};

/// Checks every OffDiag x OffDiag entry of the table against the four
/// closed-form families for [E_ij, E_kl].
IdentityAudit audit_offdiag_identities(const StructureTable& table);

/// Expected [E_ij, E_kl] from the closed-form families, as a matrix.
RMatrix offdiag_bracket_formula(int i, int j, int k, int l, int n);

/// Rank of the n^2 - 1 basis matrices viewed as vectors in R^{n^2}.
std::size_t basis_rank(int n);

}  // namespace slfol::algebra
