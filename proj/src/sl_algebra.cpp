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

#include "slfol/sl_algebra.hpp"

#include <array>

#include "slfol/linalg.hpp"

namespace slfol::algebra {

void require_dimension(int n) {
  if (n < kMinDim || n > kMaxDim) {
    fail(ErrorCode::IndexOutOfRange, "dimension n=" + std::to_string(n) + " outside [2, 8]");
  }
}

std::string BasisIndex::label() const { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

const std::vector<BasisIndex>& basis(int n) {
  require_dimension(n);
  static const std::array<std::vector<BasisIndex>, kMaxDim + 1> table = [] {
    std::array<std::vector<BasisIndex>, kMaxDim + 1> t;
    for (int m = kMinDim; m <= kMaxDim; ++m) {
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          if (i != j) t[m].push_back(BasisIndex::off_diag(i, j));
      for (int i = 2; i <= m; ++i) t[m].push_back(BasisIndex::diag(i));
    }
    return t;
  }();
  return table[n];
}

void require_valid(const BasisIndex& idx, int n) {
  require_dimension(n);
  const bool ok = idx.is_diag() ? (idx.i >= 2 && idx.i <= n)
                                : (idx.i >= 1 && idx.i <= n && idx.j >= 1 && idx.j <= n);
  if (!ok) fail(ErrorCode::IndexOutOfRange, "basis index " + idx.label() + " invalid for n=" + std::to_string(n));
}

std::size_t basis_position(const BasisIndex& idx, int n) {
  require_valid(idx, n);
  if (idx.is_diag()) return static_cast<std::size_t>(n * n - n + (idx.i - 2));
  // Row-major over the off-diagonal slots: row i contributes n - 1 entries.
  const int row = idx.i - 1;
  const int col = idx.j - 1;
  return static_cast<std::size_t>(row * (n - 1) + (col < row ? col : col - 1));
}

Dims dims(int n) {
  if (n < kMinDim) fail(ErrorCode::IndexOutOfRange, "dims needs n >= 2");
  Dims d{n - 1, n * n - n, n * n - 1};
  if (d.h + d.offdiag != d.total) fail(ErrorCode::InvalidInput, "dimension count mismatch");
  return d;
}

FAlgebraElement to_float(const AlgebraElement& x) {
  std::vector<double> c;
  c.reserve(x.coeffs().size());
  for (const auto& v : x.coeffs()) c.push_back(v.get_d());
  return FAlgebraElement(x.n(), std::move(c));
}

CartanSplit cartan_split(const AlgebraElement& x) {
  CartanSplit s{AlgebraElement(x.n()), AlgebraElement(x.n())};
  for (const auto& idx : basis(x.n())) {
    (idx.is_diag() ? s.h : s.offdiag)[idx] = x[idx];
  }
  return s;
}

StructureTable::StructureTable(int n) : n_(n), basis_(basis(n)) {
  const std::size_t d = basis_.size();
  std::vector<RMatrix> mats;
  mats.reserve(d);
  for (const auto& idx : basis_) mats.push_back(basis_matrix<Rational>(idx, n));
  table_.reserve(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      table_.push_back(AlgebraElement::from_matrix(mats[a] * mats[b] - mats[b] * mats[a]));
}

const AlgebraElement& StructureTable::at(const BasisIndex& x, const BasisIndex& y) const {
  return (*this)(basis_position(x, n_), basis_position(y, n_));
}

AlgebraElement StructureTable::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.n() != n_ || y.n() != n_) fail(ErrorCode::DimensionMismatch, "element dimension differs from table");
  AlgebraElement out(n_);
  const std::size_t d = basis_.size();
  for (std::size_t a = 0; a < d; ++a) {
    if (x.coeffs()[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y.coeffs()[b] == 0) continue;
      out += Rational(x.coeffs()[a] * y.coeffs()[b]) * (*this)(a, b);
    }
  }
  return out;
}

std::size_t StructureTable::antisymmetry_violations() const {
  std::size_t bad = 0;
  const std::size_t d = basis_.size();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b)
      if (!((*this)(a, b) + (*this)(b, a)).is_zero()) ++bad;
  return bad;
}

std::size_t StructureTable::jacobi_violations() const {
  const std::size_t d = basis_.size();
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;
  std::vector<Sparse> sparse(d * d);
  for (std::size_t k = 0; k < d * d; ++k) {
    const auto& c = table_[k].coeffs();
    for (std::size_t e = 0; e < d; ++e)
      if (c[e] != 0) sparse[k].emplace_back(e, c[e]);
  }
  std::vector<Rational> acc(d);
  std::vector<std::size_t> touched;
  // acc += [basis_a, sum_e coeff_e basis_e]
  auto add_outer = [&](std::size_t a, const Sparse& inner) {
    for (const auto& [e, ce] : inner)
      for (const auto& [f, cf] : sparse[a * d + e]) {
        if (acc[f] == 0) touched.push_back(f);
        acc[f] += ce * cf;
      }
  };
  std::size_t bad = 0;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        add_outer(x, sparse[y * d + z]);
        add_outer(y, sparse[z * d + x]);
        add_outer(z, sparse[x * d + y]);
        bool zero = true;
        for (std::size_t f : touched) {
          if (acc[f] != 0) zero = false;
          acc[f] = 0;
        }
        touched.clear();
        if (!zero) ++bad;
      }
  return bad;
}

StructureTable build_structure_table(int n) { return StructureTable(n); }

RMatrix offdiag_bracket_formula(int i, int j, int k, int l, int n) {
  require_valid(BasisIndex::off_diag(i, j), n);
  require_valid(BasisIndex::off_diag(k, l), n);
  RMatrix m(n, n);
  if (j == k && i == l) {
    m(i - 1, i - 1) = 1;
    m(j - 1, j - 1) = -1;
  } else if (j == k) {
    m(i - 1, l - 1) = 1;
  } else if (l == i) {
    m(k - 1, j - 1) = -1;
  }
  return m;
}

IdentityAudit audit_offdiag_identities(const StructureTable& table) {
  IdentityAudit audit;
  const int n = table.n();
  for (const auto& x : table.basis_order()) {
    if (x.is_diag()) continue;
    for (const auto& y : table.basis_order()) {
      if (y.is_diag()) continue;
      ++audit.checked;
      if (table.at(x, y).to_matrix() != offdiag_bracket_formula(x.i, x.j, y.i, y.j, n)) {
        audit.failures.push_back(x.label() + "x" + y.label());
      }
    }
  }
  return audit;
}

std::size_t basis_rank(int n) {
  const auto& b = basis(n);
  RMatrix rows(b.size(), static_cast<std::size_t>(n * n));
  for (std::size_t r = 0; r < b.size(); ++r) {
    const RMatrix m = basis_matrix<Rational>(b[r], n);
    for (std::size_t k = 0; k < m.data().size(); ++k) rows(r, k) = m.data()[k];
  }
  return linalg::rank(rows);
}

}  // namespace slfol::algebra
