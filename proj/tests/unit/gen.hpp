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

// Seeded random generators shared by the property tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "slfol/group_decomp.hpp"
#include "slfol/linalg.hpp"
#include "slfol/matrix.hpp"

namespace slfol::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline FMatrix random_matrix(int n, double scale = 1.0) {
  FMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform(-scale, scale);
  return m;
}

/// Random matrix with condition kept moderate, rescaled to det 1.
inline FMatrix random_sl(int n) {
  while (true) {
    FMatrix m = random_matrix(n) + FMatrix::identity(n) * 1.5;
    double det = linalg::determinant(m);
    if (std::abs(det) < 0.2) continue;
    if (det < 0) {
      for (int j = 0; j < n; ++j) m(0, j) = -m(0, j);
      det = -det;
    }
    return m * (1.0 / std::pow(det, 1.0 / n));
  }
}

inline decomp::GAElement random_ga() { return {std::exp(uniform(-2.0, 2.0)), uniform(-3.0, 3.0)}; }

}  // namespace slfol::testing
