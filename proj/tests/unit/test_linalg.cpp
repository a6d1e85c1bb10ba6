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

#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "slfol/linalg.hpp"
#include "slfol/rational.hpp"

using namespace slfol;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("17/12") == Rational(17, 12));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(to_double(exact_rational(0.1)) == 0.1);
  CHECK(fractional_part(Rational(-1, 4)) == Rational(3, 4));
  CHECK(floor(Rational(-1, 4)) == -1);
  CHECK(ceil(Rational(1, 4)) == 1);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
}

TEST_CASE("tolerance context validation") {
  CHECK_NOTHROW(ToleranceContext{}.validate());
  CHECK_THROWS_AS((ToleranceContext{1e-8, 1e-10}.validate()), Error);
  CHECK_THROWS_AS((ToleranceContext{0.0, 1e-9}.validate()), Error);
}

TEST_CASE("exact determinant and rank") {
  const RMatrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(linalg::determinant(a) == -2);
  CHECK(linalg::rank(a) == 2);
  const RMatrix b{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(linalg::rank(b) == 1);
  CHECK(linalg::determinant(b) == 0);
}

TEST_CASE("matrix products and shapes") {
  const FMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const FMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  CHECK(a * b == FMatrix{{2.0, 1.0}, {4.0, 3.0}});
  CHECK(a.transpose() == FMatrix{{1.0, 3.0}, {2.0, 4.0}});
  CHECK(a.trace() == 5.0);
  const FMatrix c(2, 3);
  CHECK_THROWS_AS(a + c, Error);
  CHECK_THROWS_AS(c * c, Error);
}

TEST_CASE("inverse and singular input") {
  const FMatrix a{{4.0, 7.0}, {2.0, 6.0}};
  CHECK(max_abs_diff(linalg::inverse(a) * a, FMatrix::identity(2)) < 1e-14);
  CHECK_THROWS_AS(linalg::inverse(FMatrix{{1.0, 2.0}, {2.0, 4.0}}), Error);
}

TEST_CASE("numerical rank uses a relative threshold") {
  FMatrix m{{1.0, 0.0, 0.0}, {0.0, 1e-3, 0.0}, {0.0, 0.0, 1e-12}};
  CHECK(linalg::numerical_rank(m, 1e-8) == 2);
  CHECK(linalg::numerical_rank(FMatrix(3, 3), 1e-8) == 0);
}

TEST_CASE("qr and rq with positive diagonal (property)") {
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const FMatrix a = testing::random_sl(n);
      const auto qr = linalg::qr_positive(a);
      const auto rq = linalg::rq_positive(a);
      CHECK(max_abs_diff(qr.q * qr.r, a) < 1e-12);
      CHECK(max_abs_diff(rq.r * rq.q, a) < 1e-12);
      CHECK(max_abs_diff(qr.q.transpose() * qr.q, FMatrix::identity(n)) < 1e-12);
      CHECK(max_abs_diff(rq.q * rq.q.transpose(), FMatrix::identity(n)) < 1e-12);
      for (int i = 0; i < n; ++i) {
        CHECK(qr.r(i, i) > 0.0);
        CHECK(rq.r(i, i) > 0.0);
        for (int j = 0; j < i; ++j) {
          CHECK(qr.r(i, j) == 0.0);
          CHECK(rq.r(i, j) == 0.0);
        }
      }
    }
  }
  CHECK_THROWS_AS(linalg::qr_positive(FMatrix{{1.0, 1.0}, {1.0, 1.0}}), Error);
}

TEST_CASE("matrix exponential and logarithm") {
  const double t = 0.7;
  const FMatrix x{{0.0, -t}, {t, 0.0}};
  const FMatrix r{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
  CHECK(max_abs_diff(linalg::matrix_exp(x), r) < 1e-14);
  CHECK(max_abs_diff(linalg::matrix_log(r), x) < 1e-13);
  const FMatrix n{{0.0, 2.0}, {0.0, 0.0}};
  CHECK(max_abs_diff(linalg::matrix_exp(n), FMatrix{{1.0, 2.0}, {0.0, 1.0}}) == 0.0);

  for (int trial = 0; trial < 100; ++trial) {
    const FMatrix a = testing::random_matrix(3, 0.15);
    const FMatrix g = linalg::matrix_exp(a);
    CHECK(max_abs_diff(linalg::matrix_log(g), a) < 1e-12);
  }
  CHECK_THROWS_AS(linalg::matrix_log(FMatrix{{-1.0, 0.0}, {0.0, -1.0}}), Error);
}
