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
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "slfol/tischler.hpp"
#include "slfol/torus.hpp"

using namespace slfol;
using namespace slfol::tischler;
using forms::RationalCochain1;
using forms::TorusGrid;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

RationalCochain1 linear(const TorusGrid& grid, const std::vector<Rational>& slope) {
  RationalCochain1 w(grid.complex(), Rational(0));
  const auto basis = grid.dual_basis();
  for (std::size_t k = 0; k < slope.size(); ++k) {
    auto part = basis[k];
    w += part.scale(slope[k]);
  }
  return w;
}

}  // namespace

TEST_CASE("continued fraction convergents") {
  const Rational sqrt2 = exact_rational(std::numbers::sqrt2);
  const auto c = convergents(sqrt2, 100);
  REQUIRE(c.size() == 6);
  const std::vector<Rational> expect{q(1), q(3, 2), q(7, 5), q(17, 12), q(41, 29), q(99, 70)};
  CHECK(c == expect);
  CHECK(approximate_period(sqrt2, 0.01, 1'000'000) == q(17, 12));
  CHECK(approximate_period(sqrt2, 1e-4, 100) == q(99, 70));
  CHECK(code_of([&] { approximate_period(sqrt2, 1e-9, 100); }) == ErrorCode::BudgetInfeasible);

  const Rational half_log2 = exact_rational(0.5 * std::log(2.0));
  CHECK(approximate_period(half_log2, 0.01, 1'000'000) == q(8, 23));
  CHECK(convergents(q(7, 3), 10).back() == q(7, 3));
  CHECK(approximate_period(q(-5, 4), 0.01, 10) == q(-5, 4));
}

TEST_CASE("rationalizing dx + sqrt2 dy on T^2") {
  const TorusGrid grid({16, 16});
  const auto w = grid.linear_cochain(std::vector<double>{1.0, std::numbers::sqrt2});
  const auto r = rationalize(w, torus_homology(grid), {});
  CHECK(r.periods == std::vector<Rational>{q(1), q(17, 12)});
  CHECK(r.q == 12);
  CHECK(r.closedness < 1e-15);
  CHECK(r.sup_change <= 0.01);
  CHECK(r.sup_change == doctest::Approx((17.0 / 12.0 - std::numbers::sqrt2) / 16.0).epsilon(1e-6));

  const auto f = integrate_to_circle(r.cochain, torus_homology(grid).cycles);
  CHECK(f.q == 12);
  CHECK(f.periods == std::vector<Integer>{12, 17});
  CHECK(check_submersion(f).passed());
  for (const auto& c : generic_values(f, 10)) CHECK(fiber_census(f, c).count() == 1);
}

TEST_CASE("rationalize failure modes") {
  const TorusGrid grid({8, 8});
  const auto h = torus_homology(grid);
  const auto w = grid.linear_cochain(std::vector<double>{1.0, std::numbers::sqrt2});
  CHECK(code_of([&] { rationalize(w, h, {1e-9, 100}); }) == ErrorCode::BudgetInfeasible);

  auto bent = linear(grid, {q(1), q(0)});
  bent[0] += q(1, 100);
  CHECK(code_of([&] { rationalize(bent, h, {}); }) == ErrorCode::NotClosed);

  HomologyData short_basis{{h.cycles[0]}, {h.dual_basis[0]}};
  CHECK(code_of([&] { rationalize(linear(grid, {q(1), q(1)}), short_basis, {}); }) == ErrorCode::CyclesDoNotSpan);

  HomologyData swapped{h.cycles, {h.dual_basis[1], h.dual_basis[0]}};
  CHECK(code_of([&] { rationalize(linear(grid, {q(1), q(1)}), swapped, {}); }) == ErrorCode::CyclesDoNotSpan);

  CHECK(code_of([] { RationalizeConfig{0.0, 10}.validate(); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { RationalizeConfig{0.1, 0}.validate(); }) == ErrorCode::InvalidInput);
}

TEST_CASE("integral and half-integral periods") {
  const TorusGrid grid({4, 4});
  const auto h = torus_homology(grid);
  const auto dx = rationalize(linear(grid, {q(1), q(0)}), h, {});
  CHECK(dx.q == 1);
  CHECK(dx.sup_change == 0.0);
  const auto f = integrate_to_circle(dx.cochain, h.cycles);
  CHECK(f.periods == std::vector<Integer>{1, 0});
  for (int v = 0; v < grid.complex()->num_vertices(); ++v) CHECK(f.values[v] == q(grid.coords(v)[0], 4));
  CHECK(fiber_census(f, q(1, 8)).count() == 1);

  const TorusGrid g8({8, 8});
  const auto h8 = torus_homology(g8);
  const auto half = rationalize(linear(g8, {q(1), q(3, 2)}), h8, {});
  CHECK(half.q == 2);
  const auto f2 = integrate_to_circle(half.cochain, h8.cycles);
  CHECK(f2.periods == std::vector<Integer>{2, 3});
  for (const auto& c : generic_values(f2, 10)) CHECK(fiber_census(f2, c).count() == 1);
}

TEST_CASE("an exact closed perturbation keeps its potential") {
  const TorusGrid grid({6, 6});
  std::vector<Rational> g(grid.complex()->num_vertices());
  for (std::size_t v = 0; v < g.size(); ++v) g[v] = q(static_cast<long>(v % 5), 1000);
  auto w = linear(grid, {q(1), q(2)});
  w += forms::gradient<Rational>(grid.complex(), g);
  const auto r = rationalize(w, torus_homology(grid), {});
  CHECK(r.q == 1);
  CHECK(r.sup_change == 0.0);
  CHECK(r.cochain.values() == w.values());
}

TEST_CASE("tree order does not change the circle map") {
  const TorusGrid grid({8, 8});
  const auto h = torus_homology(grid);
  const auto r = rationalize(linear(grid, {q(1), q(3, 2)}), h, {});
  const auto bfs = integrate_to_circle(r.cochain, h.cycles, forms::TreeOrder::BreadthFirst, 5);
  const auto dfs = integrate_to_circle(r.cochain, h.cycles, forms::TreeOrder::DepthFirst, 5);
  CHECK(bfs.values == dfs.values);
  CHECK(bfs.values[5] == 0);
  const auto other_root = integrate_to_circle(r.cochain, h.cycles, forms::TreeOrder::BreadthFirst, 0);
  CHECK(other_root.values != bfs.values);
}

TEST_CASE("circle integration rejects unusable periods") {
  const TorusGrid grid({8, 8});
  const auto h = torus_homology(grid);
  const auto w = linear(grid, {q(1, 7), q(1, 11)});
  CHECK(code_of([&] { integrate_to_circle(w, h.cycles, forms::TreeOrder::BreadthFirst, 0, 50); }) ==
        ErrorCode::NonRationalPeriods);
  CHECK_NOTHROW(integrate_to_circle(w, h.cycles, forms::TreeOrder::BreadthFirst, 0, 77));

  // Periods 1 and 0 but a hidden non-integral loop outside the listed cycles.
  CHECK(code_of([&] { integrate_to_circle(linear(grid, {q(1), q(1, 2)}), {h.cycles[0]}); }) ==
        ErrorCode::NonRationalPeriods);
}

TEST_CASE("submersion check") {
  const TorusGrid grid({4, 4});
  const auto n = grid.complex()->num_triangles();
  const auto dx = linear(grid, {q(1), q(0)});
  CHECK(check_submersion(dx).passed());
  CHECK(check_submersion(dx).simplices == n);

  const RationalCochain1 zero(grid.complex(), Rational(0));
  CHECK(check_submersion(zero).failing.size() == n);

  auto holed = dx;
  for (const auto& e : grid.complex()->triangle_edges(3)) holed[e.edge] = 0;
  CHECK(check_submersion(holed).failing == std::vector<std::size_t>{3});

  const auto tiny = grid.linear_cochain(std::vector<double>{1e-12, 0.0});
  CHECK(check_submersion(tiny).passed());
  CHECK(check_submersion(tiny, 1e-9).failing.size() == n);
}

TEST_CASE("fiber census counts gcd of periods") {
  for (int trial = 0; trial < 25; ++trial) {
    const int a = testing::uniform_int(-6, 6);
    int b = testing::uniform_int(-6, 6);
    if (a == 0 && b == 0) b = 1;
    const TorusGrid grid({7, 5});
    const auto h = torus_homology(grid);
    const auto f = integrate_to_circle(linear(grid, {q(a), q(b)}), h.cycles);
    CHECK(f.periods == std::vector<Integer>{a, b});
    const auto expect = static_cast<std::size_t>(std::gcd(a, b));
    for (const auto& c : generic_values(f, 4)) CHECK(fiber_census(f, c).count() == expect);
  }
}

TEST_CASE("fiber census on T^3 and non-generic levels") {
  const TorusGrid grid({4, 4, 4});
  const auto h = torus_homology(grid);
  const auto f = integrate_to_circle(linear(grid, {q(2), q(0), q(4)}), h.cycles);
  CHECK(check_submersion(f).passed());
  CHECK(fiber_census(f, q(1, 16)).count() == 2);
  CHECK(fiber_census(f, q(17, 16)).count() == 2);
  CHECK(code_of([&] { fiber_census(f, q(1, 2)); }) == ErrorCode::NonGeneric);
}

TEST_CASE("generic values avoid vertex images") {
  const TorusGrid grid({4, 4});
  const auto f = integrate_to_circle(linear(grid, {q(1), q(0)}), torus_homology(grid).cycles);
  const auto vals = generic_values(f, 10);
  CHECK(vals.size() == 10);
  for (const auto& c : vals) {
    CHECK(c >= 0);
    CHECK(c < 1);
    for (const auto& v : f.values) CHECK(c != v);
  }
  CHECK(std::is_sorted(vals.begin(), vals.end()));
}
