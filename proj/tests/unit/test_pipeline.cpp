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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "slfol/io.hpp"
#include "slfol/pipeline.hpp"

using namespace slfol;
using namespace slfol::pipeline;

namespace {

foliation::LieFoliationSpec spec(const std::string& name) { return io::spec_from_json(io::example(name)); }

}  // namespace

TEST_CASE("combination order") {
  const auto order = combination_order(8);
  REQUIRE(order.size() >= 2);
  CHECK(order[0] == Coefficients{1, 0});
  CHECK(order[1] == Coefficients{0, 1});
  std::set<Coefficients> seen(order.begin(), order.end());
  CHECK(seen.size() == order.size());
  int last_height = 1;
  std::size_t brute = 2;
  for (int a = 1; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b)
      if (b != 0 && std::gcd(a, b) == 1) ++brute;
  CHECK(order.size() == brute);
  for (std::size_t k = 2; k < order.size(); ++k) {
    const auto [a, b] = order[k];
    CHECK(a > 0);
    CHECK(b != 0);
    CHECK(std::gcd(a, b) == 1);
    const int h = std::max(a, std::abs(b));
    CHECK(h >= last_height);
    last_height = h;
  }
  CHECK(order[2] == Coefficients{1, -1});
  CHECK(order[3] == Coefficients{1, 1});
  CHECK(combination_order(1).size() == 4);
}

TEST_CASE("pipeline on the product SL(2) foliation") {
  const auto r = pipeline_sln(spec("product-sl2"));
  REQUIRE(r.completed());
  CHECK(r.group == "SL(2)");
  CHECK(r.stages.size() == 9);
  CHECK(std::all_of(r.stages.begin(), r.stages.end(), [](const Stage& s) { return s.ok; }));
  CHECK(r.chosen == Coefficients{1, 0});
  REQUIRE(r.rationalized);
  CHECK(r.rationalized->periods[0] == Rational(8, 23));
  CHECK(r.rationalized->q == 23);
  CHECK(r.rationalized->sup_change <= 0.01);
  REQUIRE(r.circle);
  CHECK(r.circle->periods == std::vector<Integer>{8, 0});
  CHECK(r.submersion->passed());
  CHECK(r.census.size() == 10);
  CHECK(r.census_constant);
  for (const auto& c : r.census) CHECK(c.count() == 8);
}

TEST_CASE("pipeline output is deterministic") {
  const auto s = spec("product-sl2");
  const PipelineConfig cfg;
  const auto a = io::pipeline_report_to_json(pipeline_sln(s, cfg), cfg).dump(2);
  const auto b = io::pipeline_report_to_json(pipeline_sln(s, cfg), cfg).dump(2);
  CHECK(a == b);
}

TEST_CASE("pipeline on abelian specs") {
  const auto r = pipeline_sln(spec("abelian-r2"));
  REQUIRE(r.completed());
  CHECK(r.rationalized->q == 1);
  for (const auto& c : r.census) CHECK(c.count() == 1);

  const auto line = pipeline_sln(spec("linear-t2"));
  REQUIRE(line.completed());
  CHECK(line.rationalized->q == 12);
  CHECK(line.circle->periods == std::vector<Integer>{12, 17});
  for (const auto& c : line.census) CHECK(c.count() == 1);

  const auto z = pipeline_sln(spec("zero-r2"));
  CHECK(!z.completed());
  CHECK(z.failure == ErrorCode::NoSubmersion);
  CHECK(z.stages.back().name == "select");
  CHECK(!z.stages.back().ok);
  CHECK(z.tried.size() == combination_order(8).size());
}

TEST_CASE("pipeline failures are recorded") {
  const auto ga = pipeline_sln(spec("ga-suspension"));
  CHECK(ga.failure == ErrorCode::GroupMismatch);

  PipelineConfig tight;
  tight.rationalize = {1e-12, 10};
  const auto r = pipeline_sln(spec("product-sl2"), tight);
  CHECK(r.failure == ErrorCode::BudgetInfeasible);
  CHECK(r.stages.back().name == "rationalize");

  auto bent = spec("product-sl2");
  std::get<forms::LieCochain1>(bent.cochain)[3][algebra::BasisIndex::off_diag(1, 2)] += 0.05;
  const auto nf = pipeline_sln(bent);
  CHECK(!nf.completed());
  CHECK(nf.stages.front().name == "maurer-cartan");
  CHECK(!nf.stages.front().ok);

  PipelineConfig bad;
  bad.census_values = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}
