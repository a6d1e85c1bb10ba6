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

#include <cstdint>
#include <optional>
#include <vector>

#include "slfol/cochain.hpp"
#include "slfol/complex.hpp"
#include "slfol/linalg.hpp"
#include "slfol/rational.hpp"
#include "slfol/torus.hpp"

namespace slfol::tischler {

struct RationalizeConfig {
  double epsilon = 0.01;
  std::int64_t max_denominator = 1'000'000;

  void validate() const;
};

/// Homology generators with a closed dual basis: period(eta_k, c_j) = delta_kj.
struct HomologyData {
  std::vector<forms::Cycle> cycles;
  std::vector<forms::RationalCochain1> dual_basis;
};

/// Generators and coordinate cochains of a grid torus.
HomologyData torus_homology(const forms::TorusGrid& grid);

/// Convergents h_n / k_n of the continued fraction of x, stopping before the
/// first denominator above max_denominator.
std::vector<Rational> convergents(const Rational& x, const Integer& max_denominator);

/// First convergent within epsilon of p; throws BudgetInfeasible.
Rational approximate_period(const Rational& p, double epsilon, std::int64_t max_denominator);

struct RationalizeResult {
  forms::RationalCochain1 cochain;  // w'
  std::vector<Rational> input_periods;
  std::vector<Rational> periods;
  Integer q = 1;
  double closedness = 0.0;   // max |d w| of the input
  double sup_change = 0.0;   // max |w - w'|
};

/// w' = d f + sum_k r_k eta_k, where f integrates w - sum_k p_k eta_k along a
/// spanning tree. w' is exactly closed with periods exactly r_k.
RationalizeResult rationalize(const forms::RationalCochain1& w, const HomologyData& homology,
                              const RationalizeConfig& cfg, const ToleranceContext& tol = {});
RationalizeResult rationalize(const forms::ScalarCochain1& w, const HomologyData& homology,
                              const RationalizeConfig& cfg, const ToleranceContext& tol = {});

struct CircleMap {
  forms::ComplexPtr complex;
  std::vector<Rational> values;       // in [0, 1)
  forms::RationalCochain1 increments; // q w'
  std::vector<Integer> periods;       // pullback periods along the cycles
  Integer q = 1;
};

/// f(v) = sum of q w' along the tree path from `root`, mod 1. Throws
/// NonRationalPeriods when q exceeds max_denominator or q w' has a
/// non-integral period, Disconnected when the complex is.
CircleMap integrate_to_circle(const forms::RationalCochain1& w, const std::vector<forms::Cycle>& cycles,
                              forms::TreeOrder order = forms::TreeOrder::BreadthFirst, int root = 0,
                              std::int64_t max_denominator = 1'000'000);
CircleMap integrate_to_circle(const forms::ScalarCochain1& w, const std::vector<forms::Cycle>& cycles,
                              forms::TreeOrder order = forms::TreeOrder::BreadthFirst, int root = 0,
                              std::int64_t max_denominator = 1'000'000);

struct SubmersionReport {
  std::size_t simplices = 0;
  std::vector<std::size_t> failing;  // top simplices with zero gradient

  bool passed() const { return failing.empty(); }
};

SubmersionReport check_submersion(const forms::RationalCochain1& w);
/// Edge values with |x| <= zero_tol count as zero.
SubmersionReport check_submersion(const forms::ScalarCochain1& w, double zero_tol = 0.0);
SubmersionReport check_submersion(const CircleMap& f);

struct FiberCensus {
  Rational value;
  std::size_t crossings = 0;
  std::vector<std::vector<std::size_t>> components;  // crossed edges, sorted

  std::size_t count() const { return components.size(); }
};

/// Components of the level set f = value (mod 1), built from edge crossings
/// joined inside each top simplex. Throws NonGeneric when value is the image
/// of a vertex.
FiberCensus fiber_census(const CircleMap& f, const Rational& value);

/// `count` generic values spread evenly over the gaps between vertex images;
/// a gap holding j values is cut into j + 1 equal parts.
std::vector<Rational> generic_values(const CircleMap& f, int count);

}  // namespace slfol::tischler
