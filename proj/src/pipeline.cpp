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

#include "slfol/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "slfol/group_decomp.hpp"

namespace slfol::pipeline {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string label(const Coefficients& c) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
}

forms::ScalarCochain1 combine(const std::vector<forms::ScalarCochain1>& w, const Coefficients& c) {
  forms::ScalarCochain1 out(w.front().complex(), 0.0);
  for (std::size_t k = 0; k < w.size() && k < 2; ++k) {
    if (c[k] == 0) continue;
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += c[k] * w[k][e];
  }
  return out;
}

}  // namespace

void PipelineConfig::validate() const {
  rationalize.validate();
  if (census_values < 1) fail(ErrorCode::InvalidInput, "census needs at least one value");
  if (max_height < 1) fail(ErrorCode::InvalidInput, "combination height must be at least 1");
}

std::vector<Coefficients> combination_order(int max_height) {
  std::vector<Coefficients> out{{1, 0}, {0, 1}};
  for (int h = 1; h <= max_height; ++h)
    for (int a = 1; a <= h; ++a)
      for (int b = -h; b <= h; ++b) {
        if (b == 0 || std::max(a, std::abs(b)) != h || std::gcd(a, std::abs(b)) != 1) continue;
        out.push_back({a, b});
      }
  return out;
}

PipelineReport pipeline_sln(const foliation::LieFoliationSpec& spec, const PipelineConfig& cfg,
                            const ToleranceContext& tol) {
  using foliation::GroupKind;
  PipelineReport report;
  report.group = spec.group.tag();
  std::string stage = "config";
  auto pass = [&](std::string detail) { report.stages.push_back({stage, true, std::move(detail)}); };

  try {
    cfg.validate();
    tol.validate();
    if (!spec.complex) fail(ErrorCode::InvalidInput, "spec has no complex");

    stage = "maurer-cartan";
    const auto mc = foliation::check_mc(spec, tol);
    if (!mc.flat) {
      fail(ErrorCode::CheckFailed, std::to_string(mc.non_flat_triangles.size()) + " triangles fail flatness");
    }
    pass("flat; algebra rank " + std::to_string(mc.min_rank) + " of " + std::to_string(mc.expected_rank) +
         (mc.surjective ? "" : " (not surjective)"));

    stage = "split";
    std::vector<forms::ScalarCochain1> components;
    std::optional<foliation::Projection> projection;
    if (spec.group.kind == GroupKind::SL) {
      const auto fs = decomp::factor_split(spec.group.dim);
      report.split = "SL(" + std::to_string(fs.n) + ") = SO(" + std::to_string(fs.n) + ") x R^" +
                     std::to_string(fs.g1_coords) + " x R^2";
      pass(report.split + "; chart length " + std::to_string(fs.chart_len));

      stage = "project";
      projection = foliation::project_foliation_unchecked(spec, {foliation::ProductKind::SLnChart, 1}, 2, tol);
      components = std::get<std::vector<forms::ScalarCochain1>>(projection->spec.cochain);
      pass("equivariance " + num(projection->equivariance) + ", consistency " + num(projection->consistency));
    } else if (spec.group.kind == GroupKind::Abelian && spec.group.dim <= 2) {
      report.split = "R^" + std::to_string(spec.group.dim) + " (no split)";
      pass(report.split);
      components = std::get<std::vector<forms::ScalarCochain1>>(spec.cochain);
    } else {
      fail(ErrorCode::GroupMismatch, "pipeline needs SL(n), R^2 or R, got " + spec.group.tag());
    }

    stage = "closedness";
    for (const auto& w : components) {
      const auto d = forms::coboundary(w);
      report.closedness.push_back(forms::max_abs(std::span<const double>(d)));
    }
    const double worst = *std::max_element(report.closedness.begin(), report.closedness.end());
    if (worst > tol.eq_tol) fail(ErrorCode::CheckFailed, "factor component not closed: max |dw| = " + num(worst));
    if (projection && !projection->passed(tol)) {
      fail(ErrorCode::CheckFailed, "projected foliation is not equivariant or not consistent");
    }
    pass("max |dw| = " + num(worst));

    stage = "select";
    std::optional<forms::ScalarCochain1> chosen;
    for (const auto& c : combination_order(cfg.max_height)) {
      if (components.size() < 2 && c[1] != 0) break;
      report.tried.push_back(c);
      auto w = combine(components, c);
      if (tischler::check_submersion(w, tol.eq_tol).passed()) {
        report.chosen = c;
        chosen = std::move(w);
        break;
      }
    }
    if (!chosen) {
      std::string tried;
      for (const auto& c : report.tried) tried += (tried.empty() ? "" : " ") + label(c);
      fail(ErrorCode::NoSubmersion, "no submersive combination among " + tried);
    }
    pass("a w1 + b w2 with (a,b) = " + label(*report.chosen));

    stage = "rationalize";
    tischler::HomologyData homology =
        cfg.homology ? *cfg.homology : tischler::torus_homology(forms::TorusGrid(spec.complex));
    report.rationalized = tischler::rationalize(*chosen, homology, cfg.rationalize, tol);
    pass("q = " + report.rationalized->q.get_str() + ", |w - w'| = " + num(report.rationalized->sup_change));

    stage = "integrate";
    report.circle = tischler::integrate_to_circle(report.rationalized->cochain, homology.cycles,
                                                  forms::TreeOrder::BreadthFirst, 0,
                                                  cfg.rationalize.max_denominator);
    pass("circle map with scale " + report.circle->q.get_str());

    stage = "submersion";
    report.submersion = tischler::check_submersion(*report.circle);
    if (!report.submersion->passed()) {
      fail(ErrorCode::NoSubmersion,
           std::to_string(report.submersion->failing.size()) + " top simplices have zero gradient");
    }
    pass(std::to_string(report.submersion->simplices) + " top simplices");

    stage = "census";
    for (const auto& v : tischler::generic_values(*report.circle, cfg.census_values)) {
      report.census.push_back(tischler::fiber_census(*report.circle, v));
    }
    report.census_constant = !report.census.empty() &&
                             std::all_of(report.census.begin(), report.census.end(),
                                         [&](const auto& c) { return c.count() == report.census.front().count(); });
    if (!report.census_constant) fail(ErrorCode::CheckFailed, "fiber component count varies across levels");
    pass(std::to_string(report.census.front().count()) + " components at " + std::to_string(report.census.size()) +
         " levels");
  } catch (const Error& e) {
    report.failure = e.code();
    report.message = e.what();
    report.stages.push_back({stage, false, e.what()});
  }
  return report;
}

}  // namespace slfol::pipeline
