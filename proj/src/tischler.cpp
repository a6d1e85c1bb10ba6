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

#include "slfol/tischler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace slfol::tischler {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

using forms::Cycle;
using forms::OrientedEdge;
using forms::RationalCochain1;

void RationalizeConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) fail(ErrorCode::InvalidInput, "epsilon must be positive");
  if (max_denominator < 1) fail(ErrorCode::InvalidInput, "max_denominator must be at least 1");
}

HomologyData torus_homology(const forms::TorusGrid& grid) {
  return {grid.homology_generators(), grid.dual_basis()};
}

std::vector<Rational> convergents(const Rational& x, const Integer& max_denominator) {
  std::vector<Rational> out;
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Rational rest = x;
  while (true) {
    const Integer a = floor(rest);
    const Integer h = a * h1 + h2;
    const Integer k = a * k1 + k2;
    if (k > max_denominator) break;
    out.emplace_back(h, k);
    out.back().canonicalize();
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return out;
}

Rational approximate_period(const Rational& p, double epsilon, std::int64_t max_denominator) {
  const Rational eps = exact_rational(epsilon);
  const auto cands = convergents(p, Integer(static_cast<long>(max_denominator)));
  for (const auto& r : cands) {
    if (abs(r - p) <= eps) return r;
  }
  std::string best = cands.empty() ? "none" : to_string(cands.back());
  const double err = cands.empty() ? 0.0 : to_double(abs(cands.back() - p));
  fail(ErrorCode::BudgetInfeasible, "no convergent of " + num(to_double(p)) + " within " + num(epsilon) +
                                        " under denominator " + std::to_string(max_denominator) + " (best " + best +
                                        ", error " + num(err) + ")");
}

namespace {

void require_on(const forms::ComplexPtr& complex, const RationalCochain1& w, const char* what) {
  if (w.complex() != complex) fail(ErrorCode::InvalidInput, std::string(what) + " lives on another complex");
}

// Vertex potential of u along a spanning tree, u(root) = 0.
std::vector<Rational> integrate_tree(const RationalCochain1& u, forms::TreeOrder order, int root) {
  const auto& complex = *u.complex();
  const auto tree = forms::spanning_tree(complex, root, order);
  std::vector<Rational> f(complex.num_vertices());
  for (int v : tree.order) {
    if (!tree.parent[v]) continue;
    const OrientedEdge& e = *tree.parent[v];
    f[v] = f[complex.tail(e)] + u.value(e);
  }
  return f;
}

// Smallest-denominator rational in [a, b].
Rational simplest_between(const Rational& a, const Rational& b) {
  if (a <= 0 && b >= 0) return 0;
  if (b < 0) return -simplest_between(-b, -a);
  const Integer n = floor(a);
  if (Rational(n) == a) return a;
  if (Rational(n + 1) <= b) return Rational(n + 1);
  return Rational(n) + 1 / simplest_between(1 / (b - Rational(n)), 1 / (a - Rational(n)));
}

}  // namespace

RationalizeResult rationalize(const RationalCochain1& w, const HomologyData& homology, const RationalizeConfig& cfg,
                              const ToleranceContext& tol) {
  cfg.validate();
  tol.validate();
  const auto& complex = w.complex();
  const std::size_t rank = homology.cycles.size();
  if (homology.dual_basis.size() != rank) {
    fail(ErrorCode::InvalidInput, "one dual cochain per homology generator required");
  }
  if (complex->num_vertices() == 0) fail(ErrorCode::DegenerateComplex, "empty complex");

  RationalizeResult res{w, {}, {}, 1, 0.0, 0.0};
  for (const auto& c : forms::coboundary(w)) res.closedness = std::max(res.closedness, std::abs(to_double(c)));
  if (res.closedness > tol.eq_tol) {
    fail(ErrorCode::NotClosed, "cochain is not closed: max |dw| = " + num(res.closedness));
  }
  for (std::size_t k = 0; k < rank; ++k) {
    const auto& eta = homology.dual_basis[k];
    require_on(complex, eta, "dual basis");
    for (const auto& c : forms::coboundary(eta))
      if (c != 0) fail(ErrorCode::InvalidInput, "dual basis cochain " + std::to_string(k) + " is not closed");
    for (std::size_t j = 0; j < rank; ++j) {
      if (forms::period(eta, homology.cycles[j]) != (j == k ? 1 : 0)) {
        fail(ErrorCode::CyclesDoNotSpan, "dual basis is not dual to the cycles");
      }
    }
  }

  RationalCochain1 u = w;
  for (std::size_t k = 0; k < rank; ++k) {
    const Rational p = forms::period(w, homology.cycles[k]);
    res.input_periods.push_back(p);
    res.periods.push_back(approximate_period(p, cfg.epsilon, cfg.max_denominator));
    u -= RationalCochain1(homology.dual_basis[k]).scale(p);
  }

  auto f = integrate_tree(u, forms::TreeOrder::BreadthFirst, 0);
  const Rational snap = exact_rational(tol.eq_tol);
  for (auto& x : f) x = simplest_between(x - snap, x + snap);
  const double exact_tol = std::max(tol.residual_tol, tol.eq_tol * static_cast<double>(complex->num_triangles()));
  std::vector<Rational> grad;
  grad.reserve(complex->num_edges());
  for (std::size_t e = 0; e < complex->num_edges(); ++e) {
    const auto [a, b] = complex->edges()[e];
    grad.push_back(f[b] - f[a]);
    if (std::abs(to_double(grad.back() - u[e])) > exact_tol) {
      fail(ErrorCode::CyclesDoNotSpan, "cochain has a period outside the given cycles (edge " + std::to_string(e) + ")");
    }
  }
  RationalCochain1 out(complex, std::move(grad));
  for (std::size_t k = 0; k < rank; ++k) {
    out += RationalCochain1(homology.dual_basis[k]).scale(res.periods[k]);
    res.q = lcm(res.q, res.periods[k].get_den());
  }
  for (std::size_t e = 0; e < complex->num_edges(); ++e) {
    res.sup_change = std::max(res.sup_change, std::abs(to_double(out[e] - w[e])));
  }
  if (res.sup_change > cfg.epsilon) {
    fail(ErrorCode::BudgetInfeasible, "period change moves an edge by " + num(res.sup_change) +
                                          ", above epsilon " + num(cfg.epsilon));
  }
  res.cochain = std::move(out);
  return res;
}

RationalizeResult rationalize(const forms::ScalarCochain1& w, const HomologyData& homology, const RationalizeConfig& cfg,
                              const ToleranceContext& tol) {
  for (double x : w.values())
    if (!std::isfinite(x)) fail(ErrorCode::InvalidInput, "cochain has a non-finite value");
  return rationalize(forms::to_exact(w), homology, cfg, tol);
}

CircleMap integrate_to_circle(const RationalCochain1& w, const std::vector<Cycle>& cycles, forms::TreeOrder order,
                              int root, std::int64_t max_denominator) {
  const auto& complex = w.complex();
  CircleMap out{complex, {}, w, {}, 1};
  std::vector<Rational> periods;
  for (const auto& c : cycles) {
    periods.push_back(forms::period(w, c));
    out.q = lcm(out.q, periods.back().get_den());
  }
  if (out.q > Integer(static_cast<long>(max_denominator))) {
    fail(ErrorCode::NonRationalPeriods, "period denominators need q = " + out.q.get_str() + ", above " +
                                            std::to_string(max_denominator));
  }
  out.increments.scale(Rational(out.q));
  for (const auto& p : periods) out.periods.push_back(Rational(p * out.q).get_num());

  const auto lifted = integrate_tree(out.increments, order, root);
  for (std::size_t e = 0; e < complex->num_edges(); ++e) {
    const auto [a, b] = complex->edges()[e];
    const Rational gap = lifted[b] - lifted[a] - out.increments[e];
    if (gap.get_den() != 1) {
      fail(ErrorCode::NonRationalPeriods, "q w' has a non-integral period through edge " + std::to_string(e));
    }
  }
  out.values.reserve(lifted.size());
  for (const auto& x : lifted) out.values.push_back(fractional_part(x));
  return out;
}

CircleMap integrate_to_circle(const forms::ScalarCochain1& w, const std::vector<Cycle>& cycles, forms::TreeOrder order,
                              int root, std::int64_t max_denominator) {
  for (double x : w.values())
    if (!std::isfinite(x)) fail(ErrorCode::InvalidInput, "cochain has a non-finite value");
  return integrate_to_circle(forms::to_exact(w), cycles, order, root, max_denominator);
}

namespace {

template <class IsZero>
SubmersionReport submersion_of(const forms::SimplicialComplex& complex, IsZero&& is_zero) {
  SubmersionReport r;
  const auto& tops = complex.top_simplex_edges();
  r.simplices = tops.size();
  for (std::size_t s = 0; s < tops.size(); ++s) {
    if (std::all_of(tops[s].begin(), tops[s].end(), is_zero)) r.failing.push_back(s);
  }
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SubmersionReport check_submersion(const RationalCochain1& w) {
  return submersion_of(*w.complex(), [&](std::size_t e) { return w[e] == 0; });
}

SubmersionReport check_submersion(const forms::ScalarCochain1& w, double zero_tol) {
  return submersion_of(*w.complex(), [&](std::size_t e) { return std::abs(w[e]) <= zero_tol; });
}

SubmersionReport check_submersion(const CircleMap& f) { return check_submersion(f.increments); }

FiberCensus fiber_census(const CircleMap& f, const Rational& value) {
  const auto& complex = *f.complex;
  const Rational c = fractional_part(value);
  for (int v = 0; v < complex.num_vertices(); ++v) {
    if (f.values[v] == c) fail(ErrorCode::NonGeneric, "level " + to_string(c) + " is the image of vertex " + std::to_string(v));
  }

  // A crossing is (edge, k): level c + k met between f(tail) and f(tail) + increment.
  std::map<std::pair<std::size_t, Integer>, std::size_t> ids;
  std::vector<std::size_t> edge_of;
  UnionFind uf;
  auto crossing = [&](std::size_t e, const Integer& k) {
    auto [it, fresh] = ids.try_emplace({e, k}, 0);
    if (fresh) {
      it->second = uf.add();
      edge_of.push_back(e);
    }
    return it->second;
  };

  for (const auto& simplex : complex.top_simplices()) {
    const int base = simplex.front();
    std::map<int, Rational> lift{{base, f.values[base]}};
    for (std::size_t a = 1; a < simplex.size(); ++a) {
      lift[simplex[a]] = f.values[base] + f.increments.value(complex.edge_between(base, simplex[a]));
    }
    std::map<Integer, std::vector<std::size_t>> by_level;
    for (std::size_t a = 0; a < simplex.size(); ++a)
      for (std::size_t b = a + 1; b < simplex.size(); ++b) {
        const std::size_t e = complex.edge_between(simplex[a], simplex[b]).edge;
        const int tail = complex.edges()[e][0];
        const Integer shift = floor(lift[tail] - f.values[tail]);
        const Rational lo = std::min(lift[simplex[a]], lift[simplex[b]]);
        const Rational hi = std::max(lift[simplex[a]], lift[simplex[b]]);
        for (Integer j = floor(lo - c) + 1; Rational(c + j) < hi; ++j) {
          by_level[j].push_back(crossing(e, Integer(j - shift)));
        }
      }
    for (const auto& [j, pts] : by_level)
      for (std::size_t k = 1; k < pts.size(); ++k) uf.unite(pts[0], pts[k]);
  }

  FiberCensus out{c, edge_of.size(), {}};
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t id = 0; id < edge_of.size(); ++id) groups[uf.find(id)].push_back(edge_of[id]);
  for (auto& [root, edges] : groups) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.components.push_back(std::move(edges));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

std::vector<Rational> generic_values(const CircleMap& f, int count) {
  std::vector<Rational> levels = f.values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Rational> out;
  if (levels.empty() || count <= 0) return out;
  const std::size_t gaps = levels.size();
  const std::size_t n = static_cast<std::size_t>(count);
  // Values per gap: spread evenly, several per gap when gaps are scarce.
  std::vector<std::size_t> per_gap(gaps, 0);
  for (std::size_t i = 0; i < n; ++i) ++per_gap[i * gaps / n];
  for (std::size_t g = 0; g < gaps; ++g) {
    const Rational lo = levels[g];
    const Rational hi = g + 1 < gaps ? levels[g + 1] : levels.front() + 1;
    for (std::size_t j = 0; j < per_gap[g]; ++j) {
      Rational t(static_cast<long>(j + 1), static_cast<long>(per_gap[g] + 1));
      t.canonicalize();
      out.push_back(fractional_part(lo + (hi - lo) * t));
    }
  }
  return out;
}

}  // namespace slfol::tischler
