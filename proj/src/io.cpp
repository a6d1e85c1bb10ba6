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

#include "slfol/io.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <type_traits>

#include "slfol/group_decomp.hpp"
#include "slfol/sl_algebra.hpp"
#include "slfol/torus.hpp"

namespace slfol::io {

using foliation::Group;
using foliation::GroupElement;
using foliation::GroupKind;

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::InvalidInput, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> ints_from_json(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

std::string edge_key(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

forms::OrientedEdge parse_edge_key(const forms::SimplicialComplex& c, const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == key.size()) bad("edge key \"" + key + "\" is not u-v");
  try {
    std::size_t used_u = 0, used_v = 0;
    const int u = std::stoi(key.substr(0, dash), &used_u);
    const int v = std::stoi(key.substr(dash + 1), &used_v);
    if (used_u != dash || used_v != key.size() - dash - 1) bad("edge key \"" + key + "\" is not u-v");
    auto e = c.find_edge(u, v);
    if (!e) bad("no edge " + key);
    return *e;
  } catch (const std::logic_error&) {
    bad("edge key \"" + key + "\" is not u-v");
  }
}

// Edge-keyed object -> one value per edge, oriented along the stored edge.
template <class T, class Parse>
std::vector<T> edge_values(const forms::SimplicialComplex& c, const json& j, T zero, Parse&& parse) {
  if (!j.is_object()) bad("cochain must be an object keyed by \"u-v\"");
  std::vector<T> out(c.num_edges(), zero);
  std::vector<char> seen(c.num_edges(), 0);
  for (const auto& [key, value] : j.items()) {
    const auto e = parse_edge_key(c, key);
    if (seen[e.edge]) bad("edge " + key + " given twice");
    seen[e.edge] = 1;
    T x = parse(value);
    if (e.sign < 0) {
      if constexpr (std::is_same_v<T, std::vector<double>>) {
        for (auto& y : x) y = -y;
      } else {
        x = T(-x);
      }
    }
    out[e.edge] = std::move(x);
  }
  return out;
}

json summary(const forms::SimplicialComplex& c) {
  return {{"vertices", c.num_vertices()}, {"edges", c.num_edges()}, {"triangles", c.num_triangles()},
          {"top_simplices", c.top_simplices().size()}};
}

template <class T>
json number_list(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x);
  return out;
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json integer_list(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Scalars and matrices

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) bad("non-finite number");
    return exact_rational(x);
  }
  bad("expected a number or a \"p/q\" string");
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  return to_double(rational_from_json(j));
}

json to_json(const Rational& r) { return to_string(r); }

FMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? field(j, "matrix") : j;
  if (!rows.is_array() || rows.empty() || !rows.front().is_array()) bad("matrix must be a non-empty array of rows");
  const std::size_t n = rows.size(), m = rows.front().size();
  FMatrix out(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != m) bad("matrix rows differ in length");
    for (std::size_t c = 0; c < m; ++c) out(r, c) = number_from_json(rows[r][c]);
  }
  return out;
}

json to_json(const FMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complexes

forms::ComplexPtr complex_from_json(const json& j) {
  if (j.is_object() && j.contains("torus")) return forms::TorusGrid(ints_from_json(j.at("torus"), "torus shape")).complex();
  const int nv = int_from_json(field(j, "vertices"), "vertex count");
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : field(j, "edges")) {
    const auto v = ints_from_json(e, "edge");
    if (v.size() != 2) bad("edge needs two vertices");
    edges.push_back({v[0], v[1]});
  }
  std::vector<std::array<int, 3>> triangles;
  if (j.contains("triangles")) {
    for (const auto& t : j.at("triangles")) {
      const auto v = ints_from_json(t, "triangle");
      if (v.size() != 3) bad("triangle needs three vertices");
      triangles.push_back({v[0], v[1], v[2]});
    }
  }
  forms::SimplicialComplex::Options opts;
  opts.manifold_like = j.value("manifold", false);
  if (j.contains("simplices")) {
    for (const auto& s : j.at("simplices")) opts.top_simplices.push_back(ints_from_json(s, "simplex"));
  }
  if (j.contains("voltages")) {
    forms::CoveringData cov{int_from_json(field(j, "deck_rank"), "deck rank"), {}};
    for (const auto& v : j.at("voltages")) {
      cov.voltage.push_back(ints_from_json(v, "voltage"));
      if (cov.voltage.back().size() != static_cast<std::size_t>(cov.rank)) bad("voltage length differs from deck rank");
    }
    if (cov.voltage.size() != edges.size()) bad("one voltage per edge required");
    opts.covering = std::move(cov);
  }
  return std::make_shared<const forms::SimplicialComplex>(nv, std::move(edges), std::move(triangles), std::move(opts));
}

json complex_to_json(const forms::SimplicialComplex& c) {
  if (!c.grid_shape().empty()) return {{"torus", c.grid_shape()}};
  json out{{"vertices", c.num_vertices()}, {"edges", c.edges()}, {"triangles", c.triangles()}};
  if (c.manifold_like()) out["manifold"] = true;
  out["simplices"] = c.top_simplices();
  if (c.covering()) {
    out["deck_rank"] = c.covering()->rank;
    out["voltages"] = c.covering()->voltage;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Groups and specs

Group group_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "abelian") return Group::abelian(int_from_json(field(j, "dim"), "dim"));
  if (kind == "GA") return Group::ga();
  if (kind == "SL") return Group::sl(int_from_json(field(j, "n"), "n"));
  bad("unknown group kind \"" + kind + "\"");
}

json to_json(const Group& g) {
  switch (g.kind) {
    case GroupKind::Abelian: return {{"kind", "abelian"}, {"dim", g.dim}};
    case GroupKind::GA: return {{"kind", "GA"}};
    case GroupKind::SL: return {{"kind", "SL"}, {"n", g.dim}};
  }
  return {};
}

GroupElement element_from_json(const Group& g, const json& j) {
  if (g.kind == GroupKind::Abelian) {
    if (j.is_number() || j.is_string()) return std::vector<double>{number_from_json(j)};
    if (!j.is_array()) bad("abelian element must be a vector");
    std::vector<double> v;
    for (const auto& x : j) v.push_back(number_from_json(x));
    return v;
  }
  if (g.kind == GroupKind::GA && j.is_object()) {
    return foliation::from_ga(decomp::make_ga(number_from_json(field(j, "a")), number_from_json(field(j, "b"))));
  }
  return matrix_from_json(j);
}

json to_json(const GroupElement& a) {
  if (const auto* v = std::get_if<std::vector<double>>(&a)) return number_list(*v);
  return to_json(std::get<FMatrix>(a));
}

foliation::LieFoliationSpec spec_from_json(const json& j) {
  foliation::LieFoliationSpec spec{group_from_json(field(j, "group")), complex_from_json(field(j, "complex")), {}, {}, {}};
  if (!spec.complex->covering()) fail(ErrorCode::MissingCovering, "spec complex carries no covering data");
  for (const auto& h : field(j, "holonomy")) spec.holonomy.generators.push_back(element_from_json(spec.group, h));
  for (const auto& s : field(j, "developing")) {
    foliation::LiftKey key{int_from_json(field(s, "vertex"), "vertex"), ints_from_json(field(s, "deck"), "deck")};
    if (!spec.developing.samples.emplace(key, element_from_json(spec.group, field(s, "value"))).second) {
      bad("developing map sample given twice");
    }
  }
  const auto& c = *spec.complex;
  if (!j.contains("cochain")) {
    const std::vector<int> origin(c.covering()->rank, 0);
    std::vector<std::vector<double>> incs;
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
      const auto* du = spec.developing.find({c.edges()[e][0], origin});
      const auto* dv = spec.developing.find({c.edges()[e][1], c.covering()->voltage[e]});
      if (!du || !dv) bad("developing map lacks the canonical lift of edge " + std::to_string(e));
      incs.push_back(foliation::log_increment(spec.group, *du, *dv));
    }
    json derived = json::object();
    for (std::size_t e = 0; e < c.num_edges(); ++e) derived[edge_key(c.edges()[e][0], c.edges()[e][1])] = incs[e];
    json copy = j;
    copy["cochain"] = std::move(derived);
    return spec_from_json(copy);
  }
  const json& w = j.at("cochain");
  if (spec.group.kind == GroupKind::Abelian) {
    const int k = spec.group.dim;
    auto vals = edge_values<std::vector<double>>(c, w, std::vector<double>(k, 0.0), [&](const json& x) {
      auto v = std::get<std::vector<double>>(element_from_json(spec.group, x));
      if (v.size() != static_cast<std::size_t>(k)) bad("cochain value needs " + std::to_string(k) + " components");
      return v;
    });
    std::vector<forms::ScalarCochain1> comps;
    for (int i = 0; i < k; ++i) {
      std::vector<double> col;
      for (const auto& v : vals) col.push_back(v[i]);
      comps.emplace_back(spec.complex, std::move(col));
    }
    spec.cochain = std::move(comps);
  } else {
    const int n = spec.group.dim;
    auto vals = edge_values<algebra::FAlgebraElement>(c, w, algebra::FAlgebraElement(n), [&](const json& x) {
      if (x.is_array() && !x.empty() && x.front().is_array()) return algebra::FAlgebraElement::from_matrix(matrix_from_json(x));
      std::vector<double> coeffs;
      for (const auto& y : x) coeffs.push_back(number_from_json(y));
      return algebra::FAlgebraElement(n, std::move(coeffs));
    });
    spec.cochain = forms::LieCochain1(spec.complex, std::move(vals));
  }
  return spec;
}

json spec_to_json(const foliation::LieFoliationSpec& spec) {
  const auto& c = *spec.complex;
  json out{{"group", to_json(spec.group)}, {"complex", complex_to_json(c)}};
  json w = json::object();
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    const std::string key = edge_key(c.edges()[e][0], c.edges()[e][1]);
    if (const auto* lie = std::get_if<forms::LieCochain1>(&spec.cochain)) {
      w[key] = number_list((*lie)[e].coeffs());
    } else {
      json v = json::array();
      for (const auto& comp : std::get<std::vector<forms::ScalarCochain1>>(spec.cochain)) v.push_back(comp[e]);
      w[key] = std::move(v);
    }
  }
  out["cochain"] = std::move(w);
  json h = json::array();
  for (const auto& g : spec.holonomy.generators) h.push_back(to_json(g));
  out["holonomy"] = std::move(h);
  json dev = json::array();
  for (const auto& [key, value] : spec.developing.samples) {
    dev.push_back({{"vertex", key.vertex}, {"deck", key.deck}, {"value", to_json(value)}});
  }
  out["developing"] = std::move(dev);
  return out;
}

TischlerInput tischler_input_from_json(const json& j) {
  const auto complex = complex_from_json(field(j, "complex"));
  std::vector<Rational> values;
  if (j.contains("slope")) {
    if (complex->grid_shape().empty()) bad("\"slope\" needs a torus complex");
    const forms::TorusGrid grid(complex);
    const json& slope = j.at("slope");
    if (!slope.is_array() || slope.size() != static_cast<std::size_t>(grid.dim())) bad("slope length differs from torus dimension");
    values.assign(complex->num_edges(), Rational(0));
    for (int k = 0; k < grid.dim(); ++k) {
      const Rational s = rational_from_json(slope[k]);
      const auto eta = grid.coordinate_cochain(k);
      for (std::size_t e = 0; e < values.size(); ++e) values[e] += s * eta[e];
    }
  } else {
    values = edge_values<Rational>(*complex, field(j, "cochain"), Rational(0), rational_from_json);
  }
  TischlerInput in{forms::RationalCochain1(complex, std::move(values)), {}};

  if (j.contains("cycles")) {
    for (const auto& path : j.at("cycles")) in.homology.cycles.push_back(forms::Cycle::from_vertices(*complex, ints_from_json(path, "cycle")));
  }
  if (j.contains("dual_basis")) {
    for (const auto& eta : j.at("dual_basis")) {
      in.homology.dual_basis.emplace_back(complex, edge_values<Rational>(*complex, eta, Rational(0), rational_from_json));
    }
  }
  if (in.homology.cycles.empty() && in.homology.dual_basis.empty()) {
    if (complex->grid_shape().empty() && complex->num_vertices() != 1) {
      bad("non-torus complexes need \"cycles\" and \"dual_basis\"");
    }
    in.homology = tischler::torus_homology(forms::TorusGrid(complex));
  }
  return in;
}

// ---------------------------------------------------------------------------
// Reports

Outcome verify_brackets_report(int n) {
  const auto table = algebra::build_structure_table(n);
  const auto audit = algebra::audit_offdiag_identities(table);
  const std::size_t anti = table.antisymmetry_violations();
  const std::size_t jac = table.jacobi_violations();
  const auto d = algebra::dims(n);

  json basis = json::array();
  for (const auto& b : table.basis_order()) basis.push_back(b.label());
  json entries = json::object();
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = 0; b < table.size(); ++b) {
      const auto& x = table(a, b);
      if (x.is_zero()) continue;
      json coeffs = json::object();
      for (std::size_t c = 0; c < table.size(); ++c) {
        if (x.coeffs()[c] != 0) coeffs[table.basis_order()[c].label()] = to_json(x.coeffs()[c]);
      }
      entries[table.basis_order()[a].label() + "×" + table.basis_order()[b].label()] = std::move(coeffs);
    }
  Outcome out;
  out.passed = audit.failures.empty() && anti == 0 && jac == 0 && algebra::basis_rank(n) == static_cast<std::size_t>(d.total);
  out.report = {{"n", n},
                {"dims", {{"cartan", d.h}, {"offdiag", d.offdiag}, {"total", d.total}}},
                {"chart_length", decomp::chart_length(n)},
                {"basis_rank", algebra::basis_rank(n)},
                {"identities", {{"checked", audit.checked}, {"failures", audit.failures}}},
                {"antisymmetry_violations", anti},
                {"jacobi_violations", jac},
                {"basis", std::move(basis)},
                {"table", std::move(entries)},
                {"passed", out.passed}};
  return out;
}

Outcome decompose_report(const FMatrix& g, const ToleranceContext& tol) {
  const auto f = decomp::iwasawa_sln(g, tol);
  const auto split = decomp::factor_split(static_cast<int>(g.rows()));
  const double err = max_abs_diff(decomp::recompose_sln(f), g);
  Outcome out;
  out.passed = err <= tol.residual_tol;
  out.report = {{"n", g.rows()}, {"k", to_json(f.k)}, {"chart", f.chart}};
  out.report["split"] = {
      {"g1", std::vector<double>(f.chart.begin(), f.chart.begin() + static_cast<long>(split.g1_coords))},
      {"g2", std::vector<double>(f.chart.begin() + static_cast<long>(split.g2_begin), f.chart.end())}};
  if (g.rows() == 2) {
    const auto s = decomp::iwasawa_sl2(g, tol);
    out.report["ga"] = {{"a", s.ga.a}, {"b", s.ga.b}};
    out.report["angle"] = s.angle.value();
  }
  out.report["reconstruction_error"] = err;
  out.report["passed"] = out.passed;
  return out;
}

Outcome check_foliation_report(const foliation::LieFoliationSpec& spec, const ToleranceContext& tol) {
  const auto mc = foliation::check_mc(spec, tol);
  const auto cons = foliation::check_consistency(spec);
  const auto eq = foliation::check_equivariance(spec);
  Outcome out;
  out.passed = mc.passed() && cons.max_deviation <= tol.residual_tol && cons.max_commutator <= tol.eq_tol &&
               eq.passed(tol.residual_tol);
  out.report = {
      {"group", spec.group.tag()},
      {"complex", summary(*spec.complex)},
      {"samples", spec.developing.samples.size()},
      {"maurer_cartan",
       {{"flat", mc.flat},
        {"max_flatness", mc.max_flatness},
        {"max_holonomy", mc.max_holonomy},
        {"non_flat_triangles", mc.non_flat_triangles},
        {"surjective", mc.surjective},
        {"min_rank", mc.min_rank},
        {"expected_rank", mc.expected_rank},
        {"non_surjective_vertices", mc.non_surjective_vertices}}},
      {"consistency",
       {{"checked", cons.checked}, {"max_deviation", cons.max_deviation}, {"max_commutator", cons.max_commutator}}},
      {"equivariance",
       {{"checked", eq.checked}, {"max_deviation", eq.max_deviation}, {"per_generator", eq.per_generator}}},
      {"passed", out.passed}};
  return out;
}

Outcome tischler_report(const TischlerInput& input, const tischler::RationalizeConfig& cfg, const ToleranceContext& tol) {
  const auto r = tischler::rationalize(input.cochain, input.homology, cfg, tol);
  const auto f = tischler::integrate_to_circle(r.cochain, input.homology.cycles, forms::TreeOrder::BreadthFirst, 0,
                                               cfg.max_denominator);
  const auto sub = tischler::check_submersion(f);
  json census = json::array();
  std::set<std::size_t> counts;
  for (const auto& v : tischler::generic_values(f, 10)) {
    const auto c = tischler::fiber_census(f, v);
    counts.insert(c.count());
    census.push_back({{"value", to_json(v)}, {"components", c.count()}});
  }
  std::vector<double> input_periods;
  for (const auto& p : r.input_periods) input_periods.push_back(to_double(p));
  Outcome out;
  out.passed = sub.passed() && counts.size() == 1;
  out.report = {{"complex", summary(*input.cochain.complex())},
                {"epsilon", cfg.epsilon},
                {"max_denominator", cfg.max_denominator},
                {"closedness", r.closedness},
                {"input_periods", input_periods},
                {"periods", rational_list(r.periods)},
                {"q", to_int64(r.q)},
                {"sup_change", r.sup_change},
                {"pullback_periods", integer_list(f.periods)},
                {"submersion", {{"simplices", sub.simplices}, {"failing", sub.failing}}},
                {"census", std::move(census)},
                {"census_constant", counts.size() == 1},
                {"circle_map", rational_list(f.values)},
                {"passed", out.passed}};
  return out;
}

json pipeline_report_to_json(const pipeline::PipelineReport& r, const pipeline::PipelineConfig& cfg) {
  json stages = json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  json out{{"group", r.group}, {"split", r.split}, {"epsilon", cfg.rationalize.epsilon}, {"stages", std::move(stages)}};
  out["closedness"] = r.closedness;
  json tried = json::array();
  for (const auto& c : r.tried) tried.push_back(c);
  out["tried"] = std::move(tried);
  out["chosen"] = r.chosen ? json(*r.chosen) : json(nullptr);
  if (r.rationalized) {
    std::vector<double> input_periods;
    for (const auto& p : r.rationalized->input_periods) input_periods.push_back(to_double(p));
    out["input_periods"] = input_periods;
    out["periods"] = rational_list(r.rationalized->periods);
    out["q"] = to_int64(r.rationalized->q);
    out["sup_change"] = r.rationalized->sup_change;
  }
  if (r.circle) {
    out["pullback_periods"] = integer_list(r.circle->periods);
    out["circle_map"] = rational_list(r.circle->values);
  }
  if (r.submersion) out["submersion"] = {{"simplices", r.submersion->simplices}, {"failing", r.submersion->failing}};
  if (!r.census.empty()) {
    json census = json::array();
    for (const auto& c : r.census) census.push_back({{"value", to_json(c.value)}, {"components", c.count()}});
    out["census"] = std::move(census);
    out["census_constant"] = r.census_constant;
  }
  out["status"] = r.completed() ? "completed" : "failed";
  if (r.failure) out["error"] = {{"code", to_string(*r.failure)}, {"message", r.message}};
  return out;
}

// ---------------------------------------------------------------------------
// Examples

namespace {

// Keeps the lifts with deck coordinates in {0, 1}; enough for every check.
json compact(foliation::LieFoliationSpec spec) {
  std::erase_if(spec.developing.samples, [](const auto& kv) {
    for (int g : kv.first.deck)
      if (g < 0 || g > 1) return true;
    return false;
  });
  return spec_to_json(spec);
}

foliation::LieFoliationSpec abelian_linear(int m, bool two_dim) {
  const forms::TorusGrid grid({m, m});
  const double alpha = std::numbers::sqrt2;
  if (two_dim) {
    return foliation::develop_on_torus(
        grid, Group::abelian(2), {{std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, alpha}}},
        [alpha](std::span<const double> x) -> GroupElement { return std::vector<double>{x[0], alpha * x[1]}; });
  }
  return foliation::develop_on_torus(grid, Group::abelian(1), {{std::vector<double>{1.0}, std::vector<double>{alpha}}},
                                     [alpha](std::span<const double> x) -> GroupElement {
                                       return std::vector<double>{x[0] + alpha * x[1]};
                                     });
}

foliation::LieFoliationSpec ga_base() {
  return foliation::ga_suspension(forms::TorusGrid({16}), decomp::GAElement{2.0, 0.0}, 0.3);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"abelian-r2",      "linear-t2",        "zero-r2",          "ga-suspension",
          "product-sl2",     "tischler-t2",      "tischler-integral", "tischler-half",
          "tischler-nonclosed", "matrix-sl2",    "matrix-sl3",       "matrix-non-unimodular"};
}

json example(const std::string& name) {
  if (name == "abelian-r2") return compact(abelian_linear(16, true));
  if (name == "linear-t2") return compact(abelian_linear(16, false));
  if (name == "zero-r2") {
    return compact(foliation::develop_on_torus(
        forms::TorusGrid({8, 8}), Group::abelian(2), {{std::vector<double>{0.0, 0.0}, std::vector<double>{0.0, 0.0}}},
        [](std::span<const double>) -> GroupElement { return std::vector<double>{0.0, 0.0}; }));
  }
  if (name == "ga-suspension") return compact(ga_base());
  if (name == "product-sl2") return compact(foliation::product_foliation(ga_base()));
  if (name == "tischler-t2") return {{"complex", {{"torus", {16, 16}}}}, {"slope", {1.0, std::numbers::sqrt2}}};
  if (name == "tischler-integral") return {{"complex", {{"torus", {4, 4}}}}, {"slope", {1, 0}}};
  if (name == "tischler-half") return {{"complex", {{"torus", {8, 8}}}}, {"slope", {"1", "3/2"}}};
  if (name == "tischler-nonclosed") {
    const forms::TorusGrid grid({8, 8});
    const auto dx = grid.coordinate_cochain(0);
    json w = json::object();
    const auto& edges = grid.complex()->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      Rational v = dx[e];
      if (e == 0) v += Rational(1, 100);
      w[edge_key(edges[e][0], edges[e][1])] = to_json(v);
    }
    return {{"complex", {{"torus", {8, 8}}}}, {"cochain", std::move(w)}};
  }
  if (name == "matrix-sl2") return {{"matrix", {{2, 1}, {1, 1}}}};
  if (name == "matrix-sl3") return {{"matrix", {{2, 1, 1}, {1, 1, 1}, {1, 1, 2}}}};
  if (name == "matrix-non-unimodular") return {{"matrix", {{2, 0}, {0, 1}}}};
  bad("unknown example \"" + name + "\"");
}

}  // namespace slfol::io
