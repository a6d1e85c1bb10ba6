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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slfol/foliation.hpp"
#include "slfol/forms.hpp"
#include "slfol/group_decomp.hpp"
#include "slfol/io.hpp"
#include "slfol/linalg.hpp"
#include "slfol/pipeline.hpp"
#include "slfol/sl_algebra.hpp"
#include "slfol/tischler.hpp"
#include "slfol/torus.hpp"

using namespace slfol;

namespace {

constexpr double kRoundtripTol = 1e-9;
constexpr double kSectionTol = 1e-12;
constexpr double kUniqueTol = 1e-9;
constexpr double kEmbedTol = 1e-10;
constexpr double kHolonomyTol = 1e-8;
constexpr double kPerturbation = 0.01;
constexpr double kLinearEquivTol = 1e-12;
constexpr double kProductEquivTol = 1e-9;
constexpr double kEpsilon = 0.01;
constexpr double kBracketSeconds = 10.0;
constexpr double kJacobiSeconds = 30.0;
constexpr double kTischlerSeconds = 5.0;

struct Result {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  Result done(const std::string& summary) const { return {ok_, ok_ ? summary : first_}; }

 private:
  bool ok_ = true;
  std::string first_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::mt19937_64& rng() {
  static std::mt19937_64 r(20261016);
  return r;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

FMatrix random_sl(int n) {
  FMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform(-1.0, 1.0) + (i == j ? 1.5 : 0.0);
  double det = linalg::determinant(m);
  if (det < 0) {
    for (int j = 0; j < n; ++j) m(0, j) = -m(0, j);
    det = -det;
  }
  return m * std::pow(det, -1.0 / n);
}

ErrorCode code_of(const std::function<void()>& fn, bool& threw) {
  threw = false;
  try {
    fn();
  } catch (const Error& e) {
    threw = true;
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

Result bracket_identities() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto audit = algebra::audit_offdiag_identities(algebra::StructureTable(n));
    checked += audit.checked;
    c.expect(audit.failures.empty(), "n = " + std::to_string(n) + ": " + std::to_string(audit.failures.size()) +
                                         " identity failures");
    // Direct matrix commutators against the closed forms.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (i == j || k == l) continue;
            const auto a = algebra::basis_matrix<Rational>({i, j}, n);
            const auto b = algebra::basis_matrix<Rational>({k, l}, n);
            c.expect(a * b - b * a == algebra::offdiag_bracket_formula(i, j, k, l, n),
                     "commutator mismatch at n = " + std::to_string(n));
          }
  }
  const double s = seconds_since(t0);
  c.expect(s < kBracketSeconds, "sweep took " + fmt(s) + " s");
  return c.done(std::to_string(checked) + " table entries, n = 2..6, exact, " + fmt(s) + " s");
}

Result dimension_audit() {
  Checker c;
  for (int n = 2; n <= 6; ++n) {
    const auto d = algebra::dims(n);
    c.expect(d.h == n - 1 && d.offdiag == n * n - n && d.total == n * n - 1, "dims wrong at n = " + std::to_string(n));
    c.expect(decomp::chart_length(n) == static_cast<std::size_t>(n * (n + 1) / 2 - 1),
             "chart length wrong at n = " + std::to_string(n));
    c.expect(algebra::basis(n).size() == static_cast<std::size_t>(n * n - 1), "basis size wrong");
    c.expect(algebra::basis_rank(n) == static_cast<std::size_t>(n * n - 1), "basis not independent");
    const auto f = decomp::iwasawa_sln(FMatrix::identity(n));
    c.expect(f.chart.size() == decomp::chart_length(n), "Iwasawa chart has the wrong length");
  }
  return c.done("dims (n-1, n^2-n, n^2-1) and chart n(n+1)/2-1 for n = 2..6");
}

Result jacobi_antisymmetry() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t triples = 0;
  for (int n = 2; n <= 4; ++n) {
    const algebra::StructureTable t(n);
    c.expect(t.antisymmetry_violations() == 0, "antisymmetry fails at n = " + std::to_string(n));
    c.expect(t.jacobi_violations() == 0, "Jacobi fails at n = " + std::to_string(n));
    triples += t.size() * t.size() * t.size();
  }
  const double s = seconds_since(t0);
  c.expect(s < kJacobiSeconds, "took " + fmt(s) + " s");
  return c.done(std::to_string(triples) + " triples, n <= 4, exact, " + fmt(s) + " s");
}

Result iwasawa_roundtrips() {
  Checker c;
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < 1000; ++k) {
      const FMatrix g = random_sl(n);
      const auto f = decomp::iwasawa_sln(g);
      worst = std::max(worst, max_abs_diff(decomp::recompose_sln(f), g));
    }
  }
  c.expect(worst < kRoundtripTol, "SL(n) roundtrip error " + fmt(worst));

  double unique = 0.0, sl2 = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const decomp::GAElement ga{std::exp(uniform(-2.0, 2.0)), uniform(-3.0, 3.0)};
    const double theta = uniform(0.0, 2.0 * std::numbers::pi);
    const FMatrix g = decomp::ga_embed(ga) * decomp::rotation(theta);
    const auto f = decomp::iwasawa_sl2(g);
    const double dtheta = std::remainder(f.angle.value() - theta, 2.0 * std::numbers::pi);
    unique = std::max({unique, std::abs(f.ga.a - ga.a), std::abs(f.ga.b - ga.b), std::abs(dtheta)});
    sl2 = std::max(sl2, max_abs_diff(decomp::recompose_sl2(f), g));
  }
  c.expect(unique < kUniqueTol, "GA x S^1 factors not recovered: " + fmt(unique));
  c.expect(sl2 < kRoundtripTol, "SL(2) roundtrip error " + fmt(sl2));

  double section = 0.0;
  for (int d = 0; d < 360; ++d) {
    const double theta = 2.0 * std::numbers::pi * d / 360.0;
    const auto back = decomp::circle_projection(decomp::circle_section(decomp::CircleAngle(theta)));
    section = std::max(section, std::abs(std::remainder(back.value() - theta, 2.0 * std::numbers::pi)));
  }
  c.expect(section < kSectionTol, "p o sigma deviates by " + fmt(section));
  return c.done("3000 SL(n) roundtrips max err " + fmt(worst) + ", SL(2) factors " + fmt(unique) +
                ", p o sigma " + fmt(section));
}

Result ga_homomorphism() {
  Checker c;
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const decomp::GAElement g{std::exp(uniform(-2.0, 2.0)), uniform(-3.0, 3.0)};
    const decomp::GAElement h{std::exp(uniform(-2.0, 2.0)), uniform(-3.0, 3.0)};
    worst = std::max(worst, max_abs_diff(decomp::ga_embed(decomp::ga_mul(g, h)),
                                         decomp::ga_embed(g) * decomp::ga_embed(h)));
  }
  c.expect(worst < kEmbedTol, "embedding error " + fmt(worst));
  return c.done("500 pairs, max error " + fmt(worst));
}

Result maurer_cartan() {
  Checker c;
  const forms::TorusGrid grid({8, 8});
  const FMatrix a{{0.3, 0.5}, {-0.2, -0.3}};
  const FMatrix b{{-0.1, 0.4}, {0.6, 0.1}};
  const FMatrix cc{{0.2, -0.3}, {0.1, -0.2}};
  std::vector<FMatrix> g;
  for (int v = 0; v < grid.complex()->num_vertices(); ++v) {
    const auto p = grid.position(v);
    const double s = std::sin(2.0 * std::numbers::pi * p[0]), t = std::sin(2.0 * std::numbers::pi * p[1]);
    g.push_back(linalg::matrix_exp((a * s + b * t) * 0.4) * linalg::matrix_exp(cc * (0.4 * s * t)));
  }
  auto w = forms::log_derived_cochain(grid.complex(), g);
  const auto clean = forms::residual_norms(forms::holonomy_residual(w));
  const double worst = *std::max_element(clean.begin(), clean.end());
  c.expect(worst < kHolonomyTol, "holonomy residual " + fmt(worst));

  std::size_t flagged_ok = 0;
  const auto& cx = *grid.complex();
  for (std::size_t edge = 0; edge < cx.num_edges(); ++edge) {
    auto bent = w;
    bent[edge][algebra::BasisIndex::off_diag(1, 2)] += kPerturbation;
    const auto r = forms::residual_norms(forms::holonomy_residual(bent));
    std::vector<std::size_t> flagged, adjacent;
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r[t] >= kHolonomyTol) flagged.push_back(t);
      for (const auto& e : cx.triangle_edges(t))
        if (e.edge == edge) adjacent.push_back(t);
    }
    if (flagged == adjacent && !adjacent.empty()) ++flagged_ok;
  }
  c.expect(flagged_ok == cx.num_edges(),
           std::to_string(cx.num_edges() - flagged_ok) + " perturbed edges not flagged exactly on their triangles");
  return c.done("m = 8 residual " + fmt(worst) + "; every single-edge perturbation flagged on its " +
                "adjacent triangles (" + std::to_string(flagged_ok) + " edges)");
}

Result equivariance() {
  Checker c;
  const double alpha = std::numbers::sqrt2;
  const forms::TorusGrid grid({16, 16});
  const auto lin = foliation::develop_on_torus(
      grid, foliation::Group::abelian(1), {{std::vector<double>{1.0}, std::vector<double>{alpha}}},
      [&](std::span<const double> x) -> foliation::GroupElement { return std::vector<double>{x[0] + alpha * x[1]}; });
  const auto el = foliation::check_equivariance(lin);
  const std::size_t window = 9 * static_cast<std::size_t>(grid.complex()->num_vertices());

  c.expect(el.max_deviation < kLinearEquivTol, "linear foliation deviation " + fmt(el.max_deviation));
  const auto prod = foliation::product_foliation(
      foliation::ga_suspension(forms::TorusGrid({16}), decomp::GAElement{2.0, 0.0}, 0.3));
  const auto ep = foliation::check_equivariance(prod);
  c.expect(lin.developing.samples.size() == window && prod.developing.samples.size() == window,
           "developing maps are not sampled over a 3 x 3 deck window");
  c.expect(ep.max_deviation < kProductEquivTol, "product foliation deviation " + fmt(ep.max_deviation));
  c.expect(el.checked > 0 && ep.checked > 0, "nothing checked");
  return c.done("3 x 3 deck window; linear alpha = sqrt 2: " + fmt(el.max_deviation) + " over " +
                std::to_string(el.checked) + " translates; product SL(2): " + fmt(ep.max_deviation) + " over " +
                std::to_string(ep.checked));
}

Result tischler_t2() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  const forms::TorusGrid grid({16, 16});
  const auto w = grid.linear_cochain(std::vector<double>{1.0, std::numbers::sqrt2});
  const auto h = tischler::torus_homology(grid);
  const auto r = tischler::rationalize(w, h, {kEpsilon, 1'000'000});
  c.expect(r.periods == std::vector<Rational>{Rational(1), Rational(17, 12)}, "periods are not (1, 17/12)");
  c.expect(r.q == 12, "q = " + r.q.get_str());
  c.expect(r.sup_change <= kEpsilon, "|w - w'| = " + fmt(r.sup_change));
  const auto f = tischler::integrate_to_circle(r.cochain, h.cycles);
  c.expect(f.periods == std::vector<Integer>{12, 17}, "pullback periods are not (12, 17)");
  c.expect(tischler::check_submersion(f).passed(), "submersion check failed");
  const auto values = tischler::generic_values(f, 10);
  std::vector<std::size_t> counts;
  for (const auto& v : values) counts.push_back(tischler::fiber_census(f, v).count());
  c.expect(values.size() == 10, "fewer than 10 generic values");
  c.expect(std::all_of(counts.begin(), counts.end(), [&](std::size_t k) { return k == counts.front(); }),
           "fiber census not constant");
  const double s = seconds_since(t0);
  c.expect(s < kTischlerSeconds, "took " + fmt(s) + " s");
  return c.done("periods (1, 17/12), q = 12, pullback (12, 17), |w - w'| = " + fmt(r.sup_change) + ", " +
                std::to_string(counts.front()) + " component(s) at 10 levels, " + fmt(s) + " s");
}

Result pipeline_witness() {
  Checker c;
  std::string summary;
  for (const char* name : {"abelian-r2", "product-sl2"}) {
    const auto spec = io::spec_from_json(io::example(name));
    const pipeline::PipelineConfig cfg;
    const auto r = pipeline::pipeline_sln(spec, cfg);
    c.expect(r.completed(), std::string(name) + ": " + r.message);
    c.expect(r.circle && r.submersion && r.submersion->passed(), std::string(name) + ": no checked circle map");
    c.expect(r.census_constant, std::string(name) + ": census not constant");
    const auto first = io::pipeline_report_to_json(r, cfg).dump(2);
    const auto second = io::pipeline_report_to_json(pipeline::pipeline_sln(spec, cfg), cfg).dump(2);
    c.expect(first == second, std::string(name) + ": reports differ between runs");
    if (r.completed()) {
      summary += std::string(summary.empty() ? "" : "; ") + name + " q = " + r.rationalized->q.get_str() + ", " +
                 std::to_string(r.census.front().count()) + " component(s)";
    }
  }
  return c.done(summary + "; reports byte-identical");
}

Result negative_controls() {
  Checker c;
  bool threw = false;
  const auto nc = io::tischler_input_from_json(io::example("tischler-nonclosed"));
  auto code = code_of([&] { tischler::rationalize(nc.cochain, nc.homology, {kEpsilon, 1'000'000}); }, threw);
  c.expect(threw && code == ErrorCode::NotClosed, "non-closed input not rejected with NotClosed");

  const FMatrix bad = io::matrix_from_json(io::example("matrix-non-unimodular"));
  code = code_of([&] { decomp::iwasawa_sln(bad); }, threw);
  c.expect(threw && code == ErrorCode::NonUnimodular, "iwasawa_sln accepted a non-unimodular matrix");
  code = code_of([&] { decomp::iwasawa_sl2(bad); }, threw);
  c.expect(threw && code == ErrorCode::NonUnimodular, "iwasawa_sl2 accepted a non-unimodular matrix");

  const auto zero = pipeline::pipeline_sln(io::spec_from_json(io::example("zero-r2")));
  c.expect(zero.failure == ErrorCode::NoSubmersion, "zero cochain did not fail with NoSubmersion");
  return c.done("NotClosed, NonUnimodular (x2), NoSubmersion");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"bracket identities", bracket_identities},   {"dimension audit", dimension_audit},
      {"Jacobi and antisymmetry", jacobi_antisymmetry}, {"Iwasawa roundtrips", iwasawa_roundtrips},
      {"GA embedding homomorphism", ga_homomorphism}, {"Maurer-Cartan checker", maurer_cartan},
      {"equivariance", equivariance},               {"Tischler on T^2", tischler_t2},
      {"pipeline witness", pipeline_witness},       {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("unexpected exception: ") + e.what()};
    }
    failed += r.ok ? 0 : 1;
    std::printf("%s %2zu %-27s %s\n", r.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), r.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
