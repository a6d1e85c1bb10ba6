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

#include "slfol/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "slfol/error.hpp"

namespace slfol::forms {

std::uint64_t SimplicialComplex::key(int u, int v) {
  const auto a = static_cast<std::uint64_t>(std::min(u, v));
  const auto b = static_cast<std::uint64_t>(std::max(u, v));
  return (a << 32) | b;
}

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<std::array<int, 2>> edges,
                                     std::vector<std::array<int, 3>> triangles, Options options)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      triangles_(std::move(triangles)),
      top_(std::move(options.top_simplices)),
      covering_(std::move(options.covering)),
      grid_shape_(std::move(options.grid_shape)),
      manifold_like_(options.manifold_like) {
  if (num_vertices_ < 1) fail(ErrorCode::InvalidInput, "complex needs at least one vertex");
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= num_vertices_) fail(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " out of range");
  };
  incident_.resize(num_vertices_);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(u));
    if (!lookup_.emplace(key(u, v), e).second) {
      fail(ErrorCode::InvalidInput, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    incident_[u].push_back({e, +1});
    incident_[v].push_back({e, -1});
  }
  std::vector<int> triangle_count(edges_.size(), 0);
  triangle_edges_.reserve(triangles_.size());
  for (const auto& t : triangles_) {
    std::array<OrientedEdge, 3> te{edge_between(t[0], t[1]), edge_between(t[1], t[2]), edge_between(t[0], t[2])};
    for (const auto& oe : te) ++triangle_count[oe.edge];
    triangle_edges_.push_back(te);
  }
  if (top_.empty()) {
    if (!triangles_.empty()) {
      for (const auto& t : triangles_) top_.push_back({t[0], t[1], t[2]});
    } else if (!edges_.empty()) {
      for (const auto& e : edges_) top_.push_back({e[0], e[1]});
    } else {
      for (int v = 0; v < num_vertices_; ++v) top_.push_back({v});
    }
  }
  dimension_ = 0;
  top_edges_.reserve(top_.size());
  for (const auto& s : top_) {
    if (s.empty()) fail(ErrorCode::InvalidInput, "empty top simplex");
    dimension_ = std::max(dimension_, static_cast<int>(s.size()) - 1);
    std::vector<std::size_t> es;
    for (std::size_t a = 0; a < s.size(); ++a) {
      check_vertex(s[a]);
      for (std::size_t b = a + 1; b < s.size(); ++b) es.push_back(edge_between(s[a], s[b]).edge);
    }
    top_edges_.push_back(std::move(es));
  }
  if (manifold_like_ && dimension_ == 2) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (triangle_count[e] > 2) {
        fail(ErrorCode::InvalidInput, "edge " + std::to_string(e) + " lies in more than two triangles");
      }
    }
  }
  if (covering_) {
    if (covering_->rank < 0 || covering_->voltage.size() != edges_.size()) {
      fail(ErrorCode::InvalidInput, "covering data needs one voltage per edge");
    }
    for (const auto& v : covering_->voltage) {
      if (v.size() != static_cast<std::size_t>(covering_->rank)) {
        fail(ErrorCode::InvalidInput, "voltage length differs from deck rank");
      }
    }
  }
}

std::optional<OrientedEdge> SimplicialComplex::find_edge(int u, int v) const {
  auto it = lookup_.find(key(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return OrientedEdge{it->second, edges_[it->second][0] == u ? +1 : -1};
}

OrientedEdge SimplicialComplex::edge_between(int u, int v) const {
  auto e = find_edge(u, v);
  if (!e || u == v) fail(ErrorCode::InvalidInput, "no edge between " + std::to_string(u) + " and " + std::to_string(v));
  return *e;
}

bool SimplicialComplex::connected() const {
  try {
    spanning_tree(*this, 0, TreeOrder::BreadthFirst);
    return true;
  } catch (const Error&) {
    return false;
  }
}

int SimplicialComplex::euler_characteristic() const {
  // Counts every face of every top simplex once.
  std::set<std::vector<int>> faces;
  for (const auto& s : top_) {
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> f;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1u << b)) f.push_back(s[b]);
      std::sort(f.begin(), f.end());
      faces.insert(std::move(f));
    }
  }
  for (const auto& e : edges_) faces.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
  for (int v = 0; v < num_vertices_; ++v) faces.insert({v});
  int chi = 0;
  for (const auto& f : faces) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

Cycle Cycle::from_vertices(const SimplicialComplex& complex, const std::vector<int>& path) {
  if (path.size() < 2 || path.front() != path.back()) fail(ErrorCode::BrokenCycle, "vertex path is not closed");
  std::vector<OrientedEdge> steps;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto e = complex.find_edge(path[k], path[k + 1]);
    if (!e || path[k] == path[k + 1]) {
      fail(ErrorCode::BrokenCycle,
           "no edge between " + std::to_string(path[k]) + " and " + std::to_string(path[k + 1]));
    }
    steps.push_back(*e);
  }
  return from_steps(complex, std::move(steps));
}

Cycle Cycle::from_steps(const SimplicialComplex& complex, std::vector<OrientedEdge> steps) {
  if (steps.empty()) fail(ErrorCode::BrokenCycle, "empty cycle");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k].edge >= complex.num_edges() || (steps[k].sign != 1 && steps[k].sign != -1)) {
      fail(ErrorCode::BrokenCycle, "invalid step in cycle");
    }
    const auto& next = steps[(k + 1) % steps.size()];
    if (next.edge >= complex.num_edges() || complex.head(steps[k]) != complex.tail(next)) {
      fail(ErrorCode::BrokenCycle, "cycle steps do not chain at step " + std::to_string(k));
    }
  }
  Cycle c;
  c.steps_ = std::move(steps);
  return c;
}

Cycle Cycle::reversed() const {
  Cycle c;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) c.steps_.push_back(it->reversed());
  return c;
}

SpanningTree spanning_tree(const SimplicialComplex& complex, int root, TreeOrder order) {
  const int n = complex.num_vertices();
  if (root < 0 || root >= n) fail(ErrorCode::InvalidInput, "root out of range");
  SpanningTree tree;
  tree.parent.assign(n, std::nullopt);
  std::vector<char> seen(n, 0);
  std::deque<int> frontier{root};
  seen[root] = 1;
  while (!frontier.empty()) {
    int v;
    if (order == TreeOrder::BreadthFirst) {
      v = frontier.front();
      frontier.pop_front();
    } else {
      v = frontier.back();
      frontier.pop_back();
    }
    tree.order.push_back(v);
    for (const auto& e : complex.incident(v)) {
      const int w = complex.head(e);
      if (seen[w]) continue;
      seen[w] = 1;
      tree.parent[w] = e;
      frontier.push_back(w);
    }
  }
  if (static_cast<int>(tree.order.size()) != n) fail(ErrorCode::Disconnected, "complex is not connected");
  return tree;
}

}  // namespace slfol::forms
