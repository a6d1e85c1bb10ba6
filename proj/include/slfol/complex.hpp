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

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace slfol::forms {

/// A stored edge traversed with (+1) or against (-1) its orientation.
struct OrientedEdge {
  std::size_t edge = 0;
  int sign = 1;

  OrientedEdge reversed() const { return {edge, -sign}; }
  bool operator==(const OrientedEdge&) const = default;
};

/// Deck action of Z^rank on the covering complex, encoded per edge: lifting
/// edge (u, v) from (u, 0) ends at (v, voltage).
struct CoveringData {
  int rank = 0;
  std::vector<std::vector<int>> voltage;
};

/// Finite simplicial complex with oriented edges and triangles. Top simplices
/// default to the triangles (or edges, or the single vertices when lower
/// dimensional). Immutable after construction.
class SimplicialComplex {
 public:
  struct Options {
    bool manifold_like = false;
    std::vector<std::vector<int>> top_simplices;
    std::optional<CoveringData> covering;
    std::vector<int> grid_shape;  // set by the torus builder
  };

  SimplicialComplex(int num_vertices, std::vector<std::array<int, 2>> edges,
                    std::vector<std::array<int, 3>> triangles, Options options);
  SimplicialComplex(int num_vertices, std::vector<std::array<int, 2>> edges,
                    std::vector<std::array<int, 3>> triangles)
      : SimplicialComplex(num_vertices, std::move(edges), std::move(triangles), Options{}) {}

  int num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_triangles() const noexcept { return triangles_.size(); }
  const std::vector<std::array<int, 2>>& edges() const noexcept { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const noexcept { return triangles_; }
  const std::vector<std::vector<int>>& top_simplices() const noexcept { return top_; }
  /// Stored edges of each top simplex.
  const std::vector<std::vector<std::size_t>>& top_simplex_edges() const noexcept { return top_edges_; }
  int dimension() const noexcept { return dimension_; }
  bool manifold_like() const noexcept { return manifold_like_; }

  std::optional<OrientedEdge> find_edge(int u, int v) const;
  /// Throws InvalidInput when (u, v) is not an edge.
  OrientedEdge edge_between(int u, int v) const;
  /// Edges (ab, bc, ac) of triangle (a, b, c).
  const std::array<OrientedEdge, 3>& triangle_edges(std::size_t t) const { return triangle_edges_[t]; }
  /// Edges at v, each oriented away from v.
  const std::vector<OrientedEdge>& incident(int v) const { return incident_[v]; }
  int tail(const OrientedEdge& e) const { return e.sign > 0 ? edges_[e.edge][0] : edges_[e.edge][1]; }
  int head(const OrientedEdge& e) const { return e.sign > 0 ? edges_[e.edge][1] : edges_[e.edge][0]; }

  const std::optional<CoveringData>& covering() const noexcept { return covering_; }
  const std::vector<int>& grid_shape() const noexcept { return grid_shape_; }

  bool connected() const;
  int euler_characteristic() const;

 private:
  static std::uint64_t key(int u, int v);

  int num_vertices_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::vector<int>> top_;
  std::vector<std::vector<std::size_t>> top_edges_;
  std::vector<std::array<OrientedEdge, 3>> triangle_edges_;
  std::vector<std::vector<OrientedEdge>> incident_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::optional<CoveringData> covering_;
  std::vector<int> grid_shape_;
  int dimension_ = 0;
  bool manifold_like_ = false;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Closed edge path.
class Cycle {
 public:
  /// Path given as vertices v0, v1, ..., v0. Throws BrokenCycle when a step
  /// is not an edge or the path does not close.
  static Cycle from_vertices(const SimplicialComplex& complex, const std::vector<int>& path);
  /// Throws BrokenCycle unless consecutive steps chain head-to-tail and close.
  static Cycle from_steps(const SimplicialComplex& complex, std::vector<OrientedEdge> steps);

  const std::vector<OrientedEdge>& steps() const noexcept { return steps_; }
  Cycle reversed() const;

 private:
  std::vector<OrientedEdge> steps_;
};

enum class TreeOrder { BreadthFirst, DepthFirst };

struct SpanningTree {
  std::vector<std::optional<OrientedEdge>> parent;  // edge from the parent, nullopt at the root
  std::vector<int> order;                           // discovery order, parents first
};

/// Spanning tree of the 1-skeleton rooted at root. Throws Disconnected.
SpanningTree spanning_tree(const SimplicialComplex& complex, int root, TreeOrder order);

}  // namespace slfol::forms
