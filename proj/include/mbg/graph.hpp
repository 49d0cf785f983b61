// Copyright 2026 The Authors.
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

#ifndef MBG_GRAPH_HPP_
#define MBG_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mbg {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
// ascending neighbor lists.
class Graph {
 public:
  Graph() = default;

  // Deduplicates and symmetrizes `edges`. Throws kSelfLoop on (v, v) and
  // kVertexOutOfRange on endpoints outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);

  // Adjacency lists must already be symmetric, sorted, loop-free; checked.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  int size() const {
    return offsets_.empty() ? 0 : static_cast<int>(offsets_.size()) - 1;
  }
  int64_t edge_count() const { return static_cast<int64_t>(targets_.size()) / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<int64_t> offsets_;
  std::vector<Vertex> targets_;
};

// Shortest-path distances from one source. Unreachable vertices carry no
// distance at all; `at` returns nullopt for them.
class DistanceVector {
 public:
  DistanceVector() = default;
  DistanceVector(Vertex source, std::vector<int32_t> raw)
      : source_(source), raw_(std::move(raw)) {}

  Vertex source() const { return source_; }
  int size() const { return static_cast<int>(raw_.size()); }
  bool reachable(Vertex v) const { return raw_[v] >= 0; }
  std::optional<int> at(Vertex v) const {
    if (raw_[v] < 0) return std::nullopt;
    return raw_[v];
  }
  // Caller guarantees reachable(v).
  int operator[](Vertex v) const { return raw_[v]; }
  // Largest finite distance.
  int eccentricity() const;

 private:
  Vertex source_ = 0;
  std::vector<int32_t> raw_;  // negative == unreachable, never exposed
};

DistanceVector bfs_distances(const Graph& g, Vertex source);

// BFS that stops after `radius` levels; vertices further away are
// reported unreachable.
DistanceVector bfs_distances(const Graph& g, Vertex source, int radius);

bool is_connected(const Graph& g);

// {x : d(u,x) + d(x,v) = d(u,v)}, ascending. Throws kDifferentComponents.
std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> old id
};

// Subgraph induced by `vertices` (any order, duplicates ignored), relabeled
// densely in ascending original-id order.
InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices);

struct Ball {
  InducedSubgraph sub;
  Vertex root = 0;  // id of the center inside sub.graph
};

Ball ball(const Graph& g, Vertex center, int radius);

// Subgraph induced by N(v), i.e. the link of v.
InducedSubgraph link(const Graph& g, Vertex v);

Graph complement(const Graph& g);

// Line graph of `root`; vertex i of the result is root.edges()[i].
Graph line_graph(const Graph& root);

}  // namespace mbg

#endif  // MBG_GRAPH_HPP_
