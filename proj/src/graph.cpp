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

#include "mbg/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mbg/error.hpp"

namespace mbg {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside vertex range " + std::to_string(n),
                  {u, v});
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(u), {u});
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adj[v].size();
  g.targets_.reserve(g.offsets_[n]);
  for (const auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    const auto& list = adjacency[v];
    for (size_t i = 0; i < list.size(); ++i) {
      const Vertex w = list[i];
      if (w < 0 || w >= n) {
        throw Error(ErrorCode::kVertexOutOfRange, "neighbor out of range", {v, w});
      }
      if (w == v) throw Error(ErrorCode::kSelfLoop, "self-loop", {v});
      if (i > 0 && list[i - 1] >= w) {
        throw Error(ErrorCode::kInvalidArgument, "adjacency not strictly sorted", {v});
      }
    }
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_[n]);
  for (const auto& list : adjacency) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!g.adjacent(w, v)) {
        throw Error(ErrorCode::kInvalidArgument, "adjacency not symmetric", {v, w});
      }
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int DistanceVector::eccentricity() const {
  int best = 0;
  for (int32_t d : raw_) best = std::max(best, d);
  return best;
}

DistanceVector bfs_distances(const Graph& g, Vertex source, int radius) {
  const int n = g.size();
  if (source < 0 || source >= n) {
    throw Error(ErrorCode::kVertexOutOfRange, "BFS source out of range", {source});
  }
  std::vector<int32_t> dist(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (dist[u] >= radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return DistanceVector(source, std::move(dist));
}

DistanceVector bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, source, g.size());
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto d = bfs_distances(g, 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!d.reachable(v)) return false;
  }
  return true;
}

std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v) {
  const auto du = bfs_distances(g, u);
  if (!du.reachable(v)) {
    throw Error(ErrorCode::kDifferentComponents,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " lie in different components",
                {u, v});
  }
  const auto dv = bfs_distances(g, v);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (du.reachable(x) && du[x] + dv[x] == du[v]) out.push_back(x);
  }
  return out;
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> index(g.size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.size()) {
      throw Error(ErrorCode::kVertexOutOfRange, "induced: vertex out of range", {keep[i]});
    }
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adj(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (index[w] >= 0) adj[i].push_back(index[w]);
    }
  }
  return {Graph::from_adjacency(std::move(adj)), std::move(keep)};
}

Ball ball(const Graph& g, Vertex center, int radius) {
  if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  const auto d = bfs_distances(g, center, radius);
  std::vector<Vertex> members;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (d.reachable(x)) members.push_back(x);
  }
  Ball b{induced(g, members), 0};
  b.root = static_cast<Vertex>(
      std::lower_bound(b.sub.original.begin(), b.sub.original.end(), center) -
      b.sub.original.begin());
  return b;
}

InducedSubgraph link(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  return induced(g, nb);
}

Graph complement(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    size_t k = 0;
    for (Vertex w = 0; w < n; ++w) {
      while (k < nb.size() && nb[k] < w) ++k;
      if (w != u && !(k < nb.size() && nb[k] == w)) adj[u].push_back(w);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph line_graph(const Graph& root) {
  const auto es = root.edges();
  std::vector<std::vector<Vertex>> incident(root.size());
  for (size_t i = 0; i < es.size(); ++i) {
    incident[es[i].first].push_back(static_cast<Vertex>(i));
    incident[es[i].second].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> ledges;
  for (const auto& list : incident) {
    for (size_t a = 0; a < list.size(); ++a) {
      for (size_t b = a + 1; b < list.size(); ++b) ledges.emplace_back(list[a], list[b]);
    }
  }
  return Graph::from_edges(static_cast<int>(es.size()), ledges);
}

}  // namespace mbg
