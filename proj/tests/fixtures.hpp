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

#ifndef MBG_TESTS_FIXTURES_HPP_
#define MBG_TESTS_FIXTURES_HPP_

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbg/certificate.hpp"
#include "mbg/graph.hpp"
#include "mbg/matroid.hpp"

namespace mbg::testing {

inline Graph make(int n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return make(n, e);
}

// K_{2n} minus the perfect matching {2i, 2i+1}.
inline Graph cocktail(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      if (j != (i ^ 1)) e.emplace_back(i, j);
    }
  }
  return make(2 * n, e);
}

inline Graph octahedron() { return cocktail(3); }

// Side {0, 1} against {2, 3, 4}.
inline Graph k23() { return make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

// Hub 0 over the rim 1..n.
inline Graph wheel(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % n + 1);
  }
  return make(n + 1, e);
}

// Shaft 0-1, tips 2, 3, 4.
inline Graph propeller() {
  return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// Triangle 3-4-5 with squares 0-3-5-1 and 1-5-4-2.
inline Graph half_open_book() {
  return make(6, {{0, 1}, {0, 3}, {1, 2}, {1, 5}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// Hub 0 joined to the claw with center 1 and leaves 2, 3, 4.
inline Graph cone_over_claw() {
  return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return make(n, e);
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return make(g.size(), e);
}

// Every connected simple graph with at most `max_edges` edges, one per
// isomorphism class, grown edge by edge.
inline std::vector<Graph> connected_graphs(int max_edges) {
  std::vector<Graph> out{make(1, {})};
  std::set<GraphCertificate> seen{certificate(out[0])};
  std::vector<Graph> frontier = out;
  for (int m = 1; m <= max_edges; ++m) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      const int n = g.size();
      std::vector<std::pair<int, std::vector<Edge>>> grown;
      for (int u = 0; u < n; ++u) {
        auto e = g.edges();
        e.emplace_back(u, n);
        grown.emplace_back(n + 1, e);
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          auto f = g.edges();
          f.emplace_back(u, v);
          grown.emplace_back(n, f);
        }
      }
      for (auto& [size, edges] : grown) {
        Graph h = make(size, edges);
        if (seen.insert(certificate(h)).second) next.push_back(std::move(h));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

struct NamedSystem {
  std::string name;
  SetSystem system;
};

// Uniform matroids with m <= 6, graphic matroids of all connected graphs with
// at most 8 edges, and M_{n,n} for n <= 3.
inline std::vector<NamedSystem> matroid_corpus() {
  std::vector<NamedSystem> out;
  for (int m = 0; m <= 6; ++m) {
    for (int k = 0; k <= m; ++k) {
      out.push_back({"U(" + std::to_string(k) + "," + std::to_string(m) + ")", uniform_matroid(m, k)});
    }
  }
  int index = 0;
  for (const Graph& g : connected_graphs(8)) {
    const auto edges = g.edges();
    out.push_back({"graphic#" + std::to_string(index++), graphic_matroid(g.size(), edges)});
  }
  for (int n = 1; n <= 3; ++n) out.push_back({"M(" + std::to_string(n) + ")", complete_matroid(n)});
  return out;
}

}  // namespace mbg::testing

#endif  // MBG_TESTS_FIXTURES_HPP_
