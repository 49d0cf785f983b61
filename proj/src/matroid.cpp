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

#include "mbg/matroid.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "mbg/error.hpp"

namespace mbg {
namespace {

std::string set_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

int64_t binomial_capped(int m, int k, int64_t cap) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (m - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<int64_t>(c);
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

// Reverse search over spanning trees (Avis-Fukuda style). The parent of a
// tree T != T0 swaps in the least edge of T0 missing from T and drops the
// largest non-T0 edge on the cycle it closes.
class SpanningTreeSearch {
 public:
  SpanningTreeSearch(int n, std::span<const Edge> edges, int64_t budget)
      : n_(n), edges_(edges.begin(), edges.end()), budget_(budget) {}

  std::vector<Mask> run() {
    UnionFind uf(n_);
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (uf.unite(edges_[i].first, edges_[i].second)) root_ |= Mask{1} << i;
    }
    std::vector<Mask> out;
    std::vector<Mask> stack{root_};
    while (!stack.empty()) {
      const Mask t = stack.back();
      stack.pop_back();
      out.push_back(t);
      if (static_cast<int64_t>(out.size()) > budget_) {
        throw Error(ErrorCode::kBudgetExceeded, "spanning tree count exceeds basis budget");
      }
      auto kids = children(t);
      // Reverse so the stack pops children in ascending swap order.
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

 private:
  // Edge indices on the tree path between a and b.
  std::vector<int> tree_path(Mask tree, Vertex a, Vertex b) const {
    std::vector<std::vector<std::pair<Vertex, int>>> adj(n_);
    for (int i : elements_of(tree)) {
      adj[edges_[i].first].emplace_back(edges_[i].second, i);
      adj[edges_[i].second].emplace_back(edges_[i].first, i);
    }
    std::vector<int> via(n_, -1);
    std::vector<Vertex> from(n_, -1);
    std::vector<Vertex> q{a};
    from[a] = a;
    for (size_t h = 0; h < q.size(); ++h) {
      for (auto [w, i] : adj[q[h]]) {
        if (from[w] < 0) {
          from[w] = q[h];
          via[w] = i;
          q.push_back(w);
        }
      }
    }
    std::vector<int> path;
    for (Vertex x = b; x != a; x = from[x]) path.push_back(via[x]);
    return path;
  }

  Mask parent(Mask t) const {
    const Mask missing = root_ & ~t;
    const int e = std::countr_zero(missing);
    int f = -1;
    for (int i : tree_path(t, edges_[e].first, edges_[e].second)) {
      if (!(root_ >> i & 1)) f = std::max(f, i);
    }
    return (t & ~(Mask{1} << f)) | (Mask{1} << e);
  }

  bool spanning(Mask t) const {
    UnionFind uf(n_);
    int joins = 0;
    for (int i : elements_of(t)) {
      if (!uf.unite(edges_[i].first, edges_[i].second)) return false;
      ++joins;
    }
    return joins == n_ - 1;
  }

  std::vector<Mask> children(Mask t) const {
    std::vector<Mask> kids;
    for (int e : elements_of(t & root_)) {
      for (size_t f = 0; f < edges_.size(); ++f) {
        if ((t >> f & 1) || (root_ >> f & 1) || edges_[f].first == edges_[f].second) continue;
        const Mask cand = (t & ~(Mask{1} << e)) | (Mask{1} << f);
        if (spanning(cand) && parent(cand) == t) kids.push_back(cand);
      }
    }
    return kids;
  }

  int n_;
  std::vector<Edge> edges_;
  int64_t budget_;
  Mask root_ = 0;
};

}  // namespace

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw Error(ErrorCode::kInvalidArgument, "element " + std::to_string(e) + " out of range");
    }
    m |= Mask{1} << e;
  }
  return m;
}

SetSystem::SetSystem(int ground_size, std::vector<Mask> bases)
    : ground_size_(ground_size), bases_(std::move(bases)) {
  if (ground_size_ < 0 || ground_size_ > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground size " + std::to_string(ground_size_) + " outside [0, 64]");
  }
  if (bases_.empty()) throw Error(ErrorCode::kInvalidArgument, "set system has no bases");
  const Mask allowed = ground_size_ == 64 ? ~Mask{0} : (Mask{1} << ground_size_) - 1;
  for (Mask b : bases_) {
    if (b & ~allowed) {
      throw Error(ErrorCode::kInvalidArgument, "basis " + set_string(b) + " leaves the ground set");
    }
  }
  sorted_ = bases_;
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate basis " +
                set_string(*std::adjacent_find(sorted_.begin(), sorted_.end())));
  }
}

bool SetSystem::contains(Mask m) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), m);
}

AxiomVerdict verify_matroid(const SetSystem& ss) {
  const auto& bs = ss.bases();
  const int rank = popcount(bs.front());
  for (Mask b : bs) {
    if (popcount(b) != rank) {
      return {false, "bases " + set_string(bs.front()) + " and " + set_string(b) +
                         " differ in cardinality", std::nullopt};
    }
  }
  for (Mask a : bs) {
    for (Mask b : bs) {
      for (int x : elements_of(a & ~b)) {
        bool found = false;
        for (int y : elements_of(b & ~a)) {
          if (ss.contains((a & ~(Mask{1} << x)) | (Mask{1} << y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return {false, "no exchange for A=" + set_string(a) + ", B=" + set_string(b) +
                             ", a=" + std::to_string(x), ExchangeWitness{a, b, x}};
        }
      }
    }
  }
  return {true, {}, std::nullopt};
}

AxiomVerdict verify_even_delta_matroid(const SetSystem& ss) {
  const auto& bs = ss.bases();
  const int parity = popcount(bs.front()) & 1;
  for (Mask b : bs) {
    if ((popcount(b) & 1) != parity) {
      return {false, "bases " + set_string(bs.front()) + " and " + set_string(b) +
                         " differ in parity", std::nullopt};
    }
  }
  for (Mask a : bs) {
    for (Mask b : bs) {
      const Mask diff = a ^ b;
      for (int x : elements_of(diff)) {
        bool found = false;
        for (int y : elements_of(diff)) {
          if (ss.contains(a ^ ((Mask{1} << x) | (Mask{1} << y)))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return {false, "no symmetric exchange for A=" + set_string(a) + ", B=" + set_string(b) +
                             ", a=" + std::to_string(x), ExchangeWitness{a, b, x}};
        }
      }
    }
  }
  return {true, {}, std::nullopt};
}

BasisGraphResult basis_graph(const SetSystem& ss) {
  BasisGraphResult out;
  out.vertex_to_basis = ss.bases();
  auto& vb = out.vertex_to_basis;
  std::sort(vb.begin(), vb.end());
  const int64_t n = static_cast<int64_t>(vb.size());
  const int m = ss.ground_size();
  std::vector<Edge> edges;
  if (n * n <= n * m * m) {
    for (int64_t i = 0; i < n; ++i) {
      for (int64_t j = i + 1; j < n; ++j) {
        if (popcount(vb[i] ^ vb[j]) == 2) edges.emplace_back(i, j);
      }
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
          const Mask other = vb[i] ^ ((Mask{1} << x) | (Mask{1} << y));
          if (other <= vb[i]) continue;
          auto it = std::lower_bound(vb.begin(), vb.end(), other);
          if (it != vb.end() && *it == other) edges.emplace_back(i, it - vb.begin());
        }
      }
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(n), edges);
  return out;
}

SetSystem uniform_matroid(int m, int k, int64_t budget) {
  if (m < 0 || m > kMaxGroundSize || k < 0 || k > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "uniform matroid needs 0 <= k <= m <= 64, got m=" + std::to_string(m) +
                    " k=" + std::to_string(k));
  }
  if (binomial_capped(m, k, budget) > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "C(" + std::to_string(m) + "," + std::to_string(k) +
                                                ") exceeds basis budget " + std::to_string(budget));
  }
  std::vector<Mask> bases;
  if (k == 0) return SetSystem(m, {0});
  if (k == 64) return SetSystem(m, {~Mask{0}});
  const Mask limit = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  // Gosper's hack enumerates k-subsets in ascending mask order.
  for (Mask s = (Mask{1} << k) - 1;;) {
    bases.push_back(s);
    if (s == (limit & ~((Mask{1} << (m - k)) - 1))) break;
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return SetSystem(m, std::move(bases));
}

SetSystem even_subsets(int m, int64_t budget) {
  if (m < 0 || m > 40) throw Error(ErrorCode::kInvalidArgument, "even_subsets: m out of range");
  const int64_t count = m == 0 ? 1 : (int64_t{1} << (m - 1));
  if (count > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "2^(m-1) exceeds basis budget");
  }
  std::vector<Mask> bases;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    if (popcount(s) % 2 == 0) bases.push_back(s);
  }
  return SetSystem(m, std::move(bases));
}

SetSystem graphic_matroid(int vertex_count, std::span<const Edge> edges, int edge_budget) {
  if (static_cast<int>(edges.size()) > edge_budget) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(edges.size()) +
                                                " edges exceed graphic edge budget " +
                                                std::to_string(edge_budget));
  }
  if (static_cast<int>(edges.size()) > kMaxGroundSize) {
    throw Error(ErrorCode::kBudgetExceeded, "more than 64 edges");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::kVertexOutOfRange, "edge endpoint out of range", {u, v});
    }
  }
  UnionFind uf(std::max(vertex_count, 1));
  int components = vertex_count;
  for (auto [u, v] : edges) {
    if (uf.unite(u, v)) --components;
  }
  if (components > 1) {
    throw Error(ErrorCode::kDisconnected, "graph has " + std::to_string(components) + " components");
  }
  auto trees = SpanningTreeSearch(std::max(vertex_count, 1), edges, kDefaultBasisBudget).run();
  std::sort(trees.begin(), trees.end());
  return SetSystem(static_cast<int>(edges.size()), std::move(trees));
}

AutomorphismAction make_action(Graph base, std::vector<Vertex> generator) {
  const int n = base.size();
  if (static_cast<int>(generator.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size does not match graph");
  }
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = generator[v];
    if (w < 0 || w >= n || hit[w]) throw Error(ErrorCode::kInvalidArgument, "not a permutation", {v});
    hit[w] = 1;
  }
  for (auto [u, v] : base.edges()) {
    if (!base.adjacent(generator[u], generator[v])) {
      throw Error(ErrorCode::kInvalidArgument, "permutation is not an automorphism", {u, v});
    }
  }
  int64_t order = 1;
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int64_t len = 0;
    for (Vertex x = v; !seen[x]; x = generator[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
    if (order > (int64_t{1} << 30)) throw Error(ErrorCode::kBudgetExceeded, "group order too large");
  }
  return {std::move(base), std::move(generator), static_cast<int>(order)};
}

AutomorphismAction antipodal_action(int n) {
  if (n < 1 || 2 * n > kMaxGroundSize) throw Error(ErrorCode::kInvalidArgument, "antipodal_action: bad n");
  auto bg = basis_graph(complete_matroid(n));
  const Mask full = (2 * n == 64) ? ~Mask{0} : (Mask{1} << (2 * n)) - 1;
  const auto& vb = bg.vertex_to_basis;
  std::vector<Vertex> perm(vb.size());
  for (size_t i = 0; i < vb.size(); ++i) {
    perm[i] = static_cast<Vertex>(std::lower_bound(vb.begin(), vb.end(), full ^ vb[i]) - vb.begin());
  }
  return make_action(std::move(bg.graph), std::move(perm));
}

std::vector<Vertex> orbit_of(const AutomorphismAction& action, Vertex v) {
  std::vector<Vertex> out{v};
  for (Vertex x = action.generator[v]; x != v; x = action.generator[x]) out.push_back(x);
  return out;
}

QuotientResult quotient(const AutomorphismAction& action) {
  const Graph& g = action.base;
  const int n = g.size();
  if (action.order == 1 && n > 0) {
    throw Error(ErrorCode::kNotFree, "the identity fixes every vertex", {0});
  }
  QuotientResult out;
  out.projection.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (out.projection[v] >= 0) continue;
    auto orb = orbit_of(action, v);
    if (static_cast<int>(orb.size()) != action.order) {
      throw Error(ErrorCode::kNotFree,
                  "vertex " + std::to_string(v) + " is fixed by a non-identity element", {v});
    }
    const Vertex id = static_cast<Vertex>(out.orbits.size());
    for (Vertex x : orb) out.projection[x] = id;
    std::sort(orb.begin(), orb.end());
    out.orbits.push_back(std::move(orb));
  }
  std::vector<Edge> qedges;
  for (auto [u, v] : g.edges()) {
    if (out.projection[u] == out.projection[v]) {
      throw Error(ErrorCode::kAdjacentOrbit,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") lies inside one orbit",
                  {u, v});
    }
    qedges.emplace_back(out.projection[u], out.projection[v]);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.orbits.size()), qedges);
  return out;
}

int min_displacement(const AutomorphismAction& action) {
  const Graph& g = action.base;
  const int n = g.size();
  if (action.order <= 1 || n == 0) return 0;
  int best = std::numeric_limits<int>::max();
  // Bit-parallel BFS from 64 sources at a time.
  std::vector<uint64_t> visited(n), frontier(n), next(n);
  for (Vertex start = 0; start < n; start += 64) {
    const int batch = std::min(64, n - start);
    std::vector<std::vector<Vertex>> targets(batch);
    for (int j = 0; j < batch; ++j) {
      auto orb = orbit_of(action, start + j);
      if (static_cast<int>(orb.size()) != action.order) return 0;
      targets[j].assign(orb.begin() + 1, orb.end());
    }
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (int j = 0; j < batch; ++j) visited[start + j] = frontier[start + j] = uint64_t{1} << j;
    uint64_t open = batch == 64 ? ~uint64_t{0} : (uint64_t{1} << batch) - 1;
    for (int level = 1; open && level < best; ++level) {
      bool any = false;
      for (Vertex u = 0; u < n; ++u) {
        uint64_t acc = 0;
        for (Vertex w : g.neighbors(u)) acc |= frontier[w];
        next[u] = acc & ~visited[u];
        any |= next[u] != 0;
      }
      if (!any) break;
      for (Vertex u = 0; u < n; ++u) visited[u] |= next[u];
      frontier.swap(next);
      for (int j = 0; j < batch; ++j) {
        if (!(open >> j & 1)) continue;
        for (Vertex t : targets[j]) {
          if (frontier[t] >> j & 1) {
            best = std::min(best, level);
            open &= ~(uint64_t{1} << j);
            break;
          }
        }
      }
    }
  }
  return best;
}

int local_isometry_radius(int displacement) {
  if (displacement < 2) return -1;
  return (displacement - 2) / 2;
}

}  // namespace mbg
