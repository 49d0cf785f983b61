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

#include "mbg/patterns.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>

#include "mbg/error.hpp"

namespace mbg {
namespace {

// A fixed pattern on k roles: exact induced adjacency plus symmetry-breaking
// order constraints between roles.
struct FixedPattern {
  int k;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> less;  // tuple[a] < tuple[b]

  bool edge(int a, int b) const {
    for (auto [x, y] : edges) {
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  }
};

const FixedPattern& fixed_pattern(PatternKind kind) {
  static const FixedPattern propeller{
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {{0, 1}, {2, 3}, {3, 4}}};
  static const FixedPattern half_open_book{
      6, {{0, 1}, {0, 3}, {1, 2}, {1, 5}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, {{0, 2}}};
  static const FixedPattern k23{
      5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {{0, 1}, {2, 3}, {3, 4}}};
  // hub and x2 are interchangeable, as are x1 and x3.
  static const FixedPattern w4_minus{
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}, {{1, 3}, {0, 2}}};
  static const FixedPattern claw{4, {{0, 1}, {0, 2}, {0, 3}}, {{1, 2}, {2, 3}}};
  static const FixedPattern diamond{
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{0, 1}, {2, 3}}};
  switch (kind) {
    case PatternKind::kPropeller: return propeller;
    case PatternKind::kHalfOpenBook: return half_open_book;
    case PatternKind::kK23: return k23;
    case PatternKind::kW4Minus: return w4_minus;
    case PatternKind::kClaw: return claw;
    case PatternKind::kDiamond: return diamond;
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "not a fixed-size pattern");
}

std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex a : g.neighbors(v)) {
    for (Vertex b : g.neighbors(a)) {
      if (b != v && !g.adjacent(v, b)) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Backtracking over pattern roles in a fixed order, role 0 first. With the
// identity order the first tuple found is the lexicographically least one.
class FixedMatcher {
 public:
  FixedMatcher(const Graph& g, const FixedPattern& p, std::vector<int> order)
      : g_(g),
        p_(p),
        order_(std::move(order)),
        tuple_(p.k, -1),
        source_(p.k, -1),
        via_neighbor_(p.k, false),
        earlier_neighbors_(p.k),
        buffers_(p.k) {
    for (int pos = 1; pos < p_.k; ++pos) {
      const int i = order_[pos];
      for (int q = 0; q < pos; ++q) {
        if (p_.edge(i, order_[q])) earlier_neighbors_[pos].push_back(order_[q]);
      }
      for (int q = 0; q < pos && source_[i] < 0; ++q) {
        if (p_.edge(i, order_[q])) {
          source_[i] = order_[q];
          via_neighbor_[i] = true;
        }
      }
      for (int q = 0; q < pos && source_[i] < 0; ++q) {
        for (int m = 0; m < p_.k; ++m) {
          if (p_.edge(i, m) && p_.edge(order_[q], m)) {
            source_[i] = order_[q];
            break;
          }
        }
      }
    }
  }

  // Roles placed so that each has as many earlier neighbors as possible,
  // ties going to the role of larger pattern degree.
  static std::vector<int> greedy_order(const FixedPattern& p) {
    std::vector<int> degree(p.k, 0);
    for (auto [a, b] : p.edges) {
      ++degree[a];
      ++degree[b];
    }
    std::vector<int> order{0};
    std::vector<bool> placed(p.k, false);
    placed[0] = true;
    while (static_cast<int>(order.size()) < p.k) {
      int best = -1;
      int best_score = -1;
      for (int i = 0; i < p.k; ++i) {
        if (placed[i]) continue;
        int score = degree[i];
        for (int j : order) score += p.edge(i, j) ? p.k : 0;
        if (score > best_score) {
          best = i;
          best_score = score;
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
    return order;
  }

  // Searches for a copy with role 0 at x.
  bool from(Vertex x) {
    std::fill(tuple_.begin(), tuple_.end(), -1);
    tuple_[0] = x;
    return extend(1);
  }

  const std::vector<Vertex>& tuple() const { return tuple_; }

 private:
  bool consistent(int i, Vertex x) const {
    for (int j = 0; j < p_.k; ++j) {
      if (j == i || tuple_[j] < 0) continue;
      if (tuple_[j] == x) return false;
      if (g_.adjacent(tuple_[j], x) != p_.edge(i, j)) return false;
    }
    for (auto [a, b] : p_.less) {
      if (b == i && tuple_[a] >= 0 && !(tuple_[a] < x)) return false;
      if (a == i && tuple_[b] >= 0 && !(x < tuple_[b])) return false;
    }
    return true;
  }

  bool try_candidate(int pos, Vertex x) {
    const int i = order_[pos];
    if (!consistent(i, x)) return false;
    tuple_[i] = x;
    if (extend(pos + 1)) return true;
    tuple_[i] = -1;
    return false;
  }

  bool extend(int pos) {
    if (pos == p_.k) return true;
    const int i = order_[pos];
    if (source_[i] < 0) {
      for (Vertex x = 0; x < g_.size(); ++x) {
        if (try_candidate(pos, x)) return true;
      }
      return false;
    }
    if (earlier_neighbors_[pos].size() >= 2) {
      // Common neighbors of all placed pattern neighbors.
      std::vector<Vertex>& cand = buffers_[pos];
      const auto& roles = earlier_neighbors_[pos];
      const auto first = g_.neighbors(tuple_[roles[0]]);
      cand.assign(first.begin(), first.end());
      for (size_t r = 1; r < roles.size() && !cand.empty(); ++r) {
        const auto other = g_.neighbors(tuple_[roles[r]]);
        const auto end = std::set_intersection(cand.begin(), cand.end(), other.begin(), other.end(), cand.begin());
        cand.erase(end, cand.end());
      }
      for (size_t c = 0; c < cand.size(); ++c) {
        if (try_candidate(pos, cand[c])) return true;
      }
      return false;
    }
    if (via_neighbor_[i]) {
      for (Vertex x : g_.neighbors(tuple_[source_[i]])) {
        if (try_candidate(pos, x)) return true;
      }
      return false;
    }
    for (Vertex x : second_neighborhood(g_, tuple_[source_[i]])) {
      if (try_candidate(pos, x)) return true;
    }
    return false;
  }

  const Graph& g_;
  const FixedPattern& p_;
  std::vector<int> order_;
  std::vector<Vertex> tuple_;
  std::vector<int> source_;
  std::vector<bool> via_neighbor_;
  std::vector<std::vector<int>> earlier_neighbors_;  // by position
  std::vector<std::vector<Vertex>> buffers_;          // by position
};

std::optional<std::vector<Vertex>> find_fixed(const Graph& g, const FixedPattern& p,
                                              std::span<const Vertex> anchors) {
  std::vector<int> identity(p.k);
  for (int i = 0; i < p.k; ++i) identity[i] = i;
  FixedMatcher lex(g, p, identity);
  // Cheap existence test per anchor before the lexicographic search.
  FixedMatcher fast(g, p, FixedMatcher::greedy_order(p));
  std::vector<Vertex> starts(anchors.begin(), anchors.end());
  if (anchors.empty()) {
    starts.resize(g.size());
    for (Vertex x = 0; x < g.size(); ++x) starts[x] = x;
  }
  std::sort(starts.begin(), starts.end());
  for (Vertex x : starts) {
    if (fast.from(x) && lex.from(x)) return lex.tuple();
  }
  return std::nullopt;
}

// Depth-first search over induced paths c0 < (all later vertices), closing
// into an odd induced cycle of length >= 5.
class OddHoleSearch {
 public:
  OddHoleSearch(const Graph& g, int cap) : g_(g), cap_(cap), on_path_(g.size(), 0) {}

  std::optional<std::vector<Vertex>> from(Vertex c0) {
    path_.assign(1, c0);
    on_path_[c0] = 1;
    const bool found = grow();
    for (Vertex v : path_) on_path_[v] = 0;
    if (found) return path_;
    return std::nullopt;
  }

 private:
  bool grow() {
    const Vertex c0 = path_.front();
    const Vertex last = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= cap_) return false;
    for (Vertex x : g_.neighbors(last)) {
      if (x <= c0 || on_path_[x]) continue;
      // x may touch only `last` among path vertices, plus c0 when closing.
      bool touches_inner = false;
      for (int i = 1; i + 1 < len; ++i) {
        if (g_.adjacent(x, path_[i])) {
          touches_inner = true;
          break;
        }
      }
      if (touches_inner) continue;
      const bool closes = len >= 2 && g_.adjacent(x, c0);
      if (closes) {
        // Cycle length len + 1; orientation fixed by path_[1] < x.
        if ((len + 1) % 2 == 1 && len + 1 >= 5 && path_[1] < x) {
          path_.push_back(x);
          return true;
        }
        continue;
      }
      path_.push_back(x);
      on_path_[x] = 1;
      if (grow()) return true;
      on_path_[x] = 0;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int cap_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g, std::span<const Vertex> anchors,
                                                 int cap) {
  OddHoleSearch search(g, cap);
  if (!anchors.empty()) {
    std::vector<Vertex> a(anchors.begin(), anchors.end());
    std::sort(a.begin(), a.end());
    for (Vertex c0 : a) {
      if (auto hole = search.from(c0)) return hole;
    }
    return std::nullopt;
  }
  for (Vertex c0 = 0; c0 < g.size(); ++c0) {
    if (auto hole = search.from(c0)) return hole;
  }
  return std::nullopt;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

// Rotates/reflects a cycle so it starts at its minimum and c1 < c_last.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::optional<PatternWitness> find_odd_wheel(const Graph& g, const PatternSearchOptions& options) {
  std::vector<Vertex> hubs(options.anchors.begin(), options.anchors.end());
  if (hubs.empty()) {
    hubs.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) hubs[v] = v;
  }
  std::sort(hubs.begin(), hubs.end());
  for (Vertex hub : hubs) {
    if (g.degree(hub) < 5) continue;
    const auto lk = link(g, hub);
    // Line graphs of bipartite graphs have no odd holes.
    if (std::holds_alternative<RootGraph>(is_line_graph_of_bipartite(lk.graph))) continue;
    if (auto hole = find_odd_hole(lk.graph, {}, options.odd_hole_cap)) {
      PatternWitness w{PatternKind::kOddWheel, {hub}};
      for (Vertex x : *hole) w.vertices.push_back(lk.original[x]);
      return w;
    }
  }
  return std::nullopt;
}

// ---- Krausz clique partitions -------------------------------------------

struct CliquePartition {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<std::array<int, 2>> member;  // clique ids per vertex, -1 = none
};

class KrauszBuilder {
 public:
  KrauszBuilder(const Graph& g, CliquePartition& part) : g_(g), part_(part) {}

  // Grows the partition of one component from the clique containing the
  // seed edge. Returns false on any inconsistency.
  bool grow(std::vector<Vertex> seed) {
    std::deque<Vertex> pending;
    if (!add(std::move(seed), pending)) return false;
    while (!pending.empty()) {
      const Vertex x = pending.front();
      pending.pop_front();
      if (part_.member[x][1] >= 0) continue;
      const auto& k = part_.cliques[part_.member[x][0]];
      std::vector<Vertex> rest{x};
      for (Vertex y : g_.neighbors(x)) {
        if (!std::binary_search(k.begin(), k.end(), y)) rest.push_back(y);
      }
      if (rest.size() == 1) continue;
      std::sort(rest.begin(), rest.end());
      auto found = index_.find(rest);
      if (found != index_.end()) continue;
      if (!add(std::move(rest), pending)) return false;
    }
    return true;
  }

 private:
  bool add(std::vector<Vertex> clique, std::deque<Vertex>& pending) {
    std::sort(clique.begin(), clique.end());
    for (size_t i = 0; i < clique.size(); ++i) {
      for (size_t j = i + 1; j < clique.size(); ++j) {
        if (!g_.adjacent(clique[i], clique[j])) return false;
      }
    }
    const int id = static_cast<int>(part_.cliques.size());
    for (Vertex x : clique) {
      auto& m = part_.member[x];
      if (m[0] < 0) {
        m[0] = id;
        pending.push_back(x);
      } else if (m[1] < 0) {
        m[1] = id;
      } else {
        return false;
      }
    }
    index_.emplace(clique, id);
    part_.cliques.push_back(std::move(clique));
    return true;
  }

  const Graph& g_;
  CliquePartition& part_;
  std::map<std::vector<Vertex>, int> index_;
};

// Every vertex's neighborhood is exactly the disjoint union of its cliques.
bool partition_consistent(const Graph& g, const CliquePartition& part, std::span<const Vertex> comp) {
  for (Vertex x : comp) {
    const auto& m = part.member[x];
    if (m[0] < 0) return false;
    std::vector<Vertex> covered;
    for (int id : m) {
      if (id < 0) continue;
      for (Vertex y : part.cliques[id]) {
        if (y != x) covered.push_back(y);
      }
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
    auto nb = g.neighbors(x);
    if (!std::equal(covered.begin(), covered.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> seen(g.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (size_t h = 0; h < comp.size(); ++h) {
      for (Vertex w : g.neighbors(comp[h])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Builds a root from per-component Krausz partitions. When `only_maximal`
// the seed clique is the full common neighborhood (the unique maximal clique
// in diamond-free graphs).
std::variant<RootGraph, LineGraphObstruction> krausz_root(const Graph& g, bool only_maximal) {
  const int n = g.size();
  std::vector<Edge> root_edges;
  std::vector<Edge> edge_of(n, {-1, -1});
  int next_root = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) {
      edge_of[comp[0]] = {next_root, next_root + 1};
      next_root += 2;
      continue;
    }
    const Vertex s = comp.front();
    const Vertex t = g.neighbors(s).front();
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(s).begin(), g.neighbors(s).end(), g.neighbors(t).begin(),
                          g.neighbors(t).end(), std::back_inserter(common));
    std::vector<std::optional<Vertex>> drops{std::nullopt};
    if (!only_maximal) {
      for (Vertex x : common) drops.emplace_back(x);
    }
    bool done = false;
    for (const auto& drop : drops) {
      CliquePartition part;
      part.member.assign(n, {-1, -1});
      std::vector<Vertex> seed{s, t};
      for (Vertex x : common) {
        if (!drop || x != *drop) seed.push_back(x);
      }
      KrauszBuilder builder(g, part);
      if (!builder.grow(seed) || !partition_consistent(g, part, comp)) continue;
      const int base = next_root;
      next_root += static_cast<int>(part.cliques.size());
      for (Vertex x : comp) {
        const auto& m = part.member[x];
        int a = base + m[0];
        int b = m[1] >= 0 ? base + m[1] : next_root++;
        edge_of[x] = {std::min(a, b), std::max(a, b)};
      }
      done = true;
      break;
    }
    if (!done) {
      LineGraphObstruction ob;
      ob.vertices = {s, t};
      ob.vertices.insert(ob.vertices.end(), common.begin(), common.end());
      ob.reason = "no clique partition with every vertex in at most two cliques through edge (" +
                  std::to_string(s) + "," + std::to_string(t) + ")";
      return ob;
    }
  }
  RootGraph r;
  r.root = Graph::from_edges(next_root, edge_of);
  r.edge_of = std::move(edge_of);
  return r;
}

// Shortest odd cycle of a small graph as a vertex sequence, if any.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& h) {
  std::optional<std::vector<Vertex>> best;
  for (Vertex r = 0; r < h.size(); ++r) {
    std::vector<int> dist(h.size(), -1), parent(h.size(), -1);
    std::vector<Vertex> q{r};
    dist[r] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      for (Vertex w : h.neighbors(q[i])) {
        if (dist[w] < 0) {
          dist[w] = dist[q[i]] + 1;
          parent[w] = q[i];
          q.push_back(w);
        }
      }
    }
    for (Vertex a = 0; a < h.size(); ++a) {
      if (dist[a] < 0) continue;
      for (Vertex b : h.neighbors(a)) {
        if (b <= a || dist[b] != dist[a]) continue;
        const size_t len = 2 * dist[a] + 1;
        if (best && best->size() <= len) continue;
        std::vector<Vertex> left, right;
        for (Vertex x = a; x >= 0; x = parent[x]) left.push_back(x);
        for (Vertex x = b; x >= 0; x = parent[x]) right.push_back(x);
        // Simple only if the two tree paths meet first at r.
        std::vector<Vertex> l2(left.begin(), left.end() - 1), r2(right.begin(), right.end() - 1);
        std::vector<Vertex> sl = l2, sr = r2;
        std::sort(sl.begin(), sl.end());
        std::sort(sr.begin(), sr.end());
        std::vector<Vertex> both;
        std::set_intersection(sl.begin(), sl.end(), sr.begin(), sr.end(), std::back_inserter(both));
        if (!both.empty()) continue;
        // r ... a, then b ... (child of r); the closing edge returns to r.
        std::vector<Vertex> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), r2.begin(), r2.end());
        best = std::move(cycle);
      }
    }
  }
  return best;
}

}  // namespace

std::string_view pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::kPropeller: return "Propeller";
    case PatternKind::kHalfOpenBook: return "HalfOpenBook";
    case PatternKind::kOddWheel: return "OddWheel";
    case PatternKind::kK23: return "K23";
    case PatternKind::kW4Minus: return "W4Minus";
    case PatternKind::kClaw: return "Claw";
    case PatternKind::kDiamond: return "Diamond";
    case PatternKind::kOddHole: return "OddHole";
  }
  return "Unknown";
}

bool is_valid_witness(const Graph& g, const PatternWitness& w) {
  for (Vertex v : w.vertices) {
    if (v < 0 || v >= g.size()) return false;
  }
  switch (w.kind) {
    case PatternKind::kOddHole: {
      const size_t k = w.vertices.size();
      return k >= 5 && k % 2 == 1 && is_induced_cycle(g, w.vertices);
    }
    case PatternKind::kOddWheel: {
      const size_t k = w.vertices.size();
      if (k < 6 || (k - 1) % 2 == 0) return false;
      const Vertex hub = w.vertices[0];
      std::span<const Vertex> rim(w.vertices.data() + 1, k - 1);
      for (Vertex x : rim) {
        if (x == hub || !g.adjacent(hub, x)) return false;
      }
      return is_induced_cycle(g, rim);
    }
    default: break;
  }
  const auto& p = fixed_pattern(w.kind);
  if (static_cast<int>(w.vertices.size()) != p.k) return false;
  for (int i = 0; i < p.k; ++i) {
    for (int j = i + 1; j < p.k; ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
      if (g.adjacent(w.vertices[i], w.vertices[j]) != p.edge(i, j)) return false;
    }
  }
  return true;
}

std::optional<PatternWitness> find_pattern(const Graph& g, PatternKind kind,
                                           const PatternSearchOptions& options) {
  switch (kind) {
    case PatternKind::kOddWheel:
      return find_odd_wheel(g, options);
    case PatternKind::kOddHole:
      if (auto hole = find_odd_hole(g, options.anchors, options.odd_hole_cap)) {
        return PatternWitness{kind, std::move(*hole)};
      }
      return std::nullopt;
    default: break;
  }
  if (auto t = find_fixed(g, fixed_pattern(kind), options.anchors)) return PatternWitness{kind, std::move(*t)};
  return std::nullopt;
}

std::string_view interval_shape_name(IntervalShapeKind kind) {
  switch (kind) {
    case IntervalShapeKind::kSquare: return "Square";
    case IntervalShapeKind::kPyramid: return "Pyramid";
    case IntervalShapeKind::kOctahedron: return "Octahedron";
    case IntervalShapeKind::kOther: return "Other";
  }
  return "Unknown";
}

IntervalShape classify_two_interval(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) {
    throw Error(ErrorCode::kVertexOutOfRange, "interval endpoint out of range", {u, v});
  }
  std::vector<Vertex> mid;
  std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                        g.neighbors(v).end(), std::back_inserter(mid));
  if (u == v || g.adjacent(u, v) || mid.empty()) {
    throw Error(ErrorCode::kNotAtDistanceTwo,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " are not at distance 2",
                {u, v});
  }
  // Both ends see every middle vertex, so the shape is decided by the
  // subgraph on the middle vertices alone.
  const int k = static_cast<int>(mid.size());
  std::vector<int> deg(k, 0);
  int edges = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(mid[i], mid[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
    }
  }
  std::sort(deg.begin(), deg.end());
  auto other = [&](std::string why) { return IntervalShape{IntervalShapeKind::kOther, std::move(why)}; };
  switch (k) {
    case 2:
      if (edges == 0) return {IntervalShapeKind::kSquare, {}};
      return other("the two common neighbors are adjacent");
    case 3:
      if (edges == 2) return {IntervalShapeKind::kPyramid, {}};
      return other("three common neighbors with " + std::to_string(edges) +
                   " edges among them (pyramid needs a path)");
    case 4:
      if (edges == 4 && deg == std::vector<int>{2, 2, 2, 2}) return {IntervalShapeKind::kOctahedron, {}};
      return other("four common neighbors not inducing a 4-cycle");
    default:
      return other(std::to_string(k) + " common neighbors (expected 2, 3 or 4)");
  }
}

bool verify_root(const Graph& g, const RootGraph& r) {
  const int n = g.size();
  if (static_cast<int>(r.edge_of.size()) != n || r.root.edge_count() != n) return false;
  auto es = r.root.edges();
  std::map<Edge, Vertex> position;
  for (size_t i = 0; i < es.size(); ++i) position.emplace(es[i], static_cast<Vertex>(i));
  std::vector<Vertex> to_line(n);
  std::vector<char> used(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    auto it = position.find(r.edge_of[x]);
    if (it == position.end() || used[it->second]) return false;
    used[it->second] = 1;
    to_line[x] = it->second;
  }
  const Graph lg = line_graph(r.root);
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) != lg.degree(to_line[x])) return false;
    for (Vertex y : g.neighbors(x)) {
      if (!lg.adjacent(to_line[x], to_line[y])) return false;
    }
  }
  if (!r.side.empty()) {
    if (static_cast<int>(r.side.size()) != r.root.size()) return false;
    for (auto [a, b] : es) {
      if (r.side[a] == r.side[b]) return false;
    }
  }
  return true;
}

LineGraphResult is_line_graph(const Graph& g) {
  if (auto claw = find_pattern(g, PatternKind::kClaw)) {
    return LineGraphObstruction{claw, claw->vertices, "induced claw"};
  }
  auto result = krausz_root(g, false);
  if (auto* r = std::get_if<RootGraph>(&result)) {
    if (!verify_root(g, *r)) {
      return LineGraphObstruction{std::nullopt, {}, "root reconstruction failed verification"};
    }
  }
  return result;
}

LineGraphResult is_line_graph_of_bipartite(const Graph& g) {
  for (PatternKind kind : {PatternKind::kClaw, PatternKind::kDiamond}) {
    if (auto w = find_pattern(g, kind)) {
      return LineGraphObstruction{w, w->vertices, std::string("induced ") + std::string(pattern_name(kind))};
    }
  }
  auto result = krausz_root(g, true);
  auto* r = std::get_if<RootGraph>(&result);
  if (!r) return result;
  // Two-color the root; component minimum gets side 0.
  const Graph& h = r->root;
  std::vector<int> side(h.size(), -1);
  bool bipartite = true;
  for (Vertex s = 0; s < h.size() && bipartite; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> q{s};
    for (size_t i = 0; i < q.size() && bipartite; ++i) {
      for (Vertex w : h.neighbors(q[i])) {
        if (side[w] < 0) {
          side[w] = 1 - side[q[i]];
          q.push_back(w);
        } else if (side[w] == side[q[i]]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) {
    r->side = std::move(side);
    if (!verify_root(g, *r)) {
      return LineGraphObstruction{std::nullopt, {}, "root reconstruction failed verification"};
    }
    return result;
  }
  // An odd cycle of the root maps to an odd hole of g.
  if (auto cyc = shortest_odd_cycle(h)) {
    std::map<Edge, Vertex> by_edge;
    for (Vertex x = 0; x < g.size(); ++x) by_edge.emplace(r->edge_of[x], x);
    std::vector<Vertex> hole;
    const size_t k = cyc->size();
    for (size_t i = 0; i < k; ++i) {
      Vertex a = (*cyc)[i], b = (*cyc)[(i + 1) % k];
      hole.push_back(by_edge.at({std::min(a, b), std::max(a, b)}));
    }
    PatternWitness w{PatternKind::kOddHole, canonical_cycle(std::move(hole))};
    if (is_valid_witness(g, w)) return LineGraphObstruction{w, w.vertices, "odd induced cycle"};
  }
  if (auto w = find_pattern(g, PatternKind::kOddHole, {{}, g.size() + 1})) {
    return LineGraphObstruction{w, w->vertices, "odd induced cycle"};
  }
  return LineGraphObstruction{std::nullopt, {}, "root is not bipartite"};
}

CocktailEmbedding is_induced_cocktail_subgraph(const Graph& g, int dimension) {
  if (dimension < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  CocktailEmbedding out;
  const int n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    if (n - 1 - g.degree(v) >= 2) {
      out.vertex = v;
      for (Vertex w = 0; w < n && out.non_neighbors.size() < 2; ++w) {
        if (w != v && !g.adjacent(v, w)) out.non_neighbors.push_back(w);
      }
      out.reason = "vertex " + std::to_string(v) + " has two non-neighbors";
      return out;
    }
  }
  if (n > 2 * dimension) {
    out.reason = std::to_string(n) + " vertices exceed 2*" + std::to_string(dimension);
    return out;
  }
  out.embeds = true;
  return out;
}

}  // namespace mbg
