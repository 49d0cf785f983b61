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

#include "mbg/conditions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "mbg/complex.hpp"
#include "mbg/error.hpp"

namespace mbg {

std::string_view condition_name(ConditionId id) {
  switch (id) {
    case ConditionId::kIC: return "IC";
    case ConditionId::kPC: return "PC";
    case ConditionId::kLPC: return "LPC";
    case ConditionId::kTC: return "TC(v)";
    case ConditionId::kSPC: return "SPC(v)";
    case ConditionId::kLTC: return "LTC";
    case ConditionId::kLC: return "LC(v)";
    case ConditionId::kLCAll: return "LC-all";
    case ConditionId::kGenLink: return "GenLink";
    case ConditionId::kIC4: return "IC4";
    case ConditionId::kNoForbidden: return "NoForbidden";
  }
  return "?";
}

std::string_view maurer_mode_name(MaurerMode mode) {
  return mode == MaurerMode::kMatroid ? "matroid" : "even-delta";
}

std::optional<Vertex> ConditionWitness::role(std::string_view name) const {
  for (const auto& [n, v] : roles) {
    if (n == name) return v;
  }
  return std::nullopt;
}

int64_t ConditionReport::stat(std::string_view name) const {
  for (const auto& [n, v] : stats) {
    if (n == name) return v;
  }
  return 0;
}

namespace {

using Rng = std::mt19937_64;

constexpr uint8_t kFar = 255;

// All-pairs distances, saturated at kFar.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.size()), d_(static_cast<size_t>(n_) * n_, kFar) {
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
      uint8_t* row = &d_[static_cast<size_t>(s) * n_];
      row[s] = 0;
      size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const Vertex x = queue[head++];
        if (row[x] >= kFar - 1) continue;
        for (Vertex y : g.neighbors(x)) {
          if (row[y] == kFar) {
            row[y] = static_cast<uint8_t>(row[x] + 1);
            queue[tail++] = y;
          }
        }
      }
    }
  }
  int operator()(Vertex a, Vertex b) const { return d_[static_cast<size_t>(a) * n_ + b]; }

 private:
  int n_;
  std::vector<uint8_t> d_;
};

// Reusable radius-2 exploration.
class LocalBall {
 public:
  explicit LocalBall(const Graph& g) : g_(g), stamp_(g.size(), -1), dist_(g.size(), 0) {}

  // S_2(u), ascending.
  const std::vector<Vertex>& sphere2(Vertex u) {
    ++round_;
    far_.clear();
    mark(u, 0);
    for (Vertex a : g_.neighbors(u)) mark(a, 1);
    for (Vertex a : g_.neighbors(u)) {
      for (Vertex b : g_.neighbors(a)) {
        if (stamp_[b] != round_) {
          mark(b, 2);
          far_.push_back(b);
        }
      }
    }
    std::sort(far_.begin(), far_.end());
    return far_;
  }
  // Distance from the last center, or 3 for anything beyond 2.
  int dist(Vertex x) const { return stamp_[x] == round_ ? dist_[x] : 3; }

 private:
  void mark(Vertex x, int d) {
    stamp_[x] = round_;
    dist_[x] = static_cast<uint8_t>(d);
  }
  const Graph& g_;
  std::vector<int> stamp_;
  std::vector<uint8_t> dist_;
  std::vector<Vertex> far_;
  int round_ = 0;
};

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  auto na = g.neighbors(a), nb = g.neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

Vertex uniform_vertex(Rng& rng, int n) {
  return std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
}

template <typename T>
const T& uniform_pick(Rng& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<size_t>(0, items.size() - 1)(rng)];
}

constexpr int kSampleTries = 64;

// Uniform u, then uniform w in S_2(u).
std::optional<std::pair<Vertex, Vertex>> sample_distance_two(const Graph& g, LocalBall& ball, Rng& rng) {
  if (g.size() == 0) return std::nullopt;
  for (int t = 0; t < kSampleTries; ++t) {
    const Vertex u = uniform_vertex(rng, g.size());
    const auto& far = ball.sphere2(u);
    if (!far.empty()) return std::pair{u, uniform_pick(rng, far)};
  }
  return std::nullopt;
}

// A distance-2 pair as above, then a uniform non-adjacent pair of common
// neighbors. The sampled diagonal comes first.
std::optional<std::array<Vertex, 4>> sample_square(const Graph& g, LocalBall& ball, Rng& rng) {
  for (int t = 0; t < kSampleTries; ++t) {
    auto pair = sample_distance_two(g, ball, rng);
    if (!pair) return std::nullopt;
    const auto common = common_neighbors(g, pair->first, pair->second);
    std::vector<std::pair<Vertex, Vertex>> options;
    for (size_t i = 0; i < common.size(); ++i) {
      for (size_t j = i + 1; j < common.size(); ++j) {
        if (!g.adjacent(common[i], common[j])) options.emplace_back(common[i], common[j]);
      }
    }
    if (options.empty()) continue;
    const auto [b, d] = uniform_pick(rng, options);
    return std::array<Vertex, 4>{pair->first, b, pair->second, d};
  }
  return std::nullopt;
}

std::vector<Vertex> pick_vertices(int n, int64_t k, Rng& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<size_t>(std::min<int64_t>(k, n)));
  std::sort(all.begin(), all.end());
  return all;
}

bool use_sampling(const Graph& g, const CheckOptions& o) {
  return o.force_sampling || g.size() > o.sample_threshold;
}

class Collector {
 public:
  Collector(ConditionId id, const CheckOptions& o, bool exhaustive)
      : cap_(std::max<size_t>(1, o.max_witnesses)) {
    report_.id = id;
    report_.exhaustive = exhaustive;
    report_.seed = o.seed;
  }
  void scanned(int64_t k = 1) { scanned_ += k; }
  void violation(ConditionWitness w) {
    ++violations_;
    if (report_.witnesses.size() < cap_) report_.witnesses.push_back(std::move(w));
  }
  ConditionReport& report() { return report_; }
  ConditionReport finish(std::vector<std::pair<std::string, int64_t>> extra = {}) {
    report_.pass = violations_ == 0;
    report_.stats.emplace_back("scanned", scanned_);
    report_.stats.emplace_back("violations", violations_);
    for (auto& e : extra) report_.stats.push_back(std::move(e));
    return std::move(report_);
  }

 private:
  ConditionReport report_;
  size_t cap_;
  int64_t scanned_ = 0;
  int64_t violations_ = 0;
};

ConditionWitness square_witness(Vertex v, const SquareTuple& s, std::string reason) {
  return {{{"v", v}, {"u1", s.u1}, {"u2", s.u2}, {"u3", s.u3}, {"u4", s.u4}}, std::nullopt,
          std::move(reason)};
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

DistanceVector connected_bfs(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw Error(ErrorCode::kVertexOutOfRange, "basepoint out of range", {v});
  auto d = bfs_distances(g, v);
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!d.reachable(x)) throw Error(ErrorCode::kDisconnected, "graph is not connected", {v, x});
  }
  return d;
}

std::vector<std::string> pattern_roles(PatternKind kind, size_t size) {
  switch (kind) {
    case PatternKind::kPropeller: return {"u", "v", "x", "y", "z"};
    case PatternKind::kHalfOpenBook: return {"u", "v", "w", "x", "y", "z"};
    case PatternKind::kK23: return {"a", "b", "x", "y", "z"};
    case PatternKind::kW4Minus: return {"hub", "x1", "x2", "x3", "y"};
    case PatternKind::kClaw: return {"center", "a", "b", "c"};
    case PatternKind::kDiamond: return {"u", "v", "x", "y"};
    case PatternKind::kOddWheel: {
      std::vector<std::string> r{"hub"};
      for (size_t i = 1; i < size; ++i) r.push_back("c" + std::to_string(i - 1));
      return r;
    }
    case PatternKind::kOddHole: {
      std::vector<std::string> r;
      for (size_t i = 0; i < size; ++i) r.push_back("c" + std::to_string(i));
      return r;
    }
  }
  return {};
}

ConditionWitness pattern_witness(const PatternWitness& p, std::optional<Vertex> v, std::string reason) {
  ConditionWitness w;
  if (v) w.roles.emplace_back("v", *v);
  const auto names = pattern_roles(p.kind, p.vertices.size());
  for (size_t i = 0; i < p.vertices.size(); ++i) w.roles.emplace_back(names[i], p.vertices[i]);
  w.pattern = p;
  w.reason = std::move(reason);
  return w;
}

// Obstruction inside link(g, v), translated to ids of g.
ConditionWitness link_witness(const InducedSubgraph& lk, Vertex v, const LineGraphObstruction& ob) {
  if (ob.pattern) {
    PatternWitness p = *ob.pattern;
    for (auto& x : p.vertices) x = lk.original[x];
    return pattern_witness(p, v, ob.reason);
  }
  ConditionWitness w;
  w.roles.emplace_back("v", v);
  for (size_t i = 0; i < ob.vertices.size(); ++i) {
    w.roles.emplace_back("x" + std::to_string(i), lk.original[ob.vertices[i]]);
  }
  w.reason = ob.reason;
  return w;
}

bool interval_has_square(const Graph& sub) {
  const int n = sub.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (sub.adjacent(a, c)) continue;
      const auto common = common_neighbors(sub, a, c);
      for (size_t i = 0; i < common.size(); ++i) {
        for (size_t j = i + 1; j < common.size(); ++j) {
          if (!sub.adjacent(common[i], common[j])) return true;
        }
      }
    }
  }
  return false;
}

// Reason the 2-interval I(u,w) violates IC4, or nullopt.
std::optional<std::string> ic4_failure(const Graph& g, Vertex u, Vertex w) {
  auto verts = common_neighbors(g, u, w);
  verts.push_back(u);
  verts.push_back(w);
  const auto sub = induced(g, verts);
  const auto emb = is_induced_cocktail_subgraph(sub.graph, 4);
  if (!emb.embeds) return emb.reason;
  if (!interval_has_square(sub.graph)) return "interval contains no square";
  return std::nullopt;
}

bool spc_holds(const Graph& g, const DistanceVector& d, Vertex u, Vertex w, Vertex w2) {
  const int k = d[w];
  for (Vertex x : g.neighbors(w)) {
    if (d[x] == k - 1 && g.adjacent(x, w2)) return true;
  }
  std::vector<Vertex> xs;
  for (Vertex x : g.neighbors(u)) {
    if (d[x] == k && g.adjacent(x, w) && g.adjacent(x, w2)) xs.push_back(x);
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      if (!g.adjacent(xs[i], xs[j])) return true;
    }
  }
  return false;
}

bool tc_holds(const Graph& g, const DistanceVector& d, Vertex u, Vertex w) {
  for (Vertex x : g.neighbors(u)) {
    if (d[x] == d[u] - 1 && g.adjacent(x, w)) return true;
  }
  return false;
}

bool ltc_holds(const Graph& g, Vertex v, Vertex u, Vertex w) {
  for (Vertex x : g.neighbors(u)) {
    if (g.adjacent(x, v) && g.adjacent(x, w)) return true;
  }
  return false;
}

}  // namespace

ConditionReport check_interval_condition(const Graph& g, const CheckOptions& o) {
  const bool sampled = use_sampling(g, o);
  Collector c(ConditionId::kIC, o, !sampled);
  std::array<int64_t, 4> shapes{};
  auto visit = [&](Vertex u, Vertex w) {
    c.scanned();
    const auto shape = classify_two_interval(g, u, w);
    ++shapes[static_cast<int>(shape.kind)];
    if (shape.kind == IntervalShapeKind::kOther) {
      c.violation({{{"u", u}, {"w", w}}, std::nullopt, shape.reason});
    }
  };
  LocalBall ball(g);
  if (!sampled) {
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex w : ball.sphere2(u)) {
        if (w > u) visit(u, w);
      }
    }
  } else {
    Rng rng(o.seed);
    for (int64_t i = 0; i < o.pair_samples; ++i) {
      const auto p = sample_distance_two(g, ball, rng);
      if (!p) break;
      visit(p->first, p->second);
    }
  }
  return c.finish({{"square", shapes[0]}, {"pyramid", shapes[1]}, {"octahedron", shapes[2]},
                   {"other", shapes[3]}});
}

ConditionReport check_positioning(const Graph& g, std::optional<Vertex> basepoint,
                                  const CheckOptions& o) {
  require_connected(g);
  if (basepoint) {
    const auto d = connected_bfs(g, *basepoint);
    Collector c(ConditionId::kPC, o, true);
    c.report().basepoint = basepoint;
    for_each_square(g, [&](const SquareTuple& s) {
      c.scanned();
      const int a = d[s.u1] + d[s.u3], b = d[s.u2] + d[s.u4];
      if (a != b) {
        c.violation(square_witness(*basepoint, s, std::to_string(a) + " != " + std::to_string(b)));
      }
    });
    return c.finish();
  }
  const bool sampled = use_sampling(g, o);
  Collector c(ConditionId::kPC, o, !sampled);
  auto check = [&](Vertex v, const SquareTuple& s, int a, int b) {
    c.scanned();
    if (a != b) c.violation(square_witness(v, s, std::to_string(a) + " != " + std::to_string(b)));
  };
  if (!sampled) {
    const auto squares = enumerate_squares(g);
    const DistanceTable d(g);
    for (Vertex v = 0; v < g.size(); ++v) {
      for (const auto& s : squares) check(v, s, d(v, s.u1) + d(v, s.u3), d(v, s.u2) + d(v, s.u4));
    }
  } else {
    Rng rng(o.seed);
    LocalBall ball(g);
    for (int64_t i = 0; i < o.pair_samples; ++i) {
      const Vertex v = uniform_vertex(rng, g.size());
      const auto q = sample_square(g, ball, rng);
      if (!q) break;
      const auto d = bfs_distances(g, v);
      const auto s = canonical_square((*q)[0], (*q)[1], (*q)[2], (*q)[3]);
      check(v, s, d[s.u1] + d[s.u3], d[s.u2] + d[s.u4]);
    }
  }
  return c.finish();
}

ConditionReport check_local_positioning(const Graph& g, const CheckOptions& o) {
  const bool sampled = use_sampling(g, o);
  Collector c(ConditionId::kLPC, o, !sampled);
  int64_t squares = 0;
  if (!sampled) {
    const DistanceTable d(g);
    LocalBall ball(g);
    std::vector<std::vector<Vertex>> far(g.size());
    for (Vertex u = 0; u < g.size(); ++u) far[u] = ball.sphere2(u);
    for_each_square(g, [&](const SquareTuple& s) {
      ++squares;
      const std::array<std::array<Vertex, 4>, 2> diagonals{
          {{s.u1, s.u3, s.u2, s.u4}, {s.u2, s.u4, s.u1, s.u3}}};
      for (const auto& [p, q, r, t] : diagonals) {
        for (Vertex v : far[p]) {
          if (d(v, q) != 2) continue;
          c.scanned();
          const int sum = d(v, r) + d(v, t);
          if (sum != 4) c.violation(square_witness(v, s, "opposite distances sum to " + std::to_string(sum)));
        }
      }
    });
  } else {
    Rng rng(o.seed);
    LocalBall ball(g);
    int64_t vacuous = 0;
    for (int64_t i = 0; i < o.pair_samples && vacuous < kSampleTries * o.pair_samples;) {
      auto q = sample_square(g, ball, rng);
      if (!q) break;
      ++squares;
      if (std::bernoulli_distribution(0.5)(rng)) std::rotate(q->begin(), q->begin() + 1, q->end());
      const auto [p, r, qq, t] = *q;
      const auto dp = bfs_distances(g, p, 2), dq = bfs_distances(g, qq, 2);
      std::vector<Vertex> candidates;
      for (Vertex v = 0; v < g.size(); ++v) {
        if (dp.reachable(v) && dq.reachable(v) && dp[v] == 2 && dq[v] == 2) candidates.push_back(v);
      }
      if (candidates.empty()) {
        ++vacuous;
        continue;
      }
      ++i;
      const Vertex v = uniform_pick(rng, candidates);
      const auto dv = bfs_distances(g, v, 3);
      auto dist = [&](Vertex x) { return dv.reachable(x) ? dv[x] : 4; };
      c.scanned();
      const int sum = dist(r) + dist(t);
      if (sum != 4) {
        c.violation(square_witness(v, canonical_square(p, r, qq, t),
                                   "opposite distances sum to " + std::to_string(sum)));
      }
    }
    return c.finish({{"squares", squares}, {"vacuous", vacuous}});
  }
  return c.finish({{"squares", squares}});
}

ConditionReport check_triangle_condition(const Graph& g, Vertex v) {
  const auto d = connected_bfs(g, v);
  Collector c(ConditionId::kTC, CheckOptions{}, true);
  c.report().basepoint = v;
  for (auto [u, w] : g.edges()) {
    if (d[u] != d[w] || d[u] < 2) continue;
    c.scanned();
    if (!tc_holds(g, d, u, w)) {
      c.violation({{{"u", u}, {"w", w}}, std::nullopt,
                   "no common neighbor at level " + std::to_string(d[u] - 1)});
    }
  }
  return c.finish();
}

ConditionReport check_square_pyramid(const Graph& g, Vertex v) {
  const auto d = connected_bfs(g, v);
  Collector c(ConditionId::kSPC, CheckOptions{}, true);
  c.report().basepoint = v;
  std::vector<Vertex> lower;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (d[u] < 2) continue;
    lower.clear();
    for (Vertex w : g.neighbors(u)) {
      if (d[w] == d[u] - 1) lower.push_back(w);
    }
    for (size_t i = 0; i < lower.size(); ++i) {
      for (size_t j = i + 1; j < lower.size(); ++j) {
        if (g.adjacent(lower[i], lower[j])) continue;
        c.scanned();
        if (!spc_holds(g, d, u, lower[i], lower[j])) {
          c.violation({{{"u", u}, {"w", lower[i]}, {"w'", lower[j]}}, std::nullopt,
                       "neither a lower common neighbor nor a pyramid"});
        }
      }
    }
  }
  return c.finish();
}

ConditionReport check_local_triangle(const Graph& g, const CheckOptions& o) {
  const bool sampled = use_sampling(g, o);
  Collector c(ConditionId::kLTC, o, !sampled);
  std::vector<Vertex> centers;
  if (sampled) {
    Rng rng(o.seed);
    centers = pick_vertices(g.size(), o.vertex_samples, rng);
  } else {
    centers.resize(g.size());
    std::iota(centers.begin(), centers.end(), 0);
  }
  LocalBall ball(g);
  for (Vertex v : centers) {
    const auto& far = ball.sphere2(v);
    for (Vertex u : far) {
      for (Vertex w : g.neighbors(u)) {
        if (w <= u || ball.dist(w) != 2) continue;
        c.scanned();
        if (!ltc_holds(g, v, u, w)) {
          c.violation({{{"v", v}, {"u", u}, {"w", w}}, std::nullopt, "no vertex adjacent to v, u and w"});
        }
      }
    }
  }
  return c.finish();
}

namespace {

template <typename Recognize>
ConditionReport link_scan(const Graph& g, ConditionId id, std::span<const Vertex> centers,
                          bool exhaustive, const CheckOptions& o, Recognize recognize) {
  Collector c(id, o, exhaustive);
  for (Vertex v : centers) {
    c.scanned();
    const auto lk = link(g, v);
    auto result = recognize(lk.graph);
    if (auto* root = std::get_if<RootGraph>(&result)) {
      c.report().link_roots.emplace(v, std::move(*root));
    } else {
      c.violation(link_witness(lk, v, std::get<LineGraphObstruction>(result)));
    }
  }
  return c.finish();
}

std::vector<Vertex> link_centers(const Graph& g, const CheckOptions& o, bool sampled) {
  if (sampled) {
    Rng rng(o.seed);
    return pick_vertices(g.size(), o.vertex_samples, rng);
  }
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

ConditionReport check_link_condition(const Graph& g, std::optional<Vertex> v, const CheckOptions& o) {
  if (v) {
    if (*v < 0 || *v >= g.size()) throw Error(ErrorCode::kVertexOutOfRange, "vertex out of range", {*v});
    const Vertex one[] = {*v};
    auto r = link_scan(g, ConditionId::kLC, one, true, o,
                       [](const Graph& h) { return is_line_graph_of_bipartite(h); });
    r.basepoint = v;
    return r;
  }
  const bool sampled = use_sampling(g, o);
  const auto centers = link_centers(g, o, sampled);
  return link_scan(g, ConditionId::kLCAll, centers, !sampled, o,
                   [](const Graph& h) { return is_line_graph_of_bipartite(h); });
}

ConditionReport check_generalized_link(const Graph& g, const CheckOptions& o) {
  const bool sampled = use_sampling(g, o);
  const auto centers = link_centers(g, o, sampled);
  return link_scan(g, ConditionId::kGenLink, centers, !sampled, o,
                   [](const Graph& h) { return is_line_graph(h); });
}

ConditionReport check_ic4(const Graph& g, const CheckOptions& o) {
  const bool sampled = use_sampling(g, o);
  Collector c(ConditionId::kIC4, o, !sampled);
  auto visit = [&](Vertex u, Vertex w) {
    c.scanned();
    if (auto why = ic4_failure(g, u, w)) c.violation({{{"u", u}, {"w", w}}, std::nullopt, *why});
  };
  LocalBall ball(g);
  if (!sampled) {
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex w : ball.sphere2(u)) {
        if (w > u) visit(u, w);
      }
    }
  } else {
    Rng rng(o.seed);
    for (int64_t i = 0; i < o.pair_samples; ++i) {
      const auto p = sample_distance_two(g, ball, rng);
      if (!p) break;
      visit(p->first, p->second);
    }
  }
  return c.finish();
}

ConditionReport check_forbidden_patterns(const Graph& g, const CheckOptions& o) {
  const bool sampled = use_sampling(g, o);
  Collector c(ConditionId::kNoForbidden, o, !sampled);
  std::vector<Vertex> anchors;
  if (sampled) {
    Rng rng(o.seed);
    anchors = pick_vertices(g.size(), o.vertex_samples, rng);
  }
  PatternSearchOptions search;
  search.anchors = anchors;
  for (PatternKind kind : {PatternKind::kPropeller, PatternKind::kHalfOpenBook, PatternKind::kOddWheel,
                           PatternKind::kK23, PatternKind::kW4Minus}) {
    c.scanned();
    if (auto w = find_pattern(g, kind, search)) {
      c.violation(pattern_witness(*w, std::nullopt, std::string(pattern_name(kind)) + " found"));
    }
  }
  return c.finish();
}

bool revalidate(const Graph& g, const ConditionReport& report, const ConditionWitness& w) {
  auto in_range = [&](std::optional<Vertex> x) { return x && *x >= 0 && *x < g.size(); };
  for (const auto& [name, x] : w.roles) {
    if (!in_range(x)) return false;
  }
  auto r = [&](std::string_view name) { return *w.role(name); };
  auto has = [&](std::initializer_list<std::string_view> names) {
    for (auto n : names) {
      if (!w.role(n)) return false;
    }
    return true;
  };
  auto distance = [&](Vertex a, Vertex b) -> int {
    const auto d = bfs_distances(g, a);
    return d.reachable(b) ? d[b] : -1;
  };
  switch (report.id) {
    case ConditionId::kIC:
    case ConditionId::kIC4: {
      if (!has({"u", "w"}) || distance(r("u"), r("w")) != 2) return false;
      if (report.id == ConditionId::kIC) {
        return classify_two_interval(g, r("u"), r("w")).kind == IntervalShapeKind::kOther;
      }
      return ic4_failure(g, r("u"), r("w")).has_value();
    }
    case ConditionId::kPC:
    case ConditionId::kLPC: {
      if (!has({"v", "u1", "u2", "u3", "u4"})) return false;
      const SquareTuple s{r("u1"), r("u2"), r("u3"), r("u4")};
      if (!is_square(g, s)) return false;
      const auto d = bfs_distances(g, r("v"));
      for (Vertex x : {s.u1, s.u2, s.u3, s.u4}) {
        if (!d.reachable(x)) return false;
      }
      if (report.id == ConditionId::kPC) return d[s.u1] + d[s.u3] != d[s.u2] + d[s.u4];
      return (d[s.u1] == 2 && d[s.u3] == 2 && d[s.u2] + d[s.u4] != 4) ||
             (d[s.u2] == 2 && d[s.u4] == 2 && d[s.u1] + d[s.u3] != 4);
    }
    case ConditionId::kTC:
    case ConditionId::kSPC: {
      if (!in_range(report.basepoint)) return false;
      const auto d = bfs_distances(g, *report.basepoint);
      if (report.id == ConditionId::kTC) {
        if (!has({"u", "w"}) || !g.adjacent(r("u"), r("w"))) return false;
        return d[r("u")] == d[r("w")] && d[r("u")] >= 2 && !tc_holds(g, d, r("u"), r("w"));
      }
      if (!has({"u", "w", "w'"})) return false;
      const Vertex u = r("u"), a = r("w"), b = r("w'");
      if (!g.adjacent(u, a) || !g.adjacent(u, b) || g.adjacent(a, b) || a == b) return false;
      if (d[u] < 2 || d[a] != d[u] - 1 || d[b] != d[u] - 1) return false;
      return !spc_holds(g, d, u, a, b);
    }
    case ConditionId::kLTC: {
      if (!has({"v", "u", "w"}) || !g.adjacent(r("u"), r("w"))) return false;
      if (distance(r("v"), r("u")) != 2 || distance(r("v"), r("w")) != 2) return false;
      return !ltc_holds(g, r("v"), r("u"), r("w"));
    }
    case ConditionId::kLC:
    case ConditionId::kLCAll:
    case ConditionId::kGenLink: {
      if (!has({"v"})) return false;
      const Vertex v = r("v");
      if (w.pattern) {
        if (!is_valid_witness(g, *w.pattern)) return false;
        for (Vertex x : w.pattern->vertices) {
          if (!g.adjacent(v, x)) return false;
        }
      }
      const auto lk = link(g, v);
      const auto result = report.id == ConditionId::kGenLink ? is_line_graph(lk.graph)
                                                              : is_line_graph_of_bipartite(lk.graph);
      return std::holds_alternative<LineGraphObstruction>(result);
    }
    case ConditionId::kNoForbidden:
      return w.pattern && is_valid_witness(g, *w.pattern);
  }
  return false;
}

AggregateReport maurer_check(const Graph& g, MaurerMode mode, const CheckOptions& o) {
  require_connected(g);
  AggregateReport out;
  out.mode = mode;
  out.min_degree = g.size() == 0 ? 0 : g.degree(0);
  for (Vertex v = 0; v < g.size(); ++v) out.min_degree = std::min(out.min_degree, g.degree(v));
  if (mode == MaurerMode::kMatroid) {
    out.reports.push_back(check_interval_condition(g, o));
  } else {
    out.reports.push_back(check_ic4(g, o));
    out.reports.push_back(check_generalized_link(g, o));
  }
  out.reports.push_back(check_local_positioning(g, o));
  out.reports.push_back(check_forbidden_patterns(g, o));
  out.pass = std::all_of(out.reports.begin(), out.reports.end(), [](const auto& r) { return r.pass; });
  return out;
}

}  // namespace mbg
