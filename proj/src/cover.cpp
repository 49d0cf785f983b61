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

#include "mbg/cover.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "mbg/conditions.hpp"
#include "mbg/error.hpp"

namespace mbg {
namespace {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }
  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<size_t> parent_;
};

Graph to_graph(const std::vector<std::vector<Vertex>>& adj) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u) {
    for (Vertex w : adj[u]) {
      if (u < w) edges.emplace_back(u, w);
    }
  }
  return Graph::from_edges(static_cast<int>(adj.size()), edges);
}

class CoverBuilder {
 public:
  CoverBuilder(const Graph& g, Vertex v, int64_t budget, bool checked)
      : g_(g), v_(v), budget_(budget), checked_(checked) {}

  CoverState run() {
    add_vertex(v_, 0);
    start_ = {0, 1};
    for (Vertex x : g_.neighbors(v_)) {
      const Vertex id = add_vertex(x, 1);
      add_edge(0, id);
    }
    for (Vertex a = 1; a < size(); ++a) {
      for (Vertex b = a + 1; b < size(); ++b) {
        if (g_.adjacent(f_[a], f_[b])) add_edge(a, b);
      }
    }
    start_.push_back(size());
    sort_adjacency(0);
    int i = 1;
    while (step(i)) {
      if (checked_) check_level(i - 1);
      ++i;
    }
    if (checked_) {
      for (int j = std::max(0, i - 1); j < static_cast<int>(start_.size()) - 1; ++j) check_level(j);
    }
    CoverState s;
    s.base = g_;
    s.basepoint = v_;
    s.cover = to_graph(adj_);
    s.f = std::move(f_);
    s.level_of = std::move(level_);
    s.level_start = std::move(start_);
    s.finished = true;
    return s;
  }

 private:
  Vertex size() const { return static_cast<Vertex>(f_.size()); }

  Vertex add_vertex(Vertex image, int level) {
    f_.push_back(image);
    level_.push_back(level);
    adj_.emplace_back();
    return size() - 1;
  }

  void add_edge(Vertex a, Vertex b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  bool adjacent(Vertex a, Vertex b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

  void sort_adjacency(int64_t from) {
    for (int64_t x = from; x < size(); ++x) {
      auto& row = adj_[x];
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  }

  // Stars of S̃_i are complete once S̃_{i+2} exists.
  void check_level(int i) {
    const Graph now = to_graph(adj_);
    for (int64_t w = start_[i]; w < start_[i + 1]; ++w) {
      if (auto why = check_star_map(now, static_cast<Vertex>(w), g_, f_)) {
        throw Error(ErrorCode::kHypothesisViolation, "level " + std::to_string(i) + ": " + *why,
                    {w, f_[w]});
      }
    }
  }

  bool step(int i) {
    const Vertex lo = static_cast<Vertex>(start_[i]), hi = static_cast<Vertex>(start_[i + 1]);
    auto in_level = [&](Vertex x) { return x >= lo && x < hi; };

    // Z, grouped by w̃ with z ascending.
    std::vector<int64_t> offset(hi - lo + 1, 0);
    std::vector<Vertex> zs, owner;
    std::vector<Vertex> images;
    for (Vertex w = lo; w < hi; ++w) {
      offset[w - lo] = static_cast<int64_t>(zs.size());
      images.clear();
      for (Vertex x : adj_[w]) images.push_back(f_[x]);
      std::sort(images.begin(), images.end());
      for (Vertex z : g_.neighbors(f_[w])) {
        if (!std::binary_search(images.begin(), images.end(), z)) {
          zs.push_back(z);
          owner.push_back(w);
        }
      }
    }
    offset[hi - lo] = static_cast<int64_t>(zs.size());
    if (zs.empty()) return false;

    auto first = [&](Vertex w) { return offset[w - lo]; };
    auto last = [&](Vertex w) { return offset[w - lo + 1]; };
    auto index_of = [&](Vertex w, Vertex z) {
      const auto b = zs.begin() + first(w), e = zs.begin() + last(w);
      return static_cast<int64_t>(std::lower_bound(b, e, z) - zs.begin());
    };
    // Calls fn(k, k2) for every z shared by Z(w) and Z(w2).
    auto for_common_z = [&](Vertex w, Vertex w2, auto&& fn) {
      int64_t k = first(w), k2 = first(w2);
      while (k < last(w) && k2 < last(w2)) {
        if (zs[k] < zs[k2]) {
          ++k;
        } else if (zs[k2] < zs[k]) {
          ++k2;
        } else {
          fn(k++, k2++);
        }
      }
    };

    UnionFind uf(zs.size());
    // (Z1) the same or adjacent.
    for (Vertex w = lo; w < hi; ++w) {
      for (Vertex w2 : adj_[w]) {
        if (w2 > w && in_level(w2)) for_common_z(w, w2, [&](int64_t a, int64_t b) { uf.unite(a, b); });
      }
    }
    // (Z2) f(ũ) f(w̃) z f(w̃') is a square for a common lower neighbor ũ.
    std::vector<std::pair<Vertex, Vertex>> by_z;
    for (int64_t u = start_[i - 1]; u < start_[i]; ++u) {
      by_z.clear();
      const Vertex fu = f_[u];
      for (Vertex w : adj_[u]) {
        if (!in_level(w)) continue;
        for (int64_t k = first(w); k < last(w); ++k) {
          if (zs[k] != fu && !g_.adjacent(zs[k], fu)) by_z.emplace_back(zs[k], w);
        }
      }
      std::sort(by_z.begin(), by_z.end());
      for (size_t a = 0; a < by_z.size();) {
        size_t b = a;
        while (b < by_z.size() && by_z[b].first == by_z[a].first) ++b;
        for (size_t x = a; x < b; ++x) {
          for (size_t y = x + 1; y < b; ++y) {
            const Vertex w = by_z[x].second, w2 = by_z[y].second;
            if (f_[w] != f_[w2] && !g_.adjacent(f_[w], f_[w2])) {
              uf.unite(index_of(w, by_z[a].first), index_of(w2, by_z[a].first));
            }
          }
        }
        a = b;
      }
    }
    // (Z3) a square of S̃_i with opposite corners w̃, w̃' whose image spans a
    // pyramid with apex z.
    std::vector<Vertex> candidates, common;
    for (Vertex w = lo; w < hi; ++w) {
      candidates.clear();
      for (Vertex a : adj_[w]) {
        if (!in_level(a)) continue;
        for (Vertex w2 : adj_[a]) {
          if (w2 > w && in_level(w2) && !adjacent(w, w2)) candidates.push_back(w2);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (Vertex w2 : candidates) {
        if (f_[w] == f_[w2] || g_.adjacent(f_[w], f_[w2])) continue;
        common.clear();
        std::set_intersection(adj_[w].begin(), adj_[w].end(), adj_[w2].begin(), adj_[w2].end(),
                              std::back_inserter(common));
        std::erase_if(common, [&](Vertex x) { return !in_level(x); });
        for_common_z(w, w2, [&](int64_t k, int64_t k2) {
          if (uf.find(k) == uf.find(k2)) return;
          const Vertex z = zs[k];
          for (size_t x = 0; x < common.size(); ++x) {
            const Vertex a = common[x], fa = f_[a];
            if (!g_.adjacent(fa, z)) continue;
            for (size_t y = x + 1; y < common.size(); ++y) {
              const Vertex b = common[y], fb = f_[b];
              if (adjacent(a, b) || fa == fb || g_.adjacent(fa, fb) || !g_.adjacent(fb, z)) continue;
              uf.unite(k, k2);
              return;
            }
          }
        });
      }
    }

    // Classes named in ascending (min w̃, z) order, which is index order.
    std::vector<Vertex> class_id(zs.size(), -1), id_of(zs.size());
    int64_t fresh = 0;
    for (size_t k = 0; k < zs.size(); ++k) {
      if (class_id[uf.find(k)] < 0) class_id[uf.find(k)] = static_cast<Vertex>(fresh++);
    }
    if (size() + fresh > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "cover needs more than " + std::to_string(budget_) + " vertices at level " +
                      std::to_string(i + 1),
                  {budget_, i + 1});
    }
    const Vertex base_id = size();
    std::vector<Vertex> rep_z(fresh);
    for (size_t k = 0; k < zs.size(); ++k) {
      id_of[k] = base_id + class_id[uf.find(k)];
      rep_z[class_id[uf.find(k)]] = zs[k];
    }
    for (int64_t c = 0; c < fresh; ++c) add_vertex(rep_z[c], i + 1);
    // Rule (2): w̃ to [w̃, z]; rule (3): [w̃, z] to [w̃, z'] for z ~ z'.
    for (size_t k = 0; k < zs.size(); ++k) add_edge(owner[k], id_of[k]);
    for (Vertex w = lo; w < hi; ++w) {
      for (int64_t k = first(w); k < last(w); ++k) {
        for (int64_t k2 = k + 1; k2 < last(w); ++k2) {
          if (g_.adjacent(zs[k], zs[k2]) && id_of[k] != id_of[k2]) add_edge(id_of[k], id_of[k2]);
        }
      }
    }
    sort_adjacency(lo);
    start_.push_back(size());
    return true;
  }

  const Graph& g_;
  Vertex v_;
  int64_t budget_;
  bool checked_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> f_;
  std::vector<int> level_;
  std::vector<int64_t> start_;
};

}  // namespace

CoverState build_universal_cover(const TriangleSquareComplex& x, Vertex basepoint,
                                 const CoverOptions& options) {
  const Graph& g = x.graph;
  if (basepoint < 0 || basepoint >= g.size()) {
    throw Error(ErrorCode::kVertexOutOfRange, "basepoint out of range", {basepoint});
  }
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "complex is not connected");
  const int64_t budget = options.budget.value_or(kCoverBudgetFactor * g.size());
  if (budget < g.size()) {
    throw Error(ErrorCode::kInvalidArgument, "budget is smaller than the base complex", {budget});
  }
  return CoverBuilder(g, basepoint, budget, options.checked).run();
}

int64_t sheets(const CoverState& state) {
  if (!state.finished) throw Error(ErrorCode::kNotFinished, "cover construction has not finished");
  const int64_t up = state.cover.size(), down = state.base.size();
  if (down == 0 || up % down != 0) {
    throw Error(ErrorCode::kNonDivisible,
                std::to_string(up) + " cover vertices over " + std::to_string(down) + " base vertices",
                {up, down});
  }
  return up / down;
}

bool is_simply_connected(const TriangleSquareComplex& x, const CoverOptions& options) {
  return sheets(build_universal_cover(x, 0, options)) == 1;
}

CoverVerdict summarize(const CoverState& state) {
  CoverVerdict v;
  v.sheets = sheets(state);
  v.simply_connected = v.sheets == 1;
  v.vertices = state.cover.size();
  v.edges = state.cover.edge_count();
  v.triangles = static_cast<int64_t>(enumerate_triangles(state.cover).size());
  for_each_square(state.cover, [&](const SquareTuple&) { ++v.squares; });
  for (int i = 0; i < state.levels(); ++i) v.level_sizes.push_back(state.level_start[i + 1] - state.level_start[i]);
  return v;
}

const PropertyCheck* VerificationReport::property(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

class PropertyRecorder {
 public:
  explicit PropertyRecorder(std::string name) { check_.name = std::move(name); }
  void ok(int64_t k = 1) { check_.checked += k; }
  void fail(std::string why, std::vector<Vertex> witness) {
    ++check_.checked;
    if (!check_.pass) return;
    check_.pass = false;
    check_.failure = std::move(why);
    check_.witness = std::move(witness);
  }
  PropertyCheck take() { return std::move(check_); }

 private:
  PropertyCheck check_;
};

void absorb(PropertyRecorder& rec, const ConditionReport& r) {
  rec.ok(r.stat("scanned"));
  if (r.pass) return;
  std::vector<Vertex> w;
  for (const auto& [name, x] : r.witnesses[0].roles) w.push_back(x);
  rec.fail(std::string(condition_name(r.id)) + ": " + r.witnesses[0].reason, w);
}

}  // namespace

VerificationReport verify_cover(const CoverState& s) {
  const Graph& c = s.cover;
  const Graph& g = s.base;
  PropertyRecorder p("P"), q("Q"), r("R"), sq("S"), t("T"), u("U"), edge("edge"), covering("covering");

  const auto d = bfs_distances(c, 0);
  for (Vertex x = 0; x < c.size(); ++x) {
    if (!d.reachable(x) || d[x] != s.level_of[x]) {
      p.fail("vertex " + std::to_string(x) + " is not at distance " + std::to_string(s.level_of[x]), {x});
    } else {
      p.ok();
    }
  }
  for (auto [a, b] : c.edges()) {
    if (g.adjacent(s.f[a], s.f[b])) {
      edge.ok();
    } else {
      edge.fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " maps to a non-edge", {a, b});
    }
  }
  if (is_connected(c)) {
    absorb(q, check_triangle_condition(c, 0));
    absorb(q, check_square_pyramid(c, 0));
  } else {
    q.fail("cover is not connected", {});
  }

  int boundary = 0;
  for (Vertex x = 0; x < c.size(); ++x) boundary = std::max(boundary, s.level_of[x]);
  for (Vertex x = 0; x < c.size(); ++x) {
    auto& rec = s.level_of[x] < boundary ? r : t;
    if (auto why = check_star_map(c, x, g, s.f)) {
      rec.fail(*why, {x});
      covering.fail(*why, {x});
    } else {
      rec.ok();
      covering.ok();
    }
  }

  for_each_square(c, [&](const SquareTuple& k) {
    const SquareTuple image = canonical_square(s.f[k.u1], s.f[k.u2], s.f[k.u3], s.f[k.u4]);
    const std::vector<Vertex> w{k.u1, k.u2, k.u3, k.u4};
    if (is_square(g, image)) {
      sq.ok();
    } else {
      sq.fail("square image is not a square", w);
    }
    if (!d.reachable(k.u1) || !d.reachable(k.u2) || !d.reachable(k.u3) || !d.reachable(k.u4)) {
      u.fail("square unreachable from the basepoint lift", w);
    } else if (d[k.u1] + d[k.u3] != d[k.u2] + d[k.u4]) {
      u.fail("opposite distance sums differ", w);
    } else {
      u.ok();
    }
  });

  VerificationReport out;
  for (auto* rec : {&p, &q, &r, &sq, &t, &u, &edge, &covering}) out.properties.push_back(rec->take());
  out.pass = std::all_of(out.properties.begin(), out.properties.end(), [](const auto& x) { return x.pass; });
  return out;
}

VerificationReport verify_quotient_covering(const Graph& base, const QuotientResult& q,
                                            const QuotientCheckOptions& options) {
  std::vector<Vertex> vertices(base.size());
  std::iota(vertices.begin(), vertices.end(), 0);
  if (options.samples > 0 && options.samples < base.size()) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    vertices.resize(options.samples);
    std::sort(vertices.begin(), vertices.end());
  }
  PropertyRecorder covering("covering");
  for (Vertex v : vertices) {
    if (auto why = check_star_map(base, v, q.graph, q.projection)) {
      covering.fail(*why, {v});
    } else {
      covering.ok();
    }
  }
  VerificationReport out;
  out.properties.push_back(covering.take());
  out.pass = out.properties[0].pass;
  return out;
}

}  // namespace mbg
