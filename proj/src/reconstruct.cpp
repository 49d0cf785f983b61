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

#include "mbg/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>

#include "mbg/certificate.hpp"
#include "mbg/patterns.hpp"

namespace mbg {

bool Labeling::complete() const { return std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; }); }

ReconstructionError::ReconstructionError(std::string stage, const std::string& detail,
                                         std::vector<int64_t> witness)
    : Error(ErrorCode::kNotABasisGraph, stage + ": " + detail, std::move(witness)), stage_(std::move(stage)) {}

namespace {

Mask bit(int i) { return Mask{1} << i; }

struct LinkRoot {
  InducedSubgraph link;
  RootGraph root;
  std::vector<int> component;  // per root vertex
  int components = 0;
};

LinkRoot link_root(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw Error(ErrorCode::kVertexOutOfRange, "vertex out of range", {v});
  LinkRoot out;
  out.link = link(g, v);
  auto result = is_line_graph_of_bipartite(out.link.graph);
  if (auto* ob = std::get_if<LineGraphObstruction>(&result)) {
    std::vector<int64_t> witness{v};
    const auto& local = ob->pattern ? ob->pattern->vertices : ob->vertices;
    for (Vertex x : local) witness.push_back(out.link.original[x]);
    throw Error(ErrorCode::kLinkNotBipartiteLineGraph,
                "link of " + std::to_string(v) + " is not the line graph of a bipartite graph: " + ob->reason,
                witness);
  }
  out.root = std::move(std::get<RootGraph>(result));
  const Graph& h = out.root.root;
  out.component.assign(h.size(), -1);
  for (Vertex s = 0; s < h.size(); ++s) {
    if (out.component[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    out.component[s] = out.components;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : h.neighbors(x)) {
        if (out.component[y] < 0) {
          out.component[y] = out.components;
          stack.push_back(y);
        }
      }
    }
    ++out.components;
  }
  return out;
}

}  // namespace

int root_components(const Graph& g, Vertex v) { return link_root(g, v).components; }

Labeling root_labels(const Graph& g, Vertex v, uint32_t flips) {
  const LinkRoot lr = link_root(g, v);
  const Graph& h = lr.root.root;
  if (h.size() > kMaxGroundSize) {
    throw Error(ErrorCode::kTooLarge, "link root has " + std::to_string(h.size()) + " vertices", {v});
  }
  auto side = [&](Vertex x) { return lr.root.side[x] ^ static_cast<int>(flips >> lr.component[x] & 1); };
  Labeling out;
  out.universe = h.size();
  out.label.assign(g.size(), 0);
  out.assigned.assign(g.size(), false);
  Mask base = 0;
  for (Vertex x = 0; x < h.size(); ++x) {
    if (side(x) == 0) base |= bit(x);
  }
  out.label[v] = base;
  out.assigned[v] = true;
  for (size_t i = 0; i < lr.link.original.size(); ++i) {
    auto [p, q] = lr.root.edge_of[i];
    const Vertex b0 = side(p) == 0 ? p : q;
    const Vertex b = b0 == p ? q : p;
    out.label[lr.link.original[i]] = base ^ bit(b0) ^ bit(b);
    out.assigned[lr.link.original[i]] = true;
  }
  return out;
}

namespace {

class Propagator {
 public:
  Propagator(const Graph& g, Labeling& lab) : g_(g), lab_(lab) {
    for (Vertex x = 0; x < g.size(); ++x) {
      if (lab.assigned[x]) owner_.emplace(lab.label[x], x);
    }
  }

  void assign(Vertex y, Mask s) {
    lab_.label[y] = s;
    lab_.assigned[y] = true;
    owner_.emplace(s, y);
  }

  void unassign(Vertex y) {
    owner_.erase(lab_.label[y]);
    lab_.assigned[y] = false;
  }

  std::vector<Mask> candidates(Vertex y) const {
    std::vector<Vertex> labeled;
    for (Vertex u : g_.neighbors(y)) {
      if (lab_.assigned[u]) labeled.push_back(u);
    }
    std::vector<Mask> out;
    if (labeled.empty()) return out;
    std::vector<Vertex> far;
    for (Vertex u : g_.neighbors(y)) {
      for (Vertex w : g_.neighbors(u)) {
        if (w != y && lab_.assigned[w] && !g_.adjacent(y, w)) far.push_back(w);
      }
    }
    std::sort(far.begin(), far.end());
    far.erase(std::unique(far.begin(), far.end()), far.end());

    const Mask sx = lab_.label[labeled[0]];
    for (int a = 0; a < lab_.universe; ++a) {
      if (!(sx & bit(a))) continue;
      for (int b = 0; b < lab_.universe; ++b) {
        if (sx & bit(b)) continue;
        const Mask s = sx ^ bit(a) ^ bit(b);
        if (fits(y, s, labeled, far)) out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool fits(Vertex y, Mask s, const std::vector<Vertex>& labeled, const std::vector<Vertex>& far) const {
    if (owner_.count(s)) return false;
    for (Vertex u : labeled) {
      if (popcount(s ^ lab_.label[u]) != 2) return false;
    }
    for (Vertex w : far) {
      if (popcount(s ^ lab_.label[w]) != 4) return false;
    }
    // No labeled non-neighbor may sit one exchange away.
    for (int a = 0; a < lab_.universe; ++a) {
      if (!(s & bit(a))) continue;
      for (int b = 0; b < lab_.universe; ++b) {
        if (s & bit(b)) continue;
        auto it = owner_.find(s ^ bit(a) ^ bit(b));
        if (it != owner_.end() && !g_.adjacent(y, it->second)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  Labeling& lab_;
  std::unordered_map<Mask, Vertex> owner_;
};

}  // namespace

Labeling propagate_labels(const Graph& g, Vertex v, Labeling lab, int64_t budget) {
  const auto d = bfs_distances(g, v);
  std::vector<Vertex> order;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!d.reachable(x)) throw Error(ErrorCode::kDisconnected, "graph is not connected", {v, x});
    if (!lab.assigned[x]) order.push_back(x);
  }
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d[a] < d[b]; });

  Propagator prop(g, lab);
  struct Frame {
    bool ready = false;
    std::vector<Mask> candidates;
    size_t next = 0;
  };
  std::vector<Frame> frames(order.size());
  std::optional<Vertex> first_stuck;
  int64_t dead_ends = 0;
  size_t pos = 0;
  while (pos < order.size()) {
    const Vertex y = order[pos];
    Frame& fr = frames[pos];
    if (!fr.ready) {
      fr.candidates = prop.candidates(y);
      fr.next = 0;
      fr.ready = true;
    }
    if (fr.next < fr.candidates.size()) {
      prop.assign(y, fr.candidates[fr.next++]);
      ++pos;
      continue;
    }
    if (fr.candidates.empty() && !first_stuck) first_stuck = y;
    fr.ready = false;
    if (++dead_ends > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "label propagation exceeded " + std::to_string(budget) + " dead ends", {*first_stuck});
    }
    if (pos == 0) {
      throw Error(ErrorCode::kNoConsistentLabeling,
                  "no consistent label for vertex " + std::to_string(*first_stuck), {*first_stuck});
    }
    --pos;
    prop.unassign(order[pos]);
  }
  if (!is_valid_labeling(g, lab)) {
    throw Error(ErrorCode::kNoConsistentLabeling, "propagated labeling fails global verification");
  }
  return lab;
}

bool is_valid_labeling(const Graph& g, const Labeling& lab) {
  if (!lab.complete() || static_cast<int>(lab.label.size()) != g.size()) return false;
  if (g.size() == 0) return true;
  std::unordered_map<Mask, Vertex> owner;
  const int k = popcount(lab.label[0]);
  for (Vertex x = 0; x < g.size(); ++x) {
    if (popcount(lab.label[x]) != k) return false;
    if (lab.universe < 64 && (lab.label[x] >> lab.universe) != 0) return false;
    if (!owner.emplace(lab.label[x], x).second) return false;
  }
  for (Vertex x = 0; x < g.size(); ++x) {
    const Mask s = lab.label[x];
    int near = 0;
    for (int a = 0; a < lab.universe; ++a) {
      if (!(s & bit(a))) continue;
      for (int b = 0; b < lab.universe; ++b) {
        if (s & bit(b)) continue;
        auto it = owner.find(s ^ bit(a) ^ bit(b));
        if (it == owner.end()) continue;
        if (!g.adjacent(x, it->second)) return false;
        ++near;
      }
    }
    if (near != g.degree(x)) return false;
  }
  return true;
}

namespace {

std::vector<int64_t> witness_roles(const ConditionWitness& w) {
  std::vector<int64_t> out;
  for (const auto& [name, x] : w.roles) out.push_back(x);
  return out;
}

Reconstruction attempt(const Graph& g, const ReconstructOptions& o, uint32_t flips) {
  Labeling lab;
  try {
    lab = propagate_labels(g, o.basepoint, root_labels(g, o.basepoint, flips), o.budget);
  } catch (const Error& e) {
    throw ReconstructionError("propagate", e.what(), e.witness());
  }
  std::vector<Mask> bases(lab.label.begin(), lab.label.end());
  std::sort(bases.begin(), bases.end());
  std::optional<SetSystem> ss;
  try {
    ss.emplace(lab.universe, bases);
  } catch (const Error& e) {
    throw ReconstructionError("assemble", e.what(), e.witness());
  }
  const auto verdict = verify_matroid(*ss);
  if (!verdict.holds) {
    std::vector<int64_t> w;
    if (verdict.witness) {
      w = {static_cast<int64_t>(verdict.witness->a_set), static_cast<int64_t>(verdict.witness->b_set),
           verdict.witness->element};
    }
    throw ReconstructionError("verify", verdict.reason, w);
  }
  // The labels must realize g as the basis graph of the result.
  const auto bg = basis_graph(*ss);
  std::vector<Vertex> map(g.size());
  for (Vertex x = 0; x < g.size(); ++x) {
    map[x] = static_cast<Vertex>(std::lower_bound(bg.vertex_to_basis.begin(), bg.vertex_to_basis.end(),
                                                  lab.label[x]) -
                                 bg.vertex_to_basis.begin());
  }
  if (bg.graph.edge_count() != g.edge_count()) {
    throw ReconstructionError("isomorphism", "edge counts differ");
  }
  for (auto [a, b] : g.edges()) {
    if (!bg.graph.adjacent(map[a], map[b])) {
      throw ReconstructionError("isomorphism", "edge does not map to an exchange", {a, b});
    }
  }
  if (g.size() <= kDefaultCertificateBound && certificate(bg.graph) != certificate(g)) {
    throw ReconstructionError("isomorphism", "certificates differ");
  }
  return {std::move(*ss), std::move(lab), flips};
}

}  // namespace

Reconstruction reconstruct_matroid(const Graph& g, const ReconstructOptions& o) {
  if (g.size() == 0) throw ReconstructionError("precheck", "empty graph");
  if (o.basepoint < 0 || o.basepoint >= g.size()) {
    throw ReconstructionError("precheck", "basepoint out of range", {o.basepoint});
  }
  if (!is_connected(g)) throw ReconstructionError("precheck", "graph is not connected");
  const auto battery = maurer_check(g, MaurerMode::kMatroid, o.check);
  for (const auto& r : battery.reports) {
    if (!r.pass) {
      throw ReconstructionError("precheck", std::string(condition_name(r.id)) + " fails: " + r.witnesses[0].reason,
                                witness_roles(r.witnesses[0]));
    }
  }
  int components = 0;
  try {
    components = root_components(g, o.basepoint);
  } catch (const Error& e) {
    throw ReconstructionError("root", e.what(), e.witness());
  }
  if (components > 16) {
    throw ReconstructionError("root", "link root has " + std::to_string(components) + " components", {components});
  }
  std::optional<ReconstructionError> first;
  for (uint32_t flips = 0; flips < (uint32_t{1} << components); ++flips) {
    try {
      return attempt(g, o, flips);
    } catch (const ReconstructionError& e) {
      if (!first) first = e;
    }
  }
  throw *first;
}

}  // namespace mbg
