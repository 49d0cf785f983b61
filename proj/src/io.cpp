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

#include "mbg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "mbg/error.hpp"

namespace mbg {

namespace {

// Splits data lines into whitespace-separated tokens, tracking line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      tokens_.clear();
      std::istringstream ss(text);
      std::string tok;
      while (ss >> tok) tokens_.push_back(tok);
      if (tokens_.empty() || tokens_[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  const std::vector<std::string>& tokens() const { return tokens_; }
  int64_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_) + ": " + what, {line_});
  }

  int64_t integer(size_t i, int64_t lo, int64_t hi) const {
    const std::string& s = tokens_[i];
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
    if (v < lo || v > hi) fail("value " + s + " out of range");
    return v;
  }

  void expect_arity(size_t n) const {
    if (tokens_.size() != n) fail("expected " + std::to_string(n) + " fields");
  }

 private:
  std::istream& in_;
  int64_t line_ = 0;
  std::vector<std::string> tokens_;
};

constexpr int64_t kMaxVertices = std::numeric_limits<Vertex>::max() - 1;

int read_header(LineReader& r, const std::string& keyword, int64_t hi) {
  if (!r.next()) throw Error(ErrorCode::kParse, "missing '" + keyword + "' header", {r.line()});
  if (r.tokens()[0] != keyword) r.fail("expected '" + keyword + " <n>'");
  r.expect_arity(2);
  return static_cast<int>(r.integer(1, 0, hi));
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r(in);
  const int n = read_header(r, "graph", kMaxVertices);
  std::vector<Edge> edges;
  while (r.next()) {
    r.expect_arity(2);
    const auto u = static_cast<Vertex>(r.integer(0, 0, n - 1));
    const auto v = static_cast<Vertex>(r.integer(1, 0, n - 1));
    if (u == v) r.fail("self-loop at " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

SetSystem read_bases(std::istream& in) {
  LineReader r(in);
  const int m = read_header(r, "ground", kMaxGroundSize);
  std::vector<Mask> bases;
  while (r.next()) {
    Mask b = 0;
    if (r.tokens().size() == 1 && r.tokens()[0] == "-") {
      bases.push_back(b);
      continue;
    }
    int64_t prev = -1;
    for (size_t i = 0; i < r.tokens().size(); ++i) {
      const int64_t e = r.integer(i, 0, m - 1);
      if (e <= prev) r.fail("elements must be strictly ascending");
      prev = e;
      b |= Mask{1} << e;
    }
    bases.push_back(b);
  }
  if (bases.empty()) throw Error(ErrorCode::kParse, "no bases listed", {r.line()});
  try {
    return SetSystem(m, std::move(bases));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what(), e.witness());
  }
}

void write_bases(std::ostream& out, const SetSystem& ss) {
  out << "ground " << ss.ground_size() << '\n';
  for (Mask b : ss.bases()) {
    if (b == 0) {
      out << "-\n";
      continue;
    }
    const auto elems = elements_of(b);
    for (size_t i = 0; i < elems.size(); ++i) out << (i ? " " : "") << elems[i];
    out << '\n';
  }
}

CoverExport export_cover(const CoverState& state) {
  return {state.cover, state.f, state.level_of};
}

CoverExport read_cover(std::istream& in) {
  LineReader r(in);
  const int n = read_header(r, "graph", kMaxVertices);
  std::vector<Edge> edges;
  bool in_map = false;
  CoverExport out;
  out.f.assign(n, -1);
  out.level.assign(n, -1);
  while (r.next()) {
    const auto& t = r.tokens();
    if (!in_map) {
      if (t[0] == "map") {
        r.expect_arity(1);
        in_map = true;
        continue;
      }
      r.expect_arity(2);
      const auto u = static_cast<Vertex>(r.integer(0, 0, n - 1));
      const auto v = static_cast<Vertex>(r.integer(1, 0, n - 1));
      if (u == v) r.fail("self-loop at " + std::to_string(u));
      edges.emplace_back(u, v);
      continue;
    }
    r.expect_arity(3);
    const auto x = static_cast<Vertex>(r.integer(1, 0, n - 1));
    if (t[0] == "f") {
      if (out.f[x] >= 0) r.fail("duplicate f entry for " + t[1]);
      out.f[x] = static_cast<Vertex>(r.integer(2, 0, kMaxVertices));
    } else if (t[0] == "level") {
      if (out.level[x] >= 0) r.fail("duplicate level entry for " + t[1]);
      out.level[x] = static_cast<int>(r.integer(2, 0, kMaxVertices));
    } else {
      r.fail("expected 'f' or 'level'");
    }
  }
  if (!in_map) throw Error(ErrorCode::kParse, "missing 'map' section", {r.line()});
  for (Vertex x = 0; x < n; ++x) {
    if (out.f[x] < 0 || out.level[x] < 0) {
      throw Error(ErrorCode::kParse, "cover vertex " + std::to_string(x) + " lacks f or level", {r.line()});
    }
  }
  out.cover = Graph::from_edges(n, edges);
  return out;
}

void write_cover(std::ostream& out, const CoverExport& c) {
  write_graph(out, c.cover);
  out << "map\n";
  for (size_t x = 0; x < c.f.size(); ++x) out << "f " << x << ' ' << c.f[x] << '\n';
  for (size_t x = 0; x < c.level.size(); ++x) out << "level " << x << ' ' << c.level[x] << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
}

}  // namespace mbg
