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

#ifndef MBG_IO_HPP_
#define MBG_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "mbg/cover.hpp"
#include "mbg/graph.hpp"
#include "mbg/matroid.hpp"

namespace mbg {

// Text formats. Lines starting with '#' and blank lines are skipped. Parse
// failures throw kParse with the 1-based line number as witness.
//
//   graph <n>           ground <m>          graph <n>
//   <u> <v>             <e1> <e2> ...       <u> <v>
//   ...                 -                   map
//                                           f <cover-id> <base-id>
//                                           level <cover-id> <i>

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

SetSystem read_bases(std::istream& in);
void write_bases(std::ostream& out, const SetSystem& ss);

struct CoverExport {
  Graph cover;
  std::vector<Vertex> f;
  std::vector<int> level;

  friend bool operator==(const CoverExport&, const CoverExport&) = default;
};

CoverExport export_cover(const CoverState& state);
CoverExport read_cover(std::istream& in);
void write_cover(std::ostream& out, const CoverExport& c);

// Whole-file helpers; an unreadable file throws kParse with no witness.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace mbg

#endif  // MBG_IO_HPP_
