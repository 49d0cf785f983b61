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

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mbg/conditions.hpp"
#include "mbg/cover.hpp"
#include "mbg/error.hpp"
#include "mbg/io.hpp"
#include "mbg/matroid.hpp"
#include "mbg/reconstruct.hpp"
#include "report.hpp"

namespace mbg {
namespace {

using report::Json;

enum Exit { kPass = 0, kConditionFailure = 1, kBudget = 2, kInputError = 3 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTooLarge:
      return kBudget;
    case ErrorCode::kHypothesisViolation:
    case ErrorCode::kLinkNotBipartiteLineGraph:
    case ErrorCode::kNoConsistentLabeling:
    case ErrorCode::kNotABasisGraph:
    case ErrorCode::kNotFinished:
    case ErrorCode::kNonDivisible:
      return kConditionFailure;
    default:
      return kInputError;
  }
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Session {
  std::string command;
  Json arguments = Json::object();
  Json inputs = Json::array();
  Timer timer;

  Json header() const {
    return Json{{"schema", report::kSchema},
                {"tool", Json{{"name", "mbg"}, {"version", report::kToolVersion}}},
                {"command", command},
                {"arguments", arguments},
                {"inputs", inputs}};
  }

  std::string load(const std::string& path) {
    std::string bytes = read_file(path);
    inputs.push_back(Json{{"path", path}, {"sha256", report::sha256(bytes)}});
    return bytes;
  }

  // A bases file stands for its basis graph.
  Graph load_graph(const std::string& path) {
    const std::string text = load(path);
    std::istringstream in(text);
    if (first_keyword(text) == "ground") return basis_graph(read_bases(in)).graph;
    return read_graph(in);
  }

  static std::string first_keyword(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tok;
      if ((ls >> tok) && tok[0] != '#') return tok;
    }
    return "";
  }

  int finish(Json body, int code, const std::string& summary) const {
    Json out = header();
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << '\n';
    std::cerr << command << ": " << summary << '\n';
    std::fprintf(stderr, "%s: %.3f s\n", command.c_str(), timer.seconds());
    return code;
  }

  int fail(const Error& e) const {
    return finish(Json{{"error", report::to_json(e)}}, exit_code_for(e.code()),
                  std::string(error_code_name(e.code())) + ": " + e.what());
  }
};

struct Flags {
  int jobs = 1;

  // gen
  std::string gen_kind;
  int gen_a = 0;
  int gen_b = 0;
  std::string gen_file;
  std::string out;

  // check / cover / reconstruct
  std::string input;
  std::string mode = "matroid";
  std::optional<Vertex> basepoint;
  std::optional<int64_t> sample;
  uint64_t seed = 0;
  std::optional<int64_t> budget;
  bool verify = false;
  bool checked = false;
  std::string export_path;
};

int run_gen(Session& s, const Flags& f) {
  s.arguments["kind"] = f.gen_kind;
  std::string text;
  Json counts;
  std::ostringstream out;
  if (f.gen_kind == "hn") {
    s.arguments["n"] = f.gen_a;
    const Graph g = quotient(antipodal_action(f.gen_a)).graph;
    write_graph(out, g);
    counts = Json{{"format", "graph"}, {"vertices", g.size()}, {"edges", g.edge_count()}};
  } else {
    std::optional<SetSystem> ss;
    if (f.gen_kind == "uniform") {
      s.arguments["m"] = f.gen_a;
      s.arguments["k"] = f.gen_b;
      ss.emplace(uniform_matroid(f.gen_a, f.gen_b));
    } else if (f.gen_kind == "complete") {
      s.arguments["n"] = f.gen_a;
      ss.emplace(complete_matroid(f.gen_a));
    } else if (f.gen_kind == "even-delta-free") {
      s.arguments["m"] = f.gen_a;
      ss.emplace(even_subsets(f.gen_a));
    } else {
      s.arguments["graph"] = f.gen_file;
      const Graph g = s.load_graph(f.gen_file);
      const auto edges = g.edges();
      ss.emplace(graphic_matroid(g.size(), edges));
    }
    write_bases(out, *ss);
    counts = Json{{"format", "bases"}, {"ground", ss->ground_size()}, {"bases", ss->size()}};
  }
  std::string summary = counts.dump();
  if (f.out.empty()) {
    std::cout << out.str();
    std::cerr << "gen: " << summary << '\n';
    std::fprintf(stderr, "gen: %.3f s\n", s.timer.seconds());
    return kPass;
  }
  s.arguments["out"] = f.out;
  write_file(f.out, out.str());
  return s.finish(Json{{"output", counts}}, kPass, summary);
}

int run_check(Session& s, const Flags& f) {
  if (f.mode != "matroid" && f.mode != "even-delta") {
    throw Error(ErrorCode::kInvalidArgument, "--mode must be matroid or even-delta");
  }
  s.arguments["input"] = f.input;
  s.arguments["mode"] = f.mode;
  s.arguments["basepoint"] = f.basepoint ? Json(*f.basepoint) : Json(nullptr);
  s.arguments["sample"] = f.sample ? Json(*f.sample) : Json(nullptr);
  s.arguments["seed"] = f.seed;
  const Graph g = s.load_graph(f.input);
  CheckOptions o;
  o.seed = f.seed;
  if (f.sample) {
    if (*f.sample < 1) throw Error(ErrorCode::kInvalidArgument, "--sample must be positive");
    o.force_sampling = true;
    o.pair_samples = *f.sample;
    o.vertex_samples = std::min(o.vertex_samples, *f.sample);
  }
  const MaurerMode mode = f.mode == "matroid" ? MaurerMode::kMatroid : MaurerMode::kEvenDelta;
  auto agg = maurer_check(g, mode, o);
  if (f.basepoint) {
    if (*f.basepoint < 0 || *f.basepoint >= g.size()) {
      throw Error(ErrorCode::kVertexOutOfRange, "basepoint out of range", {*f.basepoint});
    }
    agg.reports.push_back(check_positioning(g, *f.basepoint, o));
    agg.pass = agg.pass && agg.reports.back().pass;
  }
  std::string summary = agg.pass ? "all conditions pass" : "failing:";
  for (const auto& r : agg.reports) {
    if (!r.pass) summary += " " + std::string(condition_name(r.id));
  }
  Json body = report::to_json(agg);
  body["vertices"] = g.size();
  body["edges"] = g.edge_count();
  return s.finish(body, agg.pass ? kPass : kConditionFailure, summary);
}

int run_cover(Session& s, const Flags& f) {
  const Vertex v = f.basepoint.value_or(0);
  s.arguments["input"] = f.input;
  s.arguments["basepoint"] = v;
  s.arguments["budget"] = f.budget ? Json(*f.budget) : Json(nullptr);
  s.arguments["verify"] = f.verify;
  s.arguments["checked"] = f.checked;
  s.arguments["export"] = f.export_path.empty() ? Json(nullptr) : Json(f.export_path);
  const Graph g = s.load_graph(f.input);
  CoverOptions o;
  o.budget = f.budget;
  o.checked = f.checked;
  const auto state = build_universal_cover(build_complex(g), v, o);
  const CoverVerdict verdict = summarize(state);
  Json body{{"cover", report::to_json(verdict)}};
  bool pass = true;
  if (f.verify) {
    const auto vr = verify_cover(state);
    body["verification"] = report::to_json(vr);
    pass = vr.pass;
  }
  if (!f.export_path.empty()) {
    std::ostringstream out;
    write_cover(out, export_cover(state));
    write_file(f.export_path, out.str());
  }
  std::string summary = std::to_string(verdict.vertices) + " cover vertices, " + std::to_string(verdict.sheets) +
                        (verdict.sheets == 1 ? " sheet" : " sheets");
  if (f.verify) summary += pass ? ", verified" : ", verification failed";
  return s.finish(body, pass ? kPass : kConditionFailure, summary);
}

int run_reconstruct(Session& s, const Flags& f) {
  s.arguments["input"] = f.input;
  s.arguments["out"] = f.out.empty() ? Json(nullptr) : Json(f.out);
  const Graph g = s.load_graph(f.input);
  try {
    const auto r = reconstruct_matroid(g);
    std::ostringstream out;
    write_bases(out, r.matroid);
    Json body{{"ground", r.matroid.ground_size()}, {"bases", r.matroid.size()}, {"flips", r.flips}};
    if (f.out.empty()) {
      Json list = Json::array();
      for (Mask b : r.matroid.bases()) list.push_back(elements_of(b));
      body["basis_list"] = list;
    } else {
      write_file(f.out, out.str());
    }
    return s.finish(body, kPass, std::to_string(r.matroid.size()) + " bases over ground " +
                                     std::to_string(r.matroid.ground_size()));
  } catch (const ReconstructionError& e) {
    Json body{{"diagnosis", Json{{"stage", e.stage()}, {"witness", e.witness()}, {"message", e.what()}}}};
    return s.finish(body, kConditionFailure, "not a basis graph (" + e.stage() + ")");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Matroid basis graph toolkit"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--jobs", f.jobs, "Worker cap")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Generate a bases or graph file");
  gen->require_subcommand(1);
  gen->add_option("--out", f.out, "Output path (default: stdout)");
  auto* uniform = gen->add_subcommand("uniform", "Uniform matroid U(k, m)");
  uniform->add_option("m", f.gen_a)->required()->check(CLI::NonNegativeNumber);
  uniform->add_option("k", f.gen_b)->required()->check(CLI::NonNegativeNumber);
  auto* complete = gen->add_subcommand("complete", "Complete matroid M(n, n)");
  complete->add_option("n", f.gen_a)->required()->check(CLI::NonNegativeNumber);
  auto* graphic = gen->add_subcommand("graphic", "Graphic matroid of a graph file");
  graphic->add_option("graph", f.gen_file)->required();
  auto* hn = gen->add_subcommand("hn", "Antipodal quotient H_n");
  hn->add_option("n", f.gen_a)->required()->check(CLI::PositiveNumber);
  auto* even = gen->add_subcommand("even-delta-free", "All even subsets of an m-set");
  even->add_option("m", f.gen_a)->required()->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "Run the local condition battery");
  check->add_option("graph", f.input)->required();
  check->add_option("--mode", f.mode)->check(CLI::IsMember({"matroid", "even-delta"}));
  check->add_option("--basepoint", f.basepoint);
  check->add_option("--sample", f.sample);
  check->add_option("--seed", f.seed);

  auto* cover = app.add_subcommand("cover", "Build the universal cover");
  cover->add_option("graph", f.input)->required();
  cover->add_option("--basepoint", f.basepoint);
  cover->add_option("--budget", f.budget);
  cover->add_flag("--verify", f.verify);
  cover->add_flag("--checked", f.checked, "Check stars level by level");
  cover->add_option("--export", f.export_path);

  auto* rec = app.add_subcommand("reconstruct", "Recover a matroid from its basis graph");
  rec->add_option("graph", f.input)->required();
  rec->add_option("--out", f.out);

  for (auto* sub : {uniform, complete, graphic, hn, even}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Session s;
  for (auto* sub : {uniform, complete, graphic, hn, even}) {
    if (sub->parsed()) f.gen_kind = sub->get_name();
  }
  CLI::App* chosen = app.get_subcommands().front();
  s.command = chosen->get_name();
  s.arguments["jobs"] = f.jobs;
  try {
    if (chosen == gen) return run_gen(s, f);
    if (chosen == check) return run_check(s, f);
    if (chosen == cover) return run_cover(s, f);
    return run_reconstruct(s, f);
  } catch (const Error& e) {
    return s.fail(e);
  }
}

}  // namespace
}  // namespace mbg

int main(int argc, char** argv) { return mbg::run(argc, argv); }
