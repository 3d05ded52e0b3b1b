// Copyright 2026 The gbsdeform Authors
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

// Acceptance suite. With no argument runs every criterion; with a number
// runs only that one. Prints one PASS/FAIL line per criterion and exits
// nonzero if any failed.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gbs/canon.hpp"
#include "gbs/explore.hpp"
#include "gbs/graph.hpp"
#include "gbs/moves.hpp"
#include "gbs/paperlab.hpp"
#include "testing.hpp"

namespace {

using namespace gbs;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Cli {
  int code;
  std::string out;
  std::string err;
};

Cli gbs_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(GBS_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool connected(const Graph& g) {
  std::map<VertexId, VertexId> parent;
  for (const VertexId& v : g.vertices()) parent[v] = v;
  std::function<VertexId(const VertexId&)> find = [&](const VertexId& v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const Edge& e : g.edges()) parent[find(e.endpoint0)] = find(e.endpoint1);
  const VertexId root = find(g.vertices().front());
  for (const VertexId& v : g.vertices()) {
    if (find(v) != root) return false;
  }
  return true;
}

// 1. Deformation replay through the CLI.
Outcome deformation_replay() {
  Outcome o;
  const Cli r = gbs_cli({"paper-example", "--m", "2", "--n", "3", "--r", "5", "--s", "7"});
  o.require(r.code == 0, "paper-example exit " + std::to_string(r.code));
  const std::vector<std::string> want = {
      "expand A 10 l:0 t:0 as Q f  # (5,3,10,1,2,7)",
      "slide f:0 along l:1  # (5,3,6,1,2,7)",
      "slide f:0 along t:0  # (5,3,1,21,2,7)",
      "collapse f into B  # (5,63,42,7)",
  };
  std::vector<std::string> moves;
  for (const std::string& line : lines_of(r.out)) {
    for (const char* verb : {"expand ", "slide ", "collapse "}) {
      if (line.rfind(verb, 0) == 0) moves.push_back(line);
    }
  }
  o.require(moves == want, "move lines differ from the expected four");
  o.require(r.out.find("reaches_y: true\n") != std::string::npos, "endpoint is not Y");

  const PaperParams p{2, 3, 5, 7};
  const DeformationReport d = paper_deformation(p);
  const Graph x = paper_graph(PaperGraph::kX, p);
  Graph g = x;
  for (const Move& m : d.script) {
    o.require(is_legal(g, m), "illegal step " + to_script_line(m));
    if (!o.pass) return o;
    g = apply_move(g, m);
  }
  const Graph y({"A", "B"}, {{"l", "B", "B", 42, 7}, {"e", "B", "A", 63, 5}});
  o.require(canonical_certificate(g) == canonical_certificate(y),
            "endpoint is not canon-equal to {loop (42,7), edge (63,5)}");
  if (o.pass) o.detail = "4 moves, tuples exact, endpoint = Y";
  return o;
}

// 2. Slide ladder to depth 12.
Outcome slide_ladder() {
  Outcome o;
  const LadderCertificate c = verify_slide_ladder({2, 3, 5, 7}, 12);
  o.require(c.shape_ok, "shape_ok false");
  o.require(c.y_absent, "y_absent false");
  o.require(c.levels.size() == 13, "wrong level count");
  Index two_pow = 4, three_pow = 1;
  for (std::size_t k = 0; k < c.levels.size(); ++k) {
    const Index want = 5 * two_pow * three_pow;
    o.require(c.levels[k].free_index == want,
              "level " + std::to_string(k) + " index " + to_string(c.levels[k].free_index));
    if (k <= 11) {
      o.require(c.levels[k].slide_count == (k == 0 ? 1u : 2u),
                "level " + std::to_string(k) + " slide count");
    }
    two_pow *= 2;
    three_pow *= 3;
  }
  o.require(c.levels.size() > 6 && c.levels[6].free_index == 933120, "level 6 != 933120");
  if (o.pass) o.detail = "K=12, level 12 index " + to_string(c.levels.back().free_index);
  return o;
}

// 3. Deformation equivalence through the CLI, replayed through apply.
Outcome deformation_equivalence() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "gbs_acceptance_3";
  fs::create_directories(dir);
  const std::string path = (dir / "path.txt").string();
  const Cli r = gbs_cli({"equiv", "--moves", "deform", "--depth", "4", "--max-n", "10",
                         "--max-index", "100", data("X.gbs"), data("Y.gbs"), "--script",
                         path});
  o.require(r.code == 0, "equiv exit " + std::to_string(r.code) + ": " + r.out);
  if (!o.pass) return o;
  const std::vector<Move> script = parse_script(slurp(path));
  o.require(script.size() <= 4, "path length " + std::to_string(script.size()));
  const Cli applied = gbs_cli({"apply", data("X.gbs"), "--script", path});
  o.require(applied.code == 0, "apply failed: " + applied.err);
  if (!o.pass) return o;
  const Graph end = parse_graph(applied.out);
  const Graph y = paper_graph(PaperGraph::kY, {2, 3, 5, 7});
  o.require(parse_graph(slurp(data("Y.gbs"))) == y, "Y.gbs is not Y(2,3,5,7)");
  o.require(is_isomorphic(end, y), "replayed path does not end at Y");
  fs::remove_all(dir);
  if (o.pass) o.detail = "path length " + std::to_string(script.size()) + ", replayed";
  return o;
}

// 4. Rigidity trials.
Outcome rigidity() {
  Outcome o;
  RigidityCampaign c;
  c.trials = 100;
  c.first_seed = 1;
  c.max_vertices = 5;
  c.index_lo = 2;
  c.index_hi = 9;
  c.num_moves = 8;
  c.bounds = {9, 3};
  const std::vector<TrialResult> results = run_rigidity_campaign(c);
  std::size_t passed = 0, moves = 0;
  for (const TrialResult& t : results) {
    passed += t.pass;
    moves += t.moves.size();
    o.require(t.pass, format_trial(t));
    o.require(t.start.num_vertices() <= 5, "start exceeds 5 vertices");
  }
  if (o.pass) {
    o.detail = std::to_string(passed) + "/100 passed, " + std::to_string(moves) +
               " random moves";
  }
  return o;
}

// 5. Canonical form against the brute-force oracle.
Outcome canon_oracle() {
  Outcome o;
  std::size_t agree = 0, positives = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = testing::random_small(seed, 5);
    const Graph h = testing::scramble(g, seed + 5000);
    const bool fast = is_isomorphic(g, h);
    const bool slow = brute_force_isomorphic(g, h);
    o.require(fast && slow, "relabel pair rejected, seed " + std::to_string(seed));
    agree += fast == slow;
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = testing::random_small(1000 + seed, 5, 1, 3);
    const Graph h = testing::random_small(2000 + seed, 5, 1, 3);
    const bool fast = is_isomorphic(g, h);
    const bool slow = brute_force_isomorphic(g, h);
    o.require(fast == slow, "cross pair disagrees, seed " + std::to_string(seed));
    agree += fast == slow;
    positives += slow;
  }
  if (o.pass) {
    o.detail = std::to_string(agree) + "/300 agree (" + std::to_string(positives) +
               " isomorphic cross pairs)";
  }
  return o;
}

// 6. Invariants of random legal moves.
Outcome move_invariants() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::size_t applied = 0;
  for (std::uint64_t seed = 1; applied < 1000; ++seed) {
    const Graph g = testing::random_small(seed, 5);
    const std::vector<Move> moves = testing::all_moves(g, {9, 3});
    if (moves.empty()) continue;
    const Move& m = moves[rng() % moves.size()];
    const Graph h = apply_move(g, m);
    const std::string tag = " (seed " + std::to_string(seed) + ", " + to_script_line(m) + ")";
    o.require(betti_number(h) == betti_number(g), "betti changed" + tag);
    o.require(connected(h), "disconnected" + tag);
    for (const Edge& e : h.edges()) {
      o.require(e.index0 != 0 && e.index1 != 0, "zero index" + tag);
    }
    const Move inv = invert_move(g, m);
    o.require(is_legal(h, inv), "inverse illegal" + tag);
    if (!o.pass) return o;
    o.require(is_isomorphic(apply_move(h, inv), g), "round trip differs" + tag);
    ++applied;
  }
  if (o.pass) o.detail = std::to_string(applied) + " moves checked";
  return o;
}

// 7. Predicate table.
Outcome predicate_table() {
  Outcome o;
  const PaperParams p{2, 3, 5, 7};
  const PredicateReport x = analyze(paper_graph(PaperGraph::kX, p));
  o.require(x.jsj.status == JsjStatus::kQualified, "X not QUALIFIED");
  o.require(!x.strongly_slide_free, "X strongly slide-free");
  o.require(enumerate_slides(paper_graph(PaperGraph::kX, p)).size() == 1, "X slide count");
  o.require(analyze(paper_graph(PaperGraph::kY, p)).jsj.status == JsjStatus::kQualified,
            "Y not QUALIFIED");
  const PredicateReport torus = analyze(parse_graph("vertex A\nedge e A A 1 1"));
  o.require(torus.geometry == Geometry::kLine, "loop(1,1) not a line");
  o.require(torus.jsj.status == JsjStatus::kNotQualified, "loop(1,1) qualified");
  const PredicateReport klein = analyze(parse_graph("vertex A\nvertex B\nedge e A B 2 2"));
  o.require(klein.geometry == Geometry::kLine, "edge(2,2) not a line");
  o.require(klein.jsj.status == JsjStatus::kNotQualified, "edge(2,2) qualified");
  const PredicateReport point = analyze(Graph::point());
  o.require(point.jsj.status == JsjStatus::kNotQualified, "point qualified");
  o.require(point.geometry == Geometry::kPoint, "point geometry");
  o.require(!analyze(testing::diagram4()).reduced, "diagram 4 reduced");
  const Cli check = gbs_cli({"check", data("X.gbs")});
  o.require(check.code == 0 && check.out.find("jsj: QUALIFIED") != std::string::npos,
            "check X.gbs");
  if (o.pass) o.detail = "6 rows exact";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"deformation replay", deformation_replay, 1},
      {"slide ladder", slide_ladder, 1},
      {"deformation equivalence", deformation_equivalence, 60},
      {"rigidity trials", rigidity, 120},
      {"canon oracle", canon_oracle, 60},
      {"move invariants", move_invariants, 60},
      {"predicate table", predicate_table, 10},
  };
  std::size_t only = 0;
  if (argc > 1) only = std::strtoul(argv[1], nullptr, 10);
  if (argc > 2 || (argc == 2 && (only < 1 || only > criteria.size()))) {
    std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
    return 64;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && i + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds >= criteria[i].limit_seconds) {
      o.pass = false;
      o.detail = "over time limit";
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " "
              << criteria[i].name << ": " << o.detail << " [" << seconds << " s, limit "
              << criteria[i].limit_seconds << " s]\n";
  }
  return all ? 0 : 1;
}
