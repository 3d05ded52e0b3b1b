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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gbs/canon.hpp"
#include "gbs/error.hpp"
#include "gbs/explore.hpp"
#include "gbs/graph.hpp"
#include "gbs/moves.hpp"
#include "gbs/paperlab.hpp"

namespace gbs::cli {
namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Index to_index(const std::string& flag, const std::string& text) {
  Index i;
  if (!parse_index(text, i)) throw CLI::ValidationError(flag, "not an integer: " + text);
  return i;
}

// Flags shared by equiv and explore.
struct SearchFlags {
  std::string moves = "slide";
  std::size_t depth = 6;
  std::size_t max_nodes = 100000;
  std::string max_index = "1000000";
  std::string max_n = "10";
  std::size_t max_subset = 3;

  void attach(CLI::App* app) {
    app->add_option("--moves", moves, "move class")
        ->check(CLI::IsMember({"slide", "deform"}));
    app->add_option("--depth", depth, "search depth");
    app->add_option("--max-nodes", max_nodes, "node budget");
    app->add_option("--max-index", max_index, "largest |index| kept");
    app->add_option("--max-n", max_n, "largest expansion index");
    app->add_option("--max-subset", max_subset, "most ends moved by an expansion");
  }

  MoveClass move_class() const {
    return moves == "deform" ? MoveClass::kDeform : MoveClass::kSlide;
  }

  Budget budget() const {
    Budget b;
    b.max_depth = depth;
    b.max_nodes = max_nodes;
    b.max_abs_index = to_index("--max-index", max_index);
    b.expansion_bounds.max_n = to_index("--max-n", max_n);
    b.expansion_bounds.max_subset_size = max_subset;
    if (b.max_abs_index < 1) throw CLI::ValidationError("--max-index", "must be positive");
    return b;
  }
};

int verdict_code(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kEquivalent:
      return kTrue;
    case Verdict::Kind::kDistinct:
      return kFalse;
    case Verdict::Kind::kUnknown:
      break;
  }
  return kUnknown;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rewriting and search for edge-indexed graphs", "gbs"};
  app.require_subcommand(1);

  std::string graph_path, second_path, script_path, dot_path, dump_path;

  auto* check = app.add_subcommand("check", "print predicates; exit 0 iff QUALIFIED");
  check->add_option("graph", graph_path)->required();

  auto* moves = app.add_subcommand("moves", "list legal collapses and slides");
  moves->add_option("graph", graph_path)->required();
  bool with_expansions = false;
  std::string moves_max_n = "10";
  std::size_t moves_max_subset = 3;
  moves->add_flag("--expansions", with_expansions, "also list bounded expansions");
  moves->add_option("--max-n", moves_max_n);
  moves->add_option("--max-subset", moves_max_subset);

  auto* apply = app.add_subcommand("apply", "run a move script");
  apply->add_option("graph", graph_path)->required();
  apply->add_option("--script", script_path, "move script")->required();
  apply->add_option("--emit-dot", dot_path);

  auto* canon = app.add_subcommand("canon", "print the canonical certificate");
  canon->add_option("graph", graph_path)->required();

  SearchFlags equiv_flags, explore_flags;
  auto* equiv = app.add_subcommand("equiv", "decide equivalence within a budget");
  equiv->add_option("first", graph_path)->required();
  equiv->add_option("second", second_path)->required();
  equiv->add_option("--script", script_path, "write the path here");
  equiv_flags.attach(equiv);

  auto* explore = app.add_subcommand("explore", "enumerate a class within a budget");
  explore->add_option("graph", graph_path)->required();
  explore->add_option("--emit-dot", dot_path);
  explore->add_option("--dump-visited", dump_path);
  explore_flags.attach(explore);

  auto* reduce_cmd = app.add_subcommand("reduce", "collapse until reduced");
  reduce_cmd->add_option("graph", graph_path)->required();
  reduce_cmd->add_option("--script", script_path, "write the collapses here");

  auto* random = app.add_subcommand("random", "print a seeded random graph");
  RandomGraphSpec rspec;
  std::string require = "none";
  std::uint64_t seed = 1;
  random->add_option("--vertices", rspec.num_vertices);
  random->add_option("--edges", rspec.num_edges);
  random->add_option("--index-lo", rspec.index_lo);
  random->add_option("--index-hi", rspec.index_hi);
  random->add_option("--require", require)
      ->check(CLI::IsMember({"none", "reduced", "ssf"}));
  random->add_option("--seed", seed);

  auto* paper = app.add_subcommand("paper-example",
                                   "replay the two-vertex deformation and the slide ladder");
  std::string pm = "2", pn = "3", pr = "5", ps = "7";
  std::size_t ladder_depth = 6;
  paper->add_option("--m", pm);
  paper->add_option("--n", pn);
  paper->add_option("--r", pr);
  paper->add_option("--s", ps);
  paper->add_option("--ladder-depth", ladder_depth);
  paper->add_option("--emit-dot", dot_path);

  auto* rigidity = app.add_subcommand("rigidity", "seeded rigidity trials");
  RigidityCampaign campaign;
  std::string rig_max_n = "9";
  unsigned jobs = 1;
  rigidity->add_option("--trials", campaign.trials);
  rigidity->add_option("--seed", campaign.first_seed);
  rigidity->add_option("--max-vertices", campaign.max_vertices)
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  rigidity->add_option("--num-moves", campaign.num_moves);
  rigidity->add_option("--max-n", rig_max_n);
  rigidity->add_option("--max-subset", campaign.bounds.max_subset_size);
  rigidity->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  std::vector<std::string> argv_store = {"gbs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    if (*check) {
      const PredicateReport r = analyze(load_graph(graph_path));
      out << format_report(r);
      switch (r.jsj.status) {
        case JsjStatus::kQualified:
          return kTrue;
        case JsjStatus::kNotQualified:
          return kFalse;
        case JsjStatus::kUnknown:
          return kUnknown;
      }
    }
    if (*moves) {
      const Graph g = load_graph(graph_path);
      std::vector<Move> listed = enumerate_collapses(g);
      const std::vector<Move> slides = enumerate_slides(g);
      out << "# collapses: " << listed.size() << "\n";
      out << "# slides: " << slides.size() << "\n";
      listed.insert(listed.end(), slides.begin(), slides.end());
      if (with_expansions) {
        ExpansionBounds b{to_index("--max-n", moves_max_n), moves_max_subset};
        const std::vector<Move> exps = enumerate_expansions(g, b);
        out << "# expansions: " << exps.size() << "\n";
        listed.insert(listed.end(), exps.begin(), exps.end());
      }
      out << format_script(listed);
      return kTrue;
    }
    if (*apply) {
      const Graph g = load_graph(graph_path);
      const std::vector<Move> script = parse_script(read_file(script_path));
      const Graph result = apply_script(g, script);
      out << serialize_graph(result);
      if (!dot_path.empty()) write_file(dot_path, to_dot(result));
      return kTrue;
    }
    if (*canon) {
      out << canonical_certificate(load_graph(graph_path)).hex() << "\n";
      return kTrue;
    }
    if (*equiv) {
      const Graph g1 = load_graph(graph_path);
      const Graph g2 = load_graph(second_path);
      const Verdict v = decide_equivalence(g1, g2, equiv_flags.move_class(),
                                           equiv_flags.budget());
      out << format_verdict(v);
      if (!script_path.empty() && v.kind == Verdict::Kind::kEquivalent) {
        write_file(script_path, format_script(v.path));
      }
      return verdict_code(v.kind);
    }
    if (*explore) {
      const ExplorationReport r = explore_class(
          load_graph(graph_path), explore_flags.move_class(), explore_flags.budget());
      out << format_report(r);
      if (!dot_path.empty()) write_file(dot_path, to_dot(r));
      if (!dump_path.empty()) write_file(dump_path, dump_visited(r));
      return r.closed ? kTrue : kUnknown;
    }
    if (*reduce_cmd) {
      const Reduction r = reduce(load_graph(graph_path));
      out << serialize_graph(r.graph);
      if (!script_path.empty()) write_file(script_path, format_script(r.script));
      return kTrue;
    }
    if (*random) {
      rspec.require = require == "ssf"       ? Requirement::kStronglySlideFree
                      : require == "reduced" ? Requirement::kReduced
                                             : Requirement::kNone;
      out << serialize_graph(random_graph(rspec, seed));
      return kTrue;
    }
    if (*paper) {
      const PaperParams p{to_index("--m", pm), to_index("--n", pn),
                          to_index("--r", pr), to_index("--s", ps)};
      const Graph x = paper_graph(PaperGraph::kX, p);
      const Graph y = paper_graph(PaperGraph::kY, p);
      out << "# X\n" << serialize_graph(x) << "# Y\n" << serialize_graph(y);
      out << "# deformation\n";
      const DeformationReport d = paper_deformation(p);
      out << format_deformation(d);
      if (!dot_path.empty()) write_file(dot_path, to_dot(d.endpoint));
      bool ok = d.reaches_y;
      out << "# ladder\n";
      if (p.coprime_like()) {
        const LadderCertificate c = verify_slide_ladder(p, ladder_depth);
        out << format_ladder(c);
        ok = ok && c.shape_ok && c.y_absent;
      } else {
        out << "skipped: m and n divide one another\n";
      }
      return ok ? kTrue : kFalse;
    }
    if (*rigidity) {
      campaign.bounds.max_n = to_index("--max-n", rig_max_n);
      const std::vector<TrialResult> results = run_rigidity_campaign(campaign, jobs);
      std::size_t passed = 0;
      for (const TrialResult& t : results) {
        if (t.pass) {
          ++passed;
        } else {
          out << format_trial(t);
        }
      }
      out << "trials: " << results.size() << "\n";
      out << "passed: " << passed << "\n";
      return passed == results.size() ? kTrue : kFalse;
    }
  } catch (const CLI::ValidationError& e) {
    err << "gbs: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "gbs: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace gbs::cli
