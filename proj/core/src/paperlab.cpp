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

#include "gbs/paperlab.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "gbs/error.hpp"

namespace gbs {
namespace {

void require_nonzero(const PaperParams& p) {
  if (p.m == 0 || p.n == 0 || p.r == 0 || p.s == 0) {
    throw Error("parameters m, n, r, s must be nonzero");
  }
}

Index power(const Index& base, std::size_t e) {
  Index out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

// std::uniform_int_distribution is implementation-defined; this is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

std::vector<Index> tuple_of(const Graph& g) {
  static const std::vector<std::string> kEdgeOrder = {"l", "f", "t"};
  auto rank = [](const VertexId& v) {
    return v == "A" ? 0 : v == "Q" ? 1 : 2;
  };
  std::vector<Index> out;
  for (const auto& id : kEdgeOrder) {
    if (!g.has_edge(id)) continue;
    const Edge& e = g.edge(id);
    if (!e.is_loop() && rank(e.endpoint1) < rank(e.endpoint0)) {
      out.push_back(e.index1);
      out.push_back(e.index0);
    } else {
      out.push_back(e.index0);
      out.push_back(e.index1);
    }
  }
  return out;
}

bool requirement_met(const Graph& g, Requirement r) {
  if (r == Requirement::kNone) return true;
  const PredicateReport p = analyze(g);
  if (r == Requirement::kReduced) return p.reduced;
  return p.strongly_slide_free;
}

Graph draw_graph(const RandomGraphSpec& spec, Rng& rng) {
  const std::size_t nv = spec.num_vertices;
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
  auto index = [&] {
    Index i = rng.between(spec.index_lo, spec.index_hi);
    return rng.coin() ? Index(-i) : i;
  };
  std::vector<Edge> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    if (rng.coin()) std::swap(a, b);
    Index i0 = index();
    Index i1 = index();
    edges.push_back({"e" + std::to_string(edges.size()), vertices[a],
                     vertices[b], std::move(i0), std::move(i1)});
  };
  for (std::size_t i = 1; i < nv; ++i) add(i, rng.below(i));
  while (edges.size() < spec.num_edges) add(rng.below(nv), rng.below(nv));
  return Graph(std::move(vertices), std::move(edges));
}

std::string one_line(const Graph& g) {
  std::string s = serialize_graph(g);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

RandomGraphSpec campaign_spec(const RigidityCampaign& c, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  RandomGraphSpec spec;
  spec.num_vertices = 1 + rng.below(std::max<std::size_t>(c.max_vertices, 1));
  const std::size_t lo = std::max<std::size_t>(spec.num_vertices - 1, 1);
  spec.num_edges = lo + rng.below(spec.num_vertices + 1 - lo + 1);
  spec.index_lo = c.index_lo;
  spec.index_hi = c.index_hi;
  spec.require = Requirement::kStronglySlideFree;
  return spec;
}

}  // namespace

bool PaperParams::coprime_like() const {
  return m != 0 && n != 0 && !divides(m, n) && !divides(n, m);
}

bool PaperParams::nontrivial_ends() const {
  return abs_index(r) >= 2 && abs_index(s) >= 2;
}

Graph paper_graph(PaperGraph which, const PaperParams& p, std::size_t k) {
  require_nonzero(p);
  switch (which) {
    case PaperGraph::kX:
      return Graph({"A", "B"}, {{"l", "A", "A", p.m * p.n * p.r, p.r},
                                {"t", "A", "B", p.r * p.m * p.m, p.s}});
    case PaperGraph::kY:
      return Graph({"A", "B"}, {{"l", "B", "B", p.m * p.n * p.s, p.s},
                                {"t", "B", "A", p.s * p.n * p.n, p.r}});
    case PaperGraph::kXk:
      return Graph({"A", "B"},
                   {{"l", "A", "A", p.m * p.n * p.r, p.r},
                    {"t", "A", "B", p.r * power(p.m, k + 2) * power(p.n, k),
                     p.s}});
  }
  throw std::logic_error("unknown graph kind");
}

DeformationReport paper_deformation(const PaperParams& p) {
  require_nonzero(p);
  DeformationReport r;
  r.script = {
      Expansion{"A", p.r * p.m, {{"l", 0}, {"t", 0}}, "Q", "f"},
      Slide{{"f", 0}, {"l", 1}},
      Slide{{"f", 0}, {"t", 0}},
      Collapse{"f", "B"},
  };
  Graph g = paper_graph(PaperGraph::kX, p);
  for (std::size_t i = 0; i < r.script.size(); ++i) {
    try {
      g = apply_move(g, r.script[i]);
    } catch (const MoveError& e) {
      throw std::logic_error("deformation step " + std::to_string(i + 1) +
                             " illegal: " + e.what());
    }
    r.index_tuples.push_back(tuple_of(g));
  }
  r.endpoint = g;
  r.reaches_y = is_isomorphic(g, paper_graph(PaperGraph::kY, p));
  return r;
}

std::string format_deformation(const DeformationReport& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.script.size(); ++i) {
    out << to_script_line(r.script[i]) << "  # (";
    const auto& t = r.index_tuples[i];
    for (std::size_t j = 0; j < t.size(); ++j) {
      out << (j ? "," : "") << t[j];
    }
    out << ")\n";
  }
  out << "reaches_y: " << (r.reaches_y ? "true" : "false") << "\n";
  return out.str();
}

LadderCertificate verify_slide_ladder(const PaperParams& p, std::size_t depth) {
  require_nonzero(p);
  if (!p.coprime_like()) throw Error("ladder requires m and n not dividing each other");
  LadderCertificate c;
  c.depth = depth;
  c.shape_ok = true;
  c.y_absent = true;
  const CanonicalCertificate y = canonical_certificate(paper_graph(PaperGraph::kY, p));
  auto cert = [&](std::size_t k) {
    return canonical_certificate(paper_graph(PaperGraph::kXk, p, k));
  };

  Graph current = paper_graph(PaperGraph::kX, p);
  for (std::size_t k = 0; k <= depth; ++k) {
    LadderLevel level;
    level.k = k;
    level.free_index = current.index_of({"t", 0});
    level.expected_index = p.r * power(p.m, k + 2) * power(p.n, k);
    const CanonicalCertificate here = canonical_certificate(current);

    std::vector<CanonicalCertificate> expected = {cert(k + 1)};
    if (k > 0) expected.push_back(cert(k - 1));
    std::sort(expected.begin(), expected.end());

    const std::vector<Move> slides = enumerate_slides(current);
    level.slide_count = slides.size();
    const CanonicalCertificate up = cert(k + 1);
    std::optional<Graph> next;
    for (const Move& m : slides) {
      Graph g = apply_move(current, m);
      CanonicalCertificate gc = canonical_certificate(g);
      if (gc == up && !next) next = g;
      level.neighbors.push_back(std::move(gc));
    }
    std::vector<CanonicalCertificate> seen = level.neighbors;
    std::sort(seen.begin(), seen.end());

    if (level.free_index != level.expected_index) {
      level.problem = "free index " + to_string(level.free_index) +
                      " differs from " + to_string(level.expected_index);
    } else if (here != cert(k)) {
      level.problem = "level graph is not X_" + std::to_string(k);
    } else if (seen != expected) {
      level.problem = "slide neighbours are not the two adjacent levels";
    }
    level.ok = level.problem.empty();
    if (!level.ok) c.shape_ok = false;
    if (here == y ||
        std::find(seen.begin(), seen.end(), y) != seen.end()) {
      c.y_absent = false;
    }
    c.levels.push_back(std::move(level));
    if (!next) {
      c.shape_ok = false;
      break;
    }
    current = *next;
  }
  return c;
}

std::string format_ladder(const LadderCertificate& c) {
  std::ostringstream out;
  out << "depth: " << c.depth << "\n";
  for (const LadderLevel& l : c.levels) {
    out << "level " << l.k << ": index " << l.free_index << " slides "
        << l.slide_count << (l.ok ? " ok" : " FAIL " + l.problem) << "\n";
  }
  out << "shape_ok: " << (c.shape_ok ? "true" : "false") << "\n";
  out << "y_absent: " << (c.y_absent ? "true" : "false") << "\n";
  return out.str();
}

Graph random_graph(const RandomGraphSpec& spec, std::uint64_t seed) {
  if (spec.num_vertices == 0) throw Error("random graph needs at least one vertex");
  if (spec.num_edges + 1 < spec.num_vertices) {
    throw Error("random graph with " + std::to_string(spec.num_vertices) +
                " vertices needs at least " +
                std::to_string(spec.num_vertices - 1) + " edges");
  }
  if (spec.index_lo < 1 || spec.index_hi < spec.index_lo) {
    throw Error("index range must satisfy 1 <= lo <= hi");
  }
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt <= spec.max_retries; ++attempt) {
    Graph g = draw_graph(spec, rng);
    if (requirement_met(g, spec.require)) return g;
  }
  throw Error("no graph met the requirement after " +
              std::to_string(spec.max_retries) + " retries");
}

TrialResult rigidity_trial(const RandomGraphSpec& spec, std::size_t num_moves,
                           std::uint64_t seed, const ExpansionBounds& bounds) {
  TrialResult t;
  t.seed = seed;
  RandomGraphSpec start_spec = spec;
  start_spec.require = Requirement::kStronglySlideFree;
  Rng rng(seed);
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > spec.max_retries) {
      throw Error("no strongly slide-free reduced graph found");
    }
    Graph g = random_graph(start_spec, rng.below(std::numeric_limits<std::uint64_t>::max()));
    if (analyze(g).reduced) {
      t.start = std::move(g);
      break;
    }
  }

  Graph current = t.start;
  for (std::size_t i = 0; i < num_moves; ++i) {
    const std::vector<Move> pools[3] = {enumerate_slides(current),
                                        enumerate_collapses(current),
                                        enumerate_expansions(current, bounds)};
    const std::uint64_t weights[3] = {pools[0].empty() ? 0u : 2u,
                                      pools[1].empty() ? 0u : 1u,
                                      pools[2].empty() ? 0u : 1u};
    const std::uint64_t total = weights[0] + weights[1] + weights[2];
    if (total == 0) break;
    std::uint64_t pick = rng.below(total);
    std::size_t kind = 0;
    while (pick >= weights[kind]) pick -= weights[kind++];
    const Move& m = pools[kind][rng.below(pools[kind].size())];
    current = apply_move(current, m);
    t.moves.push_back(m);
  }
  t.finish = current;
  t.reduction = reduce(current);
  try {
    t.pass = is_isomorphic(t.reduction.graph, t.start);
    if (!t.pass) t.note = "reduced graph is not equivalent to the start";
  } catch (const CapacityError& e) {
    t.note = e.what();
  }
  return t;
}

std::string format_trial(const TrialResult& t) {
  std::ostringstream out;
  out << "seed: " << t.seed << "\n";
  out << "result: " << (t.pass ? "pass" : "FAIL") << "\n";
  if (!t.note.empty()) out << "note: " << t.note << "\n";
  out << "start: " << one_line(t.start) << "\n";
  for (const Move& m : t.moves) out << "move: " << to_script_line(m) << "\n";
  out << "finish: " << one_line(t.finish) << "\n";
  for (const Move& m : t.reduction.script) {
    out << "reduce: " << to_script_line(m) << "\n";
  }
  out << "reduced: " << one_line(t.reduction.graph) << "\n";
  return out.str();
}

std::vector<TrialResult> run_rigidity_campaign(const RigidityCampaign& c,
                                               unsigned jobs) {
  std::vector<TrialResult> results(c.trials);
  auto run = [&](std::size_t i) {
    const std::uint64_t seed = c.first_seed + i;
    results[i] = rigidity_trial(campaign_spec(c, seed), c.num_moves, seed, c.bounds);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || c.trials < 2) {
    for (std::size_t i = 0; i < c.trials; ++i) run(i);
    return results;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < c.trials; i += jobs) run(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace gbs
