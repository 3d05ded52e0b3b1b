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

#include "gbs/explore.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace gbs {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Steps whose inverse is a forward move of the class. The target side of a
// bidirectional search walks these. Slides are their own inverses. The
// inverse of a collapse is an expansion whose factor is fixed by the
// collapsed edge, so max_n does not apply to it. The inverse of a bounded
// expansion is a collapse of an edge carrying 2 <= |n| <= max_n at the
// survivor with 1..max_subset_size other ends at the removed vertex.
std::vector<Move> reverse_moves(const Graph& g, MoveClass move_class,
                                const ExpansionBounds& bounds) {
  std::vector<Move> out;
  if (move_class == MoveClass::kDeform) {
    for (Move& m : enumerate_collapses(g)) {
      const Collapse& c = std::get<Collapse>(m);
      const Edge& e = g.edge(c.edge);
      const int keep = c.survivor == e.endpoint0 ? 0 : 1;
      const Index n = abs_index(e.index(keep));
      const std::size_t others = g.valence(e.endpoint(1 - keep)) - 1;
      if (n >= 2 && n <= bounds.max_n && others >= 1 &&
          others <= bounds.max_subset_size) {
        out.push_back(std::move(m));
      }
    }
    ExpansionBounds unbounded_n = bounds;
    unbounded_n.max_n = max_abs_index(g);
    for (Move& m : enumerate_expansions(g, unbounded_n)) {
      out.push_back(std::move(m));
    }
  }
  for (Move& m : enumerate_slides(g)) out.push_back(std::move(m));
  return out;
}

struct Node {
  Graph rep;
  std::ptrdiff_t parent = -1;
  Move via;  // apply_move(nodes[parent].rep, via) == rep
  std::size_t depth = 0;
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> frontier;
  bool pruned = false;

  explicit Side(const Graph& root, const CanonicalCertificate& cert) {
    nodes.push_back(Node{root, -1, Move{}, 0});
    index.emplace(cert.bytes, 0);
    frontier.push_back(0);
  }
};

struct Meeting {
  int side;                  // side that generated the meeting step
  std::size_t parent;        // node on that side
  Move via;                  // step from parent
  Graph reached;             // apply_move(parent.rep, via)
  std::size_t other;         // matching node on the opposite side
  std::size_t length;
};

std::vector<Move> chain_to(const Side& side, std::size_t idx) {
  std::vector<Move> out;
  for (std::ptrdiff_t at = static_cast<std::ptrdiff_t>(idx);
       side.nodes[static_cast<std::size_t>(at)].parent >= 0;
       at = side.nodes[static_cast<std::size_t>(at)].parent) {
    out.push_back(side.nodes[static_cast<std::size_t>(at)].via);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Walks a target-side chain back to its root, starting from a concrete graph
// `current` equivalent to `start_rep`, appending transported inverse moves.
Graph walk_back(const Side& side, Graph start_rep, std::ptrdiff_t parent,
                Move via, Graph current, std::vector<Move>& path) {
  while (parent >= 0) {
    const Node& p = side.nodes[static_cast<std::size_t>(parent)];
    const Move inverse = invert_move(p.rep, via);
    const std::optional<Isomorphism> iso = find_isomorphism(start_rep, current);
    if (!iso) throw std::logic_error("path reconstruction lost the class");
    const Move step = transport_move(inverse, *iso, current);
    current = apply_move(current, step);
    path.push_back(step);
    start_rep = p.rep;
    via = p.via;
    parent = p.parent;
  }
  return current;
}

std::string one_line(const Graph& g) {
  std::string s = serialize_graph(g);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

}  // namespace

const char* to_string(MoveClass c) {
  return c == MoveClass::kSlide ? "slide" : "deform";
}

const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kEquivalent:
      return "EQUIVALENT";
    case Verdict::Kind::kDistinct:
      return "DISTINCT";
    case Verdict::Kind::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

Index max_abs_index(const Graph& g) {
  Index best = 0;
  for (const Edge& e : g.edges()) {
    best = std::max(best, abs_index(e.index0));
    best = std::max(best, abs_index(e.index1));
  }
  return best;
}

std::vector<Move> neighbor_moves(const Graph& g, MoveClass move_class,
                                 const ExpansionBounds& bounds) {
  std::vector<Move> out;
  if (move_class == MoveClass::kDeform) {
    out = enumerate_collapses(g);
    for (Move& m : enumerate_expansions(g, bounds)) out.push_back(std::move(m));
  }
  for (Move& m : enumerate_slides(g)) out.push_back(std::move(m));
  return out;
}

Move transport_move(const Move& m, const Isomorphism& iso, const Graph& to) {
  auto end = [&](const EdgeEnd& e) { return iso.ends.at(e); };
  return std::visit(
      Overloaded{
          [&](const Collapse& c) -> Move {
            return Collapse{end(EdgeEnd{c.edge, 0}).edge,
                            iso.vertices.at(c.survivor)};
          },
          [&](const Expansion& x) -> Move {
            Expansion out{iso.vertices.at(x.vertex), x.n, {},
                          fresh_vertex_id(to), fresh_edge_id(to)};
            for (const EdgeEnd& e : x.moved_ends) {
              out.moved_ends.push_back(end(e));
            }
            return out;
          },
          [&](const Slide& s) -> Move {
            return Slide{end(s.moving), end(s.along)};
          }},
      m);
}

ExplorationReport explore_class(const Graph& g, MoveClass move_class,
                                const Budget& budget) {
  ExplorationReport report;
  std::unordered_map<std::string, std::size_t> seen;
  const CanonicalCertificate root = canonical_certificate(g);
  report.members.push_back({root, g, 0});
  report.adjacency.emplace_back();
  seen.emplace(root.bytes, 0);
  report.closed = true;

  for (std::size_t next = 0; next < report.members.size(); ++next) {
    const Graph rep = report.members[next].representative;
    const std::size_t depth = report.members[next].depth;
    std::vector<std::size_t> out;
    for (const Move& m : neighbor_moves(rep, move_class, budget.expansion_bounds)) {
      Graph h = apply_move(rep, m);
      if (max_abs_index(h) > budget.max_abs_index) {
        report.closed = false;
        report.touched_index_cap = true;
        continue;
      }
      CanonicalCertificate cert;
      try {
        cert = canonical_certificate(h);
      } catch (const CapacityError&) {
        report.closed = false;
        continue;
      }
      if (auto it = seen.find(cert.bytes); it != seen.end()) {
        out.push_back(it->second);
        continue;
      }
      if (depth + 1 > budget.max_depth ||
          report.members.size() >= budget.max_nodes) {
        report.closed = false;
        continue;
      }
      const std::size_t id = report.members.size();
      seen.emplace(cert.bytes, id);
      report.members.push_back({std::move(cert), std::move(h), depth + 1});
      report.adjacency.emplace_back();
      out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    report.adjacency[next] = std::move(out);
  }
  return report;
}

std::string format_report(const ExplorationReport& r) {
  std::ostringstream out;
  out << "members: " << r.members.size() << '\n'
      << "closed: " << (r.closed ? "true" : "false") << '\n'
      << "touched_index_cap: " << (r.touched_index_cap ? "true" : "false")
      << '\n';
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    out << "member " << i << ": depth " << r.members[i].depth << " | "
        << one_line(r.members[i].representative) << '\n';
  }
  for (std::size_t i = 0; i < r.adjacency.size(); ++i) {
    out << "adjacent " << i << ":";
    for (std::size_t j : r.adjacency[i]) out << ' ' << j;
    out << '\n';
  }
  return out.str();
}

std::string dump_visited(const ExplorationReport& r) {
  std::ostringstream out;
  for (const ClassMember& m : r.members) {
    out << m.certificate.hex() << ' ' << one_line(m.representative) << '\n';
  }
  return out.str();
}

std::string to_dot(const ExplorationReport& r) {
  std::ostringstream out;
  out << "digraph class {\n";
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    out << "  m" << i << " [label=\"" << i << " (d" << r.members[i].depth
        << ")\"];\n";
  }
  for (std::size_t i = 0; i < r.adjacency.size(); ++i) {
    for (std::size_t j : r.adjacency[i]) {
      out << "  m" << i << " -> m" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string format_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "verdict: " << to_string(v.kind) << '\n';
  if (!v.reason.empty()) out << "reason: " << v.reason << '\n';
  if (v.kind == Verdict::Kind::kEquivalent) {
    out << "length: " << v.path.size() << '\n' << "path:\n"
        << format_script(v.path);
  }
  return out.str();
}

Verdict decide_equivalence(const Graph& g1, const Graph& g2,
                           MoveClass move_class, const Budget& budget) {
  using Kind = Verdict::Kind;
  if (betti_number(g1) != betti_number(g2)) {
    return {Kind::kDistinct, {},
            "betti number differs (" + std::to_string(betti_number(g1)) +
                " vs " + std::to_string(betti_number(g2)) + ")"};
  }
  if (move_class == MoveClass::kSlide) {
    if (g1.num_vertices() != g2.num_vertices()) {
      return {Kind::kDistinct, {},
              "vertex count differs (" + std::to_string(g1.num_vertices()) +
                  " vs " + std::to_string(g2.num_vertices()) +
                  "); slides preserve it"};
    }
    if (g1.num_edges() != g2.num_edges()) {
      return {Kind::kDistinct, {},
              "edge count differs (" + std::to_string(g1.num_edges()) + " vs " +
                  std::to_string(g2.num_edges()) + "); slides preserve it"};
    }
  }

  const CanonicalCertificate c1 = canonical_certificate(g1);
  const CanonicalCertificate c2 = canonical_certificate(g2);
  if (c1 == c2) return {Kind::kEquivalent, {}, "isomorphic"};

  Side sides[2] = {Side(g1, c1), Side(g2, c2)};
  std::size_t spent = 0;
  while (spent < budget.max_depth) {
    // Expand the smaller non-empty frontier; ties go to the source side.
    int s = 0;
    if (sides[0].frontier.empty() ||
        (!sides[1].frontier.empty() &&
         sides[1].frontier.size() < sides[0].frontier.size())) {
      s = 1;
    }
    if (sides[s].frontier.empty()) break;
    Side& here = sides[s];
    const Side& there = sides[1 - s];

    std::optional<Meeting> best;
    std::vector<std::size_t> next_frontier;
    for (std::size_t at : here.frontier) {
      const Graph rep = here.nodes[at].rep;
      const std::vector<Move> moves =
          s == 0 ? neighbor_moves(rep, move_class, budget.expansion_bounds)
                 : reverse_moves(rep, move_class, budget.expansion_bounds);
      for (const Move& m : moves) {
        Graph h = apply_move(rep, m);
        if (max_abs_index(h) > budget.max_abs_index) {
          here.pruned = true;
          continue;
        }
        CanonicalCertificate cert;
        try {
          cert = canonical_certificate(h);
        } catch (const CapacityError&) {
          here.pruned = true;
          continue;
        }
        if (auto it = there.index.find(cert.bytes); it != there.index.end()) {
          const std::size_t length =
              here.nodes[at].depth + 1 + there.nodes[it->second].depth;
          if (!best || length < best->length) {
            best = Meeting{s, at, m, h, it->second, length};
          }
        }
        if (here.index.count(cert.bytes) != 0) continue;
        if (here.nodes.size() >= budget.max_nodes) {
          here.pruned = true;
          continue;
        }
        const std::size_t id = here.nodes.size();
        here.index.emplace(cert.bytes, id);
        here.nodes.push_back(Node{std::move(h), static_cast<std::ptrdiff_t>(at),
                                  m, here.nodes[at].depth + 1});
        next_frontier.push_back(id);
      }
    }
    here.frontier = std::move(next_frontier);
    ++spent;

    if (best) {
      std::vector<Move> path;
      Graph end_graph = g1;
      if (best->side == 0) {
        path = chain_to(sides[0], best->parent);
        path.push_back(best->via);
        const Node& o = sides[1].nodes[best->other];
        end_graph = walk_back(sides[1], o.rep, o.parent, o.via,
                              apply_script(g1, path), path);
      } else {
        path = chain_to(sides[0], best->other);
        end_graph = walk_back(sides[1], best->reached,
                              static_cast<std::ptrdiff_t>(best->parent),
                              best->via, sides[0].nodes[best->other].rep, path);
      }
      if (canonical_certificate(end_graph) != c2) {
        throw std::logic_error("reconstructed path does not reach the target");
      }
      return {Kind::kEquivalent, std::move(path),
              "path found within depth " + std::to_string(spent)};
    }

    if (here.frontier.empty() && !here.pruned) {
      if (move_class == MoveClass::kSlide) {
        return {Kind::kDistinct, {},
                std::string("class exhausted: the slide class of the ") +
                    (s == 0 ? "first" : "second") + " graph has " +
                    std::to_string(here.nodes.size()) +
                    " members and excludes the other graph"};
      }
      return {Kind::kUnknown, {},
              "bounded deformation search exhausted without meeting; "
              "expansion bounds make this inconclusive"};
    }
  }
  return {Kind::kUnknown, {},
          "budget exhausted after " + std::to_string(spent) + " layers"};
}

}  // namespace gbs
