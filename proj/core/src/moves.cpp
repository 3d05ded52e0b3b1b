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

#include "gbs/moves.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace gbs {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void illegal(const std::string& what) { throw MoveError(what); }

void require_end(const Graph& g, const EdgeEnd& end) {
  if (end.side != 0 && end.side != 1) {
    illegal("end " + to_string(end) + " has side other than 0 or 1");
  }
  if (!g.has_edge(end.edge)) illegal("no edge '" + end.edge + "'");
}

void check_collapse(const Graph& g, const Collapse& c) {
  if (!g.has_edge(c.edge)) illegal("collapse: no edge '" + c.edge + "'");
  const Edge& e = g.edge(c.edge);
  if (e.is_loop()) illegal("collapse: edge '" + c.edge + "' is a loop");
  if (c.survivor != e.endpoint0 && c.survivor != e.endpoint1) {
    illegal("collapse: '" + c.survivor + "' is not an endpoint of edge '" +
            c.edge + "'");
  }
  const int gone = c.survivor == e.endpoint0 ? 1 : 0;
  if (abs_index(e.index(gone)) != 1) {
    illegal("collapse: edge '" + c.edge + "' has index " +
            to_string(e.index(gone)) + " at vertex '" + e.endpoint(gone) +
            "', expected +-1");
  }
}

void check_expansion(const Graph& g, const Expansion& x) {
  if (!g.has_vertex(x.vertex)) {
    illegal("expand: no vertex '" + x.vertex + "'");
  }
  if (x.n == 0) illegal("expand: n must be nonzero");
  if (!is_valid_ident(x.new_vertex) || g.has_vertex(x.new_vertex)) {
    illegal("expand: new vertex id '" + x.new_vertex + "' is not fresh");
  }
  if (!is_valid_ident(x.new_edge) || g.has_edge(x.new_edge)) {
    illegal("expand: new edge id '" + x.new_edge + "' is not fresh");
  }
  std::set<EdgeEnd> seen;
  for (const EdgeEnd& end : x.moved_ends) {
    require_end(g, end);
    if (!seen.insert(end).second) {
      illegal("expand: end " + to_string(end) + " listed twice");
    }
    if (g.vertex_of(end) != x.vertex) {
      illegal("expand: end " + to_string(end) + " is at '" + g.vertex_of(end) +
              "', not '" + x.vertex + "'");
    }
    if (!divides(x.n, g.index_of(end))) {
      illegal("expand: " + to_string(x.n) + " does not divide index " +
              to_string(g.index_of(end)) + " of end " + to_string(end));
    }
  }
}

void check_slide(const Graph& g, const Slide& s) {
  require_end(g, s.moving);
  require_end(g, s.along);
  if (s.moving.edge == s.along.edge) {
    illegal("slide: edge '" + s.moving.edge + "' cannot slide along itself");
  }
  if (g.vertex_of(s.moving) != g.vertex_of(s.along)) {
    illegal("slide: ends " + to_string(s.moving) + " and " +
            to_string(s.along) + " are at different vertices");
  }
  if (!divides(g.index_of(s.along), g.index_of(s.moving))) {
    illegal("slide: index " + to_string(g.index_of(s.along)) + " of " +
            to_string(s.along) + " does not divide index " +
            to_string(g.index_of(s.moving)) + " of " + to_string(s.moving));
  }
}

Edge& mutable_edge(std::vector<Edge>& edges, const EdgeId& id) {
  return *std::find_if(edges.begin(), edges.end(),
                       [&](const Edge& e) { return e.id == id; });
}

void set_end(Edge& e, int side, const VertexId& v, Index idx) {
  (side == 0 ? e.endpoint0 : e.endpoint1) = v;
  (side == 0 ? e.index0 : e.index1) = std::move(idx);
}

Graph do_collapse(const Graph& g, const Collapse& c) {
  const Edge& e = g.edge(c.edge);
  const int keep = c.survivor == e.endpoint0 ? 0 : 1;
  const VertexId gone = e.endpoint(1 - keep);
  const Index scale = e.index(keep) * e.index(1 - keep);

  std::vector<VertexId> vertices;
  for (const VertexId& v : g.vertices()) {
    if (v != gone) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& other : g.edges()) {
    if (other.id == c.edge) continue;
    Edge copy = other;
    for (int side = 0; side < 2; ++side) {
      if (copy.endpoint(side) == gone) {
        set_end(copy, side, c.survivor, copy.index(side) * scale);
      }
    }
    edges.push_back(std::move(copy));
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph do_expansion(const Graph& g, const Expansion& x) {
  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(x.new_vertex);
  std::vector<Edge> edges = g.edges();
  for (const EdgeEnd& end : x.moved_ends) {
    Edge& e = mutable_edge(edges, end.edge);
    set_end(e, end.side, x.new_vertex, e.index(end.side) / x.n);
  }
  edges.push_back(Edge{x.new_edge, x.vertex, x.new_vertex, x.n, Index(1)});
  return Graph(std::move(vertices), std::move(edges));
}

Graph do_slide(const Graph& g, const Slide& s) {
  const Edge& carrier = g.edge(s.along.edge);
  const int far = 1 - s.along.side;
  const Index moved =
      g.index_of(s.moving) / g.index_of(s.along) * carrier.index(far);
  std::vector<Edge> edges = g.edges();
  set_end(mutable_edge(edges, s.moving.edge), s.moving.side,
          carrier.endpoint(far), moved);
  return Graph(g.vertices(), std::move(edges));
}

std::string next_free(const std::string& prefix,
                      const std::function<bool(const std::string&)>& used) {
  for (std::size_t k = 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!used(id)) return id;
  }
}

}  // namespace

void check_move(const Graph& g, const Move& m) {
  std::visit(Overloaded{[&](const Collapse& c) { check_collapse(g, c); },
                        [&](const Expansion& x) { check_expansion(g, x); },
                        [&](const Slide& s) { check_slide(g, s); }},
             m);
}

bool is_legal(const Graph& g, const Move& m) {
  try {
    check_move(g, m);
    return true;
  } catch (const MoveError&) {
    return false;
  }
}

Graph apply_move(const Graph& g, const Move& m) {
  check_move(g, m);
  return std::visit(
      Overloaded{[&](const Collapse& c) { return do_collapse(g, c); },
                 [&](const Expansion& x) { return do_expansion(g, x); },
                 [&](const Slide& s) { return do_slide(g, s); }},
      m);
}

Graph apply_script(const Graph& g, const std::vector<Move>& script) {
  Graph current = g;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      current = apply_move(current, script[i]);
    } catch (const MoveError& e) {
      throw MoveError("step " + std::to_string(i + 1) + " (" +
                      to_script_line(script[i]) + "): " + e.what());
    }
  }
  return current;
}

Move invert_move(const Graph& g, const Move& m) {
  check_move(g, m);
  return std::visit(
      Overloaded{
          [&](const Collapse& c) -> Move {
            const Edge& e = g.edge(c.edge);
            const int keep = c.survivor == e.endpoint0 ? 0 : 1;
            const VertexId& gone = e.endpoint(1 - keep);
            Expansion x{c.survivor, e.index(keep), {}, gone, c.edge};
            for (const EdgeEnd& end : g.ends_at(gone)) {
              if (end.edge != c.edge) x.moved_ends.push_back(end);
            }
            return x;
          },
          [&](const Expansion& x) -> Move {
            return Collapse{x.new_edge, x.vertex};
          },
          [&](const Slide& s) -> Move {
            return Slide{s.moving, s.along.opposite()};
          }},
      m);
}

std::vector<Move> enumerate_collapses(const Graph& g) {
  std::vector<Move> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    std::vector<VertexId> survivors;
    if (abs_index(e.index1) == 1) survivors.push_back(e.endpoint0);
    if (abs_index(e.index0) == 1) survivors.push_back(e.endpoint1);
    std::sort(survivors.begin(), survivors.end());
    for (VertexId& s : survivors) out.push_back(Collapse{e.id, std::move(s)});
  }
  return out;
}

std::vector<Move> enumerate_slides(const Graph& g) {
  std::vector<Move> out;
  for (const VertexId& v : g.vertices()) {
    const std::vector<EdgeEnd> ends = g.ends_at(v);
    for (const EdgeEnd& moving : ends) {
      for (const EdgeEnd& along : ends) {
        if (moving.edge == along.edge) continue;
        if (divides(g.index_of(along), g.index_of(moving))) {
          out.push_back(Slide{moving, along});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
    const Slide& x = std::get<Slide>(a);
    const Slide& y = std::get<Slide>(b);
    return std::tie(x.moving, x.along) < std::tie(y.moving, y.along);
  });
  return out;
}

VertexId fresh_vertex_id(const Graph& g) {
  return next_free("v", [&](const std::string& id) { return g.has_vertex(id); });
}

EdgeId fresh_edge_id(const Graph& g) {
  return next_free("e", [&](const std::string& id) { return g.has_edge(id); });
}

std::vector<Move> enumerate_expansions(const Graph& g,
                                       const ExpansionBounds& bounds) {
  std::vector<Move> out;
  const VertexId new_vertex = fresh_vertex_id(g);
  const EdgeId new_edge = fresh_edge_id(g);
  for (const VertexId& v : g.vertices()) {
    const std::vector<EdgeEnd> ends = g.ends_at(v);
    const std::size_t max_size = std::min(bounds.max_subset_size, ends.size());
    // Combinations of each size in lexicographic order.
    for (std::size_t size = 1; size <= max_size; ++size) {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        Index common = 0;
        std::vector<EdgeEnd> subset;
        for (std::size_t i : pick) {
          subset.push_back(ends[i]);
          common = gcd_index(common, g.index_of(ends[i]));
        }
        for (Index n = 2; n <= bounds.max_n && n <= common; ++n) {
          if (divides(n, common)) {
            out.push_back(Expansion{v, n, subset, new_vertex, new_edge});
          }
        }
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == ends.size() - size + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::kPoint:
      return "point";
    case Geometry::kLine:
      return "line";
    case Geometry::kGeneral:
      return "general";
  }
  return "general";
}

std::string to_string(const JsjVerdict& v) {
  switch (v.status) {
    case JsjStatus::kQualified:
      return "QUALIFIED";
    case JsjStatus::kNotQualified:
      return "NOT_QUALIFIED (" + v.reason + ")";
    case JsjStatus::kUnknown:
      return "UNKNOWN (" + v.reason + ")";
  }
  return "UNKNOWN";
}

PredicateReport analyze(const Graph& g) {
  PredicateReport r;
  r.reduced = enumerate_collapses(g).empty();

  r.minimal = true;
  for (const VertexId& v : g.vertices()) {
    const std::vector<EdgeEnd> ends = g.ends_at(v);
    if (ends.size() == 1 && abs_index(g.index_of(ends[0])) < 2) {
      r.minimal = false;
    }
  }

  // Any end dividing a different end at the same vertex breaks it; the two
  // ends of a loop count as different ends.
  bool divisible_pair = false;
  for (const VertexId& v : g.vertices()) {
    const std::vector<EdgeEnd> ends = g.ends_at(v);
    for (const EdgeEnd& a : ends) {
      for (const EdgeEnd& b : ends) {
        if (a != b && divides(g.index_of(b), g.index_of(a))) {
          divisible_pair = true;
        }
      }
    }
  }
  r.strongly_slide_free = r.minimal && !divisible_pair;

  r.unfolded_sufficient = std::all_of(
      g.edges().begin(), g.edges().end(), [](const Edge& e) {
        return abs_index(e.index0) >= 2 && abs_index(e.index1) >= 2;
      });

  if (g.num_vertices() == 1 && g.num_edges() == 0) {
    r.geometry = Geometry::kPoint;
  } else if (g.num_edges() == 1) {
    const Edge& e = g.edges().front();
    const Index want = e.is_loop() ? 1 : 2;
    if (abs_index(e.index0) == want && abs_index(e.index1) == want) {
      r.geometry = Geometry::kLine;
    }
  }

  if (!r.reduced) {
    r.jsj = {JsjStatus::kNotQualified, "not reduced"};
  } else if (r.geometry != Geometry::kGeneral) {
    r.jsj = {JsjStatus::kNotQualified, to_string(r.geometry)};
  } else if (r.unfolded_sufficient) {
    r.jsj = {JsjStatus::kQualified, ""};
  } else {
    r.jsj = {JsjStatus::kUnknown, "unfoldedness test inconclusive"};
  }
  return r;
}

std::string format_report(const PredicateReport& r) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "reduced: " << b(r.reduced) << '\n'
      << "minimal: " << b(r.minimal) << '\n'
      << "strongly_slide_free: " << b(r.strongly_slide_free) << '\n'
      << "unfolded_sufficient: " << b(r.unfolded_sufficient) << '\n'
      << "geometry: " << to_string(r.geometry) << '\n'
      << "jsj: " << to_string(r.jsj) << '\n';
  return out.str();
}

Reduction reduce(const Graph& g) {
  Reduction r{g, {}};
  while (true) {
    const std::vector<Move> collapses = enumerate_collapses(r.graph);
    if (collapses.empty()) return r;
    r.graph = apply_move(r.graph, collapses.front());
    r.script.push_back(collapses.front());
  }
}

// ---------------------------------------------------------------------------
// Script text.

std::string to_script_line(const Move& m) {
  return std::visit(
      Overloaded{[](const Collapse& c) {
                   return "collapse " + c.edge + " into " + c.survivor;
                 },
                 [](const Expansion& x) {
                   std::string out = "expand " + x.vertex + " " + to_string(x.n);
                   for (const EdgeEnd& end : x.moved_ends) {
                     out += " " + to_string(end);
                   }
                   return out + " as " + x.new_vertex + " " + x.new_edge;
                 },
                 [](const Slide& s) {
                   return "slide " + to_string(s.moving) + " along " +
                          to_string(s.along);
                 }},
      m);
}

std::string format_script(const std::vector<Move>& script) {
  std::string out;
  for (const Move& m : script) out += to_script_line(m) + "\n";
  return out;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::vector<Move> parse_script(std::string_view text) {
  std::vector<Move> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::vector<std::string_view> w = split_words(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (w.empty()) continue;

    auto fail = [&](const std::string& msg) -> void {
      throw ScriptError(msg, line_no);
    };
    auto ident = [&](std::string_view s) {
      if (!is_valid_ident(s)) fail("expected identifier, got '" + std::string(s) + "'");
      return std::string(s);
    };
    auto end_ref = [&](std::string_view s) {
      const std::size_t colon = s.find(':');
      if (colon == std::string_view::npos || colon + 2 != s.size() ||
          (s[colon + 1] != '0' && s[colon + 1] != '1')) {
        fail("expected edge-id:side, got '" + std::string(s) + "'");
      }
      return EdgeEnd{ident(s.substr(0, colon)), s[colon + 1] - '0'};
    };

    if (w[0] == "collapse") {
      if (w.size() != 4 || w[2] != "into") {
        fail("expected: collapse <edge> into <vertex>");
      }
      out.push_back(Collapse{ident(w[1]), ident(w[3])});
    } else if (w[0] == "slide") {
      if (w.size() != 4 || w[2] != "along") {
        fail("expected: slide <edge>:<side> along <edge>:<side>");
      }
      out.push_back(Slide{end_ref(w[1]), end_ref(w[3])});
    } else if (w[0] == "expand") {
      if (w.size() < 6 || w[w.size() - 3] != "as") {
        fail("expected: expand <vertex> <n> <edge>:<side>... as <vertex> <edge>");
      }
      Expansion x;
      x.vertex = ident(w[1]);
      if (!parse_index(w[2], x.n) || x.n == 0) {
        fail("expected nonzero integer, got '" + std::string(w[2]) + "'");
      }
      for (std::size_t i = 3; i + 3 < w.size(); ++i) {
        x.moved_ends.push_back(end_ref(w[i]));
      }
      x.new_vertex = ident(w[w.size() - 2]);
      x.new_edge = ident(w[w.size() - 1]);
      out.push_back(std::move(x));
    } else {
      fail("unknown move '" + std::string(w[0]) + "'");
    }
  }
  return out;
}

}  // namespace gbs
