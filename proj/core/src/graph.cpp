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

#include "gbs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace gbs {
namespace {

using Kind = GraphError::Kind;

struct EdgeIdLess {
  bool operator()(const Edge& a, std::string_view b) const { return a.id < b; }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool is_space(char c) { return c == ' ' || c == '\t'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i]) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

std::string to_string(const EdgeEnd& end) {
  return end.edge + ":" + std::to_string(end.side);
}

bool is_valid_ident(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphError(Kind::kEmpty, "graph has no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (auto it = std::adjacent_find(vertices_.begin(), vertices_.end());
      it != vertices_.end()) {
    throw GraphError(Kind::kDuplicateId, "duplicate vertex id '" + *it + "'");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].id == edges_[i].id) {
      throw GraphError(Kind::kDuplicateId,
                       "duplicate edge id '" + edges_[i].id + "'");
    }
  }

  auto rank = [&](const VertexId& v) -> std::size_t {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    return static_cast<std::size_t>(it - vertices_.begin());
  };
  DisjointSets components(vertices_.size());
  std::size_t num_components = vertices_.size();
  for (const Edge& e : edges_) {
    for (int side = 0; side < 2; ++side) {
      if (!has_vertex(e.endpoint(side))) {
        throw GraphError(Kind::kUndeclaredVertex,
                         "edge '" + e.id + "' uses undeclared vertex '" +
                             e.endpoint(side) + "'");
      }
      if (e.index(side) == 0) {
        throw GraphError(Kind::kZeroIndex,
                         "edge '" + e.id + "' has a zero index at side " +
                             std::to_string(side));
      }
    }
    if (components.unite(rank(e.endpoint0), rank(e.endpoint1))) {
      --num_components;
    }
  }
  if (num_components != 1) {
    throw GraphError(Kind::kDisconnected,
                     "graph has " + std::to_string(num_components) +
                         " connected components");
  }
}

Graph Graph::point(VertexId v) { return Graph({std::move(v)}, {}); }

bool Graph::has_vertex(std::string_view v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(std::string_view e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, EdgeIdLess{});
  return it != edges_.end() && it->id == e;
}

const Edge& Graph::edge(std::string_view e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, EdgeIdLess{});
  if (it == edges_.end() || it->id != e) {
    throw GraphError(Kind::kUnknownId, "no edge '" + std::string(e) + "'");
  }
  return *it;
}

bool Graph::has_end(const EdgeEnd& end) const {
  return (end.side == 0 || end.side == 1) && has_edge(end.edge);
}

const VertexId& Graph::vertex_of(const EdgeEnd& end) const {
  return edge(end.edge).endpoint(end.side);
}

const Index& Graph::index_of(const EdgeEnd& end) const {
  return edge(end.edge).index(end.side);
}

std::vector<EdgeEnd> Graph::ends_at(std::string_view v) const {
  std::vector<EdgeEnd> out;
  for (const Edge& e : edges_) {
    for (int side = 0; side < 2; ++side) {
      if (e.endpoint(side) == v) out.push_back({e.id, side});
    }
  }
  return out;
}

std::size_t Graph::valence(std::string_view v) const {
  std::size_t n = 0;
  for (const Edge& e : edges_) {
    n += (e.endpoint0 == v) + (e.endpoint1 == v);
  }
  return n;
}

long betti_number(const Graph& g) {
  return static_cast<long>(g.num_edges()) -
         static_cast<long>(g.num_vertices()) + 1;
}

Graph apply_sign_flips(const Graph& g, const SignFlip& s) {
  for (const VertexId& v : s.vertex_flips) {
    if (!g.has_vertex(v)) {
      throw GraphError(Kind::kUnknownId, "sign flip names unknown vertex '" +
                                             v + "'");
    }
  }
  for (const EdgeId& e : s.edge_flips) {
    if (!g.has_edge(e)) {
      throw GraphError(Kind::kUnknownId,
                       "sign flip names unknown edge '" + e + "'");
    }
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    const bool edge_flip = s.edge_flips.count(e.id) != 0;
    for (int side = 0; side < 2; ++side) {
      const bool vertex_flip = s.vertex_flips.count(e.endpoint(side)) != 0;
      if (edge_flip != vertex_flip) {
        Index& idx = side == 0 ? e.index0 : e.index1;
        idx = -idx;
      }
    }
  }
  return Graph(g.vertices(), std::move(edges));
}

Graph parse_graph(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::set<std::string, std::less<>> vertex_ids;
  std::set<std::string, std::less<>> edge_ids;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    auto fail = [&](Kind kind, const Token& at, const std::string& msg) {
      throw GraphError(kind, msg, line_no, at.column);
    };
    auto expect_ident = [&](const Token& t) {
      if (!is_valid_ident(t.text)) {
        fail(Kind::kSyntax, t,
             "expected identifier, got '" + std::string(t.text) + "'");
      }
    };
    auto expect_index = [&](const Token& t) {
      Index value;
      if (!parse_index(t.text, value)) {
        fail(Kind::kSyntax, t,
             "expected integer, got '" + std::string(t.text) + "'");
      }
      if (value == 0) fail(Kind::kZeroIndex, t, "index must be nonzero");
      const std::size_t digits = t.text[0] == '-' ? 1 : 0;
      if (t.text[digits] == '0') {
        fail(Kind::kSyntax, t,
             "leading zero in integer '" + std::string(t.text) + "'");
      }
      return value;
    };

    const Token& keyword = tokens[0];
    if (keyword.text == "vertex") {
      if (tokens.size() != 2) {
        fail(Kind::kSyntax, tokens.size() < 2 ? keyword : tokens[2],
             "vertex declaration takes exactly one identifier");
      }
      expect_ident(tokens[1]);
      if (!vertex_ids.emplace(tokens[1].text).second) {
        fail(Kind::kDuplicateId, tokens[1],
             "duplicate vertex id '" + std::string(tokens[1].text) + "'");
      }
      vertices.emplace_back(tokens[1].text);
    } else if (keyword.text == "edge") {
      if (tokens.size() != 6) {
        fail(Kind::kSyntax, tokens.size() < 6 ? keyword : tokens[6],
             "edge declaration takes: id endpoint0 endpoint1 index0 index1");
      }
      for (int i = 1; i <= 3; ++i) expect_ident(tokens[i]);
      Edge e{std::string(tokens[1].text), std::string(tokens[2].text),
             std::string(tokens[3].text), expect_index(tokens[4]),
             expect_index(tokens[5])};
      for (int i = 2; i <= 3; ++i) {
        if (vertex_ids.find(tokens[i].text) == vertex_ids.end()) {
          fail(Kind::kUndeclaredVertex, tokens[i],
               "undeclared vertex '" + std::string(tokens[i].text) + "'");
        }
      }
      if (!edge_ids.emplace(e.id).second) {
        fail(Kind::kDuplicateId, tokens[1], "duplicate edge id '" + e.id + "'");
      }
      edges.push_back(std::move(e));
    } else {
      fail(Kind::kSyntax, keyword,
           "expected 'vertex' or 'edge', got '" + std::string(keyword.text) +
               "'");
    }
    if (eol == text.size()) break;
  }
  return Graph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (const VertexId& v : g.vertices()) out << "vertex " << v << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id << ' ' << e.endpoint0 << ' ' << e.endpoint1 << ' '
        << e.index0 << ' ' << e.index1 << '\n';
  }
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const VertexId& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << e.endpoint0 << "\" -- \"" << e.endpoint1
        << "\" [label=\"" << e.index0 << '|' << e.index1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gbs
