// Copyright 2026 The graphent Authors
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

/**
 * @file graph.hpp
 * @brief Simple undirected interaction graphs.
 *
 * Vertices are spins, edges are equal-strength x-x couplings. The graph is
 * immutable once built: every constructor path validates the edge set, so a
 * Graph value always satisfies
 *   - no self-loops,
 *   - all indices in [0, n),
 *   - no duplicate edges (each stored once as (i, j) with i < j).
 *
 * Three text formats are supported:
 *   edge-list  first line n, then one "i j" per line, '#' starts a comment
 *   json       {"n": 5, "edges": [[0, 1], ...]}  ("n" optional)
 *   adjacency  first line n, then n rows of n space-separated 0/1 entries
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphent/error.hpp"
#include "json.hpp"

namespace graphent {

using Vertex = std::size_t;

struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  /// Builds a graph on `n_vertices` spins. Edges may be given in either
  /// orientation; they are canonicalized to (min, max) and sorted.
  Graph(std::size_t n_vertices, std::vector<Edge> edges) : n_(n_vertices) {
    if (n_ == 0) throw ValidationError("graph must have at least one vertex");
    for (auto& e : edges) {
      if (e.first == e.second) {
        throw ValidationError("self-loop on vertex " + std::to_string(e.first));
      }
      if (e.first >= n_ || e.second >= n_) {
        throw ValidationError("edge (" + std::to_string(e.first) + ", " +
                              std::to_string(e.second) +
                              ") references a vertex outside [0, " +
                              std::to_string(n_) + ")");
      }
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw ValidationError("duplicate edge (" + std::to_string(dup->first) +
                            ", " + std::to_string(dup->second) + ")");
    }
    edges_ = std::move(edges);
  }

  std::size_t n_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  /// Number of edges incident to `l`.
  std::size_t degree(Vertex l) const {
    check_vertex(l);
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [l](const Edge& e) {
          return e.first == l || e.second == l;
        }));
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(n_, 0);
    for (const auto& e : edges_) {
      ++out[e.first];
      ++out[e.second];
    }
    return out;
  }

  /// Dense row-major 0/1 adjacency matrix.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (const auto& e : edges_) {
      a[e.first][e.second] = 1;
      a[e.second][e.first] = 1;
    }
    return a;
  }

  bool has_edge(Vertex i, Vertex j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
  }

  void check_vertex(Vertex l) const {
    if (l >= n_) {
      throw ValidationError("vertex " + std::to_string(l) +
                            " out of range for graph with " +
                            std::to_string(n_) + " vertices");
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

inline std::size_t degree(const Graph& g, Vertex l) { return g.degree(l); }

enum class GraphFormat { EdgeList, Json, Adjacency };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

/// Non-empty, non-comment lines, trimmed.
inline std::vector<std::string> data_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') out.emplace_back(line);
    pos = nl + 1;
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::size_t parse_index(const std::string& tok, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      })) {
    throw ValidationError(std::string("expected a non-negative integer for ") +
                          what + ", got '" + tok + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    throw ValidationError(std::string(what) + " '" + tok + "' is too large");
  }
}

inline std::size_t parse_count_line(const std::vector<std::string>& lines) {
  if (lines.empty()) throw ValidationError("missing vertex-count line");
  auto toks = tokens(lines.front());
  if (toks.size() != 1) {
    throw ValidationError("first line must hold only the vertex count");
  }
  return parse_index(toks.front(), "vertex count");
}

inline Graph parse_edge_list(std::string_view text) {
  auto lines = data_lines(text);
  auto n = parse_count_line(lines);
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto toks = tokens(lines[k]);
    if (toks.size() != 2) {
      throw ValidationError("edge line '" + lines[k] +
                            "' must contain exactly two vertex indices");
    }
    edges.push_back({parse_index(toks[0], "vertex index"),
                     parse_index(toks[1], "vertex index")});
  }
  return Graph(n, std::move(edges));
}

inline Graph parse_adjacency(std::string_view text) {
  auto lines = data_lines(text);
  auto n = parse_count_line(lines);
  if (lines.size() != n + 1) {
    throw ValidationError("adjacency matrix must have exactly " +
                          std::to_string(n) + " rows");
  }
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    auto toks = tokens(lines[r + 1]);
    if (toks.size() != n) {
      throw ValidationError("adjacency row " + std::to_string(r) + " has " +
                            std::to_string(toks.size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (toks[c] != "0" && toks[c] != "1") {
        throw ValidationError("adjacency entry (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") = '" + toks[c] +
                              "' is not 0 or 1");
      }
      a[r][c] = toks[c] == "1" ? 1 : 0;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r][r] != 0) {
      throw ValidationError("self-loop on vertex " + std::to_string(r));
    }
    for (std::size_t c = r + 1; c < n; ++c) {
      if (a[r][c] != a[c][r]) {
        throw ValidationError("adjacency matrix is not symmetric at (" +
                              std::to_string(r) + ", " + std::to_string(c) +
                              ")");
      }
      if (a[r][c] == 1) edges.push_back({r, c});
    }
  }
  return Graph(n, std::move(edges));
}

inline std::size_t json_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ValidationError(std::string(what) + " must be an integer");
  }
  if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
    throw ValidationError(std::string(what) + " must be non-negative");
  }
  return v.get<std::size_t>();
}

inline Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("graph JSON must be an object");
  std::vector<Edge> edges;
  std::size_t max_index = 0;
  if (doc.contains("edges")) {
    const auto& arr = doc.at("edges");
    if (!arr.is_array()) throw ValidationError("\"edges\" must be an array");
    for (const auto& e : arr) {
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError("each edge must be a 2-element array");
      }
      Edge edge{json_index(e[0], "vertex index"),
                json_index(e[1], "vertex index")};
      max_index = std::max({max_index, edge.first, edge.second});
      edges.push_back(edge);
    }
  }
  std::size_t n = 0;
  if (doc.contains("n")) {
    n = json_index(doc.at("n"), "\"n\"");
  } else if (!edges.empty()) {
    n = max_index + 1;
  } else {
    throw ValidationError("graph JSON needs \"n\" or at least one edge");
  }
  return Graph(n, std::move(edges));
}

}  // namespace detail

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList:
      return detail::parse_edge_list(text);
    case GraphFormat::Json:
      return detail::parse_json(text);
    case GraphFormat::Adjacency:
      return detail::parse_adjacency(text);
  }
  throw ValidationError("unknown graph format");
}

/// JSON if the text opens with '{'; adjacency if it has exactly n rows of n
/// tokens after the count line; edge list otherwise.
inline GraphFormat detect_graph_format(std::string_view text) {
  auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return GraphFormat::Json;
  auto lines = detail::data_lines(text);
  if (lines.empty()) return GraphFormat::EdgeList;
  auto head = detail::tokens(lines.front());
  if (head.size() != 1) return GraphFormat::EdgeList;
  std::size_t n = 0;
  try {
    n = detail::parse_index(head.front(), "vertex count");
  } catch (const ValidationError&) {
    return GraphFormat::EdgeList;
  }
  if (n == 0 || lines.size() != n + 1) return GraphFormat::EdgeList;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (detail::tokens(lines[k]).size() != n) return GraphFormat::EdgeList;
  }
  return GraphFormat::Adjacency;
}

inline Graph parse_graph(std::string_view text) {
  return parse_graph(text, detect_graph_format(text));
}

inline std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  if (name == "adjacency") return GraphFormat::Adjacency;
  return std::nullopt;
}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"n", g.n_vertices()}, {"edges", std::move(edges)}};
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::EdgeList:
      out << g.n_vertices() << '\n';
      for (const auto& e : g.edges()) out << e.first << ' ' << e.second << '\n';
      break;
    case GraphFormat::Json:
      out << to_json(g).dump() << '\n';
      break;
    case GraphFormat::Adjacency: {
      out << g.n_vertices() << '\n';
      for (const auto& row : g.adjacency()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? " " : "") << row[c];
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

// Presets ------------------------------------------------------------------

namespace presets {

/// Five spins coupled like the IBM Q Valencia device: 0-1, 1-2, 1-3, 3-4.
inline Graph valencia() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}); }

inline Graph complete(std::size_t n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

inline Graph path(std::size_t n) {
  if (n < 1) throw ValidationError("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph ring(std::size_t n) {
  if (n < 3) throw ValidationError("ring graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

}  // namespace presets

/// Resolves "valencia", "complete(5)", "complete:5", "path(3)", "ring:4", ...
inline Graph preset(std::string_view name) {
  auto lower = std::string(detail::trim(name));
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "valencia") return presets::valencia();

  std::string kind;
  std::string arg;
  if (auto p = lower.find('('); p != std::string::npos && lower.back() == ')') {
    kind = lower.substr(0, p);
    arg = lower.substr(p + 1, lower.size() - p - 2);
  } else if (auto c = lower.find(':'); c != std::string::npos) {
    kind = lower.substr(0, c);
    arg = lower.substr(c + 1);
  } else {
    throw ValidationError("unknown preset '" + std::string(name) + "'");
  }
  auto n = detail::parse_index(std::string(detail::trim(arg)), "preset size");
  if (kind == "complete") return presets::complete(n);
  if (kind == "path") return presets::path(n);
  if (kind == "ring") return presets::ring(n);
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace graphent
