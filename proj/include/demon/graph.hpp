// Copyright 2026 The Demon Solitaire Authors
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

#ifndef DEMON_GRAPH_HPP
#define DEMON_GRAPH_HPP

// Simple undirected graphs read from edge lists.
//
// Graph text: one "u v" pair of 0-based vertex ids per line; '#' starts a
// comment. Self-loops and repeated edges are rejected. The vertex count is
// one more than the largest id mentioned.

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "demon/error.hpp"

namespace demon {

struct Edge {
  int u = 0;  // u < v
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  struct Incidence {
    int neighbor;
    int edge;
  };

  Graph() = default;

  static Graph create(int vertex_count,
                      std::vector<std::pair<int, int>> pairs) {
    if (vertex_count < 0) {
      throw Error(ErrorCode::PreconditionViolated, "negative vertex count");
    }
    Graph g;
    g.n_ = vertex_count;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
        throw Error(ErrorCode::PreconditionViolated,
                    "edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " leaves the vertex range");
      }
      if (u == v) {
        throw Error(ErrorCode::PreconditionViolated,
                    "self-loop at vertex " + std::to_string(u));
      }
      g.edges_.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "repeated edge " + std::to_string(dup->u) + "-" +
                      std::to_string(dup->v));
    }
    g.incident_.assign(vertex_count, {});
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
      g.incident_[g.edges_[e].u].push_back({g.edges_[e].v, e});
      g.incident_[g.edges_[e].v].push_back({g.edges_[e].u, e});
    }
    for (auto& list : g.incident_) {
      std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) {
        return x.neighbor < y.neighbor;
      });
    }
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  /// Incident edges of `v`, by ascending neighbor id.
  const std::vector<Incidence>& incident(int v) const { return incident_.at(v); }

  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }

  int max_degree() const {
    int delta = 0;
    for (int v = 0; v < n_; ++v) delta = std::max(delta, degree(v));
    return delta;
  }

  std::optional<int> edge_id(int u, int v) const {
    const Edge key{std::min(u, v), std::max(u, v)};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
    return out;
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::vector<Incidence>> incident_;
};

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_number = 0;
  int max_id = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Edge> seen;
  while (std::getline(in, raw)) {
    ++line_number;
    const auto hash = raw.find('#');
    const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (tokens.size() != 2) {
      throw Error(ErrorCode::ParseError, where + "expected 'u v'");
    }
    int ids[2];
    for (int x = 0; x < 2; ++x) {
      std::size_t used = 0;
      long long value = -1;
      try {
        value = std::stoll(tokens[x], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[x].size() || value < 0 || value > 100'000'000) {
        throw Error(ErrorCode::ParseError,
                    where + "'" + tokens[x] + "' is not a vertex id");
      }
      ids[x] = static_cast<int>(value);
    }
    if (ids[0] == ids[1]) {
      throw Error(ErrorCode::ParseError,
                  where + "self-loop at vertex " + std::to_string(ids[0]));
    }
    const Edge key{std::min(ids[0], ids[1]), std::max(ids[0], ids[1])};
    const auto pos = std::lower_bound(seen.begin(), seen.end(), key);
    if (pos != seen.end() && *pos == key) {
      throw Error(ErrorCode::ParseError, where + "repeated edge " +
                                             std::to_string(key.u) + " " +
                                             std::to_string(key.v));
    }
    seen.insert(pos, key);
    pairs.emplace_back(ids[0], ids[1]);
    max_id = std::max({max_id, ids[0], ids[1]});
  }
  return Graph::create(max_id + 1, std::move(pairs));
}

inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

struct Bipartition {
  std::vector<int> first;   // contains the lowest vertex of each component
  std::vector<int> second;
};

/// BFS 2-coloring per component; nullopt iff some component has an odd
/// cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(u)) {
        if (side[inc.neighbor] < 0) {
          side[inc.neighbor] = 1 - side[u];
          queue.push_back(inc.neighbor);
        } else if (side[inc.neighbor] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    (side[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  return parts;
}

}  // namespace demon

#endif  // DEMON_GRAPH_HPP
