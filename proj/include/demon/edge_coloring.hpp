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

#ifndef DEMON_EDGE_COLORING_HPP
#define DEMON_EDGE_COLORING_HPP

// Edge coloring through the solitaire game.
//
// Vertices are removed lowest id first and put back in reverse order. When a
// vertex v returns, each neighbor x already present becomes a stack holding
// the colors missing at x. A player move "swap a for b in S_x" is carried
// out on the graph by swapping a and b along the maximal path from x that
// alternates b-edges and a-edges; whatever that path does to another
// neighbor's stack is the demon's answer. On a bipartite graph the answers
// obey the Konig rule, in general the Vizing rule. Once the player holds a
// full hand, its numbers color the edges at v.
//
// Coloring file: one "u v c" line per colored edge, sorted by (u, v).

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "demon/engine.hpp"
#include "demon/error.hpp"
#include "demon/game.hpp"
#include "demon/graph.hpp"
#include "demon/strategies.hpp"

namespace demon {

/// Colors 1..m per edge id; 0 marks an uncolored edge.
struct EdgeColoring {
  int m = 0;
  std::vector<int> color;

  static EdgeColoring empty(const Graph& g, int m) {
    return {m, std::vector<int>(g.edge_count(), 0)};
  }

  int colors_used() const {
    std::vector<bool> used(m + 1, false);
    int count = 0;
    for (int c : color) {
      if (c >= 1 && c <= m && !used[c]) {
        used[c] = true;
        ++count;
      }
    }
    return count;
  }

  int max_color() const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

enum class ColoringMode { Konig, Vizing };

constexpr std::string_view to_string(ColoringMode mode) {
  return mode == ColoringMode::Konig ? "konig" : "vizing";
}

inline std::string write_coloring(const Graph& g, const EdgeColoring& c) {
  std::ostringstream out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c.color.at(e) == 0) continue;
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c.color[e] << '\n';
  }
  return out.str();
}

/// Reads "u v c" lines for the edges of `g`. Unknown edges, repeated edges
/// and non-positive colors are parse errors; colors above m are left for
/// verify_coloring to report.
inline EdgeColoring parse_coloring(const Graph& g, std::string_view text,
                                   int m) {
  EdgeColoring c = EdgeColoring::empty(g, m);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const auto hash = raw.find('#');
    std::istringstream fields(hash == std::string::npos ? raw
                                                        : raw.substr(0, hash));
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (tokens.size() != 3) throw Error(ErrorCode::ParseError, where + "expected 'u v c'");
    long long values[3];
    for (int x = 0; x < 3; ++x) {
      std::size_t used = 0;
      try {
        values[x] = std::stoll(tokens[x], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[x].size() || values[x] < 0 || values[x] > 1'000'000'000) {
        throw Error(ErrorCode::ParseError,
                    where + "'" + tokens[x] + "' is not a non-negative integer");
      }
    }
    const auto id = g.edge_id(static_cast<int>(values[0]), static_cast<int>(values[1]));
    if (!id) throw Error(ErrorCode::ParseError, where + "edge is not in the graph");
    if (values[2] < 1) throw Error(ErrorCode::ParseError, where + "colors start at 1");
    if (c.color[*id] != 0) throw Error(ErrorCode::ParseError, where + "edge colored twice");
    c.color[*id] = static_cast<int>(values[2]);
  }
  return c;
}

/// Colors in 1..m not on any colored edge at x.
inline std::vector<int> free_colors(const EdgeColoring& c, int x,
                                    const Graph& g) {
  std::vector<bool> taken(c.m + 1, false);
  for (const auto& inc : g.incident(x)) {
    const int color = c.color[inc.edge];
    if (color >= 1 && color <= c.m) taken[color] = true;
  }
  std::vector<int> free;
  for (int color = 1; color <= c.m; ++color) {
    if (!taken[color]) free.push_back(color);
  }
  return free;
}

struct KempeSwapReport {
  std::vector<int> path;  // edge ids from x outward
  int endpoint = -1;
  int last_color = 0;     // color of the final path edge before the swap
};

namespace detail {

inline std::optional<Graph::Incidence> edge_with_color(const Graph& g,
                                                       const EdgeColoring& c,
                                                       int x, int color) {
  for (const auto& inc : g.incident(x)) {
    if (c.color[inc.edge] == color) return inc;
  }
  return std::nullopt;
}

}  // namespace detail

/// Swaps colors a and b on the maximal path that leaves x on its b-edge and
/// then alternates a, b, a, ... Requires a missing at x and b present.
inline std::pair<EdgeColoring, KempeSwapReport> kempe_swap(
    const Graph& g, const EdgeColoring& c, int x, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > c.m || b > c.m) {
    throw Error(ErrorCode::PreconditionViolated,
                "kempe swap needs two distinct colors in 1.." +
                    std::to_string(c.m));
  }
  if (detail::edge_with_color(g, c, x, a)) {
    throw Error(ErrorCode::PreconditionViolated,
                "color " + std::to_string(a) + " is not free at vertex " +
                    std::to_string(x));
  }
  if (!detail::edge_with_color(g, c, x, b)) {
    throw Error(ErrorCode::PreconditionViolated,
                "color " + std::to_string(b) + " is free at vertex " +
                    std::to_string(x));
  }
  KempeSwapReport report;
  int at = x;
  int want = b;
  while (auto next = detail::edge_with_color(g, c, at, want)) {
    report.path.push_back(next->edge);
    report.last_color = want;
    at = next->neighbor;
    want = want == a ? b : a;
    if (static_cast<int>(report.path.size()) > g.edge_count()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "alternating path does not terminate; coloring improper");
    }
  }
  report.endpoint = at;
  EdgeColoring swapped = c;
  for (int e : report.path) swapped.color[e] = c.color[e] == a ? b : a;
  return {std::move(swapped), std::move(report)};
}

struct VerifyResult {
  bool ok = true;
  std::string violation;
  int vertex = -1;
  int edge = -1;
};

/// Every edge colored, colors in 1..m, no two edges at a vertex alike.
inline VerifyResult verify_coloring(const Graph& g, const EdgeColoring& c,
                                    int m) {
  if (static_cast<int>(c.color.size()) != g.edge_count()) {
    return {false, "coloring has the wrong number of edges", -1, -1};
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const std::string name = std::to_string(edge.u) + "-" + std::to_string(edge.v);
    if (c.color[e] == 0) return {false, "edge " + name + " is uncolored", -1, e};
    if (c.color[e] < 1 || c.color[e] > m) {
      return {false, "edge " + name + " has color " + std::to_string(c.color[e]) +
                         " outside 1.." + std::to_string(m),
              -1, e};
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> owner(m + 1, -1);
    for (const auto& inc : g.incident(v)) {
      const int color = c.color[inc.edge];
      if (owner[color] >= 0) {
        return {false,
                "vertex " + std::to_string(v) + " has two edges colored " +
                    std::to_string(color),
                v, inc.edge};
      }
      owner[color] = inc.edge;
    }
  }
  return {};
}

/// Counters gathered while coloring; every induced demon answer is checked
/// against the mode's rule before it is counted.
struct ColoringStats {
  long long games = 0;
  long long player_moves = 0;
  long long passes = 0;
  long long konig_answers = 0;    // neighbor stack swapped b out, a in
  long long vizing_answers = 0;   // neighbor stack swapped a out, b in
  long long parity_checks = 0;    // Konig mode paths ending at a neighbor

  ColoringStats& operator+=(const ColoringStats& o) {
    games += o.games;
    player_moves += o.player_moves;
    passes += o.passes;
    konig_answers += o.konig_answers;
    vizing_answers += o.vizing_answers;
    parity_checks += o.parity_checks;
    return *this;
  }
};

/// Colors the uncolored edges from v to `neighbors` by playing the game on
/// their stacks. Every other edge among the vertices in play must already be
/// properly colored with 1..c.m.
inline EdgeColoring extend_at_vertex(const Graph& g, EdgeColoring c, int v,
                                     ColoringMode mode,
                                     const std::vector<int>& neighbors,
                                     ColoringStats* stats = nullptr) {
  const int k = static_cast<int>(neighbors.size());
  if (k == 0) return c;
  if (k > c.m) {
    throw Error(ErrorCode::PreconditionViolated,
                "vertex " + std::to_string(v) + " has " + std::to_string(k) +
                    " neighbors but only " + std::to_string(c.m) + " colors");
  }
  std::vector<int> edge_to(k);
  std::vector<Stack> stacks;
  for (int j = 0; j < k; ++j) {
    const auto id = g.edge_id(v, neighbors[j]);
    if (!id || c.color[*id] != 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "edge " + std::to_string(v) + "-" +
                      std::to_string(neighbors[j]) +
                      " is missing or already colored");
    }
    edge_to[j] = *id;
    stacks.push_back(free_colors(c, neighbors[j], g));
  }
  const GameState start = [&] {
    try {
      return new_game({k, c.m}, stacks);
    } catch (const Error& e) {
      throw Error(ErrorCode::PreconditionViolated,
                  "neighbor stacks do not form a game: " + e.detail());
    }
  }();

  ColoringStats local;
  local.games = 1;
  const DemonKind kind =
      mode == ColoringMode::Konig ? DemonKind::Konig : DemonKind::Vizing;

  // The graph plays the demon: the Kempe swap realizes the player's move and
  // reports what it did to the other stacks.
  DemonPolicy graph_demon{
      kind, [&](const GameState&, const PlayerMove& move) {
        const int x = neighbors[move.stack];
        auto [next, report] = kempe_swap(g, c, x, move.out, move.in);
        c = std::move(next);
        ++local.player_moves;
        if (report.endpoint == x) {
          throw Error(ErrorCode::DemonNonconformance,
                      "alternating path returned to its start");
        }
        const auto it =
            std::find(neighbors.begin(), neighbors.end(), report.endpoint);
        if (it == neighbors.end()) {
          ++local.passes;
          return DemonResponse::pass();
        }
        const int j = static_cast<int>(it - neighbors.begin());
        if (report.last_color == move.out) {
          ++local.konig_answers;
          if (mode == ColoringMode::Konig) ++local.parity_checks;
          return DemonResponse::swapping(j, move.in, move.out);
        }
        if (mode == ColoringMode::Konig) {
          throw Error(ErrorCode::DemonNonconformance,
                      "odd alternating path from " + std::to_string(x) +
                          " to " + std::to_string(report.endpoint) +
                          " in bipartite mode");
        }
        ++local.vizing_answers;
        return DemonResponse::swapping(j, move.out, move.in);
      }};

  const RoundObserver check_stacks = [&](int, const GameState&, const Round&,
                                         const GameState& after) {
    for (int j = 0; j < k; ++j) {
      if (free_colors(c, neighbors[j], g) != after.stack(j)) {
        throw Error(ErrorCode::DemonNonconformance,
                    "stack of vertex " + std::to_string(neighbors[j]) +
                        " no longer matches its free colors");
      }
    }
  };

  Transcript transcript = [&] {
    try {
      if (mode == ColoringMode::Konig) {
        return run_game(start, konig_policy(), graph_demon,
                        default_budget(start.config()), check_stacks);
      }
      auto strategy = std::make_shared<VizingStrategy>(start);
      return run_game(start, vizing_policy(strategy), graph_demon,
                      vizing_budget(start.config()), check_stacks);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IllegalResponse) {
        throw Error(ErrorCode::DemonNonconformance, e.detail());
      }
      throw;
    }
  }();
  if (transcript.outcome != Outcome::Won) {
    throw Error(ErrorCode::PreconditionViolated,
                "strategy did not win at vertex " + std::to_string(v) + ": " +
                    std::string(to_string(transcript.outcome)));
  }
  const Hand hand = max_hand(replay(transcript));
  for (int j = 0; j < k; ++j) c.color[edge_to[j]] = *hand.picks[j];
  if (stats) *stats += local;
  return c;
}

/// Colors every uncolored edge at v; all other edges must be colored.
inline EdgeColoring extend_at_vertex(const Graph& g, const EdgeColoring& c,
                                     int v, ColoringMode mode,
                                     ColoringStats* stats = nullptr) {
  return extend_at_vertex(g, c, v, mode, g.neighbors(v), stats);
}

/// Colors g with max_degree colors (Konig, bipartite only) or
/// max_degree + 1 colors (Vizing).
inline EdgeColoring edge_color(const Graph& g, ColoringMode mode,
                               ColoringStats* stats = nullptr) {
  if (mode == ColoringMode::Konig && !bipartition(g)) {
    throw Error(ErrorCode::NotBipartite,
                "konig mode needs a bipartite graph; this one has an odd cycle");
  }
  const int delta = g.max_degree();
  const int m = delta == 0 ? 0 : (mode == ColoringMode::Konig ? delta : delta + 1);
  EdgeColoring c = EdgeColoring::empty(g, m);
  // Removal order is 0, 1, ..., n-1, so re-insertion runs from n-1 down and
  // a returning vertex sees exactly its higher-numbered neighbors.
  for (int v = g.vertex_count() - 1; v >= 0; --v) {
    std::vector<int> present;
    for (const auto& inc : g.incident(v)) {
      if (inc.neighbor > v) present.push_back(inc.neighbor);
    }
    c = extend_at_vertex(g, std::move(c), v, mode, present, stats);
  }
  return c;
}

/// Exhaustive backtracking; nullopt iff no proper m-edge-coloring exists.
/// Limited to 20 edges.
inline std::optional<EdgeColoring> brute_force_color(const Graph& g, int m) {
  if (g.edge_count() > 20) {
    throw Error(ErrorCode::TooLarge,
                "brute force is limited to 20 edges, got " +
                    std::to_string(g.edge_count()));
  }
  EdgeColoring c = EdgeColoring::empty(g, m);
  const int edges = g.edge_count();
  // Colors are interchangeable, so an edge may open at most one new color.
  auto search = [&](auto&& self, int e, int highest) -> bool {
    if (e == edges) return true;
    const Edge& edge = g.edge(e);
    for (int color = 1; color <= std::min(m, highest + 1); ++color) {
      bool clash = false;
      for (int end : {edge.u, edge.v}) {
        for (const auto& inc : g.incident(end)) {
          if (c.color[inc.edge] == color) clash = true;
        }
      }
      if (clash) continue;
      c.color[e] = color;
      if (self(self, e + 1, std::max(highest, color))) return true;
      c.color[e] = 0;
    }
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  return c;
}

}  // namespace demon

#endif  // DEMON_EDGE_COLORING_HPP
