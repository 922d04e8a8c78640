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

#ifndef DEMON_SELFTEST_HPP
#define DEMON_SELFTEST_HPP

// Seeded invariant suites behind `demon selftest`. Each suite runs a batch
// of random cases and records the first failure it sees.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "demon/edge_coloring.hpp"
#include "demon/engine.hpp"
#include "demon/error.hpp"
#include "demon/game.hpp"
#include "demon/generate.hpp"
#include "demon/strategies.hpp"

namespace demon {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0;
};

struct SelftestOptions {
  int scale = 1;  // multiplies every suite's case count
  std::uint64_t seed = 1;
  bool inject_failure = false;  // plants one failing case, for wiring checks
};

inline std::optional<int> parse_scale(std::string_view name) {
  if (name == "small") return 1;
  if (name == "medium") return 5;
  if (name == "large") return 25;
  return std::nullopt;
}

namespace detail {

using CaseFn = std::function<void(std::mt19937_64&)>;

inline SuiteResult run_suite(std::string name, int cases, std::uint64_t seed,
                             const CaseFn& body) {
  SuiteResult result{std::move(name), cases, 0, {}, 0};
  std::mt19937_64 rng(seed);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < cases; ++i) {
    try {
      body(rng);
    } catch (const std::exception& e) {
      if (result.failures++ == 0) {
        result.first_failure = "case " + std::to_string(i) + ": " + e.what();
      }
    }
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

inline void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::PreconditionViolated, what);
}

}  // namespace detail

inline std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  using detail::require;
  const int n = options.scale;
  std::vector<SuiteResult> results;

  results.push_back(detail::run_suite(
      "konig_play", 200 * n, options.seed, [](std::mt19937_64& rng) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const int m = k + static_cast<int>(rng() % (9 - k));
        const GameState s = random_deal(rng, {k, m}, false);
        const auto start = max_hand(s).size();
        const Transcript t = konig_play(
            s, random_demon(DemonKind::Konig, rng()),
            [](int, const GameState& before, const Round&, const GameState& after) {
              require(max_hand(after).size() > max_hand(before).size(),
                      "hand did not grow");
              require(after.profile() == before.profile(), "profile changed");
            });
        require(t.outcome == Outcome::Won, "konig strategy did not win");
        require(t.player_moves() <= static_cast<std::size_t>(k) - start,
                "more moves than missing cards");
      }));

  results.push_back(detail::run_suite(
      "vizing_play", 200 * n, options.seed + 1, [](std::mt19937_64& rng) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const int m = std::max(2, k) + static_cast<int>(rng() % (9 - std::max(2, k)));
        const GameState s = random_deal(rng, {k, m}, true);
        auto strategy = std::make_shared<VizingStrategy>(s);
        const Transcript t = run_game(
            s, vizing_policy(strategy), random_demon(DemonKind::Vizing, rng()),
            vizing_budget(s.config()),
            [&](int, const GameState& before, const Round&, const GameState& after) {
              const auto& ctx = strategy->context();
              require(distinct_on_active(after, ctx).size() >
                          distinct_on_active(before, ctx).size(),
                      "distinct count did not grow");
              check_context(after, ctx);
            });
        require(t.outcome == Outcome::Won, "vizing strategy did not win");
      }));

  results.push_back(detail::run_suite(
      "contrary_demon", 200 * n, options.seed + 2, [](std::mt19937_64& rng) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const GameState s = random_deal(rng, {k, k + static_cast<int>(rng() % 2)}, false);
        const Transcript t =
            run_game(s, konig_policy(), first_legal_demon(DemonKind::Contrary), 8);
        require((t.outcome == Outcome::Won) == is_winning(s),
                "contrary demon outcome differs from the deal");
        require(replay(t) == s, "contrary demon let the stacks change");
      }));

  results.push_back(detail::run_suite(
      "konig_coloring", 50 * n, options.seed + 3, [](std::mt19937_64& rng) {
        const int vertices = 2 + static_cast<int>(rng() % 39);
        const Graph g = random_bipartite_graph(
            rng, vertices, 1 + static_cast<int>(rng() % 8), 0.3);
        const EdgeColoring c = edge_color(g, ColoringMode::Konig);
        const auto check = verify_coloring(g, c, g.max_degree());
        require(check.ok, check.violation);
      }));

  results.push_back(detail::run_suite(
      "vizing_coloring", 50 * n, options.seed + 4, [](std::mt19937_64& rng) {
        const int vertices = 2 + static_cast<int>(rng() % 39);
        const Graph g =
            random_graph(rng, vertices, 1 + static_cast<int>(rng() % 8), 0.3);
        const EdgeColoring c = edge_color(g, ColoringMode::Vizing);
        const auto check = verify_coloring(g, c, g.max_degree() + 1);
        require(check.ok, check.violation);
      }));

  results.push_back(detail::run_suite(
      "brute_force_oracle", 20 * n, options.seed + 5, [](std::mt19937_64& rng) {
        const Graph g = random_graph(rng, 6, 4, 0.5);
        const int delta = g.max_degree();
        require(brute_force_color(g, delta + 1).has_value(),
                "no (max degree + 1)-coloring");
        const EdgeColoring c = edge_color(g, ColoringMode::Vizing);
        require(verify_coloring(g, c, delta + 1).ok, "improper coloring");
      }));

  if (options.inject_failure) {
    results.push_back(detail::run_suite(
        "injected_failure", 1, options.seed, [](std::mt19937_64&) {
          require(false, "failure injected on request");
        }));
  }
  return results;
}

}  // namespace demon

#endif  // DEMON_SELFTEST_HPP
