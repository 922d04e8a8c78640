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

#ifndef DEMON_TESTS_TEST_SUPPORT_HPP
#define DEMON_TESTS_TEST_SUPPORT_HPP

// Generators and independent oracles shared by the test binaries. Nothing
// here calls into the matching code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "demon/game.hpp"
#include "demon/graph.hpp"
#include "demon/strategies.hpp"

namespace demon::testing {

/// Largest set of distinct numbers picked with at most one card per stack,
/// by trying every choice (including "skip") for every stack.
inline int brute_force_max_hand(const GameState& state) {
  int best = 0;
  std::vector<bool> used(state.m() + 1, false);
  std::function<void(int, int)> go = [&](int i, int size) {
    if (i == state.k()) {
      best = std::max(best, size);
      return;
    }
    if (size + (state.k() - i) <= best) return;
    for (Card c : state.stack(i)) {
      if (used[c]) continue;
      used[c] = true;
      go(i + 1, size + 1);
      used[c] = false;
    }
    go(i + 1, size);
  };
  go(0, 0);
  return best;
}

inline Stack stack_from_mask(unsigned mask) {
  Stack s;
  for (int c = 1; mask; ++c, mask >>= 1) {
    if (mask & 1u) s.push_back(c);
  }
  return s;
}

/// Every deal of k nonempty stacks over numbers 1..m.
inline std::vector<GameState> all_deals(int k, int m) {
  const unsigned subsets = (1u << m) - 1;  // nonempty masks 1..2^m-1
  std::vector<GameState> deals;
  std::vector<unsigned> masks(k, 1);
  while (true) {
    std::vector<Stack> stacks;
    for (unsigned mask : masks) stacks.push_back(stack_from_mask(mask));
    deals.push_back(new_game({k, m}, std::move(stacks)));
    int pos = 0;
    while (pos < k && masks[pos] == subsets) masks[pos++] = 1;
    if (pos == k) break;
    ++masks[pos];
  }
  return deals;
}

/// Every deal for every (k, m) with 1 <= k <= max_k, k <= m <= max_m.
inline std::vector<GameState> all_small_deals(int max_k, int max_m) {
  std::vector<GameState> deals;
  for (int k = 1; k <= max_k; ++k) {
    for (int m = k; m <= max_m; ++m) {
      auto some = all_deals(k, m);
      deals.insert(deals.end(), some.begin(), some.end());
    }
  }
  return deals;
}

inline bool has_vizing_profile(const GameState& state) {
  int singletons = 0;
  for (const Stack& s : state.stacks()) singletons += (s.size() == 1);
  return singletons <= 1;
}

/// Random deal with cards drawn from 1..pool (pool <= m); with
/// `vizing_profile` at most one stack has one card. Small pools give
/// crowded positions where reductions and increase moves happen.
inline GameState random_deal(std::mt19937_64& rng, int k, int m,
                             bool vizing_profile, int pool = 0) {
  if (pool <= 0 || pool > m) pool = m;
  std::vector<Stack> stacks;
  const int singleton = std::uniform_int_distribution<int>(0, k - 1)(rng);
  for (int i = 0; i < k; ++i) {
    const int min_size =
        (vizing_profile && i != singleton && pool >= 2) ? 2 : 1;
    const int size = std::uniform_int_distribution<int>(min_size, pool)(rng);
    std::vector<Card> all(pool);
    for (int c = 0; c < pool; ++c) all[c] = c + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    stacks.push_back(all);
  }
  return new_game({k, m}, std::move(stacks));
}

/// Random simple graph with n vertices and maximum degree at most max_deg.
inline Graph random_graph(std::mt19937_64& rng, int n, int max_deg,
                          double density) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(n, 0);
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (auto [u, v] : candidates) {
    if (!keep(rng) || deg[u] >= max_deg || deg[v] >= max_deg) continue;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u, v);
  }
  return Graph::create(n, std::move(edges));
}

/// Random bipartite graph: the first `left` vertices form one side.
inline Graph random_bipartite_graph(std::mt19937_64& rng, int n, int max_deg,
                                    double density) {
  std::uniform_int_distribution<int> split(1, std::max(1, n - 1));
  const int left = n > 1 ? split(rng) : 1;
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < left; ++u) {
    for (int v = left; v < n; ++v) candidates.emplace_back(u, v);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  // Relabel so the sides interleave and peeling order is not trivial.
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = v;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<int> deg(n, 0);
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : candidates) {
    if (!keep(rng) || deg[u] >= max_deg || deg[v] >= max_deg) continue;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(label[u], label[v]);
  }
  return Graph::create(n, std::move(edges));
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::create(10, std::move(edges));
}

/// Konig strategy with the interface the adversarial search expects.
struct KonigPlayer {
  std::optional<PlayerMove> move(const GameState& state) {
    return konig_step(state);
  }
  auto key() const { return 0; }
};

/// Vizing strategy; copies carry their own reduction context.
struct VizingPlayer {
  VizingStrategy strategy;

  std::optional<PlayerMove> move(const GameState& state) {
    auto decision = strategy.step(state);
    if (auto* mv = std::get_if<PlayerMove>(&decision)) return *mv;
    return std::nullopt;
  }
  auto key() const {
    const auto& ctx = strategy.context();
    return std::make_tuple(ctx.active, ctx.locked, ctx.forbidden);
  }
};

/// Worst case, over every sequence of legal demon answers, of the number of
/// player moves the strategy needs before a full hand exists. Returns
/// nullopt if some line of play exceeds `bound` moves or the strategy runs
/// out of moves first. Exhaustive game-tree search with memoization.
template <typename Player>
std::optional<int> adversarial_worst_case(const GameState& start, Player player,
                                          DemonKind kind, int bound) {
  constexpr int kFail = 1 << 20;
  using Key = std::pair<std::vector<Stack>, decltype(player.key())>;
  std::map<Key, int> memo;
  std::function<int(const GameState&, Player, int)> worst =
      [&](const GameState& state, Player p, int depth) -> int {
    if (is_winning(state)) return 0;
    if (depth >= bound) return kFail;
    Key key{state.stacks(), p.key()};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto mv = p.move(state);
    int result = kFail;
    if (mv) {
      const GameState after = apply_player_move(state, *mv);
      result = 0;
      for (const auto& r : demon_legal_responses(after, *mv, kind)) {
        const int sub = worst(apply_demon_response(after, r), p, depth + 1);
        result = std::max(result, sub >= kFail ? kFail : sub + 1);
        if (result >= kFail) break;
      }
    }
    if (result < kFail) memo.emplace(std::move(key), result);
    return result;
  };
  const int w = worst(start, player, 0);
  if (w >= kFail || w > bound) return std::nullopt;
  return w;
}

inline GameState table1() { return new_game({3, 4}, {{2}, {2}, {2, 3, 4}}); }

}  // namespace demon::testing

#endif  // DEMON_TESTS_TEST_SUPPORT_HPP
