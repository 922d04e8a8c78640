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

#ifndef DEMON_GENERATE_HPP
#define DEMON_GENERATE_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "demon/game.hpp"
#include "demon/graph.hpp"

namespace demon {

/// Random deal for k stacks over 1..m. With `vizing_profile` every stack but
/// one holds at least two cards (needs m >= 2 when k >= 2).
inline GameState random_deal(std::mt19937_64& rng, GameConfig config,
                             bool vizing_profile) {
  const auto [k, m] = config;
  if (k < 1 || m < k) return new_game(config, {});  // raises the right error
  const int singleton = std::uniform_int_distribution<int>(0, k - 1)(rng);
  std::vector<Stack> stacks;
  std::vector<Card> numbers(m);
  std::iota(numbers.begin(), numbers.end(), 1);
  for (int i = 0; i < k; ++i) {
    const int min_size = (vizing_profile && i != singleton && m >= 2) ? 2 : 1;
    const int size = std::uniform_int_distribution<int>(min_size, m)(rng);
    std::shuffle(numbers.begin(), numbers.end(), rng);
    Stack stack(numbers.begin(), numbers.begin() + size);
    std::sort(stack.begin(), stack.end());
    stacks.push_back(std::move(stack));
  }
  return new_game(config, std::move(stacks));
}

/// Random simple graph on n vertices: candidate pairs in random order, each
/// kept with probability `density` unless it would push a degree past
/// max_degree.
inline Graph random_graph(std::mt19937_64& rng, int n, int max_degree,
                          double density) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : pairs) {
    if (degree[u] >= max_degree || degree[v] >= max_degree || !keep(rng)) continue;
    ++degree[u];
    ++degree[v];
    edges.emplace_back(u, v);
  }
  return Graph::create(n, std::move(edges));
}

/// Random bipartite graph; the two sides are mixed across vertex ids.
inline Graph random_bipartite_graph(std::mt19937_64& rng, int n,
                                    int max_degree, double density) {
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() & 1u);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (side[u] != side[v]) pairs.emplace_back(u, v);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : pairs) {
    if (degree[u] >= max_degree || degree[v] >= max_degree || !keep(rng)) continue;
    ++degree[u];
    ++degree[v];
    edges.emplace_back(u, v);
  }
  return Graph::create(n, std::move(edges));
}

}  // namespace demon

#endif  // DEMON_GENERATE_HPP
