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

#ifndef DEMON_MATCHING_HPP
#define DEMON_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

namespace demon {

// Maximum bipartite matching by repeated augmenting paths (Kuhn).
//
// Left vertices are tried in increasing order. Each one takes its first free
// neighbor if it has one, otherwise searches for an augmenting path scanning
// adjacency lists front to back, so sorted lists give a repeatable matching. Returns, for each left vertex, the matched
// right vertex or -1.
inline std::vector<int> max_bipartite_matching(
    const std::vector<std::vector<int>>& adjacency, int right_count) {
  const int left_count = static_cast<int>(adjacency.size());
  std::vector<int> match_left(left_count, -1);
  std::vector<int> match_right(right_count, -1);
  std::vector<int> seen(right_count, -1);

  // Iterative DFS so deep alternating paths cannot blow the stack.
  struct Frame {
    int left;
    std::size_t next;
  };

  for (int root = 0; root < left_count; ++root) {
    // A free neighbor is taken directly before any displacement is tried.
    const auto& own = adjacency[root];
    const auto direct = std::find_if(own.begin(), own.end(),
                                     [&](int r) { return match_right[r] < 0; });
    if (direct != own.end()) {
      match_left[root] = *direct;
      match_right[*direct] = root;
      continue;
    }
    std::vector<Frame> frames{{root, 0}};
    bool augmented = false;
    while (!frames.empty() && !augmented) {
      Frame& top = frames.back();
      const auto& adj = adjacency[top.left];
      if (top.next == adj.size()) {
        frames.pop_back();
        continue;
      }
      const int r = adj[top.next++];
      if (seen[r] == root) continue;
      seen[r] = root;
      if (match_right[r] < 0) {
        // Flip the alternating path recorded on the frame stack.
        int free_right = r;
        for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
          const int previous = match_left[it->left];
          match_left[it->left] = free_right;
          match_right[free_right] = it->left;
          free_right = previous;
        }
        augmented = true;
      } else {
        frames.push_back({match_right[r], 0});
      }
    }
  }
  return match_left;
}

inline std::size_t matching_size(const std::vector<int>& match_left) {
  std::size_t size = 0;
  for (int r : match_left) size += (r >= 0);
  return size;
}

}  // namespace demon

#endif  // DEMON_MATCHING_HPP
