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

#ifndef DEMON_GAME_HPP
#define DEMON_GAME_HPP

// Core of the demon solitaire: k stacks of distinctly numbered cards drawn
// from a deck holding k copies of each number 1..m. The player swaps a card
// in one stack for a card from the reserve; a demon may then answer with a
// swap of its own, constrained by the demon's rule.
//
// Stack indices are 0-based throughout the library. The text and JSON
// formats use 1-based stack numbers; conversion happens at the I/O layer.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "demon/error.hpp"
#include "demon/matching.hpp"

namespace demon {

using Card = int;

/// Ascending list of distinct card numbers.
using Stack = std::vector<Card>;

struct GameConfig {
  int k = 1;  // number of stacks
  int m = 1;  // card numbers run 1..m

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// A swap of one card in a stack for one card from the reserve. Used both
/// for the player's move and for a demon's swap.
struct CardSwap {
  int stack = 0;
  Card out = 0;
  Card in = 0;

  friend auto operator<=>(const CardSwap&, const CardSwap&) = default;
};

using PlayerMove = CardSwap;

inline std::string to_string(const CardSwap& swap) {
  std::ostringstream os;
  os << "(" << swap.stack + 1 << ", " << swap.out << "->" << swap.in << ")";
  return os.str();
}

enum class DemonKind { Lazy, Contrary, Konig, Vizing };

constexpr std::string_view to_string(DemonKind kind) {
  switch (kind) {
    case DemonKind::Lazy: return "lazy";
    case DemonKind::Contrary: return "contrary";
    case DemonKind::Konig: return "konig";
    case DemonKind::Vizing: return "vizing";
  }
  return "?";
}

inline std::optional<DemonKind> parse_demon_kind(std::string_view name) {
  for (DemonKind kind : {DemonKind::Lazy, DemonKind::Contrary,
                         DemonKind::Konig, DemonKind::Vizing}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

/// Either a pass or a single swap.
struct DemonResponse {
  std::optional<CardSwap> swap;

  static DemonResponse pass() { return {}; }
  static DemonResponse swapping(int stack, Card out, Card in) {
    return {CardSwap{stack, out, in}};
  }
  bool is_pass() const { return !swap.has_value(); }

  friend bool operator==(const DemonResponse&, const DemonResponse&) = default;
};

inline std::string to_string(const DemonResponse& response) {
  return response.is_pass() ? std::string("pass") : to_string(*response.swap);
}

/// One card per stack, pairwise distinct numbers; unset entries are stacks
/// the hand does not use.
struct Hand {
  std::vector<std::optional<Card>> picks;

  std::size_t size() const {
    return static_cast<std::size_t>(
        std::count_if(picks.begin(), picks.end(),
                      [](const auto& p) { return p.has_value(); }));
  }
  bool is_complete() const { return size() == picks.size(); }

  friend bool operator==(const Hand&, const Hand&) = default;
};

class GameState {
 public:
  /// Validates a deal. Stacks may be given in any order; they are stored
  /// sorted.
  static GameState create(GameConfig config, std::vector<Stack> stacks) {
    if (config.k < 1) {
      throw Error(ErrorCode::BadGameNumber,
                  "game number k must be at least 1, got " +
                      std::to_string(config.k));
    }
    if (config.m < config.k) {
      throw Error(ErrorCode::BadCardNumber,
                  "card number m must be at least k=" +
                      std::to_string(config.k) + ", got " +
                      std::to_string(config.m));
    }
    if (static_cast<int>(stacks.size()) != config.k) {
      throw Error(ErrorCode::WrongStackCount,
                  "expected " + std::to_string(config.k) + " stacks, got " +
                      std::to_string(stacks.size()));
    }
    for (std::size_t i = 0; i < stacks.size(); ++i) {
      Stack& stack = stacks[i];
      const std::string where = "stack " + std::to_string(i + 1);
      if (stack.empty()) throw Error(ErrorCode::EmptyStack, where + " is empty");
      std::sort(stack.begin(), stack.end());
      for (Card c : stack) {
        if (c < 1 || c > config.m) {
          throw Error(ErrorCode::CardOutOfRange,
                      where + " holds card " + std::to_string(c) +
                          " outside 1.." + std::to_string(config.m));
        }
      }
      if (std::adjacent_find(stack.begin(), stack.end()) != stack.end()) {
        throw Error(ErrorCode::DuplicateCard,
                    where + " holds the same number twice");
      }
    }
    return GameState(config, std::move(stacks));
  }

  const GameConfig& config() const { return config_; }
  int k() const { return config_.k; }
  int m() const { return config_.m; }
  const std::vector<Stack>& stacks() const { return stacks_; }
  const Stack& stack(int index) const { return stacks_.at(index); }

  bool contains(int stack_index, Card c) const {
    const Stack& s = stacks_.at(stack_index);
    return std::binary_search(s.begin(), s.end(), c);
  }

  int stacks_containing(Card c) const {
    int count = 0;
    for (int i = 0; i < k(); ++i) count += contains(i, c);
    return count;
  }

  int reserve_count(Card c) const {
    check_card(c);
    return k() - stacks_containing(c);
  }

  std::vector<int> profile() const {
    std::vector<int> sizes;
    sizes.reserve(stacks_.size());
    for (const Stack& s : stacks_) sizes.push_back(static_cast<int>(s.size()));
    return sizes;
  }

  void check_card(Card c) const {
    if (c < 1 || c > m()) {
      throw Error(ErrorCode::CardOutOfRange,
                  "card " + std::to_string(c) + " outside 1.." +
                      std::to_string(m()));
    }
  }

  /// Returns the state with one card exchanged. `code` names the error to
  /// raise when the swap is not legal (player moves and demon swaps differ).
  GameState with_swap(const CardSwap& swap,
                      ErrorCode code = ErrorCode::IllegalMove) const {
    if (swap.stack < 0 || swap.stack >= k()) {
      throw Error(code, "stack " + std::to_string(swap.stack + 1) +
                            " does not exist");
    }
    if (swap.out < 1 || swap.out > m() || swap.in < 1 || swap.in > m()) {
      throw Error(code, "card numbers must lie in 1.." + std::to_string(m()));
    }
    if (swap.out == swap.in) throw Error(code, "cannot swap a card for itself");
    if (!contains(swap.stack, swap.out)) {
      throw Error(code, "stack " + std::to_string(swap.stack + 1) +
                            " holds no " + std::to_string(swap.out) + "-card");
    }
    if (contains(swap.stack, swap.in)) {
      throw Error(code, "stack " + std::to_string(swap.stack + 1) +
                            " already holds a " + std::to_string(swap.in) +
                            "-card");
    }
    // Follows from the check above: at most k-1 stacks hold `in`.
    if (reserve_count(swap.in) < 1) {
      throw Error(code, "reserve has no " + std::to_string(swap.in) + "-card");
    }
    GameState next = *this;
    Stack& s = next.stacks_[swap.stack];
    s.erase(std::lower_bound(s.begin(), s.end(), swap.out));
    s.insert(std::lower_bound(s.begin(), s.end(), swap.in), swap.in);
    return next;
  }

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  GameState(GameConfig config, std::vector<Stack> stacks)
      : config_(config), stacks_(std::move(stacks)) {}

  GameConfig config_;
  std::vector<Stack> stacks_;
};

inline GameState new_game(GameConfig config, std::vector<Stack> stacks) {
  return GameState::create(config, std::move(stacks));
}

inline int reserve_count(const GameState& state, Card c) {
  return state.reserve_count(c);
}

/// All moves (i, a, b) with a in stack i and b not in it, ordered by stack,
/// then a, then b.
inline std::vector<PlayerMove> legal_player_moves(const GameState& state) {
  std::vector<PlayerMove> moves;
  for (int i = 0; i < state.k(); ++i) {
    for (Card a : state.stack(i)) {
      for (Card b = 1; b <= state.m(); ++b) {
        if (!state.contains(i, b)) moves.push_back({i, a, b});
      }
    }
  }
  return moves;
}

inline bool is_legal_swap(const GameState& state, const CardSwap& swap) {
  return swap.stack >= 0 && swap.stack < state.k() && swap.out != swap.in &&
         swap.in >= 1 && swap.in <= state.m() &&
         state.contains(swap.stack, swap.out) &&
         !state.contains(swap.stack, swap.in);
}

inline GameState apply_player_move(const GameState& state,
                                   const PlayerMove& move) {
  return state.with_swap(move, ErrorCode::IllegalMove);
}

/// Legal demon answers to `move`, evaluated on the position after the move.
/// Pass comes first, then swaps by stack index.
inline std::vector<DemonResponse> demon_legal_responses(
    const GameState& after, const PlayerMove& move, DemonKind kind) {
  const Card a = move.out;
  const Card b = move.in;
  switch (kind) {
    case DemonKind::Lazy:
      return {DemonResponse::pass()};
    case DemonKind::Contrary:
      return {DemonResponse::swapping(move.stack, b, a)};
    case DemonKind::Konig:
    case DemonKind::Vizing:
      break;
  }
  std::vector<DemonResponse> responses{DemonResponse::pass()};
  for (int j = 0; j < after.k(); ++j) {
    if (j != move.stack && after.contains(j, b) && !after.contains(j, a)) {
      responses.push_back(DemonResponse::swapping(j, b, a));
    }
  }
  if (kind == DemonKind::Vizing) {
    for (int j = 0; j < after.k(); ++j) {
      if (j != move.stack && after.contains(j, a) && !after.contains(j, b)) {
        responses.push_back(DemonResponse::swapping(j, a, b));
      }
    }
  }
  return responses;
}

/// Applies a response without consulting any demon rule.
inline GameState apply_demon_response(const GameState& state,
                                      const DemonResponse& response) {
  if (response.is_pass()) return state;
  return state.with_swap(*response.swap, ErrorCode::IllegalResponse);
}

/// Applies a response after checking it against the demon's rule for the
/// round's player move.
inline GameState apply_demon_response(const GameState& after,
                                      const PlayerMove& move, DemonKind kind,
                                      const DemonResponse& response) {
  const auto legal = demon_legal_responses(after, move, kind);
  if (std::find(legal.begin(), legal.end(), response) == legal.end()) {
    throw Error(ErrorCode::IllegalResponse,
                "response " + to_string(response) + " to move " +
                    to_string(move) + " breaks the " +
                    std::string(to_string(kind)) + " demon rule");
  }
  return apply_demon_response(after, response);
}

namespace detail {

// Maximum hand over a subset of stacks. Stacks outside `stacks` stay unset;
// `allowed(c)` filters the numbers that may be picked.
template <typename Allowed>
Hand max_hand_over(const GameState& state, const std::vector<int>& stacks,
                   Allowed allowed) {
  std::vector<std::vector<int>> adjacency;
  adjacency.reserve(stacks.size());
  for (int i : stacks) {
    std::vector<int> row;
    for (Card c : state.stack(i)) {
      if (allowed(c)) row.push_back(c - 1);
    }
    adjacency.push_back(std::move(row));
  }
  const auto match = max_bipartite_matching(adjacency, state.m());
  Hand hand;
  hand.picks.assign(state.k(), std::nullopt);
  for (std::size_t idx = 0; idx < stacks.size(); ++idx) {
    if (match[idx] >= 0) hand.picks[stacks[idx]] = match[idx] + 1;
  }
  return hand;
}

inline std::vector<int> all_stacks(const GameState& state) {
  std::vector<int> stacks(state.k());
  for (int i = 0; i < state.k(); ++i) stacks[i] = i;
  return stacks;
}

}  // namespace detail

/// Largest hand, via augmenting-path matching between stacks and numbers.
/// Stacks are matched in index order, smallest number first.
inline Hand max_hand(const GameState& state) {
  return detail::max_hand_over(state, detail::all_stacks(state),
                               [](Card) { return true; });
}

inline bool is_winning(const GameState& state) {
  return max_hand(state).size() == static_cast<std::size_t>(state.k());
}

/// True when every pick is a member of its stack and the numbers differ.
inline bool is_valid_hand(const GameState& state, const Hand& hand) {
  if (static_cast<int>(hand.picks.size()) != state.k()) return false;
  std::vector<Card> seen;
  for (int i = 0; i < state.k(); ++i) {
    if (!hand.picks[i]) continue;
    if (!state.contains(i, *hand.picks[i])) return false;
    seen.push_back(*hand.picks[i]);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace demon

#endif  // DEMON_GAME_HPP
