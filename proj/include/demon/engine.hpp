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

#ifndef DEMON_ENGINE_HPP
#define DEMON_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "demon/error.hpp"
#include "demon/game.hpp"

namespace demon {

enum class Outcome { Won, BudgetExhausted, Stuck };

constexpr std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Won: return "Won";
    case Outcome::BudgetExhausted: return "Budget_Exhausted";
    case Outcome::Stuck: return "Stuck";
  }
  return "?";
}

struct Round {
  PlayerMove player;
  DemonResponse demon;

  friend bool operator==(const Round&, const Round&) = default;
};

struct Transcript {
  GameState initial;
  std::vector<Round> rounds;
  Outcome outcome = Outcome::Stuck;

  std::size_t player_moves() const { return rounds.size(); }
};

/// Replays every round from the initial deal. Rule conformance of demon
/// answers is not rechecked here, only swap legality.
inline GameState replay(const Transcript& transcript) {
  GameState state = transcript.initial;
  for (const Round& round : transcript.rounds) {
    state = apply_demon_response(apply_player_move(state, round.player),
                                 round.demon);
  }
  return state;
}

/// Player side of a round: the next move, or nothing when the policy has no
/// move to offer.
using PlayerPolicy =
    std::function<std::optional<PlayerMove>(const GameState&)>;

/// A demon rule plus a way of choosing among the answers it allows.
struct DemonPolicy {
  DemonKind kind = DemonKind::Lazy;
  std::function<DemonResponse(const GameState& after, const PlayerMove& move)>
      respond;
};

/// Always picks the first legal answer: Pass for every demon except
/// Contrary, which has only the undo.
inline DemonPolicy first_legal_demon(DemonKind kind) {
  return {kind, [kind](const GameState& after, const PlayerMove& move) {
            return demon_legal_responses(after, move, kind).front();
          }};
}

/// Picks uniformly among the legal answers.
inline DemonPolicy random_demon(DemonKind kind, std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return {kind, [kind, rng](const GameState& after, const PlayerMove& move) {
            const auto legal = demon_legal_responses(after, move, kind);
            std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
            return legal[pick(*rng)];
          }};
}

/// Round budget used when the caller gives none: k*k + k + 1.
inline int default_budget(const GameConfig& config) {
  return config.k * config.k + config.k + 1;
}

/// Observer hook invoked after each completed round with the position at
/// the start of that round and the position after it.
using RoundObserver = std::function<void(int round_index, const GameState& before,
                                         const Round& round,
                                         const GameState& after)>;

/// Alternates player moves and demon answers. The win is checked at the
/// start of every turn, before the player is asked to move.
inline Transcript run_game(const GameState& start, const PlayerPolicy& player,
                           const DemonPolicy& demon, int move_budget,
                           const RoundObserver& observer = {}) {
  Transcript transcript{start, {}, Outcome::Stuck};
  GameState state = start;
  for (int round = 0;; ++round) {
    if (is_winning(state)) {
      transcript.outcome = Outcome::Won;
      return transcript;
    }
    if (round >= move_budget) {
      transcript.outcome = Outcome::BudgetExhausted;
      return transcript;
    }
    const std::optional<PlayerMove> move = player(state);
    if (!move) {
      transcript.outcome = Outcome::Stuck;
      return transcript;
    }
    GameState after = state;
    try {
      after = apply_player_move(state, *move);
    } catch (const Error& e) {
      throw Error(ErrorCode::IllegalMove,
                  "round " + std::to_string(round) + ": " + e.detail());
    }
    const DemonResponse response = demon.respond(after, *move);
    GameState next = after;
    try {
      next = apply_demon_response(after, *move, demon.kind, response);
    } catch (const Error& e) {
      throw Error(ErrorCode::IllegalResponse,
                  "round " + std::to_string(round) + ": " + e.detail());
    }
    transcript.rounds.push_back({*move, response});
    if (observer) observer(round, state, transcript.rounds.back(), next);
    state = std::move(next);
  }
}

}  // namespace demon

#endif  // DEMON_ENGINE_HPP
