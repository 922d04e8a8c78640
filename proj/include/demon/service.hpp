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

#ifndef DEMON_SERVICE_HPP
#define DEMON_SERVICE_HPP

// Live game sessions. A human plays one side and the machine the other:
// the player against a machine demon, or the demon against the machine
// strategy. Observer sessions run machine against machine to completion.
//
// Every state change goes through the game_core legality checks. Requests
// on one session are serialized; a request that finds the session busy gets
// ErrorCode::Busy and should retry.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "demon/engine.hpp"
#include "demon/error.hpp"
#include "demon/game.hpp"
#include "demon/game_io.hpp"
#include "demon/strategies.hpp"
#include "json.hpp"

namespace demon {

enum class HumanRole { Player, Demon, Observer };
enum class StrategyKind { Konig, Vizing };
enum class SessionStatus { AwaitingPlayer, AwaitingDemon, Won, Lost };

constexpr std::string_view to_string(HumanRole role) {
  switch (role) {
    case HumanRole::Player: return "player";
    case HumanRole::Demon: return "demon";
    case HumanRole::Observer: return "observer";
  }
  return "?";
}

constexpr std::string_view to_string(StrategyKind kind) {
  return kind == StrategyKind::Konig ? "konig" : "vizing";
}

constexpr std::string_view to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::AwaitingPlayer: return "AwaitingPlayer";
    case SessionStatus::AwaitingDemon: return "AwaitingDemon";
    case SessionStatus::Won: return "Won";
    case SessionStatus::Lost: return "Lost";
  }
  return "?";
}

inline std::optional<HumanRole> parse_human_role(std::string_view name) {
  for (HumanRole r : {HumanRole::Player, HumanRole::Demon, HumanRole::Observer}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

inline std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
  if (name == "konig") return StrategyKind::Konig;
  if (name == "vizing") return StrategyKind::Vizing;
  return std::nullopt;
}

struct SessionConfig {
  GameState deal;
  DemonKind demon = DemonKind::Konig;
  HumanRole role = HumanRole::Player;
  StrategyKind strategy = StrategyKind::Konig;
  /// Seeds the machine demon's choices; without it the machine demon takes
  /// the first legal answer.
  std::optional<std::uint64_t> seed;
  /// Rounds before the game counts as lost; defaults to k*k + k + 1.
  std::optional<int> budget;
};

/// Full-information snapshot of a session.
struct SessionView {
  std::string id;
  GameState state;
  SessionStatus status;
  DemonKind demon;
  HumanRole role;
  StrategyKind strategy;
  int budget;
  std::vector<PlayerMove> legal_moves;          // when the human moves
  std::vector<DemonResponse> legal_responses;   // when the human answers
  std::optional<PlayerMove> pending_move;       // machine move awaiting answer
  std::optional<Hand> winning_hand;
  Transcript transcript;
};

inline nlohmann::json to_json(const SessionView& view) {
  nlohmann::json reserve = nlohmann::json::object();
  for (Card c = 1; c <= view.state.m(); ++c) {
    reserve[std::to_string(c)] = view.state.reserve_count(c);
  }
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& mv : view.legal_moves) moves.push_back(to_json(mv));
  nlohmann::json responses = nlohmann::json::array();
  for (const auto& r : view.legal_responses) responses.push_back(to_json(r));
  nlohmann::json j = {
      {"id", view.id},
      {"k", view.state.k()},
      {"m", view.state.m()},
      {"stacks", stacks_json(view.state)},
      {"reserve", std::move(reserve)},
      {"status", std::string(to_string(view.status))},
      {"demon", std::string(to_string(view.demon))},
      {"human_role", std::string(to_string(view.role))},
      {"strategy", std::string(to_string(view.strategy))},
      {"budget", view.budget},
      {"rounds_played", view.transcript.rounds.size()},
      {"legal_moves", std::move(moves)},
      {"legal_responses", std::move(responses)},
      {"pending_move", view.pending_move ? to_json(*view.pending_move)
                                         : nlohmann::json(nullptr)},
      {"winning_hand", nullptr},
      {"transcript", to_json(view.transcript)},
  };
  if (view.winning_hand) {
    nlohmann::json hand = nlohmann::json::array();
    for (const auto& pick : view.winning_hand->picks) hand.push_back(*pick);
    j["winning_hand"] = std::move(hand);
  }
  return j;
}

class SessionStore {
 public:
  /// With `log_path`, every session event is appended to that file as one
  /// JSON line.
  explicit SessionStore(std::optional<std::filesystem::path> log_path = {})
      : log_path_(std::move(log_path)), rng_(std::random_device{}()) {}

  SessionView create_session(const SessionConfig& config) {
    if (config.strategy == StrategyKind::Vizing &&
        !supports_vizing_profile(config.deal)) {
      throw Error(ErrorCode::ProfileUnsupported,
                  "the vizing strategy needs at most one stack of size 1");
    }
    auto session = std::make_shared<Session>(config);
    session->budget = config.budget.value_or(default_budget(config.deal.config()));
    if (session->budget < 0) {
      throw Error(ErrorCode::BadRequest, "budget must be non-negative");
    }
    session->demon_policy = config.seed ? random_demon(config.demon, *config.seed)
                                        : first_legal_demon(config.demon);
    if (config.strategy == StrategyKind::Vizing) {
      session->vizing.emplace(config.deal);
    }
    {
      std::unique_lock guard(store_mutex_);
      session->id = fresh_id();
      sessions_[session->id] = session;
    }
    std::lock_guard lock(session->mutex);
    switch (config.role) {
      case HumanRole::Player:
        start_turn(*session);
        break;
      case HumanRole::Demon:
        machine_turn(*session);
        break;
      case HumanRole::Observer:
        while (session->status == SessionStatus::AwaitingPlayer ||
               session->status == SessionStatus::AwaitingDemon) {
          if (session->status == SessionStatus::AwaitingPlayer) {
            machine_turn(*session);
          } else {
            finish_round(*session,
                         session->demon_policy.respond(session->state,
                                                       *session->pending));
          }
        }
        break;
    }
    log(*session, {{"event", "create"}, {"deal", stacks_json(config.deal)}});
    return view(*session);
  }

  SessionView get_state(const std::string& id) {
    auto session = find(id);
    auto lock = acquire(*session);
    return view(*session);
  }

  SessionView post_player_move(const std::string& id, const PlayerMove& move) {
    auto session = find(id);
    auto lock = acquire(*session);
    if (session->config.role != HumanRole::Player ||
        session->status != SessionStatus::AwaitingPlayer) {
      throw Error(ErrorCode::WrongTurn,
                  "session is " + std::string(to_string(session->status)) +
                      " and the human plays the " +
                      std::string(to_string(session->config.role)));
    }
    GameState after = apply_player_move(session->state, move);
    session->state = std::move(after);
    session->pending = move;
    const DemonResponse response =
        session->demon_policy.respond(session->state, move);
    finish_round(*session, response);
    log(*session, {{"event", "move"}, {"move", to_json(move)},
                   {"response", to_json(response)}});
    return view(*session);
  }

  SessionView post_demon_response(const std::string& id,
                                  const DemonResponse& response) {
    auto session = find(id);
    auto lock = acquire(*session);
    if (session->config.role != HumanRole::Demon ||
        session->status != SessionStatus::AwaitingDemon) {
      throw Error(ErrorCode::WrongTurn,
                  "session is " + std::string(to_string(session->status)) +
                      " and the human plays the " +
                      std::string(to_string(session->config.role)));
    }
    finish_round(*session, response);
    if (session->status == SessionStatus::AwaitingPlayer) machine_turn(*session);
    log(*session, {{"event", "response"}, {"response", to_json(response)}});
    return view(*session);
  }

  /// The session strategy's move for the current position; nullopt when a
  /// full hand is already available.
  std::optional<PlayerMove> hint(const std::string& id) {
    auto session = find(id);
    auto lock = acquire(*session);
    if (session->config.role != HumanRole::Player) {
      throw Error(ErrorCode::WrongTurn, "hints are for the human player");
    }
    if (is_winning(session->state)) return std::nullopt;
    if (session->config.strategy == StrategyKind::Konig) {
      return konig_step(session->state);
    }
    // The human may have strayed from the strategy, so plan from scratch.
    VizingStrategy fresh(session->state);
    auto decision = fresh.step(session->state);
    if (auto* mv = std::get_if<PlayerMove>(&decision)) return *mv;
    return std::nullopt;
  }

  std::size_t size() const {
    std::shared_lock guard(store_mutex_);
    return sessions_.size();
  }

 private:
  struct Session {
    explicit Session(const SessionConfig& c)
        : config(c), state(c.deal), transcript{c.deal, {}, Outcome::Stuck} {}

    std::mutex mutex;
    std::string id;
    SessionConfig config;
    GameState state;
    Transcript transcript;
    SessionStatus status = SessionStatus::AwaitingPlayer;
    std::optional<PlayerMove> pending;
    int budget = 0;
    DemonPolicy demon_policy;
    std::optional<VizingStrategy> vizing;
  };

  std::shared_ptr<Session> find(const std::string& id) const {
    std::shared_lock guard(store_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) {
      throw Error(ErrorCode::UnknownSession, "no session '" + id + "'");
    }
    return it->second;
  }

  static std::unique_lock<std::mutex> acquire(Session& session) {
    std::unique_lock lock(session.mutex, std::try_to_lock);
    if (!lock.owns_lock()) {
      throw Error(ErrorCode::Busy, "session is handling another request; retry");
    }
    return lock;
  }

  // Win is checked at the start of every turn, then the budget.
  static void start_turn(Session& s) {
    s.pending.reset();
    if (is_winning(s.state)) {
      s.status = SessionStatus::Won;
      s.transcript.outcome = Outcome::Won;
    } else if (static_cast<int>(s.transcript.rounds.size()) >= s.budget) {
      s.status = SessionStatus::Lost;
      s.transcript.outcome = Outcome::BudgetExhausted;
    } else {
      s.status = SessionStatus::AwaitingPlayer;
    }
  }

  static void machine_turn(Session& s) {
    start_turn(s);
    if (s.status != SessionStatus::AwaitingPlayer) return;
    std::optional<PlayerMove> move;
    if (s.vizing) {
      auto decision = s.vizing->step(s.state);
      if (auto* mv = std::get_if<PlayerMove>(&decision)) move = *mv;
    } else {
      move = konig_step(s.state);
    }
    if (!move) {
      s.status = SessionStatus::Lost;
      s.transcript.outcome = Outcome::Stuck;
      return;
    }
    s.state = apply_player_move(s.state, *move);
    s.pending = move;
    s.status = SessionStatus::AwaitingDemon;
  }

  // Applies the demon's answer to the pending move and opens the next turn.
  // A human demon's illegal answer leaves the move pending so they can
  // answer again; if a machine demon ever answers illegally the human
  // player's move is rolled back.
  static void finish_round(Session& s, const DemonResponse& response) {
    const PlayerMove move = *s.pending;
    GameState next = [&] {
      try {
        return apply_demon_response(s.state, move, s.config.demon, response);
      } catch (...) {
        if (s.config.role == HumanRole::Player) {
          // Machine demon misbehaved; undo the player's move.
          s.state = apply_player_move(s.state, {move.stack, move.in, move.out});
          s.pending.reset();
        }
        throw;
      }
    }();
    s.state = std::move(next);
    s.transcript.rounds.push_back({move, response});
    start_turn(s);
  }

  SessionView view(const Session& s) const {
    SessionView v{s.id,     s.state,          s.status, s.config.demon,
                  s.config.role, s.config.strategy, s.budget, {}, {},
                  s.pending, std::nullopt,   s.transcript};
    if (s.status == SessionStatus::AwaitingPlayer &&
        s.config.role == HumanRole::Player) {
      v.legal_moves = legal_player_moves(s.state);
    }
    if (s.status == SessionStatus::AwaitingDemon && s.pending) {
      v.legal_responses =
          demon_legal_responses(s.state, *s.pending, s.config.demon);
    }
    if (s.status == SessionStatus::Won) {
      if (s.vizing) {
        VizingStrategy copy = *s.vizing;
        auto decision = copy.step(s.state);
        if (auto* hand = std::get_if<Hand>(&decision)) v.winning_hand = *hand;
      }
      if (!v.winning_hand) v.winning_hand = max_hand(s.state);
    }
    return v;
  }

  std::string fresh_id() {
    std::uniform_int_distribution<std::uint64_t> pick;
    std::ostringstream os;
    os << std::hex << pick(rng_) << '-' << ++counter_;
    return os.str();
  }

  void log(const Session& s, nlohmann::json event) {
    if (!log_path_) return;
    event["id"] = s.id;
    event["status"] = std::string(to_string(s.status));
    std::lock_guard guard(log_mutex_);
    std::ofstream out(*log_path_, std::ios::app);
    out << event.dump() << '\n';
  }

  std::optional<std::filesystem::path> log_path_;
  mutable std::shared_mutex store_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
  std::uint64_t counter_ = 0;
  std::mutex log_mutex_;
};

}  // namespace demon

#endif  // DEMON_SERVICE_HPP
