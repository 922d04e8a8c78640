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

#ifndef DEMON_GAME_IO_HPP
#define DEMON_GAME_IO_HPP

// Game description text and transcript JSON.
//
// Game text: first line "k m", then one line per stack listing its card
// numbers in ascending order. '#' starts a comment; blank lines are ignored.
//
// Transcript JSON:
//   {"config": {"k": 3, "m": 4},
//    "initial_stacks": [[2], [2], [2, 3, 4]],
//    "rounds": [{"player": {"i": 1, "a": 2, "b": 1}, "demon": "pass"}],
//    "outcome": "Won"}
// Stack numbers i and j are 1-based.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "demon/engine.hpp"
#include "demon/error.hpp"
#include "demon/game.hpp"
#include "json.hpp"

namespace demon {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::vector<long long> parse_ints(const std::string& line,
                                         int line_number) {
  std::istringstream in(line);
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) +
                                             ": '" + token +
                                             "' is not an integer");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace detail

inline GameState parse_game(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_number = 0;
  bool have_header = false;
  GameConfig config;
  std::vector<Stack> stacks;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = detail::strip_comment(raw);
    if (detail::is_blank(line)) continue;
    const auto values = detail::parse_ints(line, line_number);
    if (!have_header) {
      if (values.size() != 2) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_number) +
                        ": expected header 'k m'");
      }
      config = {static_cast<int>(values[0]), static_cast<int>(values[1])};
      have_header = true;
      continue;
    }
    Stack stack;
    for (long long v : values) stack.push_back(static_cast<Card>(v));
    if (!std::is_sorted(stack.begin(), stack.end())) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_number) +
                                             ": stack must be ascending");
    }
    stacks.push_back(std::move(stack));
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'k m' header");
  return new_game(config, std::move(stacks));
}

inline std::string write_game(const GameState& state) {
  std::ostringstream out;
  out << state.k() << ' ' << state.m() << '\n';
  for (const Stack& stack : state.stacks()) {
    for (std::size_t x = 0; x < stack.size(); ++x) {
      out << (x ? " " : "") << stack[x];
    }
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json swap_json(const CardSwap& swap, const char* stack_key,
                                const char* out_key, const char* in_key) {
  return {{stack_key, swap.stack + 1}, {out_key, swap.out}, {in_key, swap.in}};
}

inline nlohmann::json to_json(const PlayerMove& move) {
  return swap_json(move, "i", "a", "b");
}

inline nlohmann::json to_json(const DemonResponse& response) {
  if (response.is_pass()) return "pass";
  return swap_json(*response.swap, "j", "out", "in");
}

inline nlohmann::json stacks_json(const GameState& state) {
  nlohmann::json stacks = nlohmann::json::array();
  for (const Stack& s : state.stacks()) stacks.push_back(s);
  return stacks;
}

inline nlohmann::json to_json(const Transcript& transcript) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const Round& round : transcript.rounds) {
    rounds.push_back({{"player", to_json(round.player)},
                      {"demon", to_json(round.demon)}});
  }
  return {{"config",
           {{"k", transcript.initial.k()}, {"m", transcript.initial.m()}}},
          {"initial_stacks", stacks_json(transcript.initial)},
          {"rounds", std::move(rounds)},
          {"outcome", std::string(to_string(transcript.outcome))}};
}

namespace detail {

inline int json_int(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::ParseError,
                std::string("expected integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace detail

inline PlayerMove player_move_from_json(const nlohmann::json& j) {
  return {detail::json_int(j, "i") - 1, detail::json_int(j, "a"),
          detail::json_int(j, "b")};
}

/// Accepts "pass", {"pass": ...} or {"j", "out", "in"}.
inline DemonResponse demon_response_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "pass") return DemonResponse::pass();
    throw Error(ErrorCode::ParseError, "unknown response '" +
                                           j.get<std::string>() + "'");
  }
  if (j.is_object() && j.contains("pass")) return DemonResponse::pass();
  return DemonResponse::swapping(detail::json_int(j, "j") - 1,
                                 detail::json_int(j, "out"),
                                 detail::json_int(j, "in"));
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
  try {
    const auto& config = j.at("config");
    std::vector<Stack> stacks = j.at("initial_stacks").get<std::vector<Stack>>();
    Transcript transcript{
        new_game({config.at("k").get<int>(), config.at("m").get<int>()},
                 std::move(stacks)),
        {},
        Outcome::Stuck};
    for (const auto& round : j.at("rounds")) {
      transcript.rounds.push_back(
          {player_move_from_json(round.at("player")),
           demon_response_from_json(round.at("demon"))});
    }
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "Won") {
      transcript.outcome = Outcome::Won;
    } else if (outcome == "Budget_Exhausted") {
      transcript.outcome = Outcome::BudgetExhausted;
    } else if (outcome == "Stuck") {
      transcript.outcome = Outcome::Stuck;
    } else {
      throw Error(ErrorCode::ParseError, "unknown outcome '" + outcome + "'");
    }
    return transcript;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace demon

#endif  // DEMON_GAME_IO_HPP
