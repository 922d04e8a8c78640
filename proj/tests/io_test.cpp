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

#include <random>
#include <string>

#include "demon/game_io.hpp"
#include "demon/generate.hpp"
#include "demon/strategies.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace demon {
namespace {

TEST(GameText, ParsesTable1WithComments) {
  const GameState s = parse_game(
      "# Table 1\n"
      "3 4\n"
      "2\n"
      "2   # stack two\n"
      "\n"
      "2 3 4\n");
  EXPECT_EQ(s, testing::table1());
  EXPECT_EQ(write_game(s), "3 4\n2\n2\n2 3 4\n");
}

TEST(GameText, Errors) {
  auto code = [](const char* text) {
    try {
      parse_game(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadRequest;
  };
  EXPECT_EQ(code(""), ErrorCode::ParseError);
  EXPECT_EQ(code("3\n1\n1\n1\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("2 2\n1 x\n2\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("2 2\n2 1\n2\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("2 2\n1\n"), ErrorCode::WrongStackCount);
  EXPECT_EQ(code("2 2\n1\n2\n1\n"), ErrorCode::WrongStackCount);
  EXPECT_EQ(code("2 1\n1\n1\n"), ErrorCode::BadCardNumber);
  EXPECT_EQ(code("2 2\n1\n3\n"), ErrorCode::CardOutOfRange);
}

TEST(GameText, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const GameState s = random_deal(rng, {k, k + static_cast<int>(rng() % 3)}, false);
    EXPECT_EQ(parse_game(write_game(s)), s);
  }
}

TEST(TranscriptJson, ExactShape) {
  const Transcript t =
      konig_play(testing::table1(), first_legal_demon(DemonKind::Konig));
  const auto j = to_json(t);
  EXPECT_EQ(j, nlohmann::json::parse(R"({
    "config": {"k": 3, "m": 4},
    "initial_stacks": [[2], [2], [2, 3, 4]],
    "rounds": [{"player": {"i": 1, "a": 2, "b": 1}, "demon": "pass"}],
    "outcome": "Won"})"));
}

TEST(TranscriptJson, RoundTripAndReplay) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const GameState s = random_deal(rng, {4, 6}, true);
    const Transcript t = vizing_play(s, random_demon(DemonKind::Vizing, rng()));
    const Transcript back = transcript_from_json(nlohmann::json::parse(to_json(t).dump()));
    EXPECT_EQ(back.initial, t.initial);
    EXPECT_EQ(back.rounds, t.rounds);
    EXPECT_EQ(back.outcome, t.outcome);
    EXPECT_EQ(replay(back), replay(t));
  }
}

TEST(TranscriptJson, SwapResponsesAndErrors) {
  EXPECT_EQ(demon_response_from_json(nlohmann::json::parse(R"({"j": 2, "out": 2, "in": 1})")),
            DemonResponse::swapping(1, 2, 1));
  EXPECT_TRUE(demon_response_from_json(nlohmann::json::parse(R"({"pass": true})")).is_pass());
  EXPECT_THROW(demon_response_from_json("undo"), Error);
  EXPECT_THROW(player_move_from_json(nlohmann::json::parse(R"({"i": 1, "a": 2})")), Error);
  EXPECT_THROW(transcript_from_json(nlohmann::json::parse(R"({"config": {}})")), Error);
}

TEST(RandomDeal, RespectsProfileRequest) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const GameState s = random_deal(rng, {k, k + 1}, true);
    EXPECT_TRUE(supports_vizing_profile(s));
  }
  EXPECT_THROW(random_deal(rng, {0, 3}, false), Error);
}

}  // namespace
}  // namespace demon
