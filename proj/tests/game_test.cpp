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

#include <algorithm>
#include <random>
#include <vector>

#include "demon/engine.hpp"
#include "demon/game.hpp"
#include "demon/strategies.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace demon {
namespace {

using testing::table1;

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::BadRequest;
}

TEST(NewGame, Table1DealAndReserve) {
  const GameState s = table1();
  EXPECT_EQ(s.profile(), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(reserve_count(s, 1), 3);
  EXPECT_EQ(reserve_count(s, 2), 0);
  EXPECT_EQ(reserve_count(s, 3), 2);
  EXPECT_EQ(reserve_count(s, 4), 2);
}

TEST(NewGame, SmallestGame) {
  const GameState s = new_game({1, 1}, {{1}});
  EXPECT_EQ(reserve_count(s, 1), 0);
}

TEST(NewGame, StacksAreStoredSorted) {
  const GameState s = new_game({3, 4}, {{2}, {2}, {4, 2, 3}});
  EXPECT_EQ(s, table1());
}

TEST(NewGame, ValidationErrors) {
  EXPECT_EQ(code_of([] { new_game({2, 1}, {{1}, {1}}); }),
            ErrorCode::BadCardNumber);
  EXPECT_EQ(code_of([] { new_game({0, 1}, {}); }), ErrorCode::BadGameNumber);
  EXPECT_EQ(code_of([] { new_game({2, 2}, {{1}}); }),
            ErrorCode::WrongStackCount);
  EXPECT_EQ(code_of([] { new_game({2, 2}, {{1}, {}}); }),
            ErrorCode::EmptyStack);
  EXPECT_EQ(code_of([] { new_game({2, 2}, {{1}, {3}}); }),
            ErrorCode::CardOutOfRange);
  EXPECT_EQ(code_of([] { new_game({2, 2}, {{1}, {0}}); }),
            ErrorCode::CardOutOfRange);
  EXPECT_EQ(code_of([] { new_game({2, 2}, {{1, 1}, {2}}); }),
            ErrorCode::DuplicateCard);
}

TEST(ReserveCount, OutOfRange) {
  EXPECT_EQ(code_of([] { reserve_count(table1(), 5); }),
            ErrorCode::CardOutOfRange);
  EXPECT_EQ(code_of([] { reserve_count(table1(), 0); }),
            ErrorCode::CardOutOfRange);
}

TEST(LegalPlayerMoves, Table1) {
  const auto moves = legal_player_moves(table1());
  EXPECT_NE(std::find(moves.begin(), moves.end(), PlayerMove{0, 2, 1}),
            moves.end());
  // 2 is already in stack 3.
  EXPECT_EQ(std::find(moves.begin(), moves.end(), PlayerMove{2, 3, 2}),
            moves.end());
  // sum over stacks of n_i * (m - n_i) = 1*3 + 1*3 + 3*1
  EXPECT_EQ(moves.size(), 9u);
  EXPECT_TRUE(std::is_sorted(moves.begin(), moves.end()));
}

TEST(LegalPlayerMoves, NoMovesInOneCardGame) {
  EXPECT_TRUE(legal_player_moves(new_game({1, 1}, {{1}})).empty());
}

TEST(LegalPlayerMoves, CountMatchesDefinitionOnRandomStates) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const int m = k + static_cast<int>(rng() % 3);
    const GameState s = testing::random_deal(rng, k, m, false);
    std::size_t expected = 0;
    for (const Stack& st : s.stacks()) expected += st.size() * (m - st.size());
    const auto moves = legal_player_moves(s);
    ASSERT_EQ(moves.size(), expected);
    for (const auto& mv : moves) ASSERT_TRUE(is_legal_swap(s, mv));
  }
}

TEST(ApplyPlayerMove, Table2WinningMove) {
  const GameState after = apply_player_move(table1(), {0, 2, 1});
  EXPECT_EQ(after, new_game({3, 4}, {{1}, {2}, {2, 3, 4}}));
  EXPECT_EQ(reserve_count(after, 2), 1);
  EXPECT_EQ(reserve_count(after, 1), 2);
}

TEST(ApplyPlayerMove, IllegalMovesNameTheClause) {
  const GameState s = table1();
  try {
    apply_player_move(s, {0, 3, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalMove);
    EXPECT_NE(e.detail().find("holds no 3-card"), std::string::npos);
  }
  try {
    apply_player_move(s, {2, 3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalMove);
    EXPECT_NE(e.detail().find("already holds"), std::string::npos);
  }
  EXPECT_EQ(code_of([&] { apply_player_move(s, {3, 2, 1}); }),
            ErrorCode::IllegalMove);
  EXPECT_EQ(code_of([&] { apply_player_move(s, {0, 2, 2}); }),
            ErrorCode::IllegalMove);
  EXPECT_EQ(code_of([&] { apply_player_move(s, {0, 2, 5}); }),
            ErrorCode::IllegalMove);
}

TEST(ApplyPlayerMove, SwapBackRestores) {
  const GameState s = table1();
  EXPECT_EQ(apply_player_move(apply_player_move(s, {2, 3, 1}), {2, 1, 3}), s);
}

TEST(DemonLegalResponses, Table1AfterWinningMove) {
  const PlayerMove mv{0, 2, 1};
  const GameState after = apply_player_move(table1(), mv);
  EXPECT_EQ(demon_legal_responses(after, mv, DemonKind::Konig),
            std::vector<DemonResponse>{DemonResponse::pass()});
  EXPECT_EQ(demon_legal_responses(after, mv, DemonKind::Contrary),
            std::vector<DemonResponse>{DemonResponse::swapping(0, 1, 2)});
  EXPECT_EQ(demon_legal_responses(after, mv, DemonKind::Vizing),
            (std::vector<DemonResponse>{DemonResponse::pass(),
                                        DemonResponse::swapping(1, 2, 1),
                                        DemonResponse::swapping(2, 2, 1)}));
  EXPECT_EQ(demon_legal_responses(after, mv, DemonKind::Lazy),
            std::vector<DemonResponse>{DemonResponse::pass()});
}

TEST(ApplyDemonResponse, PassContraryAndSwap) {
  const GameState s = table1();
  const PlayerMove mv{0, 2, 1};
  const GameState after = apply_player_move(s, mv);
  EXPECT_EQ(apply_demon_response(after, DemonResponse::pass()), after);
  EXPECT_EQ(apply_demon_response(after, mv, DemonKind::Contrary,
                                 DemonResponse::swapping(0, 1, 2)),
            s);
  EXPECT_EQ(apply_demon_response(after, DemonResponse::swapping(1, 2, 1)),
            new_game({3, 4}, {{1}, {1}, {2, 3, 4}}));
}

TEST(ApplyDemonResponse, RuleViolationsAreIllegalResponses) {
  const PlayerMove mv{0, 2, 1};
  const GameState after = apply_player_move(table1(), mv);
  // Same stack as the player's move.
  EXPECT_EQ(code_of([&] {
              apply_demon_response(after, mv, DemonKind::Vizing,
                                   DemonResponse::swapping(0, 1, 3));
            }),
            ErrorCode::IllegalResponse);
  // Vizing-only answer offered by a Konig demon.
  EXPECT_EQ(code_of([&] {
              apply_demon_response(after, mv, DemonKind::Konig,
                                   DemonResponse::swapping(1, 2, 1));
            }),
            ErrorCode::IllegalResponse);
  // Contrary must undo.
  EXPECT_EQ(code_of([&] {
              apply_demon_response(after, mv, DemonKind::Contrary,
                                   DemonResponse::pass());
            }),
            ErrorCode::IllegalResponse);
  EXPECT_EQ(code_of([&] {
              apply_demon_response(after, DemonResponse::swapping(1, 3, 1));
            }),
            ErrorCode::IllegalResponse);
}

TEST(MaxHand, Examples) {
  const Hand h1 = max_hand(table1());
  EXPECT_EQ(h1.size(), 2u);
  EXPECT_TRUE(is_valid_hand(table1(), h1));

  const GameState t2 = new_game({3, 4}, {{1}, {2}, {2, 3, 4}});
  const Hand h2 = max_hand(t2);
  EXPECT_TRUE(h2.is_complete());
  EXPECT_TRUE(is_valid_hand(t2, h2));
  EXPECT_EQ(h2.picks[0], 1);
  EXPECT_EQ(h2.picks[1], 2);

  EXPECT_TRUE(max_hand(new_game({1, 1}, {{1}})).is_complete());
}

TEST(MaxHand, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1500; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const int m = k + static_cast<int>(rng() % (6 - k));
    const GameState s = testing::random_deal(rng, k, m, false);
    const Hand h = max_hand(s);
    ASSERT_TRUE(is_valid_hand(s, h));
    ASSERT_EQ(static_cast<int>(h.size()), testing::brute_force_max_hand(s))
       ;
  }
}

TEST(Invariants, ConservationProfileAndContraryIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const int m = k + static_cast<int>(rng() % 3);
    GameState s = testing::random_deal(rng, k, m, false);
    const auto profile = s.profile();
    for (int step = 0; step < 20; ++step) {
      const auto moves = legal_player_moves(s);
      if (moves.empty()) break;
      const PlayerMove mv = moves[rng() % moves.size()];
      ASSERT_GE(reserve_count(s, mv.in), 1);
      const GameState after = apply_player_move(s, mv);

      const auto konig = demon_legal_responses(after, mv, DemonKind::Konig);
      const auto vizing = demon_legal_responses(after, mv, DemonKind::Vizing);
      for (const auto& r : konig) {
        ASSERT_NE(std::find(vizing.begin(), vizing.end(), r), vizing.end());
      }
      const auto undo = demon_legal_responses(after, mv, DemonKind::Contrary);
      ASSERT_EQ(apply_demon_response(after, mv, DemonKind::Contrary, undo[0]), s);

      const auto& r = vizing[rng() % vizing.size()];
      s = apply_demon_response(after, mv, DemonKind::Vizing, r);
      ASSERT_EQ(s.profile(), profile);
      for (Card c = 1; c <= m; ++c) {
        ASSERT_EQ(s.stacks_containing(c) + reserve_count(s, c), k);
      }
    }
  }
}

TEST(RunGame, KonigStrategyBeatsLazyDemonInOneRound) {
  const Transcript t = run_game(table1(), konig_policy(),
                                first_legal_demon(DemonKind::Lazy), 10);
  EXPECT_EQ(t.outcome, Outcome::Won);
  ASSERT_EQ(t.rounds.size(), 1u);
  EXPECT_EQ(t.rounds[0].player, (PlayerMove{0, 2, 1}));
  EXPECT_TRUE(t.rounds[0].demon.is_pass());
}

TEST(RunGame, WinningStartNeedsNoRound) {
  const GameState s = new_game({3, 4}, {{1}, {2}, {2, 3, 4}});
  const Transcript t = run_game(s, konig_policy(),
                                first_legal_demon(DemonKind::Contrary), 10);
  EXPECT_EQ(t.outcome, Outcome::Won);
  EXPECT_TRUE(t.rounds.empty());
}

TEST(RunGame, ContraryDemonFreezesALosingDeal) {
  const GameState s = table1();
  int rounds_seen = 0;
  const Transcript t = run_game(
      s, konig_policy(), first_legal_demon(DemonKind::Contrary), 10,
      [&](int, const GameState&, const Round&, const GameState& after) {
        ++rounds_seen;
        EXPECT_EQ(after, s);
      });
  EXPECT_EQ(t.outcome, Outcome::BudgetExhausted);
  EXPECT_EQ(t.rounds.size(), 10u);
  EXPECT_EQ(rounds_seen, 10);
  EXPECT_EQ(replay(t), s);
}

TEST(RunGame, StuckWhenPolicyHasNoMove) {
  const Transcript t =
      run_game(table1(), [](const GameState&) { return std::nullopt; },
               first_legal_demon(DemonKind::Lazy), 5);
  EXPECT_EQ(t.outcome, Outcome::Stuck);
}

TEST(RunGame, ErrorsCarryTheRoundIndex) {
  try {
    run_game(table1(),
             [](const GameState&) { return PlayerMove{0, 3, 1}; },
             first_legal_demon(DemonKind::Lazy), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalMove);
    EXPECT_NE(e.detail().find("round 0"), std::string::npos);
  }
  DemonPolicy cheat{DemonKind::Konig, [](const GameState&, const PlayerMove&) {
                      return DemonResponse::swapping(1, 2, 3);
                    }};
  try {
    run_game(table1(), konig_policy(), cheat, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalResponse);
    EXPECT_NE(e.detail().find("round 0"), std::string::npos);
  }
}

TEST(RunGame, TranscriptReplaysToFinalState) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const GameState s = testing::random_deal(rng, 4, 6, false);
    GameState last = s;
    const Transcript t = run_game(
        s, konig_policy(), random_demon(DemonKind::Konig, rng()), 20,
        [&](int, const GameState&, const Round&, const GameState& after) {
          last = after;
        });
    EXPECT_EQ(replay(t), last);
  }
}

}  // namespace
}  // namespace demon
