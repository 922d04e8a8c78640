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

#ifndef DEMON_STRATEGIES_HPP
#define DEMON_STRATEGIES_HPP

// Winning strategies for the player.
//
// Against the Konig demon the player grows a maximum hand by one card per
// move. Against the Vizing demon the player repeatedly either wins, splits
// off a tight group of stacks whose chosen numbers appear nowhere else
// (a reduction), or raises the count of distinct numbers on the remaining
// stacks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "demon/engine.hpp"
#include "demon/error.hpp"
#include "demon/game.hpp"
#include "demon/matching.hpp"

namespace demon {

// ---------------------------------------------------------------------------
// Konig
// ---------------------------------------------------------------------------

/// The Konig strategy's move, or nullopt when a full hand already exists.
///
/// Takes the lowest-index stack that some maximum hand leaves unused, the
/// first such hand (in matching order) that avoids it, the smallest number
/// missing from that hand as the incoming card, and the stack's smallest
/// card as the outgoing one. The incoming number cannot already sit in the
/// stack, or the hand would not be maximum.
inline std::optional<PlayerMove> konig_step(const GameState& state) {
  const std::size_t best = max_hand(state).size();
  if (best == static_cast<std::size_t>(state.k())) return std::nullopt;

  for (int i = 0; i < state.k(); ++i) {
    std::vector<int> others;
    for (int j = 0; j < state.k(); ++j) {
      if (j != i) others.push_back(j);
    }
    const Hand hand =
        detail::max_hand_over(state, others, [](Card) { return true; });
    if (hand.size() != best) continue;

    std::vector<bool> used(state.m() + 1, false);
    for (const auto& pick : hand.picks) {
      if (pick) used[*pick] = true;
    }
    Card b = 1;
    while (used[b]) ++b;
    return PlayerMove{i, state.stack(i).front(), b};
  }
  // Some stack is unused by any maximum hand that is not complete.
  throw Error(ErrorCode::PreconditionViolated,
              "no stack is avoidable by a maximum hand");
}

inline PlayerPolicy konig_policy() {
  return [](const GameState& state) { return konig_step(state); };
}

/// Plays the Konig strategy to the end against `demon`. A demon answer that
/// breaks its rule raises NonconformingDemon.
inline Transcript konig_play(const GameState& state, const DemonPolicy& demon,
                             const RoundObserver& observer = {}) {
  try {
    return run_game(state, konig_policy(), demon, default_budget(state.config()),
                    observer);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IllegalResponse) {
      throw Error(ErrorCode::NonconformingDemon, e.detail());
    }
    throw;
  }
}

// ---------------------------------------------------------------------------
// Vizing
// ---------------------------------------------------------------------------

/// Which stacks are still in play and which were split off with a fixed
/// pick. Forbidden numbers are exactly the locked picks.
struct ReductionContext {
  std::vector<int> active;       // ascending
  std::map<int, Card> locked;    // stack -> picked number
  std::set<Card> forbidden;

  static ReductionContext all_active(int k) {
    ReductionContext ctx;
    for (int i = 0; i < k; ++i) ctx.active.push_back(i);
    return ctx;
  }

  int t() const { return static_cast<int>(active.size()); }

  friend bool operator==(const ReductionContext&,
                         const ReductionContext&) = default;
};

/// A set of numbers B and the active stacks S that hold at least one of
/// them.
struct DeficientSet {
  std::vector<Card> numbers;  // ascending
  std::vector<int> stacks;    // ascending

  friend bool operator==(const DeficientSet&, const DeficientSet&) = default;
};

/// At most one stack of size 1.
inline bool supports_vizing_profile(const GameState& state) {
  const auto sizes = state.profile();
  return std::count(sizes.begin(), sizes.end(), 1) <= 1;
}

inline std::set<Card> distinct_on_active(const GameState& state,
                                         const ReductionContext& ctx) {
  std::set<Card> numbers;
  for (int i : ctx.active) {
    numbers.insert(state.stack(i).begin(), state.stack(i).end());
  }
  return numbers;
}

/// Throws PreconditionViolated if a locked pick left its stack or a
/// forbidden number reached an active stack.
inline void check_context(const GameState& state, const ReductionContext& ctx) {
  for (const auto& [stack, pick] : ctx.locked) {
    if (!state.contains(stack, pick)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "locked pick " + std::to_string(pick) + " left stack " +
                      std::to_string(stack + 1));
    }
  }
  for (int i : ctx.active) {
    for (Card c : state.stack(i)) {
      if (ctx.forbidden.count(c)) {
        throw Error(ErrorCode::PreconditionViolated,
                    "forbidden number " + std::to_string(c) +
                        " appears on active stack " + std::to_string(i + 1));
      }
    }
  }
}

/// Swaps a number held by three or more active stacks for a number that
/// appears on no active stack and is not forbidden. Requires fewer than t
/// distinct numbers on the t active stacks; with at most one singleton
/// stack there are at least 2t-1 cards, so such a number exists.
inline PlayerMove increase_step(const GameState& state,
                                const ReductionContext& ctx) {
  const std::set<Card> present = distinct_on_active(state, ctx);
  if (static_cast<int>(present.size()) >= ctx.t()) {
    throw Error(ErrorCode::PreconditionViolated,
                "already " + std::to_string(present.size()) +
                    " distinct numbers on " + std::to_string(ctx.t()) +
                    " active stacks");
  }
  std::vector<int> multiplicity(state.m() + 1, 0);
  for (int i : ctx.active) {
    for (Card c : state.stack(i)) ++multiplicity[c];
  }
  const auto a_it = std::find_if(multiplicity.begin(), multiplicity.end(),
                                 [](int count) { return count >= 3; });
  if (a_it == multiplicity.end()) {
    throw Error(ErrorCode::PreconditionViolated,
                "no number appears on three active stacks; the stack profile "
                "has more than one singleton");
  }
  const Card a = static_cast<Card>(a_it - multiplicity.begin());

  Card b = 0;
  for (Card c = 1; c <= state.m(); ++c) {
    if (!present.count(c) && !ctx.forbidden.count(c)) {
      b = c;
      break;
    }
  }
  if (b == 0) {
    throw Error(ErrorCode::PreconditionViolated, "no free number to bring in");
  }
  for (int i : ctx.active) {
    if (state.contains(i, a)) return PlayerMove{i, a, b};
  }
  throw Error(ErrorCode::PreconditionViolated, "unreachable");
}

/// Smallest nonempty B within `candidates` whose numbers appear on at most
/// |B| active stacks. Subsets are scanned by size, then lexicographically,
/// so the first hit is the answer.
// TODO: replace the subset scan with a matching-based search once games with
// dozens of active stacks (high-degree vertices) need it.
inline DeficientSet minimal_deficient_subset(const GameState& state,
                                             const ReductionContext& ctx,
                                             std::vector<Card> candidates) {
  std::sort(candidates.begin(), candidates.end());
  const int n = static_cast<int>(candidates.size());
  // holders[x] = active stacks holding candidates[x]
  std::vector<std::vector<int>> holders(n);
  for (int x = 0; x < n; ++x) {
    for (int i : ctx.active) {
      if (state.contains(i, candidates[x])) holders[x].push_back(i);
    }
  }

  std::vector<int> stamp(state.k(), -1);
  int epoch = 0;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int x = 0; x < size; ++x) pick[x] = x;
    while (true) {
      ++epoch;
      int covered = 0;
      for (int x : pick) {
        for (int i : holders[x]) {
          if (stamp[i] != epoch) {
            stamp[i] = epoch;
            ++covered;
          }
        }
      }
      if (covered <= size) {
        DeficientSet result;
        for (int x : pick) result.numbers.push_back(candidates[x]);
        for (int i : ctx.active) {
          if (stamp[i] == epoch) result.stacks.push_back(i);
        }
        return result;
      }
      // Next combination in lexicographic order.
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int x = pos + 1; x < size; ++x) pick[x] = pick[x - 1] + 1;
    }
  }
  throw Error(ErrorCode::PreconditionViolated,
              "candidate numbers cover more stacks than there are numbers");
}

/// Distinct representatives: each stack of `ds` gets its own number from
/// `ds.numbers`. Failure means Hall's condition does not hold, which
/// minimal_deficient_subset never produces.
inline std::map<int, Card> sdr(const GameState& state, const DeficientSet& ds) {
  std::vector<std::vector<int>> adjacency;
  for (int i : ds.stacks) {
    std::vector<int> row;
    for (std::size_t x = 0; x < ds.numbers.size(); ++x) {
      if (state.contains(i, ds.numbers[x])) row.push_back(static_cast<int>(x));
    }
    adjacency.push_back(std::move(row));
  }
  const auto match =
      max_bipartite_matching(adjacency, static_cast<int>(ds.numbers.size()));
  std::map<int, Card> picks;
  for (std::size_t idx = 0; idx < ds.stacks.size(); ++idx) {
    if (match[idx] < 0) {
      throw Error(ErrorCode::HallViolation,
                  "stack " + std::to_string(ds.stacks[idx] + 1) +
                      " has no distinct representative");
    }
    picks[ds.stacks[idx]] = ds.numbers[match[idx]];
  }
  return picks;
}

/// Locks the stacks of `ds` with their picks and forbids the picked
/// numbers on the rest.
inline ReductionContext reduce(const ReductionContext& ctx,
                               const DeficientSet& ds,
                               const std::map<int, Card>& picks) {
  if (static_cast<int>(ds.stacks.size()) >= ctx.t()) {
    throw Error(ErrorCode::NotReducible,
                "the tight set spans all " + std::to_string(ctx.t()) +
                    " active stacks; take the winning hand instead");
  }
  ReductionContext next = ctx;
  for (int i : ds.stacks) {
    const auto it = picks.find(i);
    if (it == picks.end()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "no pick for stack " + std::to_string(i + 1));
    }
    next.active.erase(std::find(next.active.begin(), next.active.end(), i));
    next.locked[i] = it->second;
    next.forbidden.insert(it->second);
  }
  return next;
}

/// The Vizing strategy as a value type: the reduction context is its only
/// state, so copies explore independent lines of play.
class VizingStrategy {
 public:
  using Decision = std::variant<PlayerMove, Hand>;

  explicit VizingStrategy(const GameState& start)
      : ctx_(ReductionContext::all_active(start.k())) {
    if (!supports_vizing_profile(start)) {
      throw Error(ErrorCode::ProfileUnsupported,
                  "the Vizing strategy needs at most one stack of size 1");
    }
  }

  /// Runs the decision loop at `state`: win if the active stacks admit a
  /// full hand, else reduce while a reduction exists, else return a move
  /// that raises the distinct-number count.
  Decision step(const GameState& state) {
    check_context(state, ctx_);
    while (true) {
      const auto not_forbidden = [this](Card c) {
        return ctx_.forbidden.count(c) == 0;
      };
      const Hand sub = detail::max_hand_over(state, ctx_.active, not_forbidden);
      if (static_cast<int>(sub.size()) == ctx_.t()) return assemble(sub);

      const std::set<Card> present = distinct_on_active(state, ctx_);
      if (static_cast<int>(present.size()) < ctx_.t()) {
        return increase_step(state, ctx_);
      }
      std::vector<Card> candidates(present.begin(), present.end());
      candidates.resize(ctx_.t());
      const DeficientSet ds = minimal_deficient_subset(state, ctx_, candidates);
      const auto picks = sdr(state, ds);
      if (static_cast<int>(ds.stacks.size()) == ctx_.t()) {
        Hand hand;
        hand.picks.assign(state.k(), std::nullopt);
        for (const auto& [stack, card] : picks) hand.picks[stack] = card;
        return assemble(hand);
      }
      ctx_ = reduce(ctx_, ds, picks);
      ++reductions_;
    }
  }

  const ReductionContext& context() const { return ctx_; }
  int reductions() const { return reductions_; }

 private:
  Hand assemble(Hand hand) const {
    for (const auto& [stack, card] : ctx_.locked) hand.picks[stack] = card;
    return hand;
  }

  ReductionContext ctx_;
  int reductions_ = 0;
};

/// Move bound for the Vizing strategy: k*k + k.
inline int vizing_budget(const GameConfig& config) {
  return config.k * config.k + config.k;
}

inline PlayerPolicy vizing_policy(std::shared_ptr<VizingStrategy> strategy) {
  return [strategy](const GameState& state) -> std::optional<PlayerMove> {
    auto decision = strategy->step(state);
    if (auto* move = std::get_if<PlayerMove>(&decision)) return *move;
    return std::nullopt;
  };
}

struct VizingRun {
  Transcript transcript;
  ReductionContext context;
  /// Locked picks plus the last sub-game's hand, when the run was won.
  std::optional<Hand> hand;
};

inline VizingRun vizing_run(const GameState& state, const DemonPolicy& demon,
                            const RoundObserver& observer = {}) {
  auto strategy = std::make_shared<VizingStrategy>(state);
  VizingRun run{[&] {
    try {
      return run_game(state, vizing_policy(strategy), demon,
                      vizing_budget(state.config()), observer);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IllegalResponse) {
        throw Error(ErrorCode::NonconformingDemon, e.detail());
      }
      throw;
    }
  }(), {}, std::nullopt};
  if (run.transcript.outcome == Outcome::Won) {
    const GameState final_state = replay(run.transcript);
    auto decision = strategy->step(final_state);
    if (auto* hand = std::get_if<Hand>(&decision)) {
      run.hand = *hand;
    } else {
      // A full hand exists even though the sub-game has not closed yet.
      run.hand = max_hand(final_state);
    }
  }
  run.context = strategy->context();
  return run;
}

/// Plays the Vizing strategy to the end against `demon`.
inline Transcript vizing_play(const GameState& state, const DemonPolicy& demon,
                              const RoundObserver& observer = {}) {
  return vizing_run(state, demon, observer).transcript;
}

}  // namespace demon

#endif  // DEMON_STRATEGIES_HPP
