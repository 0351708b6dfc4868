// Copyright 2026 The profitshare Authors
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

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "profitshare/coalition.hpp"
#include "profitshare/rational.hpp"
#include "profitshare/valuation.hpp"

namespace profitshare {

enum class Scheme { kFairValue, kShapley, kLaborUnion };

std::string to_string(Scheme scheme);
// "fair_value" | "shapley" | "labor_union"
Scheme parse_scheme(const std::string& text);

// Unordered assignment: assignment[i - 1] is the party (1..m) of player i.
struct PartitionState {
  std::vector<int> assignment;

  // Everybody in party 1.
  static PartitionState uniform(int n, int party = 1);

  int players() const { return static_cast<int>(assignment.size()); }
  friend bool operator==(const PartitionState&, const PartitionState&) = default;
};

// Labor Union state: one arrival-ordered sequence per party plus the set of
// unaffiliated players (strategy 0).
struct OrderedState {
  std::vector<std::vector<int>> sequences;
  std::vector<int> unaffiliated;  // ascending

  static OrderedState all_unaffiliated(int n, int m);
  // Each party's members in ascending order.
  static OrderedState from_partition(const PartitionState& partition, int m);

  int parties() const { return static_cast<int>(sequences.size()); }
  int players() const;
  friend bool operator==(const OrderedState&, const OrderedState&) = default;
};

using State = std::variant<PartitionState, OrderedState>;

std::string to_string(const State& state);

// n players, m parties with one monotone submodular valuation each, and the
// payoff rule. Construction enforces m <= n, matching ground sets, the
// scheme/unaffiliation pairing and (unless skipped) exhaustive validation of
// every valuation.
class GameSpec {
 public:
  // Largest party for which Shapley payoffs are enumerated exactly.
  static constexpr int kShapleyPartyLimit = 20;

  GameSpec(Scheme scheme, std::vector<Valuation> valuations,
           std::optional<bool> allow_unaffiliated = std::nullopt,
           bool validate_valuations = true);

  int players() const { return players_; }
  int parties() const { return static_cast<int>(valuations_.size()); }
  Scheme scheme() const { return scheme_; }
  bool allow_unaffiliated() const { return scheme_ == Scheme::kLaborUnion; }
  // False when constructed with validation skipped.
  bool valuations_verified() const { return verified_; }

  // 1-based party index.
  const Valuation& valuation(int party) const;
  const std::vector<Valuation>& valuations() const { return valuations_; }

  // Same valuations, different payoff rule.
  GameSpec with_scheme(Scheme scheme) const;

 private:
  Scheme scheme_;
  std::vector<Valuation> valuations_;
  int players_ = 0;
  bool verified_ = true;
};

using PayoffVector = std::vector<Rational>;

// Precomputed view of one state (strategies, party masks, Labor Union
// predecessor sets) for repeated payoff queries. Validates the state on
// construction and keeps a reference to `spec`, which must outlive it.
class StateEvaluator {
 public:
  StateEvaluator(const GameSpec& spec, const State& state);

  int strategy(int player) const { return strategy_[player - 1]; }
  Mask party(int j) const { return party_[j]; }

  Rational payoff(int player) const;
  Rational deviation_payoff(int player, int target) const;
  Rational total_profit() const;
  Rational potential() const;

 private:
  void check_player(int player) const;

  const GameSpec& spec_;
  std::vector<int> strategy_;
  std::vector<Mask> party_;         // [0] unaffiliated, [1..m] parties
  std::vector<Mask> predecessors_;  // Labor Union only
};

// Throws SchemeMismatch / InvalidArgument when the state does not fit.
void check_state(const GameSpec& spec, const State& state);

// Strategy of `player`: party index, or 0 for unaffiliated.
int strategy_of(const State& state, int player);

// Members of each party as masks, indexed by party; index 0 holds the
// unaffiliated players.
std::vector<Mask> party_masks(const State& state, int m);

Rational payoff(const GameSpec& spec, const State& state, int player);
PayoffVector all_payoffs(const GameSpec& spec, const State& state);

// Payoff `player` would receive after moving unilaterally to `target`
// (0 = unaffiliated). target equal to the current strategy returns the
// current payoff. Does not build the new state.
Rational deviation_payoff(const GameSpec& spec, const State& state, int player,
                          int target);

Rational total_profit(const GameSpec& spec, const State& state);
Rational potential(const GameSpec& spec, const State& state);

// Unilateral move; the input state is left untouched. On an OrderedState the
// mover leaves its sequence (later arrivals move up) and is appended to the
// tail of the target sequence.
State apply_move(const GameSpec& spec, const State& state, int player,
                 int target);

// Shapley share of `player` in a party whose other members are `others`:
// sum over Q subset of others of |Q|!(k-|Q|-1)!/k! (v(Q+i) - v(Q)), k = |others|+1.
Rational shapley_share(const Valuation& v, Mask others, int player);

// sum over non-empty Q subset of members of (|Q|-1)!(k-|Q|)!/k! v(Q), k = |members|.
Rational shapley_party_potential(const Valuation& v, Mask members);

}  // namespace profitshare
