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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "profitshare/game.hpp"
#include "profitshare/rational.hpp"

namespace profitshare {

struct EnumerationOptions {
  std::uint64_t budget = 10'000'000;
  // Labor Union only: expand each partition shape into every within-party
  // arrival order. Without it each shape is visited once, members ascending.
  bool expand_orderings = true;
  // Labor Union only: include shapes with unaffiliated players.
  bool include_unaffiliated = true;
};

// Number of states for_each_state would visit.
std::uint64_t count_states(const GameSpec& spec,
                           const EnumerationOptions& options = {});

// Visits every state once. Partition states come in lexicographic order of
// the assignment vector (party 1 < party 2 < ...); Labor Union shapes use the
// same order over {0..m}, and within a shape the orderings are expanded with
// party 1 outermost, each party's permutations in lexicographic order.
// Throws TooLarge when count_states exceeds the budget.
void for_each_state(const GameSpec& spec,
                    const std::function<void(const State&)>& visit,
                    const EnumerationOptions& options = {});

std::vector<State> enumerate_states(const GameSpec& spec,
                                    const EnumerationOptions& options = {});

struct OptimalStructure {
  PartitionState state;
  // Labor Union witness: parties in ascending member order.
  std::optional<OrderedState> ordered;
  Rational value;
};

// Maximum total profit over all partitions; ties go to the lexicographically
// first assignment. Labor Union optima are taken over fully affiliated
// partitions, which attain the maximum because valuations are monotone.
OptimalStructure optimum(const GameSpec& spec,
                         const EnumerationOptions& options = {});

struct Classification {
  bool is_nash = false;
  bool is_alpha_nash = false;
  std::optional<bool> is_strong_nash;
};

struct StrongNashOptions {
  int max_players = 8;
};

// Nash / alpha-Nash verdicts, plus the strong-Nash verdict when `strong` is
// set. A joint deviation refutes strong Nash when at least one deviator
// strictly gains and none strictly loses. For Labor Union games deviators
// leave simultaneously and rejoin in every possible interleaving.
Classification classify_state(const GameSpec& spec, const State& state,
                              const Rational& alpha, bool strong = false,
                              const StrongNashOptions& options = {});

// A successful coalition deviation, if one exists.
struct CoalitionDeviation {
  std::vector<int> deviators;
  std::vector<int> targets;
  State result;
};

std::optional<CoalitionDeviation> find_coalition_deviation(
    const GameSpec& spec, const State& state,
    const StrongNashOptions& options = {});

struct PriceOptions {
  EnumerationOptions enumeration;
  // Keep the equilibrium states themselves, not just the extremes.
  bool collect_states = true;
  // Also compute strong equilibria (n <= 8).
  bool strong = false;
  // Worker threads over the enumeration; results do not depend on it.
  unsigned threads = 1;
};

struct EquilibriumReport {
  Rational alpha;
  Rational opt;
  std::uint64_t states_examined = 0;
  std::uint64_t equilibrium_count = 0;
  std::vector<State> equilibria;
  State worst_state;
  State best_state;
  Rational worst_value;
  Rational best_value;
  Rational poa;
  Rational pos;
  // Labor Union: partition shapes all of whose orderings are equilibria.
  std::vector<PartitionState> equilibrium_shapes;
  std::optional<std::vector<State>> strong_equilibria;
};

// (alpha-)prices of anarchy and stability w.r.t. total profit by exhaustive
// enumeration. Throws NoEquilibriumFound if no state qualifies.
EquilibriumReport prices(const GameSpec& spec, const Rational& alpha,
                         const PriceOptions& options = {});

struct NicenessWitness {
  // "welfare", "chain", "nice" or "exact_potential"
  std::string check;
  State state;
  int player = 0;
  int target = 0;
  std::string detail;
};

struct NicenessReport {
  Rational beta_tested;
  Rational opt;
  bool welfare_bound_holds = true;  // f(S) >= sum of payoffs
  bool chain_holds = true;          // df >= dPhi >= du for improvement moves
  bool perfect_holds = true;        // both of the above
  bool beta_nice_holds = true;      // beta f(S) + Delta(S) >= Opt
  bool exact_potential_holds = true;
  std::uint64_t states_checked = 0;
  std::uint64_t moves_checked = 0;
  std::vector<NicenessWitness> witnesses;
};

NicenessReport verify_niceness(const GameSpec& spec, const Rational& beta,
                               const EnumerationOptions& options = {},
                               std::size_t max_witnesses = 16);

}  // namespace profitshare
