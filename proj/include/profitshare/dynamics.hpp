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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "profitshare/game.hpp"
#include "profitshare/rational.hpp"

namespace profitshare {

enum class Selector {
  // The eligible player with the largest improvement moves (lowest index on
  // ties).
  kBasicMaxImprovement,
  // Players are offered a move in cyclic order 1..n, resuming after the
  // last mover.
  kRoundRobin,
  // Players are offered a move in rounds, each round a fresh seeded shuffle.
  kRandomSeeded,
};

std::string to_string(Selector selector);
// "basic" | "roundrobin" | "random"
Selector parse_selector(const std::string& text);

struct DynamicsConfig {
  // 0 gives the plain Nash dynamic.
  Rational alpha{0};
  Selector selector = Selector::kBasicMaxImprovement;
  std::uint64_t seed = 0;
  std::size_t max_steps = 100000;
};

// Throws InvalidArgument on alpha < 0 or max_steps == 0.
void check_config(const DynamicsConfig& config);

struct BestResponse {
  int strategy = 0;
  Rational payoff;
  // Best payoff minus current payoff; never negative.
  Rational delta;
};

// Payoff-maximising strategy for `player` with everyone else fixed. The
// current strategy wins ties; otherwise the lowest strategy index does.
// Labor Union candidates are evaluated with the player appended at each
// party's tail, and strategy 0 pays 0.
BestResponse best_response(const GameSpec& spec, const State& state,
                           int player);

struct ImprovementProfile {
  std::vector<BestResponse> per_player;  // index i - 1
  Rational total_delta;
};

ImprovementProfile improvement_profile(const GameSpec& spec, const State& state);

// candidate > (1 + alpha) * current, strictly.
bool is_alpha_improvement(const Rational& current, const Rational& candidate,
                          const Rational& alpha);

struct TraceStep {
  std::size_t step = 0;  // 1-based
  int mover = 0;
  int from = 0;
  int to = 0;
  Rational payoff_before;
  Rational payoff_after;
  Rational potential_after;
  Rational total_profit_after;
};

struct Move {
  State state;
  TraceStep record;
};

// Holds the schedule position for round-robin and seeded-random selection,
// so consecutive calls continue the same schedule.
class MoveScheduler {
 public:
  MoveScheduler(const DynamicsConfig& config, int players);

  // Next move, or nullopt once no player has an alpha-best-response move
  // (the state is then an alpha-Nash equilibrium; Nash when alpha = 0).
  std::optional<Move> step(const GameSpec& spec, const State& state);

 private:
  std::optional<Move> step_basic(const GameSpec& spec, const State& state);
  std::optional<Move> step_scheduled(const GameSpec& spec, const State& state);
  int next_candidate();
  Move make_move(const GameSpec& spec, const State& state, int player,
                 const BestResponse& br, const Rational& current);

  DynamicsConfig config_;
  int players_;
  std::size_t steps_taken_ = 0;
  int cursor_ = 0;  // round-robin: index into 0..n-1
  std::vector<int> order_;
  std::size_t position_ = 0;
  std::mt19937_64 rng_;
};

// Single step from a fresh schedule.
std::optional<Move> step(const GameSpec& spec, const State& state,
                         const DynamicsConfig& config);

struct Trace {
  State initial;
  Rational initial_potential;
  Rational initial_total_profit;
  std::vector<TraceStep> steps;
  State final_state;
  bool converged = false;
  // max_steps ran out first.
  bool truncated = false;
};

Trace run(const GameSpec& spec, const State& initial,
          const DynamicsConfig& config);

// Guarantee for a dynamic whose f-increase per step is at least
// b - f(S)/a: after ceil(a ln(1/epsilon)) steps, f >= a b (1 - epsilon).
struct ConvergenceBound {
  Rational a;
  Rational b;
  Rational epsilon;
  std::uint64_t steps = 0;
  Rational guaranteed_value;
};

ConvergenceBound improvement_bound(const Rational& a, const Rational& b,
                                   const Rational& epsilon);

struct ConvergenceBounds {
  // Basic Nash dynamic in a perfect beta-nice game: a = n/beta, b = opt/n.
  ConvergenceBound nash;
  // Basic alpha-Nash dynamic: a = n/(beta + alpha), b = opt/n.
  ConvergenceBound alpha_nash;
};

ConvergenceBounds convergence_bounds(int n, const Rational& beta,
                                     const Rational& alpha,
                                     const Rational& epsilon,
                                     const Rational& opt);

// n * ceil(log_{1+alpha} W) + n: explicit step envelope used for Labor Union
// alpha-dynamics with every non-empty coalition worth at least 1.
std::uint64_t labor_union_step_envelope(int n, const Rational& alpha,
                                        const Rational& max_singleton);

}  // namespace profitshare
