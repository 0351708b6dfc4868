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

#include "profitshare/dynamics.hpp"

#include <algorithm>
#include <numeric>

#include "profitshare/errors.hpp"

namespace profitshare {

std::string to_string(Selector selector) {
  switch (selector) {
    case Selector::kBasicMaxImprovement:
      return "basic";
    case Selector::kRoundRobin:
      return "roundrobin";
    case Selector::kRandomSeeded:
      return "random";
  }
  return "unknown";
}

Selector parse_selector(const std::string& text) {
  if (text == "basic") return Selector::kBasicMaxImprovement;
  if (text == "roundrobin") return Selector::kRoundRobin;
  if (text == "random") return Selector::kRandomSeeded;
  throw InvalidArgument("unknown selector \"" + text +
                        "\" (expected basic, roundrobin or random)");
}

void check_config(const DynamicsConfig& config) {
  if (config.alpha < 0) throw InvalidArgument("alpha must be non-negative");
  if (config.max_steps == 0) throw InvalidArgument("max_steps must be >= 1");
}

namespace {

BestResponse best_response_from(const GameSpec& spec,
                                const StateEvaluator& eval, int player) {
  const int current = eval.strategy(player);
  BestResponse best;
  best.strategy = current;
  best.payoff = eval.payoff(player);
  const Rational current_payoff = best.payoff;
  const int lowest = spec.allow_unaffiliated() ? 0 : 1;
  for (int target = lowest; target <= spec.parties(); ++target) {
    if (target == current) continue;
    Rational candidate = eval.deviation_payoff(player, target);
    // Strictly better than the incumbent best. Scanning targets upwards keeps
    // the lowest index among equal non-current maxima.
    if (candidate > best.payoff) {
      best.payoff = candidate;
      best.strategy = target;
    }
  }
  best.delta = best.payoff - current_payoff;
  return best;
}

}  // namespace

BestResponse best_response(const GameSpec& spec, const State& state,
                           int player) {
  StateEvaluator eval(spec, state);
  if (player < 1 || player > spec.players()) {
    throw InvalidArgument("player " + std::to_string(player) + " out of range");
  }
  return best_response_from(spec, eval, player);
}

ImprovementProfile improvement_profile(const GameSpec& spec,
                                       const State& state) {
  StateEvaluator eval(spec, state);
  ImprovementProfile profile;
  profile.total_delta = 0;
  for (int i = 1; i <= spec.players(); ++i) {
    profile.per_player.push_back(best_response_from(spec, eval, i));
    profile.total_delta += profile.per_player.back().delta;
  }
  return profile;
}

bool is_alpha_improvement(const Rational& current, const Rational& candidate,
                          const Rational& alpha) {
  if (alpha == 0) return candidate > current;
  Rational threshold = (1 + alpha) * current;
  return candidate > threshold;
}

// ---------------------------------------------------------------------------
// MoveScheduler

MoveScheduler::MoveScheduler(const DynamicsConfig& config, int players)
    : config_(config), players_(players), rng_(config.seed) {
  check_config(config_);
  if (players_ < 1) throw InvalidArgument("dynamics need at least one player");
}

Move MoveScheduler::make_move(const GameSpec& spec, const State& state,
                              int player, const BestResponse& br,
                              const Rational& current) {
  Move move{apply_move(spec, state, player, br.strategy), TraceStep{}};
  StateEvaluator after(spec, move.state);
  TraceStep& r = move.record;
  r.step = ++steps_taken_;
  r.mover = player;
  r.from = strategy_of(state, player);
  r.to = br.strategy;
  r.payoff_before = current;
  r.payoff_after = after.payoff(player);
  r.potential_after = after.potential();
  r.total_profit_after = after.total_profit();
  return move;
}

std::optional<Move> MoveScheduler::step(const GameSpec& spec,
                                        const State& state) {
  if (config_.selector == Selector::kBasicMaxImprovement) {
    return step_basic(spec, state);
  }
  return step_scheduled(spec, state);
}

std::optional<Move> MoveScheduler::step_basic(const GameSpec& spec,
                                              const State& state) {
  StateEvaluator eval(spec, state);
  int mover = 0;
  BestResponse chosen;
  Rational chosen_current;
  for (int i = 1; i <= spec.players(); ++i) {
    BestResponse br = best_response_from(spec, eval, i);
    Rational current = br.payoff - br.delta;
    if (!is_alpha_improvement(current, br.payoff, config_.alpha)) continue;
    if (mover == 0 || br.delta > chosen.delta) {
      mover = i;
      chosen = br;
      chosen_current = current;
    }
  }
  if (mover == 0) return std::nullopt;
  return make_move(spec, state, mover, chosen, chosen_current);
}

int MoveScheduler::next_candidate() {
  if (config_.selector == Selector::kRoundRobin) {
    int player = cursor_ + 1;
    cursor_ = (cursor_ + 1) % players_;
    return player;
  }
  if (position_ >= order_.size()) {
    order_.resize(static_cast<std::size_t>(players_));
    std::iota(order_.begin(), order_.end(), 1);
    // Fisher-Yates on raw engine output keeps the schedule identical across
    // standard library implementations.
    for (std::size_t k = order_.size(); k > 1; --k) {
      std::size_t pick = static_cast<std::size_t>(rng_() % k);
      std::swap(order_[k - 1], order_[pick]);
    }
    position_ = 0;
  }
  return order_[position_++];
}

std::optional<Move> MoveScheduler::step_scheduled(const GameSpec& spec,
                                                  const State& state) {
  StateEvaluator eval(spec, state);
  // The state does not change while candidates are skipped, so once every
  // player has been offered a move without taking one we have converged.
  std::vector<bool> offered(static_cast<std::size_t>(players_) + 1, false);
  int distinct = 0;
  while (distinct < players_) {
    int player = next_candidate();
    if (!offered[player]) {
      offered[player] = true;
      ++distinct;
    }
    BestResponse br = best_response_from(spec, eval, player);
    Rational current = br.payoff - br.delta;
    if (is_alpha_improvement(current, br.payoff, config_.alpha)) {
      return make_move(spec, state, player, br, current);
    }
  }
  return std::nullopt;
}

std::optional<Move> step(const GameSpec& spec, const State& state,
                         const DynamicsConfig& config) {
  MoveScheduler scheduler(config, spec.players());
  return scheduler.step(spec, state);
}

Trace run(const GameSpec& spec, const State& initial,
          const DynamicsConfig& config) {
  MoveScheduler scheduler(config, spec.players());
  StateEvaluator start(spec, initial);
  Trace trace{initial, start.potential(), start.total_profit(), {}, initial,
              false, false};
  State current = initial;
  while (trace.steps.size() < config.max_steps) {
    std::optional<Move> move = scheduler.step(spec, current);
    if (!move) {
      trace.converged = true;
      break;
    }
    trace.steps.push_back(std::move(move->record));
    current = std::move(move->state);
  }
  if (!trace.converged) {
    // One more look decides whether the budget ended exactly at convergence.
    MoveScheduler probe(DynamicsConfig{config.alpha,
                                       Selector::kBasicMaxImprovement, 0, 1},
                        spec.players());
    trace.converged = !probe.step(spec, current).has_value();
    trace.truncated = !trace.converged;
  }
  trace.final_state = std::move(current);
  return trace;
}

// ---------------------------------------------------------------------------
// Bounds

ConvergenceBound improvement_bound(const Rational& a, const Rational& b,
                                   const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1)
    throw InvalidArgument("epsilon must lie in (0, 1)");
  if (a <= 0) throw InvalidArgument("a must be positive");
  if (b < 0) throw InvalidArgument("b must be non-negative");
  ConvergenceBound bound;
  bound.a = a;
  bound.b = b;
  bound.epsilon = epsilon;
  bound.steps = ceil_scaled_log_inverse(a, epsilon);
  bound.guaranteed_value = a * b * (1 - epsilon);
  return bound;
}

ConvergenceBounds convergence_bounds(int n, const Rational& beta,
                                     const Rational& alpha,
                                     const Rational& epsilon,
                                     const Rational& opt) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (beta <= 0) throw InvalidArgument("beta must be positive");
  if (alpha < 0) throw InvalidArgument("alpha must be non-negative");
  if (opt < 0) throw InvalidArgument("opt must be non-negative");
  Rational b = opt / n;
  Rational a_nash = Rational(n) / beta;
  Rational a_alpha = Rational(n) / (beta + alpha);
  return ConvergenceBounds{improvement_bound(a_nash, b, epsilon),
                           improvement_bound(a_alpha, b, epsilon)};
}

std::uint64_t labor_union_step_envelope(int n, const Rational& alpha,
                                        const Rational& max_singleton) {
  if (alpha <= 0) throw InvalidArgument("alpha must be positive");
  std::uint64_t per_player = ceil_log(1 + alpha, max_singleton);
  return static_cast<std::uint64_t>(n) * per_player +
         static_cast<std::uint64_t>(n);
}

}  // namespace profitshare
