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

#include "profitshare/game.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

constexpr int kCoefficientRows = GameSpec::kShapleyPartyLimit + 1;

// share[k][s] = s!(k-1-s)!/k!, weight of a size-s predecessor set in a party
// of size k.
// pot[k][s]   = (s-1)!(k-s)!/k!, potential weight of a size-s subset, s >= 1.
struct Coefficients {
  std::array<std::vector<Rational>, kCoefficientRows> share;
  std::array<std::vector<Rational>, kCoefficientRows> pot;
};

const Coefficients& coefficients() {
  static const Coefficients table = [] {
    Coefficients c;
    for (int k = 1; k < kCoefficientRows; ++k) {
      Rational kf = factorial(k);
      c.share[k].resize(static_cast<std::size_t>(k));
      for (int s = 0; s < k; ++s) {
        c.share[k][s] = factorial(s) * factorial(k - 1 - s) / kf;
      }
      c.pot[k].resize(static_cast<std::size_t>(k) + 1);
      for (int s = 1; s <= k; ++s) {
        c.pot[k][s] = factorial(s - 1) * factorial(k - s) / kf;
      }
    }
    return c;
  }();
  return table;
}

void check_party_size(int k) {
  if (k > GameSpec::kShapleyPartyLimit) {
    throw TooLarge("Shapley enumeration limited to parties of " +
                   std::to_string(GameSpec::kShapleyPartyLimit) +
                   " players, got " + std::to_string(k));
  }
}

}  // namespace

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kFairValue:
      return "fair_value";
    case Scheme::kShapley:
      return "shapley";
    case Scheme::kLaborUnion:
      return "labor_union";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& text) {
  if (text == "fair_value") return Scheme::kFairValue;
  if (text == "shapley") return Scheme::kShapley;
  if (text == "labor_union") return Scheme::kLaborUnion;
  throw InvalidArgument("unknown scheme \"" + text +
                        "\" (expected fair_value, shapley or labor_union)");
}

PartitionState PartitionState::uniform(int n, int party) {
  return PartitionState{std::vector<int>(static_cast<std::size_t>(n), party)};
}

OrderedState OrderedState::all_unaffiliated(int n, int m) {
  OrderedState s;
  s.sequences.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= n; ++i) s.unaffiliated.push_back(i);
  return s;
}

OrderedState OrderedState::from_partition(const PartitionState& partition,
                                          int m) {
  OrderedState s;
  s.sequences.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= partition.players(); ++i) {
    int j = partition.assignment[i - 1];
    if (j == 0) {
      s.unaffiliated.push_back(i);
    } else {
      if (j < 0 || j > m) throw InvalidArgument("party index out of range");
      s.sequences[j - 1].push_back(i);
    }
  }
  return s;
}

int OrderedState::players() const {
  std::size_t total = unaffiliated.size();
  for (const auto& seq : sequences) total += seq.size();
  return static_cast<int>(total);
}

std::string to_string(const State& state) {
  std::ostringstream out;
  if (const auto* p = std::get_if<PartitionState>(&state)) {
    out << "(";
    for (std::size_t k = 0; k < p->assignment.size(); ++k) {
      if (k) out << ",";
      out << p->assignment[k];
    }
    out << ")";
    return out.str();
  }
  const auto& o = std::get<OrderedState>(state);
  for (std::size_t j = 0; j < o.sequences.size(); ++j) {
    if (j) out << " ";
    out << "P" << (j + 1) << "=(";
    for (std::size_t k = 0; k < o.sequences[j].size(); ++k) {
      if (k) out << ",";
      out << o.sequences[j][k];
    }
    out << ")";
  }
  out << " U={";
  for (std::size_t k = 0; k < o.unaffiliated.size(); ++k) {
    if (k) out << ",";
    out << o.unaffiliated[k];
  }
  out << "}";
  return out.str();
}

// ---------------------------------------------------------------------------
// GameSpec

GameSpec::GameSpec(Scheme scheme, std::vector<Valuation> valuations,
                   std::optional<bool> allow_unaffiliated,
                   bool validate_valuations)
    : scheme_(scheme), valuations_(std::move(valuations)) {
  if (valuations_.empty()) throw InvalidArgument("a game needs at least one party");
  players_ = valuations_.front().ground_set_size();
  for (std::size_t j = 0; j < valuations_.size(); ++j) {
    if (valuations_[j].ground_set_size() != players_) {
      throw InvalidArgument("valuation of party " + std::to_string(j + 1) +
                            " has ground set size " +
                            std::to_string(valuations_[j].ground_set_size()) +
                            ", expected " + std::to_string(players_));
    }
  }
  if (parties() > players_) {
    throw InvalidArgument("m = " + std::to_string(parties()) +
                          " parties exceeds n = " + std::to_string(players_) +
                          " players; m <= n is required");
  }
  bool wants_unaffiliated = scheme_ == Scheme::kLaborUnion;
  if (allow_unaffiliated && *allow_unaffiliated != wants_unaffiliated) {
    throw InvalidArgument(
        wants_unaffiliated
            ? "labor_union games require allow_unaffiliated = true"
            : to_string(scheme_) + " games require allow_unaffiliated = false");
  }
  verified_ = validate_valuations;
  if (validate_valuations) {
    for (std::size_t j = 0; j < valuations_.size(); ++j) {
      // Exhaustive up to the validator's limit, seeded sampling beyond it.
      ValidationReport report =
          players_ <= ValidateOptions{}.max_exhaustive_players
              ? validate(valuations_[j])
              : validate_sampled(valuations_[j], 4096, ValidateOptions{}.seed);
      if (!report.ok()) {
        const ValidationViolation& w = report.violations.front();
        throw ValidationFailure(
            "valuation of party " + std::to_string(j + 1) + " is not " +
            (report.monotone ? "submodular" : "monotone") + ": witness " +
            to_string(w.property) + " I=" + to_string(w.first) +
            " J=" + to_string(w.second) + " i=" + std::to_string(w.player) +
            " lhs=" + to_string(w.lhs) + " rhs=" + to_string(w.rhs));
      }
    }
  }
}

const Valuation& GameSpec::valuation(int party) const {
  if (party < 1 || party > parties()) {
    throw InvalidArgument("party index " + std::to_string(party) +
                          " outside [1, " + std::to_string(parties()) + "]");
  }
  return valuations_[static_cast<std::size_t>(party - 1)];
}

GameSpec GameSpec::with_scheme(Scheme scheme) const {
  GameSpec copy(*this);
  copy.scheme_ = scheme;
  return copy;
}

// ---------------------------------------------------------------------------
// State checks and helpers

void check_state(const GameSpec& spec, const State& state) {
  const int n = spec.players();
  const int m = spec.parties();
  if (const auto* p = std::get_if<PartitionState>(&state)) {
    if (spec.scheme() == Scheme::kLaborUnion) {
      throw SchemeMismatch("labor_union games need an ordered state");
    }
    if (p->players() != n) {
      throw InvalidArgument("partition state has " +
                            std::to_string(p->players()) + " entries, expected " +
                            std::to_string(n));
    }
    for (int i = 1; i <= n; ++i) {
      int j = p->assignment[i - 1];
      if (j < 1 || j > m) {
        throw InvalidArgument("player " + std::to_string(i) +
                              " assigned to party " + std::to_string(j) +
                              " outside [1, " + std::to_string(m) + "]");
      }
    }
    return;
  }
  const auto& o = std::get<OrderedState>(state);
  if (spec.scheme() != Scheme::kLaborUnion) {
    throw SchemeMismatch(to_string(spec.scheme()) +
                         " games need a partition state");
  }
  if (o.parties() != m) {
    throw InvalidArgument("ordered state has " + std::to_string(o.parties()) +
                          " sequences, expected " + std::to_string(m));
  }
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  auto mark = [&](int i) {
    if (i < 1 || i > n) {
      throw InvalidArgument("player index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
    }
    if (seen[i]++) {
      throw InvalidArgument("player " + std::to_string(i) +
                            " appears more than once");
    }
  };
  for (const auto& seq : o.sequences) {
    for (int i : seq) mark(i);
  }
  for (int i : o.unaffiliated) mark(i);
  for (int i = 1; i <= n; ++i) {
    if (!seen[i]) {
      throw InvalidArgument("player " + std::to_string(i) + " is missing");
    }
  }
}

int strategy_of(const State& state, int player) {
  if (const auto* p = std::get_if<PartitionState>(&state)) {
    if (player < 1 || player > p->players())
      throw InvalidArgument("player " + std::to_string(player) + " out of range");
    return p->assignment[player - 1];
  }
  const auto& o = std::get<OrderedState>(state);
  for (std::size_t j = 0; j < o.sequences.size(); ++j) {
    if (std::find(o.sequences[j].begin(), o.sequences[j].end(), player) !=
        o.sequences[j].end())
      return static_cast<int>(j) + 1;
  }
  if (std::find(o.unaffiliated.begin(), o.unaffiliated.end(), player) !=
      o.unaffiliated.end())
    return 0;
  throw InvalidArgument("player " + std::to_string(player) + " out of range");
}

std::vector<Mask> party_masks(const State& state, int m) {
  std::vector<Mask> masks(static_cast<std::size_t>(m) + 1, 0);
  if (const auto* p = std::get_if<PartitionState>(&state)) {
    for (int i = 1; i <= p->players(); ++i) {
      masks[p->assignment[i - 1]] |= Mask{1} << (i - 1);
    }
    return masks;
  }
  const auto& o = std::get<OrderedState>(state);
  for (std::size_t j = 0; j < o.sequences.size(); ++j) {
    for (int i : o.sequences[j]) masks[j + 1] |= Mask{1} << (i - 1);
  }
  for (int i : o.unaffiliated) masks[0] |= Mask{1} << (i - 1);
  return masks;
}

// ---------------------------------------------------------------------------
// Shapley sums

Rational shapley_share(const Valuation& v, Mask others, int player) {
  const int k = std::popcount(others) + 1;
  check_party_size(k);
  const Mask bit = Mask{1} << (player - 1);
  std::vector<Rational> by_size(static_cast<std::size_t>(k));
  Rational s1, s2;
  for_each_submask(others, [&](Mask sub) {
    Rational& slot = by_size[static_cast<std::size_t>(std::popcount(sub))];
    slot += v.value(sub | bit, s1);
    slot -= v.value(sub, s2);
  });
  const auto& coef = coefficients().share[k];
  Rational total(0);
  for (int s = 0; s < k; ++s) {
    if (by_size[s] != 0) total += coef[s] * by_size[s];
  }
  return total;
}

Rational shapley_party_potential(const Valuation& v, Mask members) {
  const int k = std::popcount(members);
  if (k == 0) return Rational(0);
  check_party_size(k);
  std::vector<Rational> by_size(static_cast<std::size_t>(k) + 1);
  Rational scratch;
  for_each_submask(members, [&](Mask sub) {
    if (sub != 0) by_size[static_cast<std::size_t>(std::popcount(sub))] +=
        v.value(sub, scratch);
  });
  const auto& coef = coefficients().pot[k];
  Rational total(0);
  for (int s = 1; s <= k; ++s) {
    if (by_size[s] != 0) total += coef[s] * by_size[s];
  }
  return total;
}

// ---------------------------------------------------------------------------
// StateEvaluator

StateEvaluator::StateEvaluator(const GameSpec& spec, const State& state)
    : spec_(spec) {
  check_state(spec, state);
  const int n = spec.players();
  const int m = spec.parties();
  strategy_.assign(static_cast<std::size_t>(n), 0);
  party_ = party_masks(state, m);
  for (int j = 0; j <= m; ++j) {
    for (Mask b = party_[j]; b != 0; b &= b - 1) {
      strategy_[static_cast<std::size_t>(std::countr_zero(b))] = j;
    }
  }
  if (const auto* o = std::get_if<OrderedState>(&state)) {
    predecessors_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& seq : o->sequences) {
      Mask before = 0;
      for (int i : seq) {
        predecessors_[static_cast<std::size_t>(i - 1)] = before;
        before |= Mask{1} << (i - 1);
      }
    }
  }
}

void StateEvaluator::check_player(int player) const {
  if (player < 1 || player > spec_.players()) {
    throw InvalidArgument("player " + std::to_string(player) + " outside [1, " +
                          std::to_string(spec_.players()) + "]");
  }
}

Rational StateEvaluator::payoff(int player) const {
  check_player(player);
  const int j = strategy_[player - 1];
  if (j == 0) return Rational(0);
  const Valuation& v = spec_.valuation(j);
  const Mask bit = Mask{1} << (player - 1);
  Rational s1, s2;
  switch (spec_.scheme()) {
    case Scheme::kFairValue:
      return v.value(party_[j], s1) - v.value(party_[j] & ~bit, s2);
    case Scheme::kLaborUnion: {
      Mask before = predecessors_[player - 1];
      return v.value(before | bit, s1) - v.value(before, s2);
    }
    case Scheme::kShapley:
      return shapley_share(v, party_[j] & ~bit, player);
  }
  return Rational(0);
}

Rational StateEvaluator::deviation_payoff(int player, int target) const {
  check_player(player);
  const int m = spec_.parties();
  const int lowest = spec_.allow_unaffiliated() ? 0 : 1;
  if (target < lowest || target > m) {
    throw InvalidArgument("target " + std::to_string(target) + " outside [" +
                          std::to_string(lowest) + ", " + std::to_string(m) +
                          "]");
  }
  if (target == strategy_[player - 1]) return payoff(player);
  if (target == 0) return Rational(0);
  const Valuation& v = spec_.valuation(target);
  const Mask bit = Mask{1} << (player - 1);
  Rational s1, s2;
  switch (spec_.scheme()) {
    case Scheme::kFairValue:
    case Scheme::kLaborUnion:
      // Joining at the tail: the whole party precedes the newcomer.
      return v.value(party_[target] | bit, s1) - v.value(party_[target], s2);
    case Scheme::kShapley:
      return shapley_share(v, party_[target], player);
  }
  return Rational(0);
}

Rational StateEvaluator::total_profit() const {
  Rational total(0);
  Rational scratch;
  for (int j = 1; j <= spec_.parties(); ++j) {
    total += spec_.valuation(j).value(party_[j], scratch);
  }
  return total;
}

Rational StateEvaluator::potential() const {
  if (spec_.scheme() != Scheme::kShapley) return total_profit();
  Rational total(0);
  for (int j = 1; j <= spec_.parties(); ++j) {
    total += shapley_party_potential(spec_.valuation(j), party_[j]);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Free functions

Rational payoff(const GameSpec& spec, const State& state, int player) {
  return StateEvaluator(spec, state).payoff(player);
}

PayoffVector all_payoffs(const GameSpec& spec, const State& state) {
  StateEvaluator eval(spec, state);
  PayoffVector out;
  out.reserve(static_cast<std::size_t>(spec.players()));
  for (int i = 1; i <= spec.players(); ++i) out.push_back(eval.payoff(i));
  return out;
}

Rational deviation_payoff(const GameSpec& spec, const State& state, int player,
                          int target) {
  return StateEvaluator(spec, state).deviation_payoff(player, target);
}

Rational total_profit(const GameSpec& spec, const State& state) {
  return StateEvaluator(spec, state).total_profit();
}

Rational potential(const GameSpec& spec, const State& state) {
  return StateEvaluator(spec, state).potential();
}

State apply_move(const GameSpec& spec, const State& state, int player,
                 int target) {
  check_state(spec, state);
  const int n = spec.players();
  const int m = spec.parties();
  if (player < 1 || player > n) {
    throw InvalidArgument("player " + std::to_string(player) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  const int lowest = spec.allow_unaffiliated() ? 0 : 1;
  if (target < lowest || target > m) {
    throw InvalidArgument("target " + std::to_string(target) + " outside [" +
                          std::to_string(lowest) + ", " + std::to_string(m) +
                          "]");
  }
  const int current = strategy_of(state, player);
  if (current == target) {
    throw NoOpMove("player " + std::to_string(player) + " already plays " +
                   std::to_string(target));
  }
  if (const auto* p = std::get_if<PartitionState>(&state)) {
    PartitionState next = *p;
    next.assignment[player - 1] = target;
    return next;
  }
  OrderedState next = std::get<OrderedState>(state);
  if (current == 0) {
    auto& u = next.unaffiliated;
    u.erase(std::find(u.begin(), u.end(), player));
  } else {
    auto& seq = next.sequences[current - 1];
    seq.erase(std::find(seq.begin(), seq.end(), player));
  }
  if (target == 0) {
    auto& u = next.unaffiliated;
    u.insert(std::lower_bound(u.begin(), u.end(), player), player);
  } else {
    next.sequences[target - 1].push_back(player);
  }
  return next;
}

}  // namespace profitshare
