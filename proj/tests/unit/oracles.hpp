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

// Slow, obviously-correct reference computations used to cross-check the
// library's optimised paths.

#include <algorithm>
#include <functional>
#include <vector>

#include "profitshare/game.hpp"
#include "profitshare/valuation.hpp"

namespace oracle {

using profitshare::Coalition;
using profitshare::GameSpec;
using profitshare::Rational;
using profitshare::State;
using profitshare::Valuation;

// Average marginal contribution of `player` over every arrival order of
// `members` (which contains `player`).
inline Rational shapley_by_orderings(const Valuation& v, std::vector<int> members,
                                     int player) {
  std::sort(members.begin(), members.end());
  Rational sum(0);
  long orders = 0;
  do {
    Coalition before;
    for (int i : members) {
      if (i == player) {
        sum += v.marginal(before, i);
        break;
      }
      before = before.with(i);
    }
    ++orders;
  } while (std::next_permutation(members.begin(), members.end()));
  return sum / orders;
}

// Every assignment in {lo..m}^n, last player fastest.
inline std::vector<std::vector<int>> assignments(int n, int lo, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), lo);
  while (true) {
    out.push_back(a);
    int k = n - 1;
    while (k >= 0 && a[k] == m) a[k--] = lo;
    if (k < 0) break;
    ++a[k];
  }
  return out;
}

// Is `state` stable against every unilateral move, using apply_move and
// payoff only?
inline bool stable(const GameSpec& spec, const State& state, const Rational& alpha) {
  const int lo = spec.allow_unaffiliated() ? 0 : 1;
  for (int i = 1; i <= spec.players(); ++i) {
    Rational now = profitshare::payoff(spec, state, i);
    for (int t = lo; t <= spec.parties(); ++t) {
      if (t == profitshare::strategy_of(state, i)) continue;
      State next = profitshare::apply_move(spec, state, i, t);
      Rational moved = profitshare::payoff(spec, next, i);
      if (moved > (1 + alpha) * now) return false;
    }
  }
  return true;
}

// Partition-state prices for Fair Value / Shapley games.
struct Prices {
  Rational opt, poa, pos;
};

inline Prices partition_prices(const GameSpec& spec, const Rational& alpha) {
  Rational opt(0), worst(-1), best(-1);
  for (const auto& a : assignments(spec.players(), 1, spec.parties())) {
    State s{profitshare::PartitionState{a}};
    Rational tp = profitshare::total_profit(spec, s);
    if (tp > opt) opt = tp;
    if (!stable(spec, s, alpha)) continue;
    if (worst < 0 || tp < worst) worst = tp;
    if (tp > best) best = tp;
  }
  return {opt, opt / worst, opt / best};
}

}  // namespace oracle
