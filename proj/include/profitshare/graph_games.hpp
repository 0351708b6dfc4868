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

#include <memory>
#include <optional>
#include <vector>

#include "profitshare/game.hpp"
#include "profitshare/valuation.hpp"
#include "profitshare/weighted_graph.hpp"

namespace profitshare {

// v(S) = weight of (hyper)edges with at least one endpoint in S.
Valuation coverage_valuation(std::shared_ptr<const WeightedGraph> graph);

// Every party valued by the coverage function of `graph`. Validated up to
// 12 vertices; larger graphs rely on coverage being monotone submodular.
GameSpec coverage_game(std::shared_ptr<const WeightedGraph> graph,
                       Scheme scheme, int parties);

// Split of an affiliated player's incident edge weight:
//   a: edges to earlier arrivals in its party
//   b: edges to later arrivals in its party
//   c: edges leaving the party (unaffiliated endpoints included)
// Partition states carry no arrival order, so only a + b is known there.
struct GraphDecomposition {
  std::optional<Rational> a;
  std::optional<Rational> b;
  Rational a_plus_b;
  Rational c;
};

// Throws Unsupported on hyperedges and InvalidArgument for an unaffiliated
// or out-of-range player.
GraphDecomposition decompose(const WeightedGraph& graph, const State& state,
                             int player);

// (A + B)/2 + C for Fair Value and Shapley, B + C for Labor Union (which
// needs an ordered state).
Rational closed_form_payoff(const WeightedGraph& graph, const State& state,
                            int player, Scheme scheme);

struct CrossCheckEntry {
  Scheme scheme;
  int player = 0;
  Rational closed_form;
  Rational generic;
  Rational cut;  // C of the decomposition
  bool equal = false;
};

// Closed forms against the generic payoff rules with every party valued by
// the coverage function. Partition states are checked under Fair Value and
// Shapley, ordered states under Labor Union (affiliated players only).
// Mismatches are reported, never thrown.
std::vector<CrossCheckEntry> cross_check(
    std::shared_ptr<const WeightedGraph> graph, const State& state,
    int parties);

// One scheme only: `spec` must give every party the coverage valuation of
// `graph`. Saves rebuilding the game when sweeping many states.
std::vector<CrossCheckEntry> cross_check(const GameSpec& spec,
                                         const WeightedGraph& graph,
                                         const State& state);

struct CutIdentity {
  Rational total_profit;
  Rational total_weight;
  Rational cut_weight;
  bool holds = false;
};

// tp(S) = total edge weight + weight of the cut between the two parties.
// Requires parties == 2 and no unaffiliated player.
CutIdentity cut_identity(std::shared_ptr<const WeightedGraph> graph,
                         const State& state, int parties);

}  // namespace profitshare
