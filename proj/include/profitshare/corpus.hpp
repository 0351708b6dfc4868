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
#include <vector>

#include "profitshare/game.hpp"
#include "profitshare/valuation.hpp"
#include "profitshare/weighted_graph.hpp"

namespace profitshare {

// Seeded instance generators. All draws use raw mt19937_64 output, so a seed
// names the same instance on every platform.
using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int draw(Rng& rng, int lo, int hi);

// Positive weights p/q with p in [1, 6], q in [1, 3].
Valuation random_additive(int n, Rng& rng);
// c_0 = 0 with strictly positive, non-increasing increments.
Valuation random_concave(int n, Rng& rng);
// Explicit table of g(w(S)) for positive weights w and the concave,
// strictly increasing g(x) = min(x, B + (x - B)/4).
Valuation random_budget_table(int n, Rng& rng);
// Ordinary graph in which every vertex has at least one edge; optional
// size-3 hyperedges.
std::shared_ptr<const WeightedGraph> random_graph(int n, Rng& rng,
                                                  bool hyperedges = false);
Valuation random_coverage(int n, Rng& rng, bool hyperedges = false);
Valuation random_valuation(ValuationKind kind, int n, Rng& rng);

struct CorpusOptions {
  int min_players = 2;
  int max_players = 5;
  int max_parties = 3;
};

// n and m drawn from the options, each party's kind drawn uniformly from
// the four constructors. Coverage is only drawn when m >= 2, and all
// coverage parties of one game share a graph without isolated vertices.
// Together with the strictly increasing other kinds this keeps every
// player's best marginal positive in every state.
GameSpec random_game(Scheme scheme, std::uint64_t seed,
                     const CorpusOptions& options = {});

// `count` games for `scheme` with seeds base_seed, base_seed + 1, ...
// The same seed gives the same valuations under every scheme.
std::vector<GameSpec> make_corpus(Scheme scheme, std::size_t count,
                                  std::uint64_t base_seed,
                                  const CorpusOptions& options = {});

// Two parties: v_1 additive with weight 1/n for player 1 and 1/(n-1) for
// the rest, v_2 = 1 on every non-empty set. n >= 3.
GameSpec two_party_tight_game(int n, Scheme scheme = Scheme::kShapley);

// First Fair Value game (n in [2, 4], m = 2) whose price of anarchy exceeds
// `threshold`, scanning seeds from `seed`.
struct PoaSearchResult {
  GameSpec spec;
  std::uint64_t seed;
  Rational poa;
};
std::optional<PoaSearchResult> search_fair_value_poa(const Rational& threshold,
                                                     std::uint64_t seed,
                                                     std::size_t attempts);

// Smallest singleton value over all parties and players.
Rational min_singleton(const GameSpec& spec);
// Largest singleton value (the highest payoff any player can reach).
Rational max_singleton(const GameSpec& spec);

// Every valuation divided by the smallest singleton value, so that every
// non-empty coalition is worth at least 1. Throws InvalidArgument when some
// singleton is worth 0.
GameSpec rescale_to_unit_floor(const GameSpec& spec);

}  // namespace profitshare
