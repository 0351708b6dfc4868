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

#include "profitshare/graph_games.hpp"

#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

void require_ordinary(const WeightedGraph& graph) {
  if (graph.has_hyperedges()) {
    throw Unsupported("edge decomposition is defined for ordinary graphs only");
  }
}

// Arrival rank of each affiliated player within its party; -1 if none.
std::vector<int> arrival_rank(const State& state, int n) {
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, -1);
  if (const auto* o = std::get_if<OrderedState>(&state)) {
    for (const auto& seq : o->sequences) {
      for (std::size_t k = 0; k < seq.size(); ++k) rank[seq[k]] = static_cast<int>(k);
    }
  }
  return rank;
}

}  // namespace

GameSpec coverage_game(std::shared_ptr<const WeightedGraph> graph,
                       Scheme scheme, int parties) {
  const bool small = graph->vertices() <= 12;
  Valuation v = coverage_valuation(std::move(graph));
  return GameSpec(scheme, std::vector<Valuation>(static_cast<std::size_t>(parties), v),
                  std::nullopt, small);
}

Valuation coverage_valuation(std::shared_ptr<const WeightedGraph> graph) {
  return Valuation::coverage(std::move(graph));
}

GraphDecomposition decompose(const WeightedGraph& graph, const State& state,
                             int player) {
  require_ordinary(graph);
  const int n = graph.vertices();
  if (player < 1 || player > n) {
    throw InvalidArgument("player " + std::to_string(player) + " out of range");
  }
  const int own = strategy_of(state, player);
  if (own == 0) {
    throw InvalidArgument("player " + std::to_string(player) + " is unaffiliated");
  }
  const bool ordered = std::holds_alternative<OrderedState>(state);
  const std::vector<int> rank = arrival_rank(state, n);

  GraphDecomposition d;
  Rational a(0), b(0);
  d.c = 0;
  for (const Edge& e : graph.edges()) {
    if (!e.endpoints.contains(player)) continue;
    int other = (e.endpoints.without(player)).members().front();
    if (strategy_of(state, other) != own) {
      d.c += e.weight;
    } else if (ordered && rank[other] < rank[player]) {
      a += e.weight;
    } else {
      b += e.weight;
    }
  }
  d.a_plus_b = a + b;
  if (ordered) {
    d.a = a;
    d.b = b;
  }
  return d;
}

Rational closed_form_payoff(const WeightedGraph& graph, const State& state,
                            int player, Scheme scheme) {
  GraphDecomposition d = decompose(graph, state, player);
  if (scheme == Scheme::kLaborUnion) {
    if (!d.b) throw InvalidArgument("Labor Union closed form needs an ordered state");
    return *d.b + d.c;
  }
  return d.a_plus_b / 2 + d.c;
}

std::vector<CrossCheckEntry> cross_check(
    std::shared_ptr<const WeightedGraph> graph, const State& state,
    int parties) {
  require_ordinary(*graph);
  std::vector<Scheme> schemes;
  if (std::holds_alternative<OrderedState>(state)) {
    schemes = {Scheme::kLaborUnion};
  } else {
    schemes = {Scheme::kFairValue, Scheme::kShapley};
  }
  std::vector<CrossCheckEntry> out;
  for (Scheme scheme : schemes) {
    GameSpec spec = coverage_game(graph, scheme, parties);
    for (CrossCheckEntry& e : cross_check(spec, *graph, state)) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<CrossCheckEntry> cross_check(const GameSpec& spec,
                                         const WeightedGraph& graph,
                                         const State& state) {
  require_ordinary(graph);
  StateEvaluator eval(spec, state);
  std::vector<CrossCheckEntry> out;
  for (int i = 1; i <= graph.vertices(); ++i) {
    if (eval.strategy(i) == 0) continue;
    GraphDecomposition d = decompose(graph, state, i);
    CrossCheckEntry entry;
    entry.scheme = spec.scheme();
    entry.player = i;
    entry.closed_form = spec.scheme() == Scheme::kLaborUnion
                            ? *d.b + d.c
                            : Rational(d.a_plus_b / 2 + d.c);
    entry.generic = eval.payoff(i);
    entry.cut = d.c;
    entry.equal = entry.closed_form == entry.generic;
    out.push_back(std::move(entry));
  }
  return out;
}

CutIdentity cut_identity(std::shared_ptr<const WeightedGraph> graph,
                         const State& state, int parties) {
  if (parties != 2) {
    throw InvalidArgument("cut identity needs exactly 2 parties, got " +
                          std::to_string(parties));
  }
  require_ordinary(*graph);
  const int n = graph->vertices();
  for (int i = 1; i <= n; ++i) {
    if (strategy_of(state, i) == 0) {
      throw InvalidArgument("cut identity needs every player affiliated");
    }
  }
  Scheme scheme = std::holds_alternative<OrderedState>(state) ? Scheme::kLaborUnion
                                                              : Scheme::kFairValue;
  GameSpec spec = coverage_game(graph, scheme, parties);
  CutIdentity r;
  r.total_profit = total_profit(spec, state);
  r.total_weight = graph->total_weight();
  r.cut_weight = 0;
  for (const Edge& e : graph->edges()) {
    std::vector<int> ends = e.endpoints.members();
    if (strategy_of(state, ends[0]) != strategy_of(state, ends[1])) {
      r.cut_weight += e.weight;
    }
  }
  r.holds = r.total_profit == r.total_weight + r.cut_weight;
  return r;
}

}  // namespace profitshare
