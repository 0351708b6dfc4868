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

#include <algorithm>
#include <memory>

#include "doctest.h"
#include "profitshare/analysis.hpp"
#include "profitshare/corpus.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/graph_games.hpp"

using namespace profitshare;

namespace {

using GraphPtr = std::shared_ptr<const WeightedGraph>;

GraphPtr unit_triangle() {
  return std::make_shared<const WeightedGraph>(
      3, std::vector<Edge>{{Coalition::of({1, 2}), Rational(1)},
                           {Coalition::of({2, 3}), Rational(1)},
                           {Coalition::of({1, 3}), Rational(1)}});
}

State partition(std::vector<int> a) { return PartitionState{std::move(a)}; }

const CrossCheckEntry* find(const std::vector<CrossCheckEntry>& entries, Scheme s, int player) {
  for (const CrossCheckEntry& e : entries)
    if (e.scheme == s && e.player == player) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("coverage valuation over a graph") {
  Valuation v = coverage_valuation(unit_triangle());
  CHECK(v.eval(Coalition::of({1})) == 2);
  CHECK(v.eval(Coalition::of({1, 2, 3})) == 3);
  CHECK(validate(v).ok());
}

TEST_CASE("edge decomposition") {
  GraphPtr g = unit_triangle();
  State s = OrderedState{{{1}, {2, 3}}, {}};
  GraphDecomposition d3 = decompose(*g, s, 3);
  CHECK(*d3.a == 1);
  CHECK(*d3.b == 0);
  CHECK(d3.c == 1);
  GraphDecomposition d2 = decompose(*g, s, 2);
  CHECK(*d2.a == 0);
  CHECK(*d2.b == 1);
  CHECK(d2.c == 1);
  GraphDecomposition alone = decompose(*g, s, 1);
  CHECK(*alone.a == 0);
  CHECK(*alone.b == 0);
  CHECK(alone.c == g->weighted_degree(1));
  GraphDecomposition p = decompose(*g, partition({1, 2, 2}), 2);
  CHECK_FALSE(p.a);
  CHECK_FALSE(p.b);
  CHECK(p.a_plus_b == 1);
  CHECK(p.c == 1);

  auto hyper = std::make_shared<const WeightedGraph>(
      3, std::vector<Edge>{{Coalition::of({1, 2, 3}), Rational(1)}});
  CHECK_THROWS_AS(decompose(*hyper, partition({1, 1, 1}), 1), Unsupported);
  CHECK_THROWS_AS(decompose(*g, OrderedState{{{1}, {2}}, {3}}, 3), InvalidArgument);
}

TEST_CASE("closed-form payoffs") {
  GraphPtr g = unit_triangle();
  CHECK(closed_form_payoff(*g, partition({1, 2, 2}), 2, Scheme::kShapley) == Rational(3, 2));
  CHECK(closed_form_payoff(*g, OrderedState{{{1}, {2, 3}}, {}}, 3, Scheme::kLaborUnion) == 1);
  auto with_isolated = std::make_shared<const WeightedGraph>(
      3, std::vector<Edge>{{Coalition::of({1, 2}), Rational(1)}});
  for (Scheme s : {Scheme::kFairValue, Scheme::kShapley})
    CHECK(closed_form_payoff(*with_isolated, partition({1, 1, 2}), 3, s) == 0);
  CHECK(closed_form_payoff(*with_isolated, OrderedState{{{1, 2}, {3}}, {}}, 3,
                           Scheme::kLaborUnion) == 0);
}

TEST_CASE("cross-check on the unit triangle") {
  GraphPtr g = unit_triangle();
  std::vector<CrossCheckEntry> p = cross_check(g, partition({1, 2, 2}), 2);
  const CrossCheckEntry* sh = find(p, Scheme::kShapley, 2);
  REQUIRE(sh);
  CHECK(sh->closed_form == Rational(3, 2));
  CHECK(sh->generic == Rational(3, 2));
  CHECK(sh->equal);
  const CrossCheckEntry* fv = find(p, Scheme::kFairValue, 2);
  REQUIRE(fv);
  CHECK(fv->closed_form == Rational(3, 2));
  CHECK(fv->generic == 1);
  CHECK_FALSE(fv->equal);

  std::vector<CrossCheckEntry> o = cross_check(g, OrderedState{{{1}, {2, 3}}, {}}, 2);
  const CrossCheckEntry* lu = find(o, Scheme::kLaborUnion, 3);
  REQUIRE(lu);
  CHECK(lu->closed_form == 1);
  CHECK(lu->generic == 1);
  CHECK(lu->equal);
}

TEST_CASE("closed forms match generic Shapley and Labor Union payoffs on random graphs") {
  Rng rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    int n = draw(rng, 2, 5);
    GraphPtr g = random_graph(n, rng, false);
    for (int m = 1; m <= std::min(3, n); ++m) {
      GameSpec sh = coverage_game(g, Scheme::kShapley, m);
      for (const State& s : enumerate_states(sh))
        for (const CrossCheckEntry& e : cross_check(g, s, m))
          if (e.scheme == Scheme::kShapley) CHECK(e.equal);
      GameSpec lu = coverage_game(g, Scheme::kLaborUnion, m);
      EnumerationOptions affiliated;
      affiliated.include_unaffiliated = false;
      for (const State& s : enumerate_states(lu, affiliated))
        for (const CrossCheckEntry& e : cross_check(g, s, m)) CHECK(e.equal);
    }
  }
}

TEST_CASE("two-party total profit is total weight plus cut weight") {
  GraphPtr g = unit_triangle();
  CutIdentity c = cut_identity(g, partition({1, 2, 2}), 2);
  CHECK(c.total_profit == 5);
  CHECK(c.total_weight == 3);
  CHECK(c.cut_weight == 2);
  CHECK(c.holds);
  CutIdentity one = cut_identity(g, partition({1, 1, 1}), 2);
  CHECK(one.total_profit == 3);
  CHECK(one.cut_weight == 0);
  CHECK(one.holds);
  auto path = std::make_shared<const WeightedGraph>(
      2, std::vector<Edge>{{Coalition::of({1, 2}), Rational(1)}});
  CutIdentity p = cut_identity(path, partition({1, 2}), 2);
  CHECK(p.total_profit == 2);
  CHECK(p.holds);
  CHECK_THROWS_AS(cut_identity(g, partition({1, 2, 3}), 3), InvalidArgument);

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    GraphPtr r = random_graph(draw(rng, 2, 6), rng, false);
    GameSpec fv = coverage_game(r, Scheme::kFairValue, 2);
    for (const State& s : enumerate_states(fv)) CHECK(cut_identity(r, s, 2).holds);
  }
}
