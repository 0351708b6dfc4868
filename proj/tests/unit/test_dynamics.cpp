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

#include <memory>

#include "doctest.h"
#include "oracles.hpp"
#include "profitshare/analysis.hpp"
#include "profitshare/corpus.hpp"
#include "profitshare/dynamics.hpp"
#include "profitshare/errors.hpp"

using namespace profitshare;

namespace {

State partition(std::vector<int> a) { return PartitionState{std::move(a)}; }

std::shared_ptr<const WeightedGraph> unit_triangle() {
  return std::make_shared<const WeightedGraph>(
      3, std::vector<Edge>{{Coalition::of({1, 2}), Rational(1)},
                           {Coalition::of({2, 3}), Rational(1)},
                           {Coalition::of({1, 3}), Rational(1)}});
}

DynamicsConfig with_selector(Selector s, std::uint64_t seed = 0) {
  DynamicsConfig c;
  c.selector = s;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("best responses in the two-party tight construction") {
  GameSpec sh = two_party_tight_game(3);
  BestResponse br = best_response(sh, partition({1, 1, 1}), 1);
  CHECK(br.strategy == 2);
  CHECK(br.delta == Rational(2, 3));
  CHECK(br.payoff == 1);
  ImprovementProfile p = improvement_profile(sh, partition({1, 1, 1}));
  CHECK(p.per_player[0].delta == Rational(2, 3));
  CHECK(p.per_player[1].delta == Rational(1, 2));
  CHECK(p.per_player[2].delta == Rational(1, 2));
  CHECK(p.total_delta == Rational(5, 3));
  ImprovementProfile ne = improvement_profile(sh, partition({1, 2, 2}));
  CHECK(ne.total_delta == 0);
  for (const BestResponse& b : ne.per_player) CHECK(b.delta == 0);
  BestResponse stay = best_response(sh, partition({1, 2, 2}), 2);
  CHECK(stay.strategy == 2);
  CHECK(stay.delta == 0);
}

TEST_CASE("unaffiliated Labor Union player joins the lowest-index best party") {
  std::vector<Rational> unit(3, Rational(1));
  GameSpec lu(Scheme::kLaborUnion,
              {Valuation::additive(unit), Valuation::additive(unit)});
  State s = OrderedState{{{1}, {2}}, {3}};
  BestResponse br = best_response(lu, s, 3);
  CHECK(br.strategy == 1);
  CHECK(br.delta == 1);
}

TEST_CASE("one basic step reaches the optimum") {
  GameSpec sh = two_party_tight_game(3);
  std::optional<Move> m = step(sh, partition({1, 1, 1}), {});
  REQUIRE(m);
  CHECK(m->record.mover == 1);
  CHECK(m->record.to == 2);
  CHECK(total_profit(sh, m->state) == 2);
  Trace t = run(sh, partition({1, 1, 1}), {});
  CHECK(t.steps.size() == 1);
  CHECK(t.converged);
  CHECK_FALSE(t.truncated);
  CHECK_FALSE(step(sh, partition({1, 2, 2}), {}));
}

TEST_CASE("alpha improvements must be strict") {
  // Player 1 earns 1 in party 1 and would earn 3/2 in party 2.
  GameSpec g(Scheme::kFairValue, {Valuation::additive({Rational(1), Rational(1)}),
                                  Valuation::additive({Rational(3, 2), Rational(1)})});
  DynamicsConfig c;
  c.alpha = Rational(1, 2);
  CHECK_FALSE(step(g, partition({1, 2}), c));
  c.alpha = Rational(1, 4);
  std::optional<Move> m = step(g, partition({1, 2}), c);
  REQUIRE(m);
  CHECK(m->record.mover == 1);
  CHECK(is_alpha_improvement(Rational(2), Rational(3), Rational(1, 2)) == false);
  CHECK(is_alpha_improvement(Rational(2), Rational(3), Rational(0)));
  CHECK_FALSE(is_alpha_improvement(Rational(2), Rational(2), Rational(0)));
}

TEST_CASE("exactly n steps from the all-unaffiliated Labor Union state") {
  for (const GameSpec& spec : make_corpus(Scheme::kLaborUnion, 40, 20100)) {
    State start = OrderedState::all_unaffiliated(spec.players(), spec.parties());
    Trace rr = run(spec, start, with_selector(Selector::kRoundRobin));
    CHECK(rr.steps.size() == static_cast<std::size_t>(spec.players()));
    CHECK(rr.converged);
    CHECK(improvement_profile(spec, rr.final_state).total_delta == 0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Trace r = run(spec, start, with_selector(Selector::kRandomSeeded, seed));
      CHECK(r.steps.size() == static_cast<std::size_t>(spec.players()));
    }
  }
}

TEST_CASE("fewer than n steps once some player has no positive marginal") {
  // The third player to join a single coverage party over a triangle adds
  // nothing, so it never leaves the unaffiliated set.
  GameSpec single(Scheme::kLaborUnion, {Valuation::coverage(unit_triangle())});
  Trace t = run(single, OrderedState::all_unaffiliated(3, 1),
                with_selector(Selector::kRoundRobin));
  CHECK(t.converged);
  CHECK(t.steps.size() == 2);

  // Two parties over different graphs: player 3 is only incident to an edge
  // of the first graph, which player 1 covers first.
  auto g1 = std::make_shared<const WeightedGraph>(
      3, std::vector<Edge>{{Coalition::of({1, 3}), Rational(1)},
                           {Coalition::of({1, 2}), Rational(1)}});
  auto g2 = std::make_shared<const WeightedGraph>(
      3, std::vector<Edge>{{Coalition::of({1, 2}), Rational(1)}});
  GameSpec split(Scheme::kLaborUnion, {Valuation::coverage(g1), Valuation::coverage(g2)});
  Trace u = run(split, OrderedState::all_unaffiliated(3, 2),
                with_selector(Selector::kRoundRobin));
  CHECK(u.converged);
  CHECK(u.steps.size() < 3);
}

TEST_CASE("potential strictly increases and equals total profit for Fair Value") {
  for (Scheme scheme : {Scheme::kFairValue, Scheme::kShapley, Scheme::kLaborUnion}) {
    for (const GameSpec& spec : make_corpus(scheme, 20, 4000)) {
      std::vector<State> starts = enumerate_states(spec);
      const State& start = starts[starts.size() / 2];
      Trace t = run(spec, start, {});
      CHECK(t.converged);
      Rational prev = t.initial_potential;
      for (const TraceStep& s : t.steps) {
        CHECK(s.potential_after > prev);
        prev = s.potential_after;
        if (scheme != Scheme::kShapley) CHECK(s.potential_after == s.total_profit_after);
        CHECK(s.payoff_after > s.payoff_before);
      }
      CHECK(oracle::stable(spec, t.final_state, Rational(0)));
    }
  }
}

TEST_CASE("runs are deterministic for a fixed seed") {
  GameSpec spec = random_game(Scheme::kLaborUnion, 77, {5, 5, 3});
  State start = OrderedState::all_unaffiliated(5, spec.parties());
  for (Selector s : {Selector::kBasicMaxImprovement, Selector::kRoundRobin,
                     Selector::kRandomSeeded}) {
    Trace a = run(spec, start, with_selector(s, 123));
    Trace b = run(spec, start, with_selector(s, 123));
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
      CHECK(a.steps[k].mover == b.steps[k].mover);
      CHECK(a.steps[k].to == b.steps[k].to);
      CHECK(a.steps[k].potential_after == b.steps[k].potential_after);
    }
    CHECK(a.final_state == b.final_state);
  }
}

TEST_CASE("step cap truncates the trace") {
  GameSpec sh = two_party_tight_game(4);
  DynamicsConfig c;
  c.max_steps = 1;
  c.selector = Selector::kRoundRobin;
  Trace t = run(sh, partition({1, 1, 1, 1}), c);
  CHECK(t.steps.size() == 1);
  CHECK(t.truncated);
  CHECK_FALSE(t.converged);
}

TEST_CASE("configuration checks") {
  DynamicsConfig c;
  c.alpha = -1;
  CHECK_THROWS_AS(check_config(c), InvalidArgument);
  CHECK(parse_selector("roundrobin") == Selector::kRoundRobin);
  CHECK(to_string(Selector::kRandomSeeded) == "random");
  CHECK_THROWS_AS(parse_selector("fastest"), InvalidArgument);
}

TEST_CASE("convergence bound arithmetic") {
  ConvergenceBounds b = convergence_bounds(10, Rational(2), Rational(0), Rational(1, 10),
                                           Rational(1));
  CHECK(b.nash.steps == 12);
  CHECK(b.nash.guaranteed_value == Rational(9, 20));
  CHECK(b.nash.a == 5);
  CHECK(b.nash.b == Rational(1, 10));
  CHECK(b.alpha_nash.steps == b.nash.steps);
  CHECK(b.alpha_nash.guaranteed_value == b.nash.guaranteed_value);

  ConvergenceBounds a = convergence_bounds(10, Rational(2), Rational(1, 2), Rational(1, 10),
                                           Rational(1));
  CHECK(a.alpha_nash.a == 4);
  CHECK(a.alpha_nash.guaranteed_value == Rational(2, 5) * Rational(9, 10));

  ConvergenceBound near_one = improvement_bound(Rational(3), Rational(1), Rational(99, 100));
  CHECK(near_one.steps >= 1);
  CHECK(near_one.guaranteed_value == Rational(3, 100));
  CHECK_THROWS_AS(improvement_bound(Rational(1), Rational(1), Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(improvement_bound(Rational(1), Rational(1), Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(convergence_bounds(3, Rational(0), Rational(0), Rational(1, 2), Rational(1)),
                  InvalidArgument);
}

TEST_CASE("Labor Union step envelope") {
  // log base 3/2 of 4 lies in (3, 4].
  CHECK(labor_union_step_envelope(3, Rational(1, 2), Rational(4)) == 15);
  CHECK(labor_union_step_envelope(5, Rational(1), Rational(1)) == 5);
  CHECK_THROWS_AS(labor_union_step_envelope(3, Rational(0), Rational(4)), InvalidArgument);
}
