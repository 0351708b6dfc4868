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
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "profitshare/analysis.hpp"
#include "profitshare/corpus.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/game.hpp"

using namespace profitshare;

namespace {

State partition(std::vector<int> a) { return PartitionState{std::move(a)}; }

State ordered(std::vector<std::vector<int>> seqs, std::vector<int> unaffiliated = {}) {
  return OrderedState{std::move(seqs), std::move(unaffiliated)};
}

std::vector<Rational> sqrt_profile() {
  return {parse_rational("0"), parse_rational("1"), parse_rational("1.414214"),
          parse_rational("1.732051")};
}

// Every state of a small game, Labor Union orderings expanded.
std::vector<State> all_states(const GameSpec& spec) { return enumerate_states(spec); }

}  // namespace

TEST_CASE("two-party tight construction payoffs") {
  GameSpec fv = two_party_tight_game(3, Scheme::kFairValue);
  CHECK(payoff(fv, partition({1, 2, 2}), 2) == 0);
  GameSpec sh = two_party_tight_game(3);
  CHECK(payoff(sh, partition({1, 2, 2}), 2) == Rational(1, 2));
  CHECK(all_payoffs(sh, partition({1, 2, 2})) ==
        PayoffVector{Rational(1, 3), Rational(1, 2), Rational(1, 2)});
  CHECK(total_profit(sh, partition({2, 1, 1})) == 2);
  CHECK(total_profit(sh, partition({1, 2, 2})) == Rational(4, 3));
}

TEST_CASE("Labor Union telescoping payoffs") {
  GameSpec lu(Scheme::kLaborUnion, {Valuation::concave_cardinality(sqrt_profile())});
  State s = ordered({{3, 1, 2}});
  std::vector<Rational> c = sqrt_profile();
  CHECK(payoff(lu, s, 3) == 1);
  CHECK(payoff(lu, s, 1) == c[2] - c[1]);
  CHECK(payoff(lu, s, 2) == c[3] - c[2]);
  State t = ordered({{3, 1}}, {2});
  CHECK(payoff(lu, t, 2) == 0);
  CHECK(total_profit(lu, OrderedState::all_unaffiliated(3, 1)) == 0);
}

TEST_CASE("Fair Value with singleton parties pays singleton values") {
  Rng rng(11);
  std::vector<Valuation> vs;
  for (int j = 0; j < 4; ++j) vs.push_back(random_additive(4, rng));
  GameSpec fv(Scheme::kFairValue, vs);
  State s = partition({1, 2, 3, 4});
  for (int i = 1; i <= 4; ++i)
    CHECK(payoff(fv, s, i) == vs[i - 1].eval(Coalition::of({i})));
}

TEST_CASE("Shapley potential values") {
  GameSpec sh(Scheme::kShapley, {Valuation::concave_cardinality({0, 1, 1, 1})});
  GameSpec pair(Scheme::kShapley, {Valuation::concave_cardinality({0, 1, 1})});
  CHECK(potential(pair, partition({1, 1})) == Rational(3, 2));
  GameSpec two(Scheme::kShapley, {Valuation::concave_cardinality({0, 1, 1, 1}),
                                  Valuation::concave_cardinality({0, 1, 1, 1})});
  // Party 1 empty contributes nothing.
  CHECK(potential(two, partition({2, 2, 2})) == potential(sh, partition({1, 1, 1})));
  CHECK(potential(two, partition({1, 2, 2})) == 1 + Rational(3, 2));
}

TEST_CASE("Shapley share equals the average over arrival orders") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Valuation v = random_valuation(static_cast<ValuationKind>(trial % 4), 5, rng);
    Mask members = static_cast<Mask>(draw(rng, 1, 31));
    std::vector<int> list = Coalition::from_mask(members).members();
    for (int i : list) {
      Mask others = members & ~(Mask{1} << (i - 1));
      CHECK(shapley_share(v, others, i) == oracle::shapley_by_orderings(v, list, i));
    }
  }
}

TEST_CASE("Shapley with additive valuations coincides with Fair Value") {
  Rng rng(9);
  std::vector<Valuation> vs = {random_additive(4, rng), random_additive(4, rng)};
  GameSpec sh(Scheme::kShapley, vs);
  GameSpec fv = sh.with_scheme(Scheme::kFairValue);
  for (const State& s : all_states(sh)) CHECK(all_payoffs(sh, s) == all_payoffs(fv, s));
}

TEST_CASE("apply_move semantics") {
  GameSpec lu(Scheme::kLaborUnion, {Valuation::concave_cardinality(sqrt_profile()),
                                    Valuation::concave_cardinality(sqrt_profile())});
  State s = ordered({{3, 1, 2}, {}});
  State moved = apply_move(lu, s, 1, 2);
  CHECK(moved == ordered({{3, 2}, {1}}));
  CHECK(s == ordered({{3, 1, 2}, {}}));  // value semantics
  State out = apply_move(lu, s, 1, 0);
  CHECK(out == ordered({{3, 2}, {}}, {1}));
  CHECK(payoff(lu, out, 1) == 0);
  CHECK_THROWS_AS(apply_move(lu, s, 1, 1), NoOpMove);
  CHECK_THROWS_AS(apply_move(lu, s, 1, 3), InvalidArgument);

  GameSpec fv = two_party_tight_game(3, Scheme::kFairValue);
  CHECK(apply_move(fv, partition({1, 1, 1}), 1, 2) == partition({2, 1, 1}));
  CHECK_THROWS_AS(apply_move(fv, partition({1, 1, 1}), 1, 0), InvalidArgument);
}

TEST_CASE("state and scheme mismatches") {
  GameSpec fv = two_party_tight_game(3, Scheme::kFairValue);
  GameSpec lu = two_party_tight_game(3, Scheme::kLaborUnion);
  CHECK_THROWS_AS(payoff(fv, ordered({{1, 2, 3}, {}}), 1), SchemeMismatch);
  CHECK_THROWS_AS(payoff(lu, partition({1, 1, 1}), 1), SchemeMismatch);
  CHECK_THROWS_AS(payoff(fv, partition({1, 1, 1}), 4), InvalidArgument);
  CHECK_THROWS_AS(payoff(fv, partition({1, 1, 1}), 0), InvalidArgument);
  CHECK_THROWS_AS(check_state(fv, partition({1, 3, 1})), InvalidArgument);
  CHECK_THROWS_AS(check_state(fv, partition({1, 1})), InvalidArgument);
  CHECK_THROWS_AS(check_state(lu, ordered({{1, 2}, {2, 3}})), InvalidArgument);
  CHECK_THROWS_AS(check_state(lu, ordered({{1}, {3}})), InvalidArgument);
}

TEST_CASE("game construction errors") {
  CHECK_THROWS_AS(GameSpec(Scheme::kFairValue, {}), InvalidArgument);
  CHECK_THROWS_AS(GameSpec(Scheme::kFairValue,
                           {Valuation::additive({Rational(1)}),
                            Valuation::additive({Rational(1), Rational(1)})}),
                  InvalidArgument);
  CHECK_THROWS_AS(GameSpec(Scheme::kFairValue, {Valuation::additive({Rational(1)})}, true),
                  InvalidArgument);
  std::vector<Rational> sq = {0, 1, 4, 9};
  std::vector<Rational> table(8);
  for (Mask s = 0; s < 8; ++s) table[s] = sq[std::popcount(s)];
  Valuation bad = Valuation::explicit_table(3, table);
  CHECK_THROWS_AS(GameSpec(Scheme::kShapley, {bad}), ValidationFailure);
  GameSpec skipped(Scheme::kShapley, {bad}, std::nullopt, false);
  CHECK_FALSE(skipped.valuations_verified());
}

TEST_CASE("payoff invariants over every small corpus state") {
  for (Scheme scheme : {Scheme::kFairValue, Scheme::kShapley, Scheme::kLaborUnion}) {
    for (const GameSpec& spec : make_corpus(scheme, 25, 900, {2, 4, 2})) {
      for (const State& s : all_states(spec)) {
        std::vector<Mask> parties = party_masks(s, spec.parties());
        PayoffVector u = all_payoffs(spec, s);
        for (int j = 1; j <= spec.parties(); ++j) {
          Rational sum(0);
          for (int i : Coalition::from_mask(parties[j]).members()) sum += u[i - 1];
          Rational value = spec.valuation(j).eval(Coalition::from_mask(parties[j]));
          if (scheme == Scheme::kFairValue)
            CHECK(sum <= value);
          else
            CHECK(sum == value);
        }
        if (scheme != Scheme::kShapley) CHECK(potential(spec, s) == total_profit(spec, s));
        // Exact potential for FV and Shapley.
        if (scheme == Scheme::kLaborUnion) continue;
        for (int i = 1; i <= spec.players(); ++i)
          for (int t = 1; t <= spec.parties(); ++t) {
            if (t == strategy_of(s, i)) continue;
            State n = apply_move(spec, s, i, t);
            CHECK(potential(spec, n) - potential(spec, s) == payoff(spec, n, i) - payoff(spec, s, i));
          }
      }
    }
  }
}

TEST_CASE("Labor Union guaranteed payoff and order invariance") {
  for (const GameSpec& spec : make_corpus(Scheme::kLaborUnion, 20, 1300, {2, 4, 2})) {
    for (const State& s : all_states(spec)) {
      const auto& os = std::get<OrderedState>(s);
      PartitionState shape;
      shape.assignment.resize(static_cast<std::size_t>(spec.players()));
      for (int i = 1; i <= spec.players(); ++i) shape.assignment[i - 1] = strategy_of(s, i);
      Rational tp(0);
      for (int j = 1; j <= spec.parties(); ++j) {
        Mask q = party_masks(s, spec.parties())[j];
        tp += spec.valuation(j).eval(Coalition::from_mask(q));
      }
      CHECK(total_profit(spec, s) == tp);
      CHECK(os.players() == spec.players());
      for (int mover = 1; mover <= spec.players(); ++mover)
        for (int t = 0; t <= spec.parties(); ++t) {
          if (t == strategy_of(s, mover)) continue;
          State n = apply_move(spec, s, mover, t);
          for (int i = 1; i <= spec.players(); ++i) {
            if (i == mover || strategy_of(s, i) == 0) continue;
            CHECK(payoff(spec, n, i) >= payoff(spec, s, i));
          }
        }
    }
  }
}

TEST_CASE("evaluator agrees with the free functions") {
  GameSpec sh = two_party_tight_game(4);
  for (const State& s : all_states(sh)) {
    StateEvaluator ev(sh, s);
    for (int i = 1; i <= 4; ++i) {
      CHECK(ev.payoff(i) == payoff(sh, s, i));
      for (int t = 1; t <= 2; ++t)
        if (t != ev.strategy(i))
          CHECK(ev.deviation_payoff(i, t) == payoff(sh, apply_move(sh, s, i, t), i));
    }
    CHECK(ev.potential() == potential(sh, s));
  }
}

TEST_CASE("state rendering") {
  CHECK(to_string(partition({1, 2, 2})) == "(1,2,2)");
  CHECK(to_string(ordered({{3, 1}, {}}, {2})) == "P1=(3,1) P2=() U={2}");
  CHECK(OrderedState::from_partition(PartitionState{{2, 1, 2}}, 2) ==
        OrderedState{{{2}, {1, 3}}, {}});
  CHECK(OrderedState::from_partition(PartitionState{{0, 1, 0}}, 2) ==
        OrderedState{{{2}, {}}, {1, 3}});
}
