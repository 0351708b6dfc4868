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
#include <memory>
#include <string>
#include <vector>

#include "profitshare/coalition.hpp"
#include "profitshare/rational.hpp"
#include "profitshare/weighted_graph.hpp"

namespace profitshare {

enum class ValuationKind {
  kExplicitTable,
  kAdditive,
  kConcaveCardinality,
  kCoverage,
};

std::string to_string(ValuationKind kind);

// Immutable oracle for a set function v: 2^{1..n} -> Q with v(empty) = 0.
//
// Copies share the underlying data, so a Valuation is cheap to pass by value
// and safe to evaluate from several threads. Ground sets of up to
// kTabulationLimit players are tabulated at construction, which makes eval a
// table lookup.
class Valuation {
 public:
  static constexpr int kTabulationLimit = 16;

  // values[mask] = v(coalition with bit (i-1) set for each member i);
  // exactly 2^n non-negative entries, values[0] == 0.
  static Valuation explicit_table(int n, std::vector<Rational> values);
  // v(S) = sum of weights[i-1] over i in S; non-negative weights.
  static Valuation additive(std::vector<Rational> weights);
  // v(S) = values[|S|] for values = (c_0 = 0, c_1, ..., c_n), non-decreasing
  // with non-increasing increments.
  static Valuation concave_cardinality(std::vector<Rational> values);
  // v(S) = weight of edges with at least one endpoint in S.
  static Valuation coverage(std::shared_ptr<const WeightedGraph> graph);

  ValuationKind kind() const;
  int ground_set_size() const;

  // Throws InvalidCoalition when a member lies outside {1..n}.
  Rational eval(Coalition coalition) const;
  // v(S + player) - v(S). Throws InvalidArgument when player is in S.
  Rational marginal(Coalition coalition, int player) const;

  // Unchecked lookup for hot loops; `mask` must fit the ground set. Returns
  // a reference into the table when tabulated, otherwise computes the value
  // into `scratch` and returns that.
  const Rational& value(Mask mask, Rational& scratch) const;
  bool tabulated() const;

  // Same kind, every value multiplied by factor > 0.
  Valuation scaled(const Rational& factor) const;

  // Kind-specific payload, for serialisation. Each accessor throws
  // InvalidArgument when called on the wrong kind.
  const std::vector<Rational>& table() const;
  const std::vector<Rational>& weights() const;
  const std::vector<Rational>& concave_values() const;
  const std::shared_ptr<const WeightedGraph>& graph() const;

  // Structural equality of kind and payload.
  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  struct Data;
  explicit Valuation(std::shared_ptr<const Data> data);
  Rational compute(Mask mask) const;

  std::shared_ptr<const Data> data_;
};

// One failed inequality, with the sets that exhibit it.
//   monotone:   first = I, second = J = I + {player}; lhs = v(I), rhs = v(J)
//   submodular: first = I, second = J, player i not in J;
//               lhs = v(I + i) - v(I), rhs = v(J + i) - v(J)
//   disjoint:   first = Y, second = X (disjoint);
//               lhs = sum_x (v(Y + x) - v(Y)), rhs = v(Y + X) - v(Y)
struct ValidationViolation {
  enum class Property { kMonotone, kSubmodular, kDisjointSum };
  Property property;
  Coalition first;
  Coalition second;
  int player = 0;
  Rational lhs;
  Rational rhs;
};

std::string to_string(ValidationViolation::Property property);

struct ValidationReport {
  bool monotone = true;
  bool submodular = true;
  // True when the verdicts come from sampling rather than full enumeration.
  bool sampled = false;
  std::vector<ValidationViolation> violations;

  bool ok() const { return monotone && submodular && violations.empty(); }
};

struct ValidateOptions {
  // Exhaustive verification is refused (TooLarge) above this size.
  int max_exhaustive_players = 16;
  // Disjoint (X, Y) pairs drawn for the disjoint-sum spot check.
  std::size_t disjoint_samples = 256;
  std::uint64_t seed = 0x5eedULL;
  // Witnesses kept per property; the flags are always exhaustive.
  std::size_t max_witnesses = 8;
};

// Exhaustive monotonicity and submodularity check.
//
// Submodularity uses the equivalent local form
//   v(S + i) - v(S) >= v(S + j + i) - v(S + j),
// so witnesses always have J = I + {j}. The first witness reported is the
// lexicographically smallest (I by mask, then j, then i).
ValidationReport validate(const Valuation& valuation,
                          const ValidateOptions& options = {});

// Random (S, i, j) triples and (X, Y) pairs; usable at any ground-set size.
ValidationReport validate_sampled(const Valuation& valuation,
                                  std::size_t samples, std::uint64_t seed);

// Every disjoint (X, Y) pair (3^n of them). Ground set must be <= 14.
std::vector<ValidationViolation> check_disjoint_sum_bound(
    const Valuation& valuation, std::size_t max_witnesses = 8);

// Full diminishing-returns check over all I subset J, i not in J. n <= 12.
std::vector<ValidationViolation> check_diminishing_returns(
    const Valuation& valuation, std::size_t max_witnesses = 8);

}  // namespace profitshare
