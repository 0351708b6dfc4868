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

#include "profitshare/valuation.hpp"

#include <random>
#include <string>

#include "profitshare/errors.hpp"

namespace profitshare {

struct Valuation::Data {
  ValuationKind kind;
  int n = 0;
  // Table entries, additive weights or the concave profile c_0..c_n.
  std::vector<Rational> payload;
  std::shared_ptr<const WeightedGraph> graph;
  // 2^n values for non-table kinds when n <= kTabulationLimit.
  std::vector<Rational> cache;
};

std::string to_string(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kExplicitTable:
      return "table";
    case ValuationKind::kAdditive:
      return "additive";
    case ValuationKind::kConcaveCardinality:
      return "concave";
    case ValuationKind::kCoverage:
      return "coverage";
  }
  return "unknown";
}

std::string to_string(ValidationViolation::Property property) {
  switch (property) {
    case ValidationViolation::Property::kMonotone:
      return "monotone";
    case ValidationViolation::Property::kSubmodular:
      return "submodular";
    case ValidationViolation::Property::kDisjointSum:
      return "disjoint_sum";
  }
  return "unknown";
}

namespace {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxPlayers) + "]");
  }
}

}  // namespace

Valuation::Valuation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Valuation Valuation::explicit_table(int n, std::vector<Rational> values) {
  check_ground_set(n);
  if (n > 24) throw TooLarge("explicit tables are limited to 24 players");
  std::size_t expected = std::size_t{1} << n;
  if (values.size() != expected) {
    throw InvalidArgument("table for n=" + std::to_string(n) + " needs " +
                          std::to_string(expected) + " entries, got " +
                          std::to_string(values.size()));
  }
  if (values[0] != 0) {
    throw InvalidArgument("table entry for the empty coalition must be 0, got " +
                          to_string(values[0]));
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0) {
      throw InvalidArgument("table entry " + std::to_string(k) +
                            " is negative: " + to_string(values[k]));
    }
    values[k].canonicalize();
  }
  auto data = std::make_shared<Data>();
  data->kind = ValuationKind::kExplicitTable;
  data->n = n;
  data->payload = std::move(values);
  return Valuation(std::move(data));
}

Valuation Valuation::additive(std::vector<Rational> weights) {
  int n = static_cast<int>(weights.size());
  check_ground_set(n);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < 0) {
      throw InvalidArgument("additive weight of player " +
                            std::to_string(k + 1) + " is negative");
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = ValuationKind::kAdditive;
  data->n = n;
  data->payload = std::move(weights);
  Valuation v(data);
  if (n <= kTabulationLimit) {
    data->cache.resize(std::size_t{1} << n);
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      // Extend the table from the mask with its lowest bit cleared.
      Mask rest = m & (m - 1);
      data->cache[m] = data->cache[rest] + data->payload[std::countr_zero(m)];
    }
  }
  return v;
}

Valuation Valuation::concave_cardinality(std::vector<Rational> values) {
  if (values.size() < 2) {
    throw InvalidArgument("concave profile needs c_0..c_n with n >= 1");
  }
  int n = static_cast<int>(values.size()) - 1;
  check_ground_set(n);
  if (values[0] != 0) throw InvalidArgument("concave profile must start at 0");
  for (int k = 1; k <= n; ++k) {
    if (values[k] < values[k - 1]) {
      throw InvalidArgument("concave profile decreases at k=" +
                            std::to_string(k));
    }
    if (k >= 2 && values[k] - values[k - 1] > values[k - 1] - values[k - 2]) {
      throw InvalidArgument("concave profile increments grow at k=" +
                            std::to_string(k));
    }
  }
  auto data = std::make_shared<Data>();
  data->kind = ValuationKind::kConcaveCardinality;
  data->n = n;
  data->payload = std::move(values);
  if (n <= kTabulationLimit) {
    data->cache.resize(std::size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      data->cache[m] = data->payload[static_cast<std::size_t>(std::popcount(m))];
    }
  }
  return Valuation(std::move(data));
}

Valuation Valuation::coverage(std::shared_ptr<const WeightedGraph> graph) {
  if (!graph) throw InvalidArgument("coverage valuation needs a graph");
  auto data = std::make_shared<Data>();
  data->kind = ValuationKind::kCoverage;
  data->n = graph->vertices();
  data->graph = std::move(graph);
  int n = data->n;
  if (n <= kTabulationLimit) {
    data->cache.assign(std::size_t{1} << n, Rational(0));
    // Each edge contributes to every mask that hits it: add its weight to all
    // masks, then take it back from the masks disjoint from it.
    Rational total = data->graph->total_weight();
    Mask full = (Mask{1} << n) - 1;
    for (Mask m = 1; m <= full; ++m) data->cache[m] = total;
    for (const Edge& e : data->graph->edges()) {
      Mask outside = full & ~e.endpoints.mask();
      for_each_submask(outside, [&](Mask sub) {
        if (sub != 0) data->cache[sub] -= e.weight;
      });
    }
  }
  return Valuation(std::move(data));
}

ValuationKind Valuation::kind() const { return data_->kind; }

int Valuation::ground_set_size() const { return data_->n; }

bool Valuation::tabulated() const {
  return data_->kind == ValuationKind::kExplicitTable || !data_->cache.empty();
}

Rational Valuation::compute(Mask mask) const {
  switch (data_->kind) {
    case ValuationKind::kExplicitTable:
      return data_->payload[mask];
    case ValuationKind::kAdditive: {
      Rational total(0);
      for (Mask m = mask; m != 0; m &= m - 1) {
        total += data_->payload[std::countr_zero(m)];
      }
      return total;
    }
    case ValuationKind::kConcaveCardinality:
      return data_->payload[static_cast<std::size_t>(std::popcount(mask))];
    case ValuationKind::kCoverage:
      return data_->graph->covered_weight(Coalition::from_mask(mask));
  }
  return Rational(0);
}

const Rational& Valuation::value(Mask mask, Rational& scratch) const {
  if (data_->kind == ValuationKind::kExplicitTable) return data_->payload[mask];
  if (!data_->cache.empty()) return data_->cache[mask];
  scratch = compute(mask);
  return scratch;
}

Rational Valuation::eval(Coalition coalition) const {
  if (coalition.max_member() > data_->n) {
    throw InvalidCoalition("coalition " + to_string(coalition) +
                           " exceeds ground set {1.." +
                           std::to_string(data_->n) + "}");
  }
  Rational scratch;
  return value(coalition.mask(), scratch);
}

Rational Valuation::marginal(Coalition coalition, int player) const {
  if (coalition.contains(player)) {
    throw InvalidArgument("player " + std::to_string(player) +
                          " already belongs to " + to_string(coalition));
  }
  if (player < 1 || player > data_->n) {
    throw InvalidCoalition("player " + std::to_string(player) +
                           " outside ground set {1.." +
                           std::to_string(data_->n) + "}");
  }
  return eval(coalition.with(player)) - eval(coalition);
}

Valuation Valuation::scaled(const Rational& factor) const {
  if (factor <= 0) throw InvalidArgument("scale factor must be positive");
  auto scale_all = [&](std::vector<Rational> values) {
    for (Rational& x : values) x *= factor;
    return values;
  };
  switch (data_->kind) {
    case ValuationKind::kExplicitTable:
      return explicit_table(data_->n, scale_all(data_->payload));
    case ValuationKind::kAdditive:
      return additive(scale_all(data_->payload));
    case ValuationKind::kConcaveCardinality:
      return concave_cardinality(scale_all(data_->payload));
    case ValuationKind::kCoverage: {
      std::vector<Edge> edges = data_->graph->edges();
      for (Edge& e : edges) e.weight *= factor;
      return coverage(std::make_shared<const WeightedGraph>(data_->n,
                                                            std::move(edges)));
    }
  }
  return *this;
}

const std::vector<Rational>& Valuation::table() const {
  if (data_->kind != ValuationKind::kExplicitTable)
    throw InvalidArgument("valuation is not an explicit table");
  return data_->payload;
}

const std::vector<Rational>& Valuation::weights() const {
  if (data_->kind != ValuationKind::kAdditive)
    throw InvalidArgument("valuation is not additive");
  return data_->payload;
}

const std::vector<Rational>& Valuation::concave_values() const {
  if (data_->kind != ValuationKind::kConcaveCardinality)
    throw InvalidArgument("valuation is not a concave cardinality profile");
  return data_->payload;
}

const std::shared_ptr<const WeightedGraph>& Valuation::graph() const {
  if (data_->kind != ValuationKind::kCoverage)
    throw InvalidArgument("valuation is not a coverage function");
  return data_->graph;
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.data_ == b.data_) return true;
  if (a.data_->kind != b.data_->kind || a.data_->n != b.data_->n) return false;
  if (a.data_->kind != ValuationKind::kCoverage) {
    return a.data_->payload == b.data_->payload;
  }
  const auto& ea = a.data_->graph->edges();
  const auto& eb = b.data_->graph->edges();
  if (ea.size() != eb.size()) return false;
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (ea[k].endpoints != eb[k].endpoints || ea[k].weight != eb[k].weight)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

class Checker {
 public:
  Checker(const Valuation& v, std::size_t max_witnesses)
      : v_(v), max_witnesses_(max_witnesses) {}

  const Rational& at(Mask m) { return v_.value(m, scratch_[next_++ % 4]); }

  // v(S) <= v(S + i)
  void monotone_step(Mask s, int i, ValidationReport& report) {
    Mask si = s | (Mask{1} << (i - 1));
    Rational lo = at(s);
    Rational hi = at(si);
    if (lo > hi) {
      report.monotone = false;
      record(report, ValidationViolation::Property::kMonotone, s, si, i, lo, hi);
    }
  }

  // v(S + i) - v(S) >= v(S + j + i) - v(S + j)
  void submodular_step(Mask s, int j, int i, ValidationReport& report) {
    Mask bi = Mask{1} << (i - 1);
    Mask sj = s | (Mask{1} << (j - 1));
    Rational lhs = at(s | bi);
    lhs -= at(s);
    Rational rhs = at(sj | bi);
    rhs -= at(sj);
    if (lhs < rhs) {
      report.submodular = false;
      record(report, ValidationViolation::Property::kSubmodular, s, sj, i, lhs,
             rhs);
    }
  }

  // sum_{x in X} (v(Y + x) - v(Y)) >= v(Y + X) - v(Y)
  bool disjoint_sum(Mask y, Mask x, std::vector<ValidationViolation>& out) {
    const Rational vy = at(y);
    Rational lhs(0);
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      lhs += at(y | bit);
      lhs -= vy;
    }
    Rational rhs = at(y | x);
    rhs -= vy;
    if (lhs < rhs) {
      if (out.size() < max_witnesses_) {
        out.push_back({ValidationViolation::Property::kDisjointSum,
                       Coalition::from_mask(y), Coalition::from_mask(x), 0, lhs,
                       rhs});
      }
      return false;
    }
    return true;
  }

 private:
  void record(ValidationReport& report, ValidationViolation::Property property,
              Mask first, Mask second, int player, const Rational& lhs,
              const Rational& rhs) {
    std::size_t count = 0;
    for (const auto& w : report.violations) count += w.property == property;
    if (count >= max_witnesses_) return;
    report.violations.push_back({property, Coalition::from_mask(first),
                                 Coalition::from_mask(second), player, lhs, rhs});
  }

  const Valuation& v_;
  std::size_t max_witnesses_;
  Rational scratch_[4];
  unsigned next_ = 0;
};

// Disjoint (X, Y) with X non-empty, drawn uniformly over the 3^n labelings.
std::pair<Mask, Mask> draw_disjoint(int n, std::mt19937_64& rng) {
  Mask x = 0, y = 0;
  for (int k = 0; k < n; ++k) {
    switch (rng() % 3) {
      case 0:
        x |= Mask{1} << k;
        break;
      case 1:
        y |= Mask{1} << k;
        break;
      default:
        break;
    }
  }
  return {x, y};
}

}  // namespace

ValidationReport validate(const Valuation& valuation,
                          const ValidateOptions& options) {
  const int n = valuation.ground_set_size();
  if (n > options.max_exhaustive_players) {
    throw TooLarge("exhaustive validation limited to " +
                   std::to_string(options.max_exhaustive_players) +
                   " players, valuation has " + std::to_string(n) +
                   "; use sampled validation");
  }
  ValidationReport report;
  Checker check(valuation, options.max_witnesses);
  const Mask limit = Mask{1} << n;

  for (Mask s = 0; s < limit; ++s) {
    for (int i = 1; i <= n; ++i) {
      if ((s >> (i - 1)) & 1U) continue;
      check.monotone_step(s, i, report);
    }
  }
  for (Mask s = 0; s < limit; ++s) {
    for (int j = 1; j <= n; ++j) {
      if ((s >> (j - 1)) & 1U) continue;
      for (int i = 1; i <= n; ++i) {
        if (i == j || ((s >> (i - 1)) & 1U)) continue;
        check.submodular_step(s, j, i, report);
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  std::vector<ValidationViolation> disjoint;
  for (std::size_t k = 0; k < options.disjoint_samples; ++k) {
    auto [x, y] = draw_disjoint(n, rng);
    if (x == 0) continue;
    check.disjoint_sum(y, x, disjoint);
  }
  report.violations.insert(report.violations.end(), disjoint.begin(),
                           disjoint.end());
  if (!disjoint.empty()) report.submodular = false;
  return report;
}

ValidationReport validate_sampled(const Valuation& valuation,
                                  std::size_t samples, std::uint64_t seed) {
  const int n = valuation.ground_set_size();
  ValidationReport report;
  report.sampled = true;
  Checker check(valuation, 8);
  std::mt19937_64 rng(seed);
  const Mask limit_mask = n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    Mask s = static_cast<Mask>(rng()) & limit_mask;
    int i = static_cast<int>(rng() % static_cast<unsigned>(n)) + 1;
    int j = static_cast<int>(rng() % static_cast<unsigned>(n)) + 1;
    s &= ~(Mask{1} << (i - 1));
    check.monotone_step(s, i, report);
    if (i != j) {
      s &= ~(Mask{1} << (j - 1));
      check.submodular_step(s, j, i, report);
    }
  }
  std::vector<ValidationViolation> disjoint;
  for (std::size_t k = 0; k < samples; ++k) {
    auto [x, y] = draw_disjoint(n, rng);
    if (x == 0) continue;
    check.disjoint_sum(y, x, disjoint);
  }
  report.violations.insert(report.violations.end(), disjoint.begin(),
                           disjoint.end());
  if (!disjoint.empty()) report.submodular = false;
  return report;
}

std::vector<ValidationViolation> check_disjoint_sum_bound(
    const Valuation& valuation, std::size_t max_witnesses) {
  const int n = valuation.ground_set_size();
  if (n > 14) throw TooLarge("disjoint-pair enumeration limited to 14 players");
  std::vector<ValidationViolation> out;
  Checker check(valuation, max_witnesses);
  const Mask full = (Mask{1} << n) - 1;
  for (Mask y = 0; y <= full; ++y) {
    for_each_submask(full & ~y, [&](Mask x) {
      if (x != 0) check.disjoint_sum(y, x, out);
    });
  }
  return out;
}

std::vector<ValidationViolation> check_diminishing_returns(
    const Valuation& valuation, std::size_t max_witnesses) {
  const int n = valuation.ground_set_size();
  if (n > 12) throw TooLarge("subset-pair enumeration limited to 12 players");
  std::vector<ValidationViolation> out;
  const Mask full = (Mask{1} << n) - 1;
  Rational s1, s2, s3, s4;
  for (Mask j = 0; j <= full; ++j) {
    for (int i = 1; i <= n; ++i) {
      Mask bi = Mask{1} << (i - 1);
      if (j & bi) continue;
      Rational rhs = valuation.value(j | bi, s1) - valuation.value(j, s2);
      for_each_submask(j, [&](Mask sub) {
        Rational lhs =
            valuation.value(sub | bi, s3) - valuation.value(sub, s4);
        if (lhs < rhs && out.size() < max_witnesses) {
          out.push_back({ValidationViolation::Property::kSubmodular,
                         Coalition::from_mask(sub), Coalition::from_mask(j), i,
                         lhs, rhs});
        }
      });
    }
  }
  return out;
}

}  // namespace profitshare
