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

#include "profitshare/corpus.hpp"

#include <algorithm>

#include "profitshare/analysis.hpp"
#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

Rational small_fraction(Rng& rng, int max_num, int max_den) {
  Rational r(draw(rng, 1, max_num), draw(rng, 1, max_den));
  r.canonicalize();
  return r;
}

}  // namespace

int draw(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Valuation random_additive(int n, Rng& rng) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.push_back(small_fraction(rng, 6, 3));
  return Valuation::additive(std::move(w));
}

Valuation random_concave(int n, Rng& rng) {
  std::vector<Rational> inc;
  for (int i = 0; i < n; ++i) inc.push_back(small_fraction(rng, 6, 4));
  std::sort(inc.begin(), inc.end(), std::greater<>());
  std::vector<Rational> c{Rational(0)};
  for (const Rational& d : inc) c.push_back(c.back() + d);
  return Valuation::concave_cardinality(std::move(c));
}

Valuation random_budget_table(int n, Rng& rng) {
  std::vector<Rational> w;
  Rational total(0), largest(0);
  for (int i = 0; i < n; ++i) {
    w.push_back(small_fraction(rng, 6, 3));
    total += w.back();
    largest = std::max(largest, w.back());
  }
  // Budget somewhere between the largest weight and the total.
  Rational share(draw(rng, 0, 4), 4);
  share.canonicalize();
  Rational budget = largest + (total - largest) * share;
  std::vector<Rational> values(std::size_t{1} << n);
  for (Mask s = 0; s < values.size(); ++s) {
    Rational x(0);
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) x += w[i];
    }
    Rational soft = budget + (x - budget) / 4;
    values[s] = x < soft ? x : soft;
  }
  return Valuation::explicit_table(n, std::move(values));
}

std::shared_ptr<const WeightedGraph> random_graph(int n, Rng& rng,
                                                  bool hyperedges) {
  std::vector<Edge> edges;
  std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
  auto add = [&](Coalition ends) {
    for (const Edge& e : edges) {
      if (e.endpoints == ends) return;
    }
    edges.push_back(Edge{ends, small_fraction(rng, 4, 3)});
    for (int v : ends.members()) touched[v] = true;
  };
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (draw(rng, 0, 1) == 1) add(Coalition::of({a, b}));
    }
  }
  if (n >= 2) {
    for (int v = 1; v <= n; ++v) {
      if (touched[v]) continue;
      int other = draw(rng, 1, n - 1);
      if (other >= v) ++other;
      add(Coalition::of({v, other}));
    }
  }
  if (hyperedges && n >= 3 && draw(rng, 0, 1) == 1) {
    int a = draw(rng, 1, n - 2);
    int b = draw(rng, a + 1, n - 1);
    int c = draw(rng, b + 1, n);
    add(Coalition::of({a, b, c}));
  }
  return std::make_shared<const WeightedGraph>(n, std::move(edges));
}

Valuation random_coverage(int n, Rng& rng, bool hyperedges) {
  return Valuation::coverage(random_graph(n, rng, hyperedges));
}

Valuation random_valuation(ValuationKind kind, int n, Rng& rng) {
  switch (kind) {
    case ValuationKind::kExplicitTable:
      return random_budget_table(n, rng);
    case ValuationKind::kAdditive:
      return random_additive(n, rng);
    case ValuationKind::kConcaveCardinality:
      return random_concave(n, rng);
    case ValuationKind::kCoverage:
      return random_coverage(n, rng);
  }
  throw InvalidArgument("unknown valuation kind");
}

GameSpec random_game(Scheme scheme, std::uint64_t seed,
                     const CorpusOptions& options) {
  Rng rng(seed);
  const int n = draw(rng, options.min_players, options.max_players);
  const int m = draw(rng, 1, std::min(options.max_parties, n));
  static constexpr ValuationKind kinds[] = {
      ValuationKind::kExplicitTable, ValuationKind::kAdditive,
      ValuationKind::kConcaveCardinality, ValuationKind::kCoverage};
  std::vector<Valuation> valuations;
  std::optional<Valuation> shared_coverage;
  for (int j = 0; j < m; ++j) {
    ValuationKind kind = kinds[draw(rng, 0, m >= 2 ? 3 : 2)];
    if (kind == ValuationKind::kCoverage) {
      if (!shared_coverage) shared_coverage = random_coverage(n, rng);
      valuations.push_back(*shared_coverage);
    } else {
      valuations.push_back(random_valuation(kind, n, rng));
    }
  }
  return GameSpec(scheme, std::move(valuations));
}

std::vector<GameSpec> make_corpus(Scheme scheme, std::size_t count,
                                  std::uint64_t base_seed,
                                  const CorpusOptions& options) {
  std::vector<GameSpec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(random_game(scheme, base_seed + k, options));
  }
  return out;
}

GameSpec two_party_tight_game(int n, Scheme scheme) {
  if (n < 3) throw InvalidArgument("the two-party construction needs n >= 3");
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(1, n - 1));
  w[0] = Rational(1, n);
  std::vector<Rational> flat(static_cast<std::size_t>(n) + 1, Rational(1));
  flat[0] = 0;
  return GameSpec(scheme, {Valuation::additive(std::move(w)),
                           Valuation::concave_cardinality(std::move(flat))});
}

std::optional<PoaSearchResult> search_fair_value_poa(const Rational& threshold,
                                                     std::uint64_t seed,
                                                     std::size_t attempts) {
  CorpusOptions options{2, 4, 2};
  PriceOptions price_options;
  price_options.collect_states = false;
  for (std::size_t k = 0; k < attempts; ++k) {
    GameSpec spec = random_game(Scheme::kFairValue, seed + k, options);
    if (spec.parties() != 2) continue;
    EquilibriumReport report = prices(spec, Rational(0), price_options);
    if (report.poa > threshold) {
      return PoaSearchResult{std::move(spec), seed + k, report.poa};
    }
  }
  return std::nullopt;
}

Rational min_singleton(const GameSpec& spec) {
  std::optional<Rational> low;
  for (const Valuation& v : spec.valuations()) {
    for (int i = 1; i <= spec.players(); ++i) {
      Rational x = v.eval(Coalition::of({i}));
      if (!low || x < *low) low = x;
    }
  }
  return *low;
}

Rational max_singleton(const GameSpec& spec) {
  Rational high(0);
  for (const Valuation& v : spec.valuations()) {
    for (int i = 1; i <= spec.players(); ++i) {
      Rational x = v.eval(Coalition::of({i}));
      if (x > high) high = x;
    }
  }
  return high;
}

GameSpec rescale_to_unit_floor(const GameSpec& spec) {
  Rational low = min_singleton(spec);
  if (low <= 0) {
    throw InvalidArgument("a singleton is worth 0; no rescaling reaches 1");
  }
  Rational factor = 1 / low;
  std::vector<Valuation> scaled;
  for (const Valuation& v : spec.valuations()) scaled.push_back(v.scaled(factor));
  return GameSpec(spec.scheme(), std::move(scaled), std::nullopt,
                  spec.valuations_verified());
}

}  // namespace profitshare
