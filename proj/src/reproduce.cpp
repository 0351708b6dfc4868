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

#include "profitshare/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "profitshare/analysis.hpp"
#include "profitshare/corpus.hpp"
#include "profitshare/dynamics.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/game.hpp"
#include "profitshare/graph_games.hpp"
#include "profitshare/valuation.hpp"

namespace profitshare {
namespace {

// Per-instance tally, merged in instance order.
struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first;
  std::map<std::string, std::uint64_t> counters;
  Rational max_ratio{0};
  std::uint64_t max_steps = 0;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  void merge(const Tally& other) {
    instances += other.instances;
    checks += other.checks;
    if (violations == 0 && other.violations > 0) first = other.first;
    violations += other.violations;
    for (const auto& [k, v] : other.counters) counters[k] += v;
    if (other.max_ratio > max_ratio) max_ratio = other.max_ratio;
    max_steps = std::max(max_steps, other.max_steps);
  }
};

unsigned worker_count(const ReproduceOptions& options) {
  if (options.threads > 0) return options.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(k) for k in [0, count) on a small pool and merges the tallies in
// index order, so the outcome does not depend on scheduling.
Tally parallel_tally(std::size_t count, const ReproduceOptions& options,
                     const std::function<Tally(std::size_t)>& body) {
  std::vector<Tally> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        slots[k] = body(k);
      } catch (const std::exception& e) {
        slots[k].fail("instance " + std::to_string(k) + ": " + e.what());
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(options), count));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Tally total;
  for (const Tally& t : slots) total.merge(t);
  return total;
}

std::string summary(const Tally& t) {
  std::ostringstream out;
  out << t.instances << " instances, " << t.checks << " checks, "
      << t.violations << " violations";
  if (t.violations > 0) out << " (first: " << t.first << ")";
  return out.str();
}

std::string label(Scheme scheme, std::size_t index, const GameSpec& spec) {
  return to_string(scheme) + " #" + std::to_string(index) + " (n=" +
         std::to_string(spec.players()) + ", m=" + std::to_string(spec.parties()) +
         ")";
}

GameSpec corpus_game(Scheme scheme, std::size_t k, const ReproduceOptions& options) {
  return random_game(scheme, options.seed + k);
}

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);
const Rational kTenth(1, 10);

// ---------------------------------------------------------------------------
// 1. Two-party tight construction

CriterionResult criterion_tight_prices(const ReproduceOptions&) {
  CriterionResult r;
  const std::map<int, std::pair<Rational, Rational>> expected = {
      {3, {Rational(3, 2), Rational(1)}},
      {4, {Rational(8, 5), Rational(6, 5)}},
      {5, {Rational(5, 3), Rational(4, 3)}}};
  std::ostringstream detail;
  r.passed = true;
  for (const auto& [n, want] : expected) {
    GameSpec spec = two_party_tight_game(n);
    PriceOptions po;
    po.collect_states = false;
    EquilibriumReport report = prices(spec, Rational(0), po);
    bool ok = report.poa == want.first && report.pos == want.second;
    r.passed = r.passed && ok;
    detail << "n=" << n << " poa=" << to_string(report.poa)
           << " pos=" << to_string(report.pos) << (ok ? "" : " MISMATCH") << "; ";
  }
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------
// 2. Exact potential / perfectness chain

CriterionResult criterion_potential(const ReproduceOptions& options) {
  CriterionResult r;
  std::ostringstream detail;
  r.passed = true;
  for (Scheme scheme : {Scheme::kFairValue, Scheme::kShapley, Scheme::kLaborUnion}) {
    Tally t = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
      Tally local;
      GameSpec spec = corpus_game(scheme, k, options);
      NicenessReport report = verify_niceness(spec, Rational(2), {}, 1);
      local.instances = 1;
      local.checks = report.moves_checked;
      bool ok = scheme == Scheme::kLaborUnion
                    ? report.chain_holds && report.welfare_bound_holds
                    : report.exact_potential_holds;
      if (!ok) {
        local.fail(label(scheme, k, spec) + ": " +
                   (report.witnesses.empty() ? std::string("?")
                                             : report.witnesses.front().check + " " +
                                                   report.witnesses.front().detail));
      }
      for (int j = 1; j <= spec.parties(); ++j) {
        local.counters[to_string(spec.valuation(j).kind())]++;
      }
      return local;
    });
    r.passed = r.passed && t.violations == 0 && t.instances >= 200;
    detail << to_string(scheme) << ": " << summary(t) << "; ";
    if (scheme == Scheme::kFairValue) {
      detail << "kinds";
      for (const auto& [k, v] : t.counters) detail << ' ' << k << '=' << v;
      detail << "; ";
    }
  }
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------
// 3. Price-of-anarchy bounds

CriterionResult criterion_poa(const ReproduceOptions& options) {
  CriterionResult r;
  std::ostringstream detail;
  r.passed = true;
  PriceOptions po;
  po.collect_states = false;
  for (Scheme scheme : {Scheme::kFairValue, Scheme::kLaborUnion, Scheme::kShapley}) {
    Tally t = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
      Tally local;
      local.instances = 1;
      GameSpec spec = corpus_game(scheme, k, options);
      const int n = spec.players();
      EquilibriumReport plain = prices(spec, Rational(0), po);
      ++local.checks;
      Rational bound = scheme == Scheme::kShapley ? Rational(2) - Rational(1, n)
                                                  : Rational(2);
      if (plain.poa > bound) {
        local.fail(label(scheme, k, spec) + ": poa " + to_string(plain.poa) +
                   " > " + to_string(bound));
      }
      local.max_ratio = plain.poa;
      if (scheme != Scheme::kShapley) {
        for (const Rational& alpha : {kQuarter, kHalf}) {
          EquilibriumReport rep = prices(spec, alpha, po);
          ++local.checks;
          if (rep.poa > 2 + alpha) {
            local.fail(label(scheme, k, spec) + ": alpha=" + to_string(alpha) +
                       " poa " + to_string(rep.poa));
          }
          if (rep.poa < plain.poa) {
            local.fail(label(scheme, k, spec) + ": alpha-poa below plain poa");
          }
        }
      }
      return local;
    });
    r.passed = r.passed && t.violations == 0;
    detail << to_string(scheme) << ": " << summary(t)
           << ", max poa " << to_string(t.max_ratio) << "; ";
  }
  std::optional<PoaSearchResult> found =
      search_fair_value_poa(Rational(3, 2), options.seed, 20000);
  if (found) {
    detail << "search: fair_value seed " << found->seed << " has poa "
           << to_string(found->poa);
  } else {
    detail << "search: no fair_value instance with poa > 3/2";
    r.passed = false;
  }
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------
// 4. Fair Value PoS = 1 and strong stability of the Labor Union optimum

CriterionResult criterion_pos_strong(const ReproduceOptions& options) {
  CriterionResult r;
  std::ostringstream detail;
  PriceOptions po;
  po.collect_states = false;
  Tally fv = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
    Tally local;
    local.instances = 1;
    local.checks = 1;
    GameSpec spec = corpus_game(Scheme::kFairValue, k, options);
    EquilibriumReport rep = prices(spec, Rational(0), po);
    if (rep.pos != 1) {
      local.fail(label(Scheme::kFairValue, k, spec) + ": pos " + to_string(rep.pos));
    }
    return local;
  });
  Tally lu = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
    Tally local;
    local.instances = 1;
    GameSpec spec = corpus_game(Scheme::kLaborUnion, k, options);
    OptimalStructure opt = optimum(spec);
    // Every arrival order of the optimal partition.
    OrderedState state = *opt.ordered;
    std::function<void(std::size_t)> orders = [&](std::size_t j) {
      if (j == state.sequences.size()) {
        ++local.checks;
        if (auto dev = find_coalition_deviation(spec, State{state})) {
          local.fail(label(Scheme::kLaborUnion, k, spec) + ": optimum " +
                     to_string(State{state}) + " refuted by " +
                     to_string(dev->result));
        }
        return;
      }
      auto& seq = state.sequences[j];
      std::sort(seq.begin(), seq.end());
      do {
        orders(j + 1);
      } while (std::next_permutation(seq.begin(), seq.end()));
    };
    orders(0);
    return local;
  });
  r.passed = fv.violations == 0 && lu.violations == 0;
  detail << "fair_value pos=1: " << summary(fv) << "; labor_union strong optimum: "
         << summary(lu);
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------
// 5. Step bounds of the basic dynamics

CriterionResult criterion_bounds(const ReproduceOptions& options) {
  CriterionResult r;
  std::ostringstream detail;
  r.passed = true;
  const std::vector<Rational> epsilons = {kHalf, kQuarter, kTenth};
  for (Scheme scheme : {Scheme::kFairValue, Scheme::kLaborUnion}) {
    Tally t = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
      Tally local;
      local.instances = 1;
      GameSpec spec = corpus_game(scheme, k, options);
      const int n = spec.players();
      const Rational opt = optimum(spec).value;
      for (const Rational& alpha : {Rational(0), kQuarter, kHalf}) {
        std::vector<ConvergenceBound> bounds;
        std::uint64_t horizon = 0;
        for (const Rational& eps : epsilons) {
          bounds.push_back(convergence_bounds(n, Rational(2), alpha, eps, opt).alpha_nash);
          horizon = std::max(horizon, bounds.back().steps);
        }
        DynamicsConfig config{alpha, Selector::kBasicMaxImprovement, 0, horizon};
        for_each_state(spec, [&](const State& initial) {
          Trace trace = run(spec, initial, config);
          for (const ConvergenceBound& b : bounds) {
            ++local.checks;
            std::size_t at = std::min<std::size_t>(trace.steps.size(), b.steps);
            Rational tp = at == 0 ? trace.initial_total_profit
                                  : trace.steps[at - 1].total_profit_after;
            if (tp < b.guaranteed_value) {
              local.fail(label(scheme, k, spec) + ": from " + to_string(initial) +
                         " alpha=" + to_string(alpha) + " eps=" +
                         to_string(b.epsilon) + " tp " + to_string(tp) + " < " +
                         to_string(b.guaranteed_value));
            }
          }
        });
      }
      return local;
    });
    r.passed = r.passed && t.violations == 0;
    detail << to_string(scheme) << ": " << summary(t) << "; ";
  }
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------
// 6. n steps from the all-unaffiliated state

CriterionResult criterion_n_steps(const ReproduceOptions& options) {
  CriterionResult r;
  Tally t = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
    Tally local;
    local.instances = 1;
    GameSpec spec = corpus_game(Scheme::kLaborUnion, k, options);
    const int n = spec.players();
    State start = OrderedState::all_unaffiliated(n, spec.parties());
    std::vector<DynamicsConfig> configs;
    configs.push_back({Rational(0), Selector::kRoundRobin, 0, 100000});
    for (int s = 0; s < options.random_orders; ++s) {
      configs.push_back({Rational(0), Selector::kRandomSeeded,
                         static_cast<std::uint64_t>(s), 100000});
    }
    for (const DynamicsConfig& config : configs) {
      ++local.checks;
      Trace trace = run(spec, start, config);
      std::set<int> movers;
      for (const TraceStep& s : trace.steps) movers.insert(s.mover);
      bool nash = classify_state(spec, trace.final_state, Rational(0)).is_nash;
      if (trace.steps.size() != static_cast<std::size_t>(n) || !nash ||
          movers.size() != static_cast<std::size_t>(n) || !trace.converged) {
        local.fail(label(Scheme::kLaborUnion, k, spec) + " selector " +
                   to_string(config.selector) + " seed " +
                   std::to_string(config.seed) + ": " +
                   std::to_string(trace.steps.size()) + " steps, nash=" +
                   (nash ? "true" : "false"));
      }
    }
    return local;
  });
  r.passed = t.violations == 0;
  r.detail = "labor_union from all-unaffiliated, round-robin + " +
             std::to_string(options.random_orders) + " seeded orders: " + summary(t);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Step envelope of the Labor Union alpha-dynamic

CriterionResult criterion_envelope(const ReproduceOptions& options) {
  CriterionResult r;
  std::ostringstream detail;
  r.passed = true;
  EnumerationOptions affiliated;
  affiliated.include_unaffiliated = false;
  for (const Rational& alpha : {kQuarter, kHalf}) {
    Tally t = parallel_tally(options.corpus_size, options, [&](std::size_t k) {
      Tally local;
      GameSpec raw = corpus_game(Scheme::kLaborUnion, k, options);
      if (min_singleton(raw) <= 0) {
        local.counters["skipped"]++;
        return local;
      }
      local.instances = 1;
      GameSpec spec = rescale_to_unit_floor(raw);
      const int n = spec.players();
      const std::uint64_t envelope =
          labor_union_step_envelope(n, alpha, max_singleton(spec));
      DynamicsConfig config{alpha, Selector::kBasicMaxImprovement, 0, envelope + 1};
      for_each_state(
          spec,
          [&](const State& initial) {
            ++local.checks;
            Trace trace = run(spec, initial, config);
            local.max_steps = std::max<std::uint64_t>(local.max_steps, trace.steps.size());
            Rational ratio(static_cast<long>(trace.steps.size()),
                           static_cast<long>(envelope));
            ratio.canonicalize();
            if (ratio > local.max_ratio) local.max_ratio = ratio;
            bool stable =
                classify_state(spec, trace.final_state, alpha).is_alpha_nash;
            if (trace.steps.size() > envelope || !trace.converged || !stable) {
              local.fail(label(Scheme::kLaborUnion, k, spec) + " alpha=" +
                         to_string(alpha) + " from " + to_string(initial) + ": " +
                         std::to_string(trace.steps.size()) + " steps, envelope " +
                         std::to_string(envelope));
            }
          },
          affiliated);
      return local;
    });
    r.passed = r.passed && t.violations == 0;
    detail << "alpha=" << to_string(alpha) << ": " << summary(t)
           << ", max steps " << t.max_steps << ", max steps/envelope "
           << to_string(t.max_ratio);
    if (t.counters.count("skipped")) detail << ", skipped " << t.counters["skipped"];
    detail << "; ";
  }
  r.detail = detail.str();
  return r;
}

// ---------------------------------------------------------------------------
// 8. Graph closed forms

CriterionResult criterion_graphs(const ReproduceOptions& options) {
  CriterionResult r;
  Tally t = parallel_tally(options.graphs, options, [&](std::size_t k) {
    Tally local;
    local.instances = 1;
    Rng rng(options.seed * 7919 + k);
    const int n = draw(rng, 2, 6);
    auto graph = random_graph(n, rng);
    const std::string tag = "graph #" + std::to_string(k) + " (n=" + std::to_string(n) + ")";
    for (int m = 2; m <= std::min(3, n); ++m) {
      for (Scheme scheme : {Scheme::kFairValue, Scheme::kShapley, Scheme::kLaborUnion}) {
        GameSpec spec = coverage_game(graph, scheme, m);
        for_each_state(spec, [&](const State& state) {
          for (const CrossCheckEntry& e : cross_check(spec, *graph, state)) {
            ++local.checks;
            if (scheme == Scheme::kFairValue) {
              if (e.generic != e.cut) {
                local.fail(tag + ": fair_value generic " + to_string(e.generic) +
                           " != C " + to_string(e.cut));
              }
              if (!e.equal) local.counters["fair_value_closed_form_mismatch"]++;
            } else if (!e.equal) {
              local.fail(tag + ": " + to_string(scheme) + " closed form " +
                         to_string(e.closed_form) + " != generic " +
                         to_string(e.generic) + " at " + to_string(state) +
                         " player " + std::to_string(e.player));
            }
          }
          if (m == 2 && scheme == Scheme::kFairValue) {
            ++local.checks;
            CutIdentity c = cut_identity(graph, state, m);
            if (!c.holds) local.fail(tag + ": cut identity fails at " + to_string(state));
          }
        });
      }
    }
    return local;
  });
  const std::uint64_t mismatches = t.counters["fair_value_closed_form_mismatch"];
  r.passed = t.violations == 0 && mismatches > 0;
  r.detail = summary(t) + "; fair_value (A+B)/2+C differs from the generic payoff in " +
             std::to_string(mismatches) + " entries" +
             (mismatches > 0 ? " (expected)" : " (expected at least one)");
  return r;
}

// ---------------------------------------------------------------------------
// 9. Validators

CriterionResult criterion_validators(const ReproduceOptions& options) {
  CriterionResult r;
  Tally t;
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  auto check = [&](const Valuation& v, const std::string& what) {
    ++t.instances;
    ValidationReport report = validate(v);
    auto disjoint = check_disjoint_sum_bound(v, 1);
    auto returns = check_diminishing_returns(v, 1);
    t.checks += 3;
    if (!report.ok()) t.fail(what + ": validate rejected a built-in valuation");
    if (!disjoint.empty()) t.fail(what + ": disjoint-sum bound violated");
    if (!returns.empty()) t.fail(what + ": diminishing returns violated");
  };
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const std::string at = "n=" + std::to_string(n);
      check(random_budget_table(n, rng), "table " + at);
      check(random_additive(n, rng), "additive " + at);
      check(random_concave(n, rng), "concave " + at);
      check(random_coverage(n, rng, false), "coverage " + at);
      check(random_coverage(n, rng, true), "hypergraph coverage " + at);
    }
  }
  for (int n = 3; n <= 5; ++n) {
    GameSpec tight = two_party_tight_game(n);
    for (const Valuation& v : tight.valuations()) check(v, "tight construction");
  }

  // |Q|^2 must be rejected with the smallest witness.
  std::vector<Rational> squares(8);
  for (Mask s = 0; s < 8; ++s) {
    int k = std::popcount(s);
    squares[s] = k * k;
  }
  Valuation sq = Valuation::explicit_table(3, squares);
  ValidationReport bad = validate(sq);
  bool witness_ok = false;
  std::string seen = "none";
  for (const ValidationViolation& w : bad.violations) {
    if (w.property != ValidationViolation::Property::kSubmodular) continue;
    witness_ok = w.first == Coalition() && w.second == Coalition::of({1}) &&
                 w.player == 2 && w.lhs == 1 && w.rhs == 3;
    seen = "I=" + to_string(w.first) + " J=" + to_string(w.second) +
           " i=" + std::to_string(w.player) + " lhs=" + to_string(w.lhs) +
           " rhs=" + to_string(w.rhs);
    break;
  }
  bool rejected = false;
  try {
    GameSpec g(Scheme::kFairValue, {sq});
  } catch (const ValidationFailure&) {
    rejected = true;
  }
  r.passed = t.violations == 0 && !bad.submodular && witness_ok && rejected;
  r.detail = summary(t) + "; |Q|^2 witness " + seen +
             (rejected ? ", game construction rejected" : ", game construction ACCEPTED");
  return r;
}

}  // namespace

std::string criterion_name(int id) {
  static const char* names[] = {
      "two-party tight construction prices",
      "exact potential and perfectness chain",
      "price of anarchy bounds",
      "fair value PoS and strong labor union optimum",
      "basic dynamic step bounds",
      "n steps from all-unaffiliated",
      "labor union alpha-dynamic step envelope",
      "graph closed forms and cut identity",
      "submodularity and disjoint-sum validators"};
  if (id < 1 || id > kCriterionCount) throw InvalidArgument("no criterion " + std::to_string(id));
  return names[id - 1];
}

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = {
      "prop6", "niceness", "poa-sweep", "pos-strong", "bounds",
      "nsteps", "envelope", "graphs", "validators", "all"};
  return names;
}

std::vector<int> criteria_for_case(const std::string& name) {
  const auto& names = case_names();
  for (std::size_t k = 0; k + 1 < names.size(); ++k) {
    if (names[k] == name) return {static_cast<int>(k) + 1};
  }
  if (name == "all") {
    std::vector<int> all;
    for (int id = 1; id <= kCriterionCount; ++id) all.push_back(id);
    return all;
  }
  throw InvalidArgument("unknown case \"" + name + "\"");
}

CriterionResult run_criterion(int id, const ReproduceOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion_tight_prices(options); break;
    case 2: r = criterion_potential(options); break;
    case 3: r = criterion_poa(options); break;
    case 4: r = criterion_pos_strong(options); break;
    case 5: r = criterion_bounds(options); break;
    case 6: r = criterion_n_steps(options); break;
    case 7: r = criterion_envelope(options); break;
    case 8: r = criterion_graphs(options); break;
    case 9: r = criterion_validators(options); break;
    default: throw InvalidArgument("no criterion " + std::to_string(id));
  }
  r.id = id;
  r.name = criterion_name(id);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> reproduce(const std::vector<int>& ids,
                                       const ReproduceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": "
      << r.detail;
  return out.str();
}

}  // namespace profitshare
