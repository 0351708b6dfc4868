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

#include "profitshare/analysis.hpp"

#include <algorithm>
#include <thread>

#include "profitshare/dynamics.hpp"
#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

// Digits of a shape run over [low, m]; low is 0 when unaffiliation is part
// of the enumeration.
int lowest_digit(const GameSpec& spec, const EnumerationOptions& options) {
  return spec.scheme() == Scheme::kLaborUnion && options.include_unaffiliated
             ? 0
             : 1;
}

bool expands_orderings(const GameSpec& spec, const EnumerationOptions& options) {
  return spec.scheme() == Scheme::kLaborUnion && options.expand_orderings;
}

mpz_class exact_state_count(const GameSpec& spec,
                            const EnumerationOptions& options) {
  const int n = spec.players();
  const int m = spec.parties();
  const int low = lowest_digit(spec, options);
  const unsigned long digits = static_cast<unsigned long>(m - low + 1);
  if (!expands_orderings(spec, options)) {
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), digits, static_cast<unsigned long>(n));
    return count;
  }
  // Labelled players into m arrival sequences: k! * C(k + m - 1, m - 1) for
  // k affiliated players, times the choice of who is unaffiliated.
  auto binomial = [](unsigned long a, unsigned long b) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
  };
  auto fact = [](unsigned long a) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), a);
    return r;
  };
  const unsigned long un = static_cast<unsigned long>(n);
  const unsigned long um = static_cast<unsigned long>(m);
  mpz_class total = 0;
  for (unsigned long u = 0; u <= un; ++u) {
    if (low == 1 && u > 0) break;
    unsigned long k = un - u;
    total += binomial(un, u) * fact(k) * binomial(k + um - 1, um - 1);
  }
  return total;
}

mpz_class shape_count(const GameSpec& spec, const EnumerationOptions& options) {
  mpz_class count;
  const int low = lowest_digit(spec, options);
  mpz_ui_pow_ui(count.get_mpz_t(),
                static_cast<unsigned long>(spec.parties() - low + 1),
                static_cast<unsigned long>(spec.players()));
  return count;
}

void check_budget(const GameSpec& spec, const EnumerationOptions& options) {
  mpz_class count = exact_state_count(spec, options);
  if (count > mpz_class(std::to_string(options.budget))) {
    throw TooLarge("enumeration needs " + count.get_str() +
                   " states, budget is " + std::to_string(options.budget));
  }
}

// Decodes shape number `index` into an assignment (last player fastest).
std::vector<int> shape_at(std::uint64_t index, int n, int low, int m) {
  std::vector<int> assignment(static_cast<std::size_t>(n));
  const std::uint64_t base = static_cast<std::uint64_t>(m - low + 1);
  for (int k = n - 1; k >= 0; --k) {
    assignment[static_cast<std::size_t>(k)] = low + static_cast<int>(index % base);
    index /= base;
  }
  return assignment;
}

void expand_orderings(OrderedState& state, std::size_t party,
                      const std::function<void(const State&)>& visit) {
  if (party == state.sequences.size()) {
    visit(State{state});
    return;
  }
  auto& seq = state.sequences[party];
  std::sort(seq.begin(), seq.end());
  do {
    expand_orderings(state, party + 1, visit);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

// Visits shapes [begin, end) and their expansions.
void visit_range(const GameSpec& spec, std::uint64_t begin, std::uint64_t end,
                 const std::function<void(const State&)>& visit,
                 const EnumerationOptions& options) {
  const int n = spec.players();
  const int m = spec.parties();
  const int low = lowest_digit(spec, options);
  for (std::uint64_t index = begin; index < end; ++index) {
    PartitionState shape{shape_at(index, n, low, m)};
    if (spec.scheme() != Scheme::kLaborUnion) {
      visit(State{std::move(shape)});
      continue;
    }
    OrderedState ordered = OrderedState::from_partition(shape, m);
    if (options.expand_orderings) {
      expand_orderings(ordered, 0, visit);
    } else {
      visit(State{std::move(ordered)});
    }
  }
}

PartitionState shape_of(const State& state, int n) {
  if (const auto* p = std::get_if<PartitionState>(&state)) return *p;
  const auto& o = std::get<OrderedState>(state);
  PartitionState shape{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (std::size_t j = 0; j < o.sequences.size(); ++j) {
    for (int i : o.sequences[j]) shape.assignment[i - 1] = static_cast<int>(j) + 1;
  }
  return shape;
}

bool alpha_stable(const GameSpec& spec, const StateEvaluator& eval,
                  const Rational& alpha) {
  const int lowest = spec.allow_unaffiliated() ? 0 : 1;
  for (int i = 1; i <= spec.players(); ++i) {
    Rational current = eval.payoff(i);
    for (int t = lowest; t <= spec.parties(); ++t) {
      if (t == eval.strategy(i)) continue;
      if (is_alpha_improvement(current, eval.deviation_payoff(i, t), alpha))
        return false;
    }
  }
  return true;
}

// Outcome of one joint deviation for the deviators: true if someone gains
// strictly and nobody loses strictly.
bool deviation_succeeds(const GameSpec& spec, const State& result,
                        const std::vector<int>& deviators,
                        const std::vector<Rational>& before) {
  StateEvaluator after(spec, result);
  bool gain = false;
  for (std::size_t k = 0; k < deviators.size(); ++k) {
    Rational now = after.payoff(deviators[k]);
    if (now < before[k]) return false;
    if (now > before[k]) gain = true;
  }
  return gain;
}

}  // namespace

std::uint64_t count_states(const GameSpec& spec,
                           const EnumerationOptions& options) {
  mpz_class count = exact_state_count(spec, options);
  if (!count.fits_ulong_p()) return UINT64_MAX;
  return count.get_ui();
}

void for_each_state(const GameSpec& spec,
                    const std::function<void(const State&)>& visit,
                    const EnumerationOptions& options) {
  check_budget(spec, options);
  visit_range(spec, 0, shape_count(spec, options).get_ui(), visit, options);
}

std::vector<State> enumerate_states(const GameSpec& spec,
                                    const EnumerationOptions& options) {
  std::vector<State> out;
  for_each_state(spec, [&](const State& s) { out.push_back(s); }, options);
  return out;
}

OptimalStructure optimum(const GameSpec& spec,
                         const EnumerationOptions& options) {
  // Optimise over partitions only; orderings do not change total profit.
  EnumerationOptions shapes = options;
  shapes.expand_orderings = false;
  shapes.include_unaffiliated = false;
  const int m = spec.parties();
  std::optional<OptimalStructure> best;
  for_each_state(
      spec,
      [&](const State& state) {
        Rational value = total_profit(spec, state);
        if (!best || value > best->value) {
          best = OptimalStructure{shape_of(state, spec.players()), std::nullopt,
                                  value};
        }
      },
      shapes);
  if (spec.scheme() == Scheme::kLaborUnion) {
    best->ordered = OrderedState::from_partition(best->state, m);
  }
  return *best;
}

Classification classify_state(const GameSpec& spec, const State& state,
                              const Rational& alpha, bool strong,
                              const StrongNashOptions& options) {
  if (alpha < 0) throw InvalidArgument("alpha must be non-negative");
  StateEvaluator eval(spec, state);
  Classification c;
  c.is_nash = alpha_stable(spec, eval, Rational(0));
  c.is_alpha_nash = alpha == 0 ? c.is_nash : alpha_stable(spec, eval, alpha);
  if (strong) {
    c.is_strong_nash = !find_coalition_deviation(spec, state, options).has_value();
  }
  return c;
}

std::optional<CoalitionDeviation> find_coalition_deviation(
    const GameSpec& spec, const State& state, const StrongNashOptions& options) {
  const int n = spec.players();
  const int m = spec.parties();
  if (n > options.max_players) {
    throw TooLarge("strong-Nash check limited to " +
                   std::to_string(options.max_players) + " players, game has " +
                   std::to_string(n));
  }
  StateEvaluator eval(spec, state);
  const int lowest = spec.allow_unaffiliated() ? 0 : 1;
  const Mask full = (Mask{1} << n) - 1;

  for (Mask coalition = 1; coalition <= full; ++coalition) {
    std::vector<int> deviators = Coalition::from_mask(coalition).members();
    const std::size_t k = deviators.size();
    std::vector<Rational> before;
    for (int i : deviators) before.push_back(eval.payoff(i));

    // Odometer over targets, each deviator skipping its current strategy.
    std::vector<int> choice(k, 0);
    auto target_of = [&](std::size_t d) {
      int t = lowest + choice[d];
      if (t >= eval.strategy(deviators[d])) ++t;
      return t;
    };
    const int options_per = m - lowest;  // strategies other than the current
    if (options_per <= 0) continue;
    while (true) {
      std::vector<int> targets(k);
      for (std::size_t d = 0; d < k; ++d) targets[d] = target_of(d);

      if (const auto* p = std::get_if<PartitionState>(&state)) {
        PartitionState next = *p;
        for (std::size_t d = 0; d < k; ++d)
          next.assignment[deviators[d] - 1] = targets[d];
        if (deviation_succeeds(spec, State{next}, deviators, before)) {
          return CoalitionDeviation{deviators, targets, State{next}};
        }
      } else {
        // Remove all deviators at once; survivors keep their relative order.
        OrderedState base = std::get<OrderedState>(state);
        for (auto& seq : base.sequences) {
          std::erase_if(seq, [&](int i) { return (coalition >> (i - 1)) & 1U; });
        }
        std::erase_if(base.unaffiliated,
                      [&](int i) { return (coalition >> (i - 1)) & 1U; });
        std::vector<std::vector<int>> arrivals(static_cast<std::size_t>(m) + 1);
        for (std::size_t d = 0; d < k; ++d) arrivals[targets[d]].push_back(deviators[d]);
        for (int i : arrivals[0]) base.unaffiliated.push_back(i);
        std::sort(base.unaffiliated.begin(), base.unaffiliated.end());

        // Every interleaving: independent permutations per target party.
        std::optional<CoalitionDeviation> found;
        std::function<void(int)> interleave = [&](int party) {
          if (found) return;
          if (party > m) {
            OrderedState next = base;
            for (int j = 1; j <= m; ++j) {
              auto& seq = next.sequences[j - 1];
              seq.insert(seq.end(), arrivals[j].begin(), arrivals[j].end());
            }
            if (deviation_succeeds(spec, State{next}, deviators, before)) {
              found = CoalitionDeviation{deviators, targets, State{next}};
            }
            return;
          }
          auto& group = arrivals[party];
          std::sort(group.begin(), group.end());
          do {
            interleave(party + 1);
            if (found) return;
          } while (std::next_permutation(group.begin(), group.end()));
        };
        interleave(1);
        if (found) return found;
      }

      std::size_t d = 0;
      while (d < k && ++choice[d] == options_per) choice[d++] = 0;
      if (d == k) break;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Prices

namespace {

struct PartialPrices {
  std::uint64_t examined = 0;
  std::uint64_t count = 0;
  std::vector<State> equilibria;
  std::optional<State> worst_state, best_state;
  Rational worst_value, best_value;
  std::vector<PartitionState> shapes;
};

void scan_prices(const GameSpec& spec, const Rational& alpha,
                 const PriceOptions& options, std::uint64_t begin,
                 std::uint64_t end, PartialPrices& out) {
  const int n = spec.players();
  std::optional<PartitionState> open_shape;
  bool open_all = true;
  auto close_shape = [&] {
    if (open_shape && open_all) out.shapes.push_back(*open_shape);
  };
  visit_range(
      spec, begin, end,
      [&](const State& state) {
        ++out.examined;
        StateEvaluator eval(spec, state);
        bool stable = alpha_stable(spec, eval, alpha);
        if (spec.scheme() == Scheme::kLaborUnion) {
          PartitionState shape = shape_of(state, n);
          if (!open_shape || !(shape == *open_shape)) {
            close_shape();
            open_shape = shape;
            open_all = true;
          }
          open_all = open_all && stable;
        }
        if (!stable) return;
        ++out.count;
        Rational value = eval.total_profit();
        if (!out.worst_state || value < out.worst_value) {
          out.worst_state = state;
          out.worst_value = value;
        }
        if (!out.best_state || value > out.best_value) {
          out.best_state = state;
          out.best_value = value;
        }
        if (options.collect_states || options.strong) out.equilibria.push_back(state);
      },
      options.enumeration);
  close_shape();
}

}  // namespace

EquilibriumReport prices(const GameSpec& spec, const Rational& alpha,
                         const PriceOptions& options) {
  if (alpha < 0) throw InvalidArgument("alpha must be non-negative");
  check_budget(spec, options.enumeration);
  EquilibriumReport report;
  report.alpha = alpha;
  report.opt = optimum(spec, options.enumeration).value;

  const std::uint64_t shapes = shape_count(spec, options.enumeration).get_ui();
  const unsigned workers = std::max(
      1U, std::min<unsigned>(options.threads, static_cast<unsigned>(shapes)));
  std::vector<PartialPrices> parts(workers);
  if (workers == 1) {
    scan_prices(spec, alpha, options, 0, shapes, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t begin = shapes * w / workers;
      std::uint64_t end = shapes * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        scan_prices(spec, alpha, options, begin, end, parts[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Merge in range order with strict comparisons, so ties resolve exactly as
  // in a single sequential pass.
  std::optional<State> worst, best;
  for (PartialPrices& part : parts) {
    report.states_examined += part.examined;
    report.equilibrium_count += part.count;
    if (part.worst_state && (!worst || part.worst_value < report.worst_value)) {
      worst = part.worst_state;
      report.worst_value = part.worst_value;
    }
    if (part.best_state && (!best || part.best_value > report.best_value)) {
      best = part.best_state;
      report.best_value = part.best_value;
    }
    for (State& s : part.equilibria) report.equilibria.push_back(std::move(s));
    for (PartitionState& s : part.shapes)
      report.equilibrium_shapes.push_back(std::move(s));
  }
  if (!worst) {
    throw NoEquilibriumFound("no " +
                             std::string(alpha == 0 ? "Nash" : "alpha-Nash") +
                             " equilibrium among " +
                             std::to_string(report.states_examined) + " states");
  }
  report.worst_state = *worst;
  report.best_state = *best;
  if (report.opt == 0) {
    report.poa = 1;
    report.pos = 1;
  } else {
    report.poa = report.opt / report.worst_value;
    report.pos = report.opt / report.best_value;
  }
  if (options.strong) {
    std::vector<State> strong;
    for (const State& s : report.equilibria) {
      if (!find_coalition_deviation(spec, s).has_value()) strong.push_back(s);
    }
    report.strong_equilibria = std::move(strong);
  }
  if (!options.collect_states) report.equilibria.clear();
  return report;
}

// ---------------------------------------------------------------------------
// Niceness

NicenessReport verify_niceness(const GameSpec& spec, const Rational& beta,
                               const EnumerationOptions& options,
                               std::size_t max_witnesses) {
  if (beta < 0) throw InvalidArgument("beta must be non-negative");
  NicenessReport report;
  report.beta_tested = beta;
  report.opt = optimum(spec, options).value;
  const int n = spec.players();
  const int lowest = spec.allow_unaffiliated() ? 0 : 1;

  auto witness = [&](std::string check, const State& state, int player,
                     int target, std::string detail) {
    if (report.witnesses.size() < max_witnesses) {
      report.witnesses.push_back(
          {std::move(check), state, player, target, std::move(detail)});
    }
  };

  for_each_state(
      spec,
      [&](const State& state) {
        ++report.states_checked;
        StateEvaluator eval(spec, state);
        const Rational f = eval.total_profit();
        const Rational phi = eval.potential();
        Rational welfare(0);
        Rational delta_total(0);
        std::vector<Rational> u(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) {
          u[i] = eval.payoff(i);
          welfare += u[i];
        }
        if (f < welfare) {
          report.welfare_bound_holds = false;
          witness("welfare", state, 0, 0,
                  "f=" + to_string(f) + " < sum u=" + to_string(welfare));
        }
        for (int i = 1; i <= n; ++i) {
          Rational best = u[i];
          for (int t = lowest; t <= spec.parties(); ++t) {
            if (t == eval.strategy(i)) continue;
            ++report.moves_checked;
            Rational moved = eval.deviation_payoff(i, t);
            if (moved > best) best = moved;
            State next = apply_move(spec, state, i, t);
            StateEvaluator after(spec, next);
            Rational d_phi = after.potential() - phi;
            Rational d_u = after.payoff(i) - u[i];
            if (d_phi != d_u) {
              report.exact_potential_holds = false;
              witness("exact_potential", state, i, t,
                      "dPhi=" + to_string(d_phi) + " du=" + to_string(d_u));
            }
            if (moved > u[i]) {
              Rational d_f = after.total_profit() - f;
              if (d_f < d_phi || d_phi < d_u) {
                report.chain_holds = false;
                witness("chain", state, i, t,
                        "df=" + to_string(d_f) + " dPhi=" + to_string(d_phi) +
                            " du=" + to_string(d_u));
              }
            }
          }
          delta_total += best - u[i];
        }
        Rational lhs = beta * f + delta_total;
        if (lhs < report.opt) {
          report.beta_nice_holds = false;
          witness("nice", state, 0, 0,
                  "beta*f+Delta=" + to_string(lhs) + " < Opt=" +
                      to_string(report.opt));
        }
      },
      options);
  report.perfect_holds = report.welfare_bound_holds && report.chain_holds;
  return report;
}

}  // namespace profitshare
