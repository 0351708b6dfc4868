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

#include "profitshare/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "profitshare/analysis.hpp"
#include "profitshare/corpus.hpp"
#include "profitshare/dynamics.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/graph_games.hpp"
#include "profitshare/reproduce.hpp"
#include "profitshare/serialization.hpp"

namespace profitshare {
namespace {

struct Options {
  bool json = false;
  bool skip_validate = false;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
  int strong_limit = 8;

  std::string spec_path;
  std::string alpha = "0";
  std::string selector;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_steps;
  std::string out_path;
  std::string format;
  bool strong = false;
  bool all_states = false;
  std::string beta = "2";

  int n = 0;
  std::string epsilon;
  std::string opt;

  std::string case_name = "all";
  std::size_t corpus_size = 200;
};

// Verification failure: reported on stdout, exit 2.
struct Verdict {
  bool ok = true;
};

bool use_color(std::ostream& out) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

std::string paint(std::ostream& out, const std::string& text, bool good) {
  if (!use_color(out)) return text;
  return std::string(good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

class Session {
 public:
  Session(const Options& options, std::vector<std::string> argv, std::ostream& out)
      : o_(options), argv_(std::move(argv)), out_(out),
        start_(std::chrono::steady_clock::now()) {}

  GameFile load() const { return load_game_file(o_.spec_path, !o_.skip_validate); }

  EnumerationOptions enumeration() const {
    EnumerationOptions e;
    e.budget = o_.budget;
    return e;
  }

  // JSON envelope shared by every report.
  OrderedJson envelope(const OrderedJson& config, OrderedJson report,
                       const GameSpec* spec) const {
    OrderedJson doc;
    doc["command"] = argv_;
    if (spec != nullptr && !spec->valuations_verified()) {
      doc["banner"] = "valuation-unverified";
    }
    doc["config"] = config;
    doc["report"] = std::move(report);
    doc["elapsed_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return doc;
  }

  void banner(const GameSpec& spec) const {
    if (!spec.valuations_verified()) {
      out_ << "[valuation-unverified] valuations were not checked for "
              "monotonicity/submodularity\n";
    }
  }

  int validate_cmd();
  int dynamics_cmd();
  int equilibria_cmd();
  int prices_cmd();
  int niceness_cmd();
  int bounds_cmd();
  int graph_check_cmd();
  int reproduce_cmd();

 private:
  OrderedJson game_config(const GameSpec& spec) const {
    return OrderedJson{{"spec", o_.spec_path},
                       {"n", spec.players()},
                       {"m", spec.parties()},
                       {"scheme", to_string(spec.scheme())}};
  }

  const Options& o_;
  std::vector<std::string> argv_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

int Session::validate_cmd() {
  GameFile game = load_game_file(o_.spec_path, false);
  const GameSpec& spec = game.spec;
  OrderedJson reports = OrderedJson::array();
  bool all_ok = true;
  for (int j = 1; j <= spec.parties(); ++j) {
    const Valuation& v = spec.valuation(j);
    ValidationReport r = spec.players() <= ValidateOptions{}.max_exhaustive_players
                             ? validate(v)
                             : validate_sampled(v, 4096, ValidateOptions{}.seed);
    all_ok = all_ok && r.ok();
    OrderedJson entry = to_json(r);
    entry["party"] = j;
    entry["kind"] = to_string(v.kind());
    reports.push_back(std::move(entry));
    if (!o_.json) {
      out_ << "party " << j << " (" << to_string(v.kind()) << "): "
           << paint(out_, r.ok() ? "ok" : "REJECTED", r.ok())
           << (r.sampled ? " [sampled]" : "") << " monotone=" << r.monotone
           << " submodular=" << r.submodular << "\n";
      for (const ValidationViolation& w : r.violations) {
        out_ << "  " << to_string(w.property) << " I=" << to_string(w.first)
             << " J=" << to_string(w.second) << " i=" << w.player
             << " lhs=" << to_string(w.lhs) << " rhs=" << to_string(w.rhs) << "\n";
      }
    }
  }
  if (o_.json) {
    out_ << envelope(game_config(spec), OrderedJson{{"ok", all_ok}, {"valuations", reports}},
                     nullptr)
                .dump(2)
         << "\n";
  }
  return all_ok ? kExitOk : kExitVerification;
}

int Session::dynamics_cmd() {
  GameFile game = load();
  const GameSpec& spec = game.spec;
  DynamicsConfig config = game.dynamics.value_or(DynamicsConfig{});
  if (o_.alpha != "0" || !game.dynamics) config.alpha = parse_rational(o_.alpha);
  if (!o_.selector.empty()) config.selector = parse_selector(o_.selector);
  if (o_.seed) config.seed = *o_.seed;
  if (o_.max_steps) config.max_steps = *o_.max_steps;
  check_config(config);

  State initial = game.initial_state.value_or(
      spec.scheme() == Scheme::kLaborUnion
          ? State{OrderedState::all_unaffiliated(spec.players(), spec.parties())}
          : State{PartitionState::uniform(spec.players())});
  Trace trace = run(spec, initial, config);
  Classification verdict = classify_state(spec, trace.final_state, config.alpha);

  if (!o_.out_path.empty()) {
    TraceFormat format = o_.format.empty() ? trace_format_for(o_.out_path)
                                           : parse_trace_format(o_.format);
    write_trace(trace, format, o_.out_path);
  }
  OrderedJson summary{{"initial_state", OrderedJson::parse(state_to_json(initial).dump())},
                      {"final_state", OrderedJson::parse(state_to_json(trace.final_state).dump())},
                      {"steps", trace.steps.size()},
                      {"converged", trace.converged},
                      {"truncated", trace.truncated},
                      {"initial_total_profit", to_string(trace.initial_total_profit)},
                      {"final_total_profit",
                       to_string(trace.steps.empty() ? trace.initial_total_profit
                                                     : trace.steps.back().total_profit_after)},
                      {"nash_equilibrium", verdict.is_nash},
                      {"alpha_nash_equilibrium", verdict.is_alpha_nash}};
  if (!o_.out_path.empty()) summary["trace"] = o_.out_path;
  if (o_.json) {
    for (const TraceStep& s : trace.steps) out_ << trace_step_to_json(s).dump() << "\n";
    OrderedJson config_json = game_config(spec);
    config_json["dynamics"] = OrderedJson::parse(dynamics_to_json(config).dump());
    out_ << envelope(config_json, summary, &spec).dump() << "\n";
  } else {
    banner(spec);
    out_ << "selector " << to_string(config.selector) << ", alpha "
         << to_string(config.alpha) << ", start " << to_string(initial) << "\n";
    for (const TraceStep& s : trace.steps) {
      out_ << std::setw(5) << s.step << "  player " << s.mover << ": " << s.from
           << " -> " << s.to << "  payoff " << to_string(s.payoff_before) << " -> "
           << to_string(s.payoff_after) << "  potential " << to_string(s.potential_after)
           << "  tp " << to_string(s.total_profit_after) << "\n";
    }
    out_ << trace.steps.size() << " steps, "
         << (trace.converged ? "converged" : "truncated") << ", final "
         << to_string(trace.final_state) << ", nash=" << verdict.is_nash
         << " alpha_nash=" << verdict.is_alpha_nash << "\n";
  }
  return kExitOk;
}

int Session::equilibria_cmd() {
  GameFile game = load();
  const GameSpec& spec = game.spec;
  Rational alpha = parse_rational(o_.alpha);
  StrongNashOptions strong_opts{o_.strong_limit};
  OrderedJson states = OrderedJson::array();
  std::uint64_t examined = 0;
  for_each_state(
      spec,
      [&](const State& s) {
        ++examined;
        Classification c = classify_state(spec, s, alpha, false);
        bool listed = o_.all_states || (alpha == 0 ? c.is_nash : c.is_alpha_nash);
        if (!listed) return;
        if (o_.strong && c.is_nash) {
          c.is_strong_nash = !find_coalition_deviation(spec, s, strong_opts).has_value();
        }
        OrderedJson entry{{"state", OrderedJson::parse(state_to_json(s).dump())},
                          {"total_profit", to_string(total_profit(spec, s))},
                          {"is_nash", c.is_nash},
                          {"is_alpha_nash", c.is_alpha_nash}};
        if (o_.strong) entry["is_strong_nash"] = c.is_strong_nash.value_or(false);
        states.push_back(std::move(entry));
      },
      enumeration());
  if (o_.json) {
    OrderedJson config = game_config(spec);
    config["alpha"] = to_string(alpha);
    config["strong"] = o_.strong;
    out_ << envelope(config,
                     OrderedJson{{"states_examined", examined},
                                 {"listed", states.size()},
                                 {"states", states}},
                     &spec)
                .dump(2)
         << "\n";
  } else {
    banner(spec);
    for (const auto& e : states) {
      out_ << e["state"].dump() << "  tp=" << e["total_profit"].get<std::string>()
           << "  nash=" << e["is_nash"] << " alpha_nash=" << e["is_alpha_nash"];
      if (o_.strong) out_ << " strong=" << e["is_strong_nash"];
      out_ << "\n";
    }
    out_ << states.size() << " listed of " << examined << " states\n";
  }
  return kExitOk;
}

int Session::prices_cmd() {
  GameFile game = load();
  const GameSpec& spec = game.spec;
  Rational alpha = parse_rational(o_.alpha);
  PriceOptions po;
  po.enumeration = enumeration();
  po.threads = o_.threads;
  po.strong = o_.strong;
  po.collect_states = o_.json;
  EquilibriumReport report = prices(spec, alpha, po);
  OptimalStructure opt = optimum(spec, po.enumeration);
  if (o_.json) {
    OrderedJson config = game_config(spec);
    config["alpha"] = to_string(alpha);
    config["threads"] = o_.threads;
    OrderedJson body = to_json(report);
    body["optimum"] = to_json(opt);
    out_ << envelope(config, body, &spec).dump(2) << "\n";
  } else {
    banner(spec);
    out_ << "alpha " << to_string(alpha) << ": " << report.equilibrium_count
         << " equilibria among " << report.states_examined << " states\n"
         << "opt   " << to_string(report.opt) << " at " << to_string(State{opt.state}) << "\n"
         << "worst " << to_string(report.worst_value) << " at "
         << to_string(report.worst_state) << "\n"
         << "best  " << to_string(report.best_value) << " at "
         << to_string(report.best_state) << "\n"
         << "poa   " << to_string(report.poa) << "\n"
         << "pos   " << to_string(report.pos) << "\n";
    if (report.strong_equilibria) {
      out_ << "strong equilibria: " << report.strong_equilibria->size() << "\n";
    }
  }
  return kExitOk;
}

int Session::niceness_cmd() {
  GameFile game = load();
  const GameSpec& spec = game.spec;
  Rational beta = parse_rational(o_.beta);
  NicenessReport r = verify_niceness(spec, beta, enumeration());
  bool ok = r.perfect_holds && r.beta_nice_holds;
  if (o_.json) {
    OrderedJson config = game_config(spec);
    config["beta"] = to_string(beta);
    out_ << envelope(config, to_json(r), &spec).dump(2) << "\n";
  } else {
    banner(spec);
    out_ << "beta " << to_string(beta) << ", opt " << to_string(r.opt) << ", "
         << r.states_checked << " states, " << r.moves_checked << " moves\n"
         << "  welfare bound    " << r.welfare_bound_holds << "\n"
         << "  chain            " << r.chain_holds << "\n"
         << "  beta-nice        " << r.beta_nice_holds << "\n"
         << "  exact potential  " << r.exact_potential_holds << "\n";
    for (const auto& w : r.witnesses) {
      out_ << "  witness " << w.check << " at " << to_string(w.state) << " player "
           << w.player << " -> " << w.target << ": " << w.detail << "\n";
    }
  }
  return ok ? kExitOk : kExitVerification;
}

int Session::bounds_cmd() {
  ConvergenceBounds b =
      convergence_bounds(o_.n, parse_rational(o_.beta), parse_rational(o_.alpha),
                         parse_rational(o_.epsilon), parse_rational(o_.opt));
  if (o_.json) {
    OrderedJson config{{"n", o_.n}, {"beta", o_.beta}, {"alpha", o_.alpha},
                       {"epsilon", o_.epsilon}, {"opt", o_.opt}};
    out_ << envelope(config, to_json(b), nullptr).dump(2) << "\n";
  } else {
    auto line = [&](const char* what, const ConvergenceBound& x) {
      out_ << what << ": a=" << to_string(x.a) << " b=" << to_string(x.b)
           << " steps=" << x.steps << " guarantee=" << to_string(x.guaranteed_value)
           << "\n";
    };
    line("nash      ", b.nash);
    line("alpha-nash", b.alpha_nash);
  }
  return kExitOk;
}

int Session::graph_check_cmd() {
  GameFile game = load();
  const GameSpec& spec = game.spec;
  const Valuation& first = spec.valuation(1);
  if (first.kind() != ValuationKind::kCoverage) {
    throw InvalidArgument("graph-check needs coverage valuations");
  }
  for (const Valuation& v : spec.valuations()) {
    if (!(v == first)) throw InvalidArgument("graph-check needs one graph shared by all parties");
  }
  const auto& graph = first.graph();
  std::vector<State> states;
  if (game.initial_state) {
    states.push_back(*game.initial_state);
  } else {
    states = enumerate_states(spec, enumeration());
  }
  std::uint64_t entries = 0, fair_value_mismatch = 0, other_mismatch = 0, cut_fail = 0;
  OrderedJson listed = OrderedJson::array();
  OrderedJson cuts = OrderedJson::array();
  for (const State& s : states) {
    std::vector<CrossCheckEntry> found;
    if (std::holds_alternative<PartitionState>(s)) {
      for (Scheme scheme : {Scheme::kFairValue, Scheme::kShapley}) {
        GameSpec g = spec.with_scheme(scheme);
        for (auto& e : cross_check(g, *graph, s)) found.push_back(std::move(e));
      }
    } else {
      found = cross_check(spec, *graph, s);
    }
    for (const CrossCheckEntry& e : found) {
      ++entries;
      if (!e.equal) {
        (e.scheme == Scheme::kFairValue ? fair_value_mismatch : other_mismatch)++;
      }
      if (game.initial_state) {
        OrderedJson j = to_json(e);
        listed.push_back(std::move(j));
      }
    }
    bool affiliated = true;
    for (int i = 1; i <= spec.players(); ++i) affiliated = affiliated && strategy_of(s, i) != 0;
    if (spec.parties() == 2 && affiliated) {
      CutIdentity c = cut_identity(graph, s, 2);
      if (!c.holds) ++cut_fail;
      if (game.initial_state) cuts.push_back(to_json(c));
    }
  }
  const bool ok = other_mismatch == 0 && cut_fail == 0;
  if (o_.json) {
    OrderedJson body{{"states", states.size()},
                     {"entries", entries},
                     {"fair_value_closed_form_mismatches", fair_value_mismatch},
                     {"other_closed_form_mismatches", other_mismatch},
                     {"cut_identity_failures", cut_fail}};
    if (game.initial_state) {
      body["entries_detail"] = listed;
      body["cut_identity"] = cuts;
    }
    out_ << envelope(game_config(spec), body, &spec).dump(2) << "\n";
  } else {
    banner(spec);
    if (game.initial_state) {
      for (const auto& e : listed) {
        out_ << e["scheme"].get<std::string>() << " player " << e["player"]
             << ": closed " << e["closed_form"].get<std::string>() << ", generic "
             << e["generic"].get<std::string>() << (e["equal"].get<bool>() ? "" : "  DIFFERS")
             << "\n";
      }
    }
    out_ << states.size() << " states, " << entries << " payoff entries\n"
         << "  fair_value closed-form mismatches: " << fair_value_mismatch
         << " (the (A+B)/2 + C form disagrees with the marginal rule)\n"
         << "  shapley/labor_union mismatches:    " << other_mismatch << "\n"
         << "  cut identity failures:             " << cut_fail << "\n";
  }
  return ok ? kExitOk : kExitVerification;
}

int Session::reproduce_cmd() {
  std::vector<int> ids = criteria_for_case(o_.case_name);
  ReproduceOptions ro;
  ro.corpus_size = o_.corpus_size;
  ro.threads = o_.threads;
  bool all = true;
  OrderedJson results = OrderedJson::array();
  for (int id : ids) {
    CriterionResult r = run_criterion(id, ro);
    all = all && r.passed;
    if (o_.json) {
      results.push_back(OrderedJson{{"id", r.id},
                                    {"name", r.name},
                                    {"passed", r.passed},
                                    {"detail", r.detail},
                                    {"seconds", r.seconds}});
    } else {
      std::string line = format_result(r);
      out_ << paint(out_, line.substr(0, 4), r.passed) << line.substr(4) << "\n";
      out_.flush();
    }
  }
  if (o_.json) {
    OrderedJson config{{"case", o_.case_name}, {"corpus_size", o_.corpus_size}};
    out_ << envelope(config, OrderedJson{{"all_passed", all}, {"criteria", results}}, nullptr)
                .dump(2)
         << "\n";
  }
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"Profit-sharing games: dynamics, equilibria and bound checks",
               args.empty() ? "profitshare" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--skip-validate", o.skip_validate,
               "Do not verify valuations (reports carry a valuation-unverified banner)");
  app.add_option("--budget", o.budget, "Maximum number of enumerated states")
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for enumeration")
      ->capture_default_str();
  app.add_option("--strong-limit", o.strong_limit,
                 "Largest n for strong-Nash coalition search")
      ->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "Check every valuation of a game file");
  validate_cmd->add_option("spec", o.spec_path, "Game file")->required();

  auto* dyn = app.add_subcommand("dynamics", "Run best-response dynamics");
  dyn->add_option("spec", o.spec_path, "Game file")->required();
  dyn->add_option("--alpha", o.alpha, "alpha as p/q (0 = Nash dynamic)");
  dyn->add_option("--selector", o.selector, "basic | roundrobin | random");
  dyn->add_option("--seed", o.seed, "Seed for the random selector");
  dyn->add_option("--max-steps", o.max_steps, "Step budget");
  dyn->add_option("--out", o.out_path, "Trace file (.jsonl or .csv)");
  dyn->add_option("--format", o.format, "jsonl | csv (default: from --out extension)");

  auto* eq = app.add_subcommand("equilibria", "Classify every state");
  eq->add_option("spec", o.spec_path, "Game file")->required();
  eq->add_option("--alpha", o.alpha, "alpha as p/q");
  eq->add_flag("--strong", o.strong, "Also test strong Nash stability");
  eq->add_flag("--all", o.all_states, "List non-equilibrium states too");

  auto* pr = app.add_subcommand("prices", "Prices of anarchy and stability");
  pr->add_option("spec", o.spec_path, "Game file")->required();
  pr->add_option("--alpha", o.alpha, "alpha as p/q");
  pr->add_flag("--strong", o.strong, "Also list strong equilibria");

  auto* nice = app.add_subcommand("niceness", "Check the perfect beta-nice conditions");
  nice->add_option("spec", o.spec_path, "Game file")->required();
  nice->add_option("--beta", o.beta, "beta as p/q")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Step bounds of the basic dynamics");
  bounds->add_option("--n", o.n, "Players")->required();
  bounds->add_option("--beta", o.beta, "beta as p/q")->required();
  bounds->add_option("--alpha", o.alpha, "alpha as p/q")->capture_default_str();
  bounds->add_option("--epsilon", o.epsilon, "epsilon in (0,1) as p/q")->required();
  bounds->add_option("--opt", o.opt, "Optimum total profit as p/q")->required();

  auto* graph = app.add_subcommand("graph-check", "Compare graph closed forms with generic payoffs");
  graph->add_option("spec", o.spec_path, "Game file with a shared graph")->required();

  auto* repro = app.add_subcommand("reproduce", "Run the acceptance checks");
  repro->add_option("--case", o.case_name, "prop6 | niceness | poa-sweep | pos-strong | bounds | nsteps | envelope | graphs | validators | all")
      ->capture_default_str();
  repro->add_option("--corpus-size", o.corpus_size, "Random games per scheme")
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("profitshare");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(o, args, out);
  try {
    if (validate_cmd->parsed()) return session.validate_cmd();
    if (dyn->parsed()) return session.dynamics_cmd();
    if (eq->parsed()) return session.equilibria_cmd();
    if (pr->parsed()) return session.prices_cmd();
    if (nice->parsed()) return session.niceness_cmd();
    if (bounds->parsed()) return session.bounds_cmd();
    if (graph->parsed()) return session.graph_check_cmd();
    if (repro->parsed()) return session.reproduce_cmd();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationFailure& e) {
    err << "invalid valuation: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoEquilibriumFound& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace profitshare
