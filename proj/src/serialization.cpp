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

#include "profitshare/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "profitshare/errors.hpp"

namespace profitshare {
namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') escaped += "~0";
    else if (ch == '/') escaped += "~1";
    else escaped += ch;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

void require_object(const Json& value, const std::string& pointer,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional) {
  if (!value.is_object()) throw ParseError(pointer, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) known.insert(k);
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, _] : value.items()) {
    if (!known.contains(key)) throw ParseError(child(pointer, key), "unknown key");
  }
  for (const char* k : required) {
    if (!value.contains(k)) {
      throw ParseError(pointer, std::string("missing key \"") + k + "\"");
    }
  }
}

const Json& require_array(const Json& value, const std::string& pointer) {
  if (!value.is_array()) throw ParseError(pointer, "expected an array");
  return value;
}

int int_from_json(const Json& value, const std::string& pointer) {
  if (!value.is_number_integer()) throw ParseError(pointer, "expected an integer");
  std::int64_t v = value.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError(pointer, "integer out of range");
  return static_cast<int>(v);
}

std::vector<Rational> rationals_from_json(const Json& value,
                                          const std::string& pointer) {
  require_array(value, pointer);
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(rational_from_json(value[k], child(pointer, k)));
  }
  return out;
}

std::vector<int> ints_from_json(const Json& value, const std::string& pointer) {
  require_array(value, pointer);
  std::vector<int> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(int_from_json(value[k], child(pointer, k)));
  }
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

// Runs a factory and reports its InvalidArgument at `pointer`.
template <typename Factory>
auto located(const std::string& pointer, Factory&& factory) {
  try {
    return factory();
  } catch (const InvalidArgument& e) {
    throw ParseError(pointer, e.what());
  } catch (const InvalidCoalition& e) {
    throw ParseError(pointer, e.what());
  }
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

Rational rational_from_json(const Json& value, const std::string& pointer) {
  if (value.is_number_integer()) {
    return Rational(std::to_string(value.get<std::int64_t>()));
  }
  if (!value.is_string()) {
    throw ParseError(pointer, "expected a rational string such as \"1/3\"");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(pointer, e.what());
  }
}

std::shared_ptr<const WeightedGraph> build_graph(const Json& fragment, int n,
                                                 const std::string& pointer) {
  require_object(fragment, pointer, {"edges"}, {"n", "kind"});
  if (fragment.contains("n")) {
    int declared = int_from_json(fragment["n"], child(pointer, "n"));
    if (n >= 0 && declared != n) {
      throw ParseError(child(pointer, "n"), "graph has " + std::to_string(declared) +
                                                " vertices, game has " +
                                                std::to_string(n) + " players");
    }
    n = declared;
  }
  if (n < 0) throw ParseError(pointer, "vertex count \"n\" is required here");
  const std::string edges_ptr = child(pointer, "edges");
  const Json& edges = require_array(fragment["edges"], edges_ptr);
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string ep = child(edges_ptr, k);
    require_object(edges[k], ep, {"v", "w"}, {});
    std::vector<int> ends = ints_from_json(edges[k]["v"], child(ep, "v"));
    for (int v : ends) {
      if (v < 1 || v > n) {
        throw ParseError(child(ep, "v"), "vertex " + std::to_string(v) +
                                             " outside [1, " + std::to_string(n) + "]");
      }
    }
    if (std::set<int>(ends.begin(), ends.end()).size() != ends.size()) {
      throw ParseError(child(ep, "v"), "repeated endpoint");
    }
    Rational w = rational_from_json(edges[k]["w"], child(ep, "w"));
    list.push_back(Edge{Coalition::of(std::span<const int>(ends)), w});
  }
  return located(pointer, [&] {
    return std::make_shared<const WeightedGraph>(n, std::move(list));
  });
}

Valuation build_valuation(const Json& fragment, int n, const std::string& pointer) {
  if (!fragment.is_object() || !fragment.contains("kind")) {
    throw ParseError(pointer, "valuation needs a \"kind\"");
  }
  if (!fragment["kind"].is_string()) {
    throw ParseError(child(pointer, "kind"), "expected a string");
  }
  const std::string kind = fragment["kind"].get<std::string>();
  Valuation v = [&]() -> Valuation {
    if (kind == "table") {
      require_object(fragment, pointer, {"kind", "n", "values"}, {});
      int size = int_from_json(fragment["n"], child(pointer, "n"));
      if (size < 0 || size > kMaxPlayers) {
        throw ParseError(child(pointer, "n"), "ground set size out of range");
      }
      std::vector<Rational> values =
          rationals_from_json(fragment["values"], child(pointer, "values"));
      if (values.size() != (std::size_t{1} << size)) {
        throw ParseError(child(pointer, "values"),
                         "expected 2^" + std::to_string(size) + " = " +
                             std::to_string(std::size_t{1} << size) +
                             " entries, got " + std::to_string(values.size()));
      }
      if (!values.empty() && values[0] != 0) {
        throw ParseError(child(pointer, "values") + "/0",
                         "v(empty set) must be 0, got " + to_string(values[0]));
      }
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 0) {
          throw ParseError(child(child(pointer, "values"), k), "negative value");
        }
      }
      return located(pointer, [&] {
        return Valuation::explicit_table(size, std::move(values));
      });
    }
    if (kind == "additive") {
      require_object(fragment, pointer, {"kind", "weights"}, {});
      std::vector<Rational> w =
          rationals_from_json(fragment["weights"], child(pointer, "weights"));
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 0) throw ParseError(child(child(pointer, "weights"), k), "negative weight");
      }
      return located(pointer, [&] { return Valuation::additive(std::move(w)); });
    }
    if (kind == "concave") {
      require_object(fragment, pointer, {"kind", "values"}, {});
      std::vector<Rational> c =
          rationals_from_json(fragment["values"], child(pointer, "values"));
      if (!c.empty() && c[0] != 0) {
        throw ParseError(child(pointer, "values") + "/0",
                         "c_0 = v(empty set) must be 0, got " + to_string(c[0]));
      }
      return located(pointer,
                     [&] { return Valuation::concave_cardinality(std::move(c)); });
    }
    if (kind == "coverage") {
      Json graph = fragment;
      return Valuation::coverage(build_graph(graph, n, pointer));
    }
    throw ParseError(child(pointer, "kind"),
                     "unknown kind \"" + kind +
                         "\" (expected table, additive, concave or coverage)");
  }();
  if (n >= 0 && v.ground_set_size() != n) {
    throw ParseError(pointer, "valuation ground set has " +
                                  std::to_string(v.ground_set_size()) +
                                  " players, game has " + std::to_string(n));
  }
  return v;
}

Json graph_to_json(const WeightedGraph& graph) {
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back(Json{{"v", e.endpoints.members()}, {"w", to_string(e.weight)}});
  }
  return Json{{"n", graph.vertices()}, {"edges", std::move(edges)}};
}

Json valuation_to_json(const Valuation& v) {
  switch (v.kind()) {
    case ValuationKind::kExplicitTable:
      return Json{{"kind", "table"},
                  {"n", v.ground_set_size()},
                  {"values", rationals_to_json(v.table())}};
    case ValuationKind::kAdditive:
      return Json{{"kind", "additive"}, {"weights", rationals_to_json(v.weights())}};
    case ValuationKind::kConcaveCardinality:
      return Json{{"kind", "concave"}, {"values", rationals_to_json(v.concave_values())}};
    case ValuationKind::kCoverage: {
      Json out = graph_to_json(*v.graph());
      out["kind"] = "coverage";
      return out;
    }
  }
  throw InvalidArgument("unknown valuation kind");
}

// ---------------------------------------------------------------------------
// States and dynamics

Json state_to_json(const State& state) {
  if (const auto* p = std::get_if<PartitionState>(&state)) return Json(p->assignment);
  const auto& o = std::get<OrderedState>(state);
  return Json{{"sequences", o.sequences}, {"unaffiliated", o.unaffiliated}};
}

State state_from_json(const Json& value, const GameSpec& spec,
                      const std::string& pointer) {
  State state;
  if (value.is_array()) {
    PartitionState p{ints_from_json(value, pointer)};
    if (spec.scheme() == Scheme::kLaborUnion) {
      for (std::size_t k = 0; k < p.assignment.size(); ++k) {
        if (p.assignment[k] < 0 || p.assignment[k] > spec.parties()) {
          throw ParseError(child(pointer, k), "party out of range");
        }
      }
      if (p.players() != spec.players()) {
        throw ParseError(pointer, "expected " + std::to_string(spec.players()) +
                                      " entries");
      }
      state = OrderedState::from_partition(p, spec.parties());
    } else {
      state = std::move(p);
    }
  } else if (value.is_object()) {
    require_object(value, pointer, {"sequences"}, {"unaffiliated"});
    const std::string sp = child(pointer, "sequences");
    require_array(value["sequences"], sp);
    OrderedState o;
    for (std::size_t k = 0; k < value["sequences"].size(); ++k) {
      o.sequences.push_back(ints_from_json(value["sequences"][k], child(sp, k)));
    }
    if (value.contains("unaffiliated")) {
      o.unaffiliated = ints_from_json(value["unaffiliated"], child(pointer, "unaffiliated"));
      std::sort(o.unaffiliated.begin(), o.unaffiliated.end());
    }
    state = std::move(o);
  } else {
    throw ParseError(pointer, "expected a state literal (array or object)");
  }
  try {
    check_state(spec, state);
  } catch (const Error& e) {
    throw ParseError(pointer, e.what());
  }
  return state;
}

Json dynamics_to_json(const DynamicsConfig& config) {
  return Json{{"alpha", to_string(config.alpha)},
              {"selector", to_string(config.selector)},
              {"seed", config.seed},
              {"max_steps", config.max_steps}};
}

DynamicsConfig dynamics_from_json(const Json& value, const std::string& pointer) {
  require_object(value, pointer, {}, {"alpha", "selector", "seed", "max_steps"});
  DynamicsConfig c;
  if (value.contains("alpha")) c.alpha = rational_from_json(value["alpha"], child(pointer, "alpha"));
  if (value.contains("selector")) {
    const Json& s = value["selector"];
    if (!s.is_string()) throw ParseError(child(pointer, "selector"), "expected a string");
    c.selector = located(child(pointer, "selector"),
                         [&] { return parse_selector(s.get<std::string>()); });
  }
  if (value.contains("seed")) {
    if (!value["seed"].is_number_unsigned()) {
      throw ParseError(child(pointer, "seed"), "expected a non-negative integer");
    }
    c.seed = value["seed"].get<std::uint64_t>();
  }
  if (value.contains("max_steps")) {
    if (!value["max_steps"].is_number_unsigned()) {
      throw ParseError(child(pointer, "max_steps"), "expected a positive integer");
    }
    c.max_steps = value["max_steps"].get<std::size_t>();
  }
  located(pointer, [&] {
    check_config(c);
    return 0;
  });
  return c;
}

// ---------------------------------------------------------------------------
// Game files

GameFile parse_game(const Json& doc, bool validate_valuations) {
  require_object(doc, "", {"n", "m", "scheme", "valuations"},
                 {"allow_unaffiliated", "initial_state", "dynamics"});
  const int n = int_from_json(doc["n"], "/n");
  const int m = int_from_json(doc["m"], "/m");
  if (n < 1 || n > kMaxPlayers) {
    throw ParseError("/n", "n must lie in [1, " + std::to_string(kMaxPlayers) + "]");
  }
  if (m < 1) throw ParseError("/m", "m must be >= 1");
  if (m > n) {
    throw ParseError("/m", "m = " + std::to_string(m) + " exceeds n = " +
                               std::to_string(n) + "; m <= n is required");
  }
  if (!doc["scheme"].is_string()) throw ParseError("/scheme", "expected a string");
  Scheme scheme = located("/scheme", [&] {
    return parse_scheme(doc["scheme"].get<std::string>());
  });
  std::optional<bool> allow;
  if (doc.contains("allow_unaffiliated")) {
    if (!doc["allow_unaffiliated"].is_boolean()) {
      throw ParseError("/allow_unaffiliated", "expected a boolean");
    }
    allow = doc["allow_unaffiliated"].get<bool>();
    bool wanted = scheme == Scheme::kLaborUnion;
    if (*allow != wanted) {
      throw ParseError("/allow_unaffiliated",
                       wanted ? "labor_union games require unaffiliated support"
                              : to_string(scheme) +
                                    " games do not allow unaffiliated players");
    }
  }

  const Json& vals = doc["valuations"];
  std::vector<Valuation> valuations;
  ValuationLayout layout = ValuationLayout::kList;
  if (vals.is_array()) {
    if (vals.size() != static_cast<std::size_t>(m)) {
      throw ParseError("/valuations", "expected " + std::to_string(m) +
                                          " valuations, got " +
                                          std::to_string(vals.size()));
    }
    for (std::size_t k = 0; k < vals.size(); ++k) {
      valuations.push_back(build_valuation(vals[k], n, child("/valuations", k)));
    }
  } else if (vals.is_object() && vals.size() == 1 && vals.contains("shared")) {
    layout = ValuationLayout::kShared;
    Valuation v = build_valuation(vals["shared"], n, "/valuations/shared");
    valuations.assign(static_cast<std::size_t>(m), v);
  } else if (vals.is_object() && vals.size() == 1 && vals.contains("graph")) {
    layout = ValuationLayout::kGraph;
    Valuation v = Valuation::coverage(build_graph(vals["graph"], n, "/valuations/graph"));
    valuations.assign(static_cast<std::size_t>(m), v);
  } else {
    throw ParseError("/valuations",
                     "expected a list of m fragments, {\"shared\": ...} or "
                     "{\"graph\": ...}");
  }

  GameSpec spec = [&] {
    try {
      return GameSpec(scheme, std::move(valuations), allow, validate_valuations);
    } catch (const InvalidArgument& e) {
      throw ParseError("", e.what());
    }
  }();
  GameFile game{std::move(spec), layout, std::nullopt, std::nullopt};
  if (doc.contains("initial_state")) {
    game.initial_state = state_from_json(doc["initial_state"], game.spec, "/initial_state");
  }
  if (doc.contains("dynamics")) {
    game.dynamics = dynamics_from_json(doc["dynamics"], "/dynamics");
  }
  return game;
}

GameFile parse_game_text(std::string_view text, bool validate_valuations) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1),
                     "invalid JSON: " + std::string(e.what()));
  }
  return parse_game(doc, validate_valuations);
}

GameFile load_game_file(const std::filesystem::path& path, bool validate_valuations) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game_text(buffer.str(), validate_valuations);
}

Json serialize_game(const GameFile& game) {
  const GameSpec& spec = game.spec;
  Json doc{{"n", spec.players()},
           {"m", spec.parties()},
           {"scheme", to_string(spec.scheme())}};
  switch (game.layout) {
    case ValuationLayout::kList: {
      Json list = Json::array();
      for (const Valuation& v : spec.valuations()) list.push_back(valuation_to_json(v));
      doc["valuations"] = std::move(list);
      break;
    }
    case ValuationLayout::kShared:
      doc["valuations"] = Json{{"shared", valuation_to_json(spec.valuation(1))}};
      break;
    case ValuationLayout::kGraph:
      doc["valuations"] = Json{{"graph", graph_to_json(*spec.valuation(1).graph())}};
      break;
  }
  if (spec.scheme() == Scheme::kLaborUnion) doc["allow_unaffiliated"] = true;
  if (game.initial_state) doc["initial_state"] = state_to_json(*game.initial_state);
  if (game.dynamics) doc["dynamics"] = dynamics_to_json(*game.dynamics);
  return doc;
}

// ---------------------------------------------------------------------------
// Traces

TraceFormat parse_trace_format(const std::string& text) {
  if (text == "jsonl") return TraceFormat::kJsonl;
  if (text == "csv") return TraceFormat::kCsv;
  throw InvalidArgument("unknown trace format \"" + text + "\" (expected jsonl or csv)");
}

TraceFormat trace_format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (ext == ".csv") return TraceFormat::kCsv;
  if (ext == ".jsonl") return TraceFormat::kJsonl;
  throw InvalidArgument("cannot infer trace format from \"" + path.string() +
                        "\" (use .jsonl or .csv)");
}

OrderedJson trace_step_to_json(const TraceStep& s) {
  return OrderedJson{{"step", s.step},
                     {"mover", s.mover},
                     {"from", s.from},
                     {"to", s.to},
                     {"payoff_before", to_string(s.payoff_before)},
                     {"payoff_after", to_string(s.payoff_after)},
                     {"potential_after", to_string(s.potential_after)},
                     {"total_profit_after", to_string(s.total_profit_after)}};
}

std::string trace_to_jsonl(const Trace& trace) {
  std::string out;
  for (const TraceStep& s : trace.steps) {
    out += trace_step_to_json(s).dump();
    out += '\n';
  }
  return out;
}

std::string trace_to_csv(const Trace& trace) {
  std::string out =
      "step,mover,from,to,payoff_before,payoff_after,potential_after,"
      "total_profit_after\n";
  for (const TraceStep& s : trace.steps) {
    out += std::to_string(s.step) + ',' + std::to_string(s.mover) + ',' +
           std::to_string(s.from) + ',' + std::to_string(s.to) + ',' +
           to_string(s.payoff_before) + ',' + to_string(s.payoff_after) + ',' +
           to_string(s.potential_after) + ',' + to_string(s.total_profit_after) + '\n';
  }
  return out;
}

void write_trace(const Trace& trace, TraceFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << (format == TraceFormat::kCsv ? trace_to_csv(trace) : trace_to_jsonl(trace));
  if (!out) throw InvalidArgument("write failed for " + path.string());
}

// ---------------------------------------------------------------------------
// Reports

OrderedJson to_json(const ValidationViolation& w) {
  return OrderedJson{{"property", to_string(w.property)},
                     {"I", w.first.members()},
                     {"J", w.second.members()},
                     {"i", w.player},
                     {"lhs", to_string(w.lhs)},
                     {"rhs", to_string(w.rhs)}};
}

OrderedJson to_json(const ValidationReport& r) {
  OrderedJson violations = OrderedJson::array();
  for (const auto& w : r.violations) violations.push_back(to_json(w));
  return OrderedJson{{"monotone", r.monotone},
                     {"submodular", r.submodular},
                     {"sampled", r.sampled},
                     {"ok", r.ok()},
                     {"violations", std::move(violations)}};
}

OrderedJson to_json(const OptimalStructure& o) {
  OrderedJson out{{"value", to_string(o.value)},
                  {"state", OrderedJson::parse(state_to_json(State{o.state}).dump())}};
  if (o.ordered) {
    out["ordered"] = OrderedJson::parse(state_to_json(State{*o.ordered}).dump());
  }
  return out;
}

namespace {
OrderedJson state_json(const State& s) {
  return OrderedJson::parse(state_to_json(s).dump());
}
}  // namespace

OrderedJson to_json(const EquilibriumReport& r) {
  OrderedJson eq = OrderedJson::array();
  for (const State& s : r.equilibria) eq.push_back(state_json(s));
  OrderedJson out{{"alpha", to_string(r.alpha)},
                  {"opt", to_string(r.opt)},
                  {"states_examined", r.states_examined},
                  {"equilibrium_count", r.equilibrium_count},
                  {"worst_value", to_string(r.worst_value)},
                  {"best_value", to_string(r.best_value)},
                  {"poa", to_string(r.poa)},
                  {"pos", to_string(r.pos)},
                  {"worst_state", state_json(r.worst_state)},
                  {"best_state", state_json(r.best_state)},
                  {"equilibria", std::move(eq)}};
  if (!r.equilibrium_shapes.empty()) {
    OrderedJson shapes = OrderedJson::array();
    for (const auto& s : r.equilibrium_shapes) shapes.push_back(s.assignment);
    out["equilibrium_shapes"] = std::move(shapes);
  }
  if (r.strong_equilibria) {
    OrderedJson strong = OrderedJson::array();
    for (const State& s : *r.strong_equilibria) strong.push_back(state_json(s));
    out["strong_equilibria"] = std::move(strong);
  }
  return out;
}

OrderedJson to_json(const NicenessReport& r) {
  OrderedJson witnesses = OrderedJson::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(OrderedJson{{"check", w.check},
                                    {"state", state_json(w.state)},
                                    {"player", w.player},
                                    {"target", w.target},
                                    {"detail", w.detail}});
  }
  return OrderedJson{{"beta_tested", to_string(r.beta_tested)},
                     {"opt", to_string(r.opt)},
                     {"welfare_bound_holds", r.welfare_bound_holds},
                     {"chain_holds", r.chain_holds},
                     {"perfect_holds", r.perfect_holds},
                     {"beta_nice_holds", r.beta_nice_holds},
                     {"exact_potential_holds", r.exact_potential_holds},
                     {"states_checked", r.states_checked},
                     {"moves_checked", r.moves_checked},
                     {"witnesses", std::move(witnesses)}};
}

OrderedJson to_json(const ConvergenceBound& b) {
  return OrderedJson{{"a", to_string(b.a)},
                     {"b", to_string(b.b)},
                     {"epsilon", to_string(b.epsilon)},
                     {"steps", b.steps},
                     {"guaranteed_value", to_string(b.guaranteed_value)}};
}

OrderedJson to_json(const ConvergenceBounds& b) {
  return OrderedJson{{"nash", to_json(b.nash)}, {"alpha_nash", to_json(b.alpha_nash)}};
}

OrderedJson to_json(const CrossCheckEntry& e) {
  return OrderedJson{{"scheme", to_string(e.scheme)},
                     {"player", e.player},
                     {"closed_form", to_string(e.closed_form)},
                     {"generic", to_string(e.generic)},
                     {"cut", to_string(e.cut)},
                     {"equal", e.equal}};
}

OrderedJson to_json(const CutIdentity& c) {
  return OrderedJson{{"total_profit", to_string(c.total_profit)},
                     {"total_weight", to_string(c.total_weight)},
                     {"cut_weight", to_string(c.cut_weight)},
                     {"holds", c.holds}};
}

}  // namespace profitshare
