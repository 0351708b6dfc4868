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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "profitshare/analysis.hpp"
#include "profitshare/cli.hpp"
#include "profitshare/corpus.hpp"
#include "profitshare/dynamics.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/graph_games.hpp"
#include "profitshare/reproduce.hpp"
#include "profitshare/serialization.hpp"

namespace py = pybind11;
using namespace profitshare;

// Rational <-> fractions.Fraction; ints and "p/q" strings are accepted too.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      py::object fraction = py::module_::import("fractions").attr("Fraction");
      if (!py::isinstance<py::int_>(src) && !py::isinstance(src, fraction)) return false;
      py::object f = fraction(src);
      std::string num = py::str(f.attr("numerator"));
      std::string den = py::str(f.attr("denominator"));
      value = Rational(num + "/" + den);
      value.canonicalize();
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.get_num().get_str())),
                    py::int_(py::str(r.get_den().get_str())))
        .release();
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const OrderedJson& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::handle& obj) {
  std::string text = py::str(py::module_::import("json").attr("dumps")(obj));
  return Json::parse(text);
}

State state_from_py(const GameSpec& spec, const py::handle& obj) {
  return state_from_json(from_python(obj), spec, "");
}

py::object state_to_py(const State& s) {
  return to_python(OrderedJson::parse(state_to_json(s).dump()));
}

Coalition coalition_from(const std::vector<int>& members) {
  return Coalition::of(std::span<const int>(members));
}

py::dict trace_to_py(const Trace& t) {
  py::list steps;
  for (const TraceStep& s : t.steps) {
    py::dict d;
    d["step"] = s.step;
    d["mover"] = s.mover;
    d["from"] = s.from;
    d["to"] = s.to;
    d["payoff_before"] = s.payoff_before;
    d["payoff_after"] = s.payoff_after;
    d["potential_after"] = s.potential_after;
    d["total_profit_after"] = s.total_profit_after;
    steps.append(d);
  }
  py::dict out;
  out["initial_state"] = state_to_py(t.initial);
  out["initial_potential"] = t.initial_potential;
  out["initial_total_profit"] = t.initial_total_profit;
  out["steps"] = steps;
  out["final_state"] = state_to_py(t.final_state);
  out["converged"] = t.converged;
  out["truncated"] = t.truncated;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact profit-sharing games: payoffs, dynamics and equilibrium analysis";

  // Translators registered later are tried first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationFailure>(m, "ValidationFailure", PyExc_ValueError);
  py::register_exception<InvalidCoalition>(m, "InvalidCoalition", PyExc_ValueError);
  py::register_exception<SchemeMismatch>(m, "SchemeMismatch", PyExc_TypeError);
  py::register_exception<NoOpMove>(m, "NoOpMove", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLarge", PyExc_RuntimeError);
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_RuntimeError);
  py::register_exception<NoEquilibriumFound>(m, "NoEquilibriumFound", PyExc_RuntimeError);

  py::enum_<Scheme>(m, "Scheme")
      .value("FAIR_VALUE", Scheme::kFairValue)
      .value("SHAPLEY", Scheme::kShapley)
      .value("LABOR_UNION", Scheme::kLaborUnion);

  py::class_<Valuation>(m, "Valuation")
      .def_static("table", &Valuation::explicit_table, py::arg("n"), py::arg("values"))
      .def_static("additive", &Valuation::additive, py::arg("weights"))
      .def_static("concave", &Valuation::concave_cardinality, py::arg("values"))
      .def_static(
          "coverage",
          [](int n, const std::vector<std::pair<std::vector<int>, Rational>>& edges) {
            std::vector<Edge> list;
            for (const auto& [ends, w] : edges) list.push_back(Edge{coalition_from(ends), w});
            return Valuation::coverage(std::make_shared<const WeightedGraph>(n, std::move(list)));
          },
          py::arg("n"), py::arg("edges"))
      .def_static(
          "from_json",
          [](const py::object& fragment) { return build_valuation(from_python(fragment)); })
      .def_property_readonly("kind", [](const Valuation& v) { return to_string(v.kind()); })
      .def_property_readonly("n", &Valuation::ground_set_size)
      .def("__call__",
           [](const Valuation& v, const std::vector<int>& s) { return v.eval(coalition_from(s)); })
      .def("marginal", [](const Valuation& v, const std::vector<int>& s,
                          int i) { return v.marginal(coalition_from(s), i); })
      .def("validate", [](const Valuation& v) { return to_python(to_json(validate(v))); })
      .def("to_json",
           [](const Valuation& v) { return to_python(OrderedJson::parse(valuation_to_json(v).dump())); });

  py::class_<GameSpec>(m, "Game")
      .def(py::init<Scheme, std::vector<Valuation>, std::optional<bool>, bool>(),
           py::arg("scheme"), py::arg("valuations"), py::arg("allow_unaffiliated") = py::none(),
           py::arg("validate") = true)
      .def_property_readonly("n", &GameSpec::players)
      .def_property_readonly("m", &GameSpec::parties)
      .def_property_readonly("scheme", &GameSpec::scheme)
      .def_property_readonly("valuations", &GameSpec::valuations)
      .def("with_scheme", &GameSpec::with_scheme)
      .def("payoff", [](const GameSpec& g, const py::object& s,
                        int i) { return payoff(g, state_from_py(g, s), i); })
      .def("payoffs",
           [](const GameSpec& g, const py::object& s) { return all_payoffs(g, state_from_py(g, s)); })
      .def("total_profit",
           [](const GameSpec& g, const py::object& s) { return total_profit(g, state_from_py(g, s)); })
      .def("potential",
           [](const GameSpec& g, const py::object& s) { return potential(g, state_from_py(g, s)); })
      .def("apply_move",
           [](const GameSpec& g, const py::object& s, int i, int target) {
             return state_to_py(apply_move(g, state_from_py(g, s), i, target));
           })
      .def("best_response",
           [](const GameSpec& g, const py::object& s, int i) {
             BestResponse br = best_response(g, state_from_py(g, s), i);
             return py::make_tuple(br.strategy, br.delta);
           })
      .def("improvement_profile",
           [](const GameSpec& g, const py::object& s) {
             ImprovementProfile p = improvement_profile(g, state_from_py(g, s));
             py::list per;
             for (const auto& br : p.per_player) per.append(py::make_tuple(br.strategy, br.delta));
             return py::make_tuple(per, p.total_delta);
           })
      .def("classify",
           [](const GameSpec& g, const py::object& s, const Rational& alpha, bool strong) {
             Classification c = classify_state(g, state_from_py(g, s), alpha, strong);
             py::dict d;
             d["is_nash"] = c.is_nash;
             d["is_alpha_nash"] = c.is_alpha_nash;
             d["is_strong_nash"] = c.is_strong_nash ? py::cast(*c.is_strong_nash) : py::none();
             return d;
           },
           py::arg("state"), py::arg("alpha") = Rational(0), py::arg("strong") = false)
      .def("run",
           [](const GameSpec& g, const py::object& s, const Rational& alpha,
              const std::string& selector, std::uint64_t seed, std::size_t max_steps) {
             DynamicsConfig c{alpha, parse_selector(selector), seed, max_steps};
             State start = state_from_py(g, s);
             Trace t;
             {
               py::gil_scoped_release release;
               t = run(g, start, c);
             }
             return trace_to_py(t);
           },
           py::arg("state"), py::arg("alpha") = Rational(0), py::arg("selector") = "basic",
           py::arg("seed") = 0, py::arg("max_steps") = 100000)
      .def("optimum", [](const GameSpec& g) { return to_python(to_json(optimum(g))); })
      .def("prices",
           [](const GameSpec& g, const Rational& alpha, unsigned threads, bool strong) {
             PriceOptions po;
             po.threads = threads;
             po.strong = strong;
             EquilibriumReport r;
             {
               py::gil_scoped_release release;
               r = prices(g, alpha, po);
             }
             return to_python(to_json(r));
           },
           py::arg("alpha") = Rational(0), py::arg("threads") = 1, py::arg("strong") = false)
      .def("niceness",
           [](const GameSpec& g, const Rational& beta) {
             return to_python(to_json(verify_niceness(g, beta)));
           },
           py::arg("beta") = Rational(2))
      .def("count_states", [](const GameSpec& g) { return count_states(g); });

  m.def("load_game", [](const std::string& path, bool validate) {
    GameFile f = load_game_file(path, validate);
    py::object initial = f.initial_state ? state_to_py(*f.initial_state) : py::none();
    return py::make_tuple(f.spec, initial);
  }, py::arg("path"), py::arg("validate") = true);

  m.def("parse_game", [](const py::object& doc, bool validate) {
    GameFile f = parse_game(from_python(doc), validate);
    return f.spec;
  }, py::arg("document"), py::arg("validate") = true);

  m.def("convergence_bounds",
        [](int n, const Rational& beta, const Rational& alpha, const Rational& eps,
           const Rational& opt) { return to_python(to_json(convergence_bounds(n, beta, alpha, eps, opt))); },
        py::arg("n"), py::arg("beta"), py::arg("alpha"), py::arg("epsilon"), py::arg("opt"));

  m.def("two_party_tight_game", &two_party_tight_game, py::arg("n"),
        py::arg("scheme") = Scheme::kShapley);

  m.def("cross_check",
        [](int n, const std::vector<std::pair<std::vector<int>, Rational>>& edges,
           const py::object& state, int parties, Scheme scheme) {
          std::vector<Edge> list;
          for (const auto& [ends, w] : edges) list.push_back(Edge{coalition_from(ends), w});
          auto graph = std::make_shared<const WeightedGraph>(n, std::move(list));
          GameSpec spec = coverage_game(graph, scheme, parties);
          py::list out;
          for (const auto& e : cross_check(spec, *graph, state_from_py(spec, state))) {
            out.append(to_python(to_json(e)));
          }
          return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("state"), py::arg("parties"), py::arg("scheme"));

  m.def("reproduce", [](const std::string& name, std::size_t corpus_size) {
    ReproduceOptions ro;
    ro.corpus_size = corpus_size;
    py::list out;
    for (int id : criteria_for_case(name)) {
      CriterionResult r;
      {
        py::gil_scoped_release release;
        r = run_criterion(id, ro);
      }
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("case") = "all", py::arg("corpus_size") = 200);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::vector<std::string> argv{"profitshare"};
    argv.insert(argv.end(), args.begin(), args.end());
    int code = run_command(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
