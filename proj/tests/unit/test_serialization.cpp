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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "profitshare/corpus.hpp"
#include "profitshare/errors.hpp"
#include "profitshare/serialization.hpp"

using namespace profitshare;

namespace {

std::filesystem::path source(const char* relative) {
  return std::filesystem::path(PROFITSHARE_SOURCE_DIR) / relative;
}

std::string parse_error_location(const std::string& text) {
  try {
    parse_game_text(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("rational literals in JSON") {
  CHECK(rational_from_json(Json("3/6"), "/x") == Rational(1, 2));
  CHECK(rational_from_json(Json(4), "/x") == 4);
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "/x"), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "/x"), ParseError);
}

TEST_CASE("bundled game files load") {
  GameFile p = load_game_file(source("data/prop6_n3.json"));
  CHECK(p.spec.players() == 3);
  CHECK(p.spec.parties() == 2);
  CHECK(p.spec.scheme() == Scheme::kShapley);
  REQUIRE(p.initial_state);
  CHECK(*p.initial_state == State{PartitionState{{1, 1, 1}}});

  GameFile lu = load_game_file(source("data/lu_unaffiliated.json"));
  CHECK(lu.spec.allow_unaffiliated());
  CHECK(*lu.initial_state == State{OrderedState::all_unaffiliated(4, 2)});

  GameFile tri = load_game_file(source("data/triangle_graph.json"));
  CHECK(tri.layout == ValuationLayout::kGraph);
  CHECK(tri.spec.valuation(1).kind() == ValuationKind::kCoverage);
  CHECK(tri.spec.valuation(1).graph() == tri.spec.valuation(2).graph());
}

TEST_CASE("round trip through the canonical form") {
  for (Scheme scheme : {Scheme::kFairValue, Scheme::kShapley, Scheme::kLaborUnion}) {
    for (const GameSpec& spec : make_corpus(scheme, 30, 31000)) {
      Json once = serialize_game(GameFile{spec});
      GameFile back = parse_game(once);
      CHECK(back.spec.scheme() == spec.scheme());
      CHECK(back.spec.valuations() == spec.valuations());
      CHECK(serialize_game(back) == once);
    }
  }
  GameFile tri = load_game_file(source("data/triangle_graph.json"));
  Json t = serialize_game(tri);
  CHECK(t["valuations"].contains("graph"));
  CHECK(serialize_game(parse_game(t)) == t);
}

TEST_CASE("malformed documents report a JSON location") {
  CHECK(parse_error_location("{\"n\": 2,") .find(':') != std::string::npos);
  CHECK(parse_error_location(R"({"n":2,"m":3,"scheme":"fair_value","valuations":[]})") == "/m");
  CHECK(parse_error_location(
            R"({"n":1,"m":1,"scheme":"fair_value","valuations":[{"kind":"additive","weights":["1"]}],"colour":1})") ==
        "/colour");
  CHECK(parse_error_location(
            R"({"n":1,"m":1,"scheme":"fancy","valuations":[{"kind":"additive","weights":["1"]}]})") ==
        "/scheme");
  CHECK(parse_error_location(
            R"({"n":2,"m":1,"scheme":"fair_value","valuations":[{"kind":"table","n":2,"values":["1","1","1","1"]}]})") ==
        "/valuations/0/values/0");
  CHECK(parse_error_location(
            R"({"n":2,"m":1,"scheme":"fair_value","valuations":[{"kind":"additive","weights":["1"]}]})")
            .rfind("/valuations/0", 0) == 0);
}

TEST_CASE("failed valuation checks are reported, or skipped on request") {
  const char* squares =
      R"({"n":2,"m":1,"scheme":"shapley","valuations":[{"kind":"table","n":2,"values":["0","1","1","4"]}]})";
  CHECK_THROWS_AS(parse_game_text(squares), ValidationFailure);
  GameFile skipped = parse_game_text(squares, false);
  CHECK_FALSE(skipped.spec.valuations_verified());
}

TEST_CASE("state literals") {
  GameFile lu = load_game_file(source("data/lu_unaffiliated.json"));
  State s = OrderedState{{{3, 1}, {2}}, {4}};
  Json j = state_to_json(s);
  CHECK(state_from_json(j, lu.spec, "/s") == s);
  CHECK(state_from_json(Json::parse("[1,0,2,0]"), lu.spec, "/s") ==
        State{OrderedState{{{1}, {3}}, {2, 4}}});
  CHECK_THROWS_AS(state_from_json(Json::parse("[1,2]"), lu.spec, "/s"), ParseError);
  GameFile p = load_game_file(source("data/prop6_n3.json"));
  CHECK(state_to_json(State{PartitionState{{1, 2, 2}}}) == Json::parse("[1,2,2]"));
  CHECK_THROWS_AS(state_from_json(Json::parse("[1,0,2]"), p.spec, "/s"), ParseError);
}

TEST_CASE("dynamics configuration round trip") {
  DynamicsConfig c;
  c.alpha = Rational(1, 4);
  c.selector = Selector::kRandomSeeded;
  c.seed = 99;
  c.max_steps = 50;
  DynamicsConfig back = dynamics_from_json(dynamics_to_json(c), "/dynamics");
  CHECK(back.alpha == c.alpha);
  CHECK(back.selector == c.selector);
  CHECK(back.seed == 99);
  CHECK(back.max_steps == 50);
  CHECK_THROWS_AS(dynamics_from_json(Json::parse(R"({"alpha":"-1"})"), "/dynamics"), ParseError);
}

TEST_CASE("trace formats") {
  GameFile p = load_game_file(source("data/prop6_n3.json"));
  Trace t = run(p.spec, *p.initial_state, {});
  std::string csv = trace_to_csv(t);
  std::istringstream lines(csv);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "step,mover,from,to,payoff_before,payoff_after,potential_after,total_profit_after");
  CHECK(row == "1,1,1,2,1/3,1,2,2");
  CHECK_FALSE(std::getline(lines, extra));
  Json step = Json::parse(trace_to_jsonl(t));
  CHECK(step["mover"] == 1);
  CHECK(step["to"] == 2);
  CHECK(step["payoff_before"] == "1/3");
  CHECK(trace_format_for("x.csv") == TraceFormat::kCsv);
  CHECK(trace_format_for("x.jsonl") == TraceFormat::kJsonl);
  CHECK(parse_trace_format("csv") == TraceFormat::kCsv);
  CHECK_THROWS_AS(parse_trace_format("xml"), InvalidArgument);
}

TEST_CASE("reports serialise rationals as strings") {
  ValidationReport r;
  r.submodular = false;
  r.violations.push_back({ValidationViolation::Property::kSubmodular, Coalition(),
                          Coalition::of({1}), 2, Rational(1), Rational(3)});
  OrderedJson j = to_json(r);
  CHECK(j["submodular"] == false);
  CHECK(j["violations"][0]["lhs"] == "1");
  CHECK(j["violations"][0]["rhs"] == "3");
  CHECK(j["violations"][0]["i"] == 2);
  CHECK(j["violations"][0]["J"] == OrderedJson::parse("[1]"));
}
