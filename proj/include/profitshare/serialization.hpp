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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "profitshare/analysis.hpp"
#include "profitshare/dynamics.hpp"
#include "profitshare/game.hpp"
#include "profitshare/graph_games.hpp"
#include "profitshare/valuation.hpp"

namespace profitshare {

using Json = nlohmann::json;
// Reports keep their keys in insertion order.
using OrderedJson = nlohmann::ordered_json;

// How the "valuations" member was written, so serialisation can reproduce it.
enum class ValuationLayout { kList, kShared, kGraph };

struct GameFile {
  GameSpec spec;
  ValuationLayout layout = ValuationLayout::kList;
  std::optional<State> initial_state;
  std::optional<DynamicsConfig> dynamics;
};

// Rational literal: string "p/q" / "k" / decimal, or a JSON integer.
Rational rational_from_json(const Json& value, const std::string& pointer);

// One valuation fragment:
//   {"kind":"table",    "n":N, "values":[2^N entries]}
//   {"kind":"additive", "weights":[...]}
//   {"kind":"concave",  "values":[c_0, ..., c_n]}
//   {"kind":"coverage", "n":N, "edges":[{"v":[1,2],"w":"1"}, ...]}
// `n` (when >= 0) is the expected ground-set size. Throws ParseError with a
// JSON pointer on any malformed or invalid payload.
Valuation build_valuation(const Json& fragment, int n = -1,
                          const std::string& pointer = "");

std::shared_ptr<const WeightedGraph> build_graph(const Json& fragment, int n,
                                                 const std::string& pointer);

// Game-spec document. Unknown keys are rejected; structural problems raise
// ParseError, failed valuation checks raise ValidationFailure.
GameFile parse_game(const Json& document, bool validate_valuations = true);
GameFile parse_game_text(std::string_view text, bool validate_valuations = true);
GameFile load_game_file(const std::filesystem::path& path,
                        bool validate_valuations = true);

// Canonical form (sorted keys, lowest-terms rationals). parse_game of the
// result rebuilds an equal game.
Json serialize_game(const GameFile& game);

Json valuation_to_json(const Valuation& valuation);
Json graph_to_json(const WeightedGraph& graph);

// Partition: [s_1, ..., s_n]. Ordered: {"sequences":[[...],...],
// "unaffiliated":[...]}. An array is accepted for Labor Union games too,
// with 0 marking unaffiliated players and members ascending.
Json state_to_json(const State& state);
State state_from_json(const Json& value, const GameSpec& spec,
                      const std::string& pointer = "");

Json dynamics_to_json(const DynamicsConfig& config);
DynamicsConfig dynamics_from_json(const Json& value, const std::string& pointer);

// Trace export. CSV columns: step,mover,from,to,payoff_before,payoff_after,
// potential_after,total_profit_after. LF line endings in both formats.
enum class TraceFormat { kJsonl, kCsv };
TraceFormat parse_trace_format(const std::string& text);
// Format from the file extension (.csv or .jsonl).
TraceFormat trace_format_for(const std::filesystem::path& path);
OrderedJson trace_step_to_json(const TraceStep& step);
std::string trace_to_jsonl(const Trace& trace);
std::string trace_to_csv(const Trace& trace);
void write_trace(const Trace& trace, TraceFormat format,
                 const std::filesystem::path& path);

OrderedJson to_json(const ValidationViolation& violation);
OrderedJson to_json(const ValidationReport& report);
OrderedJson to_json(const EquilibriumReport& report);
OrderedJson to_json(const NicenessReport& report);
OrderedJson to_json(const ConvergenceBound& bound);
OrderedJson to_json(const ConvergenceBounds& bounds);
OrderedJson to_json(const CrossCheckEntry& entry);
OrderedJson to_json(const CutIdentity& identity);
OrderedJson to_json(const OptimalStructure& optimum);

}  // namespace profitshare
