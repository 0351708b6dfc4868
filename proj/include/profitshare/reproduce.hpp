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
#include <string>
#include <vector>

namespace profitshare {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ReproduceOptions {
  std::size_t corpus_size = 200;
  std::uint64_t seed = 20100;
  int random_orders = 100;
  std::size_t graphs = 100;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;
};

inline constexpr int kCriterionCount = 9;

std::string criterion_name(int id);

// Criterion ids behind a case name: prop6, niceness, poa-sweep, pos-strong,
// bounds, nsteps, envelope, graphs, validators or all.
std::vector<int> criteria_for_case(const std::string& name);
const std::vector<std::string>& case_names();

CriterionResult run_criterion(int id, const ReproduceOptions& options = {});
std::vector<CriterionResult> reproduce(const std::vector<int>& ids,
                                       const ReproduceOptions& options = {});

// "PASS  3  <name>: <detail>"
std::string format_result(const CriterionResult& result);

}  // namespace profitshare
