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

#include <vector>

#include "profitshare/coalition.hpp"
#include "profitshare/rational.hpp"

namespace profitshare {

// An edge joins two vertices; a hyperedge joins three or more.
struct Edge {
  Coalition endpoints;
  Rational weight;
};

// Undirected weighted (hyper)graph on vertices {1..n}. Validated on
// construction: endpoints distinct and in range, at least two per edge,
// strictly positive weights, no repeated endpoint sets.
class WeightedGraph {
 public:
  WeightedGraph(int vertices, std::vector<Edge> edges);

  int vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_hyperedges() const;
  Rational total_weight() const;
  // Sum of weights of edges containing `vertex`.
  Rational weighted_degree(int vertex) const;
  // Sum of weights of edges with at least one endpoint in `set`.
  Rational covered_weight(Coalition set) const;

 private:
  int vertices_;
  std::vector<Edge> edges_;
};

}  // namespace profitshare
