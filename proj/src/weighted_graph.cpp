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

#include "profitshare/weighted_graph.hpp"

#include <set>
#include <string>

#include "profitshare/errors.hpp"

namespace profitshare {

WeightedGraph::WeightedGraph(int vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices_ < 1 || vertices_ > kMaxPlayers) {
    throw InvalidArgument("graph vertex count " + std::to_string(vertices_) +
                          " outside [1, " + std::to_string(kMaxPlayers) + "]");
  }
  std::set<Mask> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    std::string where = "edge " + std::to_string(k);
    if (e.endpoints.size() < 2) {
      throw InvalidArgument(where + " needs at least two distinct endpoints");
    }
    if (e.endpoints.max_member() > vertices_) {
      throw InvalidArgument(where + " has an endpoint outside [1, " +
                            std::to_string(vertices_) + "]");
    }
    if (e.weight <= 0) {
      throw InvalidArgument(where + " has non-positive weight " +
                            to_string(e.weight));
    }
    if (!seen.insert(e.endpoints.mask()).second) {
      throw InvalidArgument(where + " repeats endpoint set " +
                            to_string(e.endpoints));
    }
  }
}

bool WeightedGraph::has_hyperedges() const {
  for (const Edge& e : edges_) {
    if (e.endpoints.size() > 2) return true;
  }
  return false;
}

Rational WeightedGraph::total_weight() const {
  Rational total(0);
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

Rational WeightedGraph::weighted_degree(int vertex) const {
  Rational total(0);
  for (const Edge& e : edges_) {
    if (e.endpoints.contains(vertex)) total += e.weight;
  }
  return total;
}

Rational WeightedGraph::covered_weight(Coalition set) const {
  Rational total(0);
  for (const Edge& e : edges_) {
    if (e.endpoints.intersects(set)) total += e.weight;
  }
  return total;
}

}  // namespace profitshare
