// Copyright 2026 The dpcentrality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dpcentrality/graph.hpp"

namespace dpc {

// Floor applied to decreased weights, relative to theta. Perturbations never
// delete an edge.
inline constexpr double kMinWeightFraction = 1e-6;

/// The two extreme theta-neighbours of every edge: w + theta and
/// max(w - theta, 1e-6 * theta). A decrease that would be a no-op (w already
/// at the floor) is skipped. Ordered by edge id, increase before decrease.
inline std::vector<EdgePerturbation> extreme_perturbations(
    const WeightedGraph& g, const ThetaParams& t) {
  const double theta = t.theta();
  const double floor = kMinWeightFraction * theta;
  std::vector<EdgePerturbation> out;
  out.reserve(2 * g.num_edges());
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const Edge e = g.edge(id);
    out.push_back({id, e.u, e.v, theta, e.weight + theta});
    const double lowered = std::max(e.weight - theta, floor);
    if (lowered != e.weight) {
      out.push_back({id, e.u, e.v, lowered - e.weight, lowered});
    }
  }
  return out;
}

inline std::vector<std::pair<EdgePerturbation, WeightedGraph>>
enumerate_extreme_neighbors(const WeightedGraph& g, const ThetaParams& t) {
  std::vector<std::pair<EdgePerturbation, WeightedGraph>> out;
  for (const auto& p : extreme_perturbations(g, t)) {
    out.emplace_back(p, apply(g, p));
  }
  return out;
}

}  // namespace dpc
