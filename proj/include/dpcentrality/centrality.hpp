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
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpcentrality/error.hpp"
#include "dpcentrality/graph.hpp"
#include "dpcentrality/spectral.hpp"

namespace dpc {

enum class Measure { kEigenvector, kLaplacian, kCloseness };

inline constexpr Measure kAllMeasures[] = {
    Measure::kEigenvector, Measure::kLaplacian, Measure::kCloseness};

constexpr std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::kEigenvector: return "eigenvector";
    case Measure::kLaplacian: return "laplacian";
    case Measure::kCloseness: return "closeness";
  }
  return "unknown";
}

inline Measure parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown measure '" + std::string(name) +
                  "' (expected eigenvector, laplacian or closeness)");
}

struct CentralityVector {
  Measure measure = Measure::kEigenvector;
  std::vector<double> scores;

  std::size_t size() const noexcept { return scores.size(); }
};

/// Vertices by descending score; equal scores keep ascending vertex order.
struct Ranking {
  std::vector<Vertex> order;
};

/// Principal eigenvector of the adjacency matrix, unit norm, positive.
/// Works on the sparse neighbour lists; `warm_start` (same length as n) can
/// seed the iteration, e.g. with the unperturbed graph's vector.
inline CentralityVector eigenvector_centrality(
    const WeightedGraph& g, const PowerOptions& opts = {},
    std::span<const double> warm_start = {}) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw Error(ErrorCode::kTooSmall, "empty graph");
  if (!is_connected(g)) {
    throw Error(ErrorCode::kNotConnected,
                "eigenvector centrality needs a connected graph");
  }
  if (n == 1) return {Measure::kEigenvector, {1.0}};
  const auto w = g.weights();
  double shift = 0.0;
  for (Vertex i = 0; i < n; ++i) shift = std::max(shift, g.weighted_degree(i));
  auto apply = [&](std::span<const double> x, std::span<double> y) {
    for (Vertex i = 0; i < n; ++i) {
      double s = 0.0;
      for (const auto& inc : g.neighbors(i)) s += w[inc.edge] * x[inc.target];
      y[i] = s;
    }
  };
  EigenPair pair = power_iteration(n, apply, shift, opts, warm_start);
  return {Measure::kEigenvector, std::move(pair.vector)};
}

/// Lambda(G) - Lambda(G_i) for every vertex i, where G_i deletes vertex i.
/// Deleting i removes d_i^2, the squared weights of its edges (twice) and
/// lowers each neighbour's degree, giving d_i^2 + sum_j W_ij (2 d_j + W_ij).
inline std::vector<double> laplace_energy_drops(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  const auto w = g.weights();
  std::vector<double> degree(n);
  for (Vertex i = 0; i < n; ++i) degree[i] = g.weighted_degree(i);
  std::vector<double> drop(n);
  for (Vertex i = 0; i < n; ++i) {
    double s = degree[i] * degree[i];
    for (const auto& inc : g.neighbors(i)) {
      const double wij = w[inc.edge];
      s += wij * (2.0 * degree[inc.target] + wij);
    }
    drop[i] = s;
  }
  return drop;
}

/// c_i = (Lambda(G) - Lambda(G_i)) / Lambda(G).
inline CentralityVector laplacian_centrality(const WeightedGraph& g) {
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::kTooSmall, "laplacian centrality needs n >= 2");
  }
  const double energy = laplace_energy(g);
  if (!(energy > 0.0)) {
    throw Error(ErrorCode::kZeroEnergy, "graph has zero Laplace energy");
  }
  auto drops = laplace_energy_drops(g);
  for (double& d : drops) d /= energy;
  return {Measure::kLaplacian, std::move(drops)};
}

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Weighted shortest-path distances from `source` (weights as costs).
inline std::vector<double> shortest_distances(const WeightedGraph& g,
                                              Vertex source) {
  const auto w = g.weights();
  std::vector<double> dist(g.num_vertices(), kUnreachable);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (const auto& inc : g.neighbors(x)) {
      const double nd = d + w[inc.edge];
      if (nd < dist[inc.target]) {
        dist[inc.target] = nd;
        heap.emplace(nd, inc.target);
      }
    }
  }
  return dist;
}

/// 1 / sum_v S(u, v) per vertex, with 1/inf = 0 for vertices that cannot
/// reach everyone.
inline CentralityVector closeness_centrality(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw Error(ErrorCode::kTooSmall, "closeness needs n >= 2");
  CentralityVector out{Measure::kCloseness, std::vector<double>(n)};
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = shortest_distances(g, u);
    const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    out.scores[u] = std::isinf(total) ? 0.0 : 1.0 / total;
  }
  return out;
}

inline CentralityVector compute_centrality(const WeightedGraph& g,
                                           Measure measure) {
  switch (measure) {
    case Measure::kEigenvector: return eigenvector_centrality(g);
    case Measure::kLaplacian: return laplacian_centrality(g);
    case Measure::kCloseness: return closeness_centrality(g);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown measure");
}

inline Ranking rank(std::span<const double> scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kNonFiniteScore, "cannot rank non-finite score");
    }
  }
  Ranking r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), Vertex{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](Vertex a, Vertex b) { return scores[a] > scores[b]; });
  return r;
}

inline Ranking rank(const CentralityVector& c) { return rank(c.scores); }

}  // namespace dpc
