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
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "dpcentrality/dpcentrality.hpp"

// Graph factories and brute-force oracles shared by the test binaries.
// Oracles here deliberately avoid the library's fast paths.

namespace dpc::testing {

// Random connected graph: a random spanning tree over a shuffled vertex
// order, plus each remaining pair with probability `extra`.
inline WeightedGraph random_connected_graph(std::mt19937_64& rng,
                                            std::size_t n, double extra,
                                            double w_lo = 0.5,
                                            double w_hi = 2.0) {
  std::uniform_real_distribution<double> weight(w_lo, w_hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const Vertex a = order[i], b = order[pick(rng)];
    used[a][b] = used[b][a] = true;
    edges.push_back({a, b, weight(rng)});
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!used[a][b] && coin(rng) < extra) edges.push_back({a, b, weight(rng)});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo,
                               std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline WeightedGraph path_graph(std::size_t n, double w = 1.0) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w});
  return WeightedGraph(n, e);
}

inline WeightedGraph cycle_graph(std::size_t n, double w = 1.0) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % n), w});
  }
  return WeightedGraph(n, e);
}

inline WeightedGraph star_graph(std::size_t leaves, double w = 1.0) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i, w});
  return WeightedGraph(leaves + 1, e);
}

inline std::vector<std::vector<double>> dense_adjacency(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = e.weight;
  return a;
}

// Floyd-Warshall all-pairs distances.
inline std::vector<std::vector<double>> floyd_distances(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = e.weight;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<double> closeness_oracle(const WeightedGraph& g) {
  const auto d = floyd_distances(g);
  std::vector<double> c(g.num_vertices(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    double total = 0.0;
    for (double x : d[i]) total += x;
    c[i] = std::isfinite(total) ? 1.0 / total : 0.0;
  }
  return c;
}

// ||L||_F^2 summed entry by entry from a dense Laplacian.
inline double energy_oracle(const WeightedGraph& g) {
  auto a = dense_adjacency(g);
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) deg += a[i][j];
    for (std::size_t j = 0; j < n; ++j) {
      const double l = (i == j ? deg : 0.0) - a[i][j];
      s += l * l;
    }
  }
  return s;
}

// Energy drops recomputed from scratch on each vertex-deleted graph.
inline std::vector<double> energy_drop_oracle(const WeightedGraph& g) {
  const double full = energy_oracle(g);
  std::vector<double> drops(g.num_vertices());
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    drops[i] = full - energy_oracle(delete_vertex(g, i));
  }
  return drops;
}

// Exhaustive reading of the closeness smooth-bound scan: the global argmax
// of the damped term over every feasible k. When that argmax sits on the
// last feasible k the next step is the pole, so the result is Undefined.
struct ExhaustiveSmooth {
  bool undefined = false;
  std::size_t k = 0;
  double value = 0.0;
};

inline ExhaustiveSmooth closeness_smooth_oracle(double n, double w,
                                                double theta, double beta) {
  auto term = [&](std::size_t k) {
    const double head = w - static_cast<double>(k) * theta;
    return n * (n - 1.0) * theta / (head * (head - theta)) *
           std::exp(-beta * static_cast<double>(k));
  };
  std::size_t last = 0;
  while (w - static_cast<double>(last + 1) * theta - theta > 0.0) ++last;
  ExhaustiveSmooth best;
  best.value = term(0);
  for (std::size_t k = 1; k <= last; ++k) {
    if (term(k) > best.value) {
      best.value = term(k);
      best.k = k;
    }
  }
  best.undefined = best.k == last;
  return best;
}

// max over s >= 0 of (a + c s) e^{-beta s} by dense grid plus refinement.
inline double grid_max_linear_exp(double a, double c, double beta) {
  double best = a, best_s = 0.0;
  const double span = 20.0 / beta;
  for (int i = 0; i <= 200000; ++i) {
    const double s = span * i / 200000.0;
    const double v = (a + c * s) * std::exp(-beta * s);
    if (v > best) {
      best = v;
      best_s = s;
    }
  }
  const double h = span / 200000.0;
  for (int i = -1000; i <= 1000; ++i) {
    const double s = std::max(0.0, best_s + h * i / 1000.0);
    best = std::max(best, (a + c * s) * std::exp(-beta * s));
  }
  return best;
}

inline double relative_error(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace dpc::testing
