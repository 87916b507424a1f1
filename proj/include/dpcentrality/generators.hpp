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
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpcentrality/error.hpp"
#include "dpcentrality/graph.hpp"
#include "dpcentrality/random.hpp"

namespace dpc {

/// Barabasi-Albert preferential attachment with unit weights.
///
/// Starts from the complete graph on m vertices; every later vertex attaches
/// to m distinct existing vertices drawn with probability proportional to
/// degree (uniformly while all degrees are zero). Yields m(m-1)/2 + m(n-m)
/// edges and is connected by construction.
inline WeightedGraph generate_preferential_attachment(std::size_t n,
                                                      std::size_t m,
                                                      std::uint64_t seed) {
  if (m < 1 || n < m + 1 || n > 0xFFFFFFFEULL) {
    throw Error(ErrorCode::kInvalidParams,
                "preferential attachment needs m >= 1 and n >= m + 1 (n=" +
                    std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  RandomStream rng(seed);
  std::vector<Edge> edges;
  // Each endpoint occurrence appears once, so a uniform pick is degree-biased.
  std::vector<Vertex> endpoint_pool;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = a + 1; b < m; ++b) {
      edges.push_back({a, b, 1.0});
      endpoint_pool.push_back(a);
      endpoint_pool.push_back(b);
    }
  }
  std::vector<Vertex> targets;
  for (Vertex arrival = static_cast<Vertex>(m); arrival < n; ++arrival) {
    targets.clear();
    while (targets.size() < m) {
      const Vertex pick =
          endpoint_pool.empty()
              ? static_cast<Vertex>(rng.below(arrival))
              : endpoint_pool[rng.below(endpoint_pool.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (const Vertex t : targets) {
      edges.push_back({t, arrival, 1.0});
      endpoint_pool.push_back(t);
      endpoint_pool.push_back(arrival);
    }
  }
  return WeightedGraph(n, std::move(edges));
}

inline constexpr int kSmallWorldMaxAttempts = 100;

/// Watts-Strogatz small world with unit weights: ring lattice with k
/// neighbours per side, each lattice edge rewired with probability p to a
/// uniformly chosen non-adjacent endpoint. Disconnected draws are retried
/// with a derived seed, up to kSmallWorldMaxAttempts times.
inline WeightedGraph generate_small_world(std::size_t n, std::size_t k,
                                          double p, std::uint64_t seed) {
  if (k < 1 || n <= 2 * k || !(p >= 0.0 && p <= 1.0) || n > 0xFFFFFFFEULL) {
    throw Error(ErrorCode::kInvalidParams,
                "small world needs k >= 1, n > 2k and 0 <= p <= 1");
  }
  for (int attempt = 0; attempt < kSmallWorldMaxAttempts; ++attempt) {
    RandomStream rng(attempt == 0 ? seed : derive_seed(seed, attempt));
    std::set<std::pair<Vertex, Vertex>> present;
    auto key = [](Vertex a, Vertex b) {
      return a < b ? std::pair(a, b) : std::pair(b, a);
    };
    std::vector<std::pair<Vertex, Vertex>> lattice;
    std::vector<std::size_t> degree(n, 2 * k);
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<Vertex>(i);
        const auto b = static_cast<Vertex>((i + j) % n);
        lattice.emplace_back(a, b);
        present.insert(key(a, b));
      }
    }
    for (auto& [a, b] : lattice) {
      if (!rng.bernoulli(p)) continue;
      if (degree[a] >= n - 1) continue;
      Vertex c;
      do {
        c = static_cast<Vertex>(rng.below(n));
      } while (c == a || present.count(key(a, c)));
      present.erase(key(a, b));
      present.insert(key(a, c));
      --degree[b];
      ++degree[c];
      b = c;
    }
    std::vector<Edge> edges;
    edges.reserve(present.size());
    for (const auto& [a, b] : present) edges.push_back({a, b, 1.0});
    WeightedGraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::kConnectivityFailure,
              "no connected small-world draw after " +
                  std::to_string(kSmallWorldMaxAttempts) + " attempts");
}

}  // namespace dpc
