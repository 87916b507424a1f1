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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpcentrality/error.hpp"

namespace dpc {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Adjacency entry of the compressed (CSR) neighbour lists.
struct Incidence {
  Vertex target;
  std::uint32_t edge;  // index into WeightedGraph::edges()
};

/// Undirected, simple, positively weighted graph on vertices 0..n-1.
///
/// The edge set is sorted by (u, v) with u < v. The topology is shared
/// between a graph and all of its weight-perturbed neighbours, so producing a
/// neighbour copies only the weight vector.
class WeightedGraph {
 public:
  WeightedGraph() : WeightedGraph(0, {}) {}

  /// Builds a graph from an edge list. Endpoints may be given in either
  /// order. Throws Error on self-loops, duplicates, out-of-range endpoints
  /// or non-positive / non-finite weights.
  WeightedGraph(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) {
      if (e.u == e.v) {
        throw Error(ErrorCode::kSelfLoop,
                    "self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.v >= n) {
        throw Error(ErrorCode::kInvalidParams,
                    "edge endpoint " + std::to_string(e.v) +
                        " out of range for n=" + std::to_string(n));
      }
      if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
        throw Error(ErrorCode::kNonPositiveWeight,
                    "edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "} has weight " +
                        std::to_string(e.weight));
      }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "edge {" + std::to_string(edges[i].u) + "," +
                        std::to_string(edges[i].v) + "} appears twice");
      }
    }

    auto topo = std::make_shared<Topology>();
    topo->n = n;
    topo->endpoints.reserve(edges.size());
    weights_.reserve(edges.size());
    std::vector<std::uint32_t> degree(n, 0);
    for (const auto& e : edges) {
      topo->endpoints.emplace_back(e.u, e.v);
      weights_.push_back(e.weight);
      ++degree[e.u];
      ++degree[e.v];
    }
    topo->offsets.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      topo->offsets[i + 1] = topo->offsets[i] + degree[i];
    }
    topo->incidence.resize(2 * edges.size());
    std::vector<std::uint32_t> cursor(topo->offsets.begin(),
                                      topo->offsets.end() - 1);
    for (std::uint32_t id = 0; id < edges.size(); ++id) {
      const auto [u, v] = topo->endpoints[id];
      topo->incidence[cursor[u]++] = {v, id};
      topo->incidence[cursor[v]++] = {u, id};
    }
    topo_ = std::move(topo);
  }

  std::size_t num_vertices() const noexcept { return topo_->n; }
  std::size_t num_edges() const noexcept { return weights_.size(); }

  Edge edge(std::size_t id) const {
    const auto [u, v] = topo_->endpoints[id];
    return {u, v, weights_[id]};
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (std::size_t id = 0; id < num_edges(); ++id) out.push_back(edge(id));
    return out;
  }

  std::span<const double> weights() const noexcept { return weights_; }

  std::span<const Incidence> neighbors(Vertex v) const {
    const auto& t = *topo_;
    return {t.incidence.data() + t.offsets[v],
            t.incidence.data() + t.offsets[v + 1]};
  }

  std::size_t degree(Vertex v) const {
    return topo_->offsets[v + 1] - topo_->offsets[v];
  }

  double weighted_degree(Vertex v) const {
    double d = 0.0;
    for (const auto& inc : neighbors(v)) d += weights_[inc.edge];
    return d;
  }

  /// Edge id of {u, v}, or -1 when absent.
  std::ptrdiff_t find_edge(Vertex u, Vertex v) const {
    if (u >= num_vertices() || v >= num_vertices()) return -1;
    for (const auto& inc : neighbors(u)) {
      if (inc.target == v) return inc.edge;
    }
    return -1;
  }

  /// W(u, v); 0 for absent pairs.
  double weight(Vertex u, Vertex v) const {
    const auto id = find_edge(u, v);
    return id < 0 ? 0.0 : weights_[static_cast<std::size_t>(id)];
  }

  /// Copy with one edge weight replaced. The topology is shared.
  WeightedGraph with_weight(std::size_t edge_id, double new_weight) const {
    if (edge_id >= num_edges()) {
      throw Error(ErrorCode::kInvalidParams, "edge id out of range");
    }
    if (!(new_weight > 0.0) || !std::isfinite(new_weight)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "perturbed weight must stay positive");
    }
    WeightedGraph out = *this;
    out.weights_[edge_id] = new_weight;
    return out;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges() == b.edges();
  }

 private:
  struct Topology {
    std::size_t n = 0;
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    std::vector<std::uint32_t> offsets;
    std::vector<Incidence> incidence;
  };

  std::shared_ptr<const Topology> topo_;
  std::vector<double> weights_;
};

/// Maximum single-edge weight change of the neighbouring relation.
class ThetaParams {
 public:
  explicit ThetaParams(double theta) : theta_(theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
      throw Error(ErrorCode::kInvalidParams, "theta must be positive");
    }
  }
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

/// Change of one edge weight by `delta`, 0 < |delta| <= theta.
struct EdgePerturbation {
  std::size_t edge_id = 0;
  Vertex u = 0;
  Vertex v = 0;
  double delta = 0.0;
  double new_weight = 0.0;
};

inline WeightedGraph apply(const WeightedGraph& g, const EdgePerturbation& p) {
  return g.with_weight(p.edge_id, p.new_weight);
}

inline double max_weight(const WeightedGraph& g) {
  if (g.num_edges() == 0) throw Error(ErrorCode::kEmptyGraph, "no edges");
  const auto w = g.weights();
  return *std::max_element(w.begin(), w.end());
}

inline double total_weight(const WeightedGraph& g) {
  if (g.num_edges() == 0) throw Error(ErrorCode::kEmptyGraph, "no edges");
  const auto w = g.weights();
  return std::accumulate(w.begin(), w.end(), 0.0);
}

inline bool is_connected(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(x)) {
      if (!seen[inc.target]) {
        seen[inc.target] = 1;
        ++reached;
        stack.push_back(inc.target);
      }
    }
  }
  return reached == n;
}

/// Graph with vertex `victim` and all incident edges removed; remaining
/// vertices are renumbered densely, preserving order.
inline WeightedGraph delete_vertex(const WeightedGraph& g, Vertex victim) {
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (e.u == victim || e.v == victim) continue;
    kept.push_back({e.u > victim ? e.u - 1 : e.u, e.v > victim ? e.v - 1 : e.v,
                    e.weight});
  }
  return WeightedGraph(g.num_vertices() - 1, std::move(kept));
}

/// Isomorphic copy where vertex i becomes perm[i].
inline WeightedGraph relabel(const WeightedGraph& g,
                             std::span<const Vertex> perm) {
  if (perm.size() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidParams, "permutation size mismatch");
  }
  std::vector<Edge> out;
  out.reserve(g.num_edges());
  for (const auto& e : g.edges()) out.push_back({perm[e.u], perm[e.v], e.weight});
  return WeightedGraph(g.num_vertices(), std::move(out));
}

}  // namespace dpc
