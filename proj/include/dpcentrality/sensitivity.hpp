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

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpcentrality/centrality.hpp"
#include "dpcentrality/error.hpp"
#include "dpcentrality/graph.hpp"
#include "dpcentrality/neighbors.hpp"
#include "dpcentrality/parallel.hpp"
#include "dpcentrality/spectral.hpp"

namespace dpc {

// A bound is either a finite number or one of the markers below. Unbounded
// and Undefined are expected outcomes of the analysis, not errors.
enum class BoundStatus { kValue, kUnbounded, kUndefined, kNotAvailable };

constexpr std::string_view bound_status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::kValue: return "value";
    case BoundStatus::kUnbounded: return "Unbounded";
    case BoundStatus::kUndefined: return "Undefined";
    case BoundStatus::kNotAvailable: return "N/A";
  }
  return "unknown";
}

struct Bound {
  BoundStatus status = BoundStatus::kNotAvailable;
  double value = std::numeric_limits<double>::quiet_NaN();

  static Bound of(double v) { return {BoundStatus::kValue, v}; }
  static Bound unbounded() { return {BoundStatus::kUnbounded}; }
  static Bound undefined() { return {BoundStatus::kUndefined}; }
  static Bound not_available() { return {BoundStatus::kNotAvailable}; }

  bool finite() const noexcept { return status == BoundStatus::kValue; }
};

// Gap below this fraction of ||A||_F is treated as degenerate.
inline constexpr double kDegenerateGapFraction = 1e-12;

inline double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kMismatchedLength, "vectors differ in length");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

struct EmpiricalSensitivity {
  double value = 0.0;
  std::optional<EdgePerturbation> argmax;  // empty for edgeless graphs
};

/// max over the extreme theta-neighbours G' of distance(G').
/// `distance` is evaluated independently per neighbour (in parallel when
/// threads != 1); ties resolve to the earliest perturbation.
template <class DistanceFn>
EmpiricalSensitivity max_over_extreme_neighbors(const WeightedGraph& g,
                                                const ThetaParams& t,
                                                DistanceFn&& distance,
                                                unsigned threads = 0) {
  const auto perturbations = extreme_perturbations(g, t);
  std::vector<double> values(perturbations.size());
  parallel_for(
      perturbations.size(),
      [&](std::size_t i) { values[i] = distance(apply(g, perturbations[i])); },
      threads);
  EmpiricalSensitivity out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!out.argmax || values[i] > out.value) {
      out.value = values[i];
      out.argmax = perturbations[i];
    }
  }
  return out;
}

/// Endpoint-scan local sensitivity: max L1 change of the measure over the
/// extreme neighbours. A lower bound on the true local sensitivity.
inline EmpiricalSensitivity empirical_local_sensitivity(const WeightedGraph& g,
                                                        Measure measure,
                                                        const ThetaParams& t,
                                                        unsigned threads = 0) {
  const CentralityVector base = compute_centrality(g, measure);
  if (measure == Measure::kEigenvector) {
    // Both vectors come out positively oriented, so the difference is
    // sign-aligned. The base vector warm-starts each neighbour.
    return max_over_extreme_neighbors(
        g, t,
        [&](const WeightedGraph& h) {
          return l1_distance(base.scores,
                             eigenvector_centrality(h, {}, base.scores).scores);
        },
        threads);
  }
  return max_over_extreme_neighbors(
      g, t,
      [&](const WeightedGraph& h) {
        return l1_distance(base.scores, compute_centrality(h, measure).scores);
      },
      threads);
}

/// Same scan on the unnormalized energy drops Lambda(G) - Lambda(G_i), the
/// quantity the Laplacian local-sensitivity bound is stated for.
inline EmpiricalSensitivity laplacian_unnormalized_local_sensitivity(
    const WeightedGraph& g, const ThetaParams& t, unsigned threads = 0) {
  const auto base = laplace_energy_drops(g);
  return max_over_extreme_neighbors(
      g, t,
      [&](const WeightedGraph& h) {
        return l1_distance(base, laplace_energy_drops(h));
      },
      threads);
}

/// sqrt(n) * 2 theta / (lambda_n - lambda_{n-1}) on the adjacency spectrum.
/// Unbounded when the gap is degenerate.
inline Bound eigenvector_ls_bound(const Spectrum& adjacency,
                                  double adjacency_frobenius,
                                  const ThetaParams& t) {
  const double gap = spectral_gap(adjacency);
  if (!(gap > kDegenerateGapFraction * adjacency_frobenius)) {
    return Bound::unbounded();
  }
  const double n = static_cast<double>(adjacency.size());
  return Bound::of(std::sqrt(n) * 2.0 * t.theta() / gap);
}

inline Bound eigenvector_ls_bound(const WeightedGraph& g, const ThetaParams& t,
                                  const EigenOptions& opts = {}) {
  const SymMatrix a = adjacency_matrix(g);
  return eigenvector_ls_bound(
      eigen_spectrum(a, opts, SpectrumSource::kAdjacency), a.frobenius_norm(),
      t);
}

/// n * sum_i (2 lambda_i delta - delta^2) over the Laplacian spectrum, with
/// delta the maximum edge weight.
inline double laplacian_ls_bound(const Spectrum& laplacian, double delta) {
  const double n = static_cast<double>(laplacian.size());
  double s = 0.0;
  for (double lambda : laplacian.eigenvalues) {
    s += 2.0 * lambda * delta - delta * delta;
  }
  return n * s;
}

/// Same value without an eigendecomposition: sum_i lambda_i = trace(L),
/// which is twice the total edge weight. The bound depends on the maximum
/// weight delta only; theta does not enter it.
inline double laplacian_ls_bound(const WeightedGraph& g,
                                 const ThetaParams& /*t*/) {
  const double n = static_cast<double>(g.num_vertices());
  const double delta = max_weight(g);
  const double trace = 2.0 * total_weight(g);
  return n * (2.0 * delta * trace - n * delta * delta);
}

struct LaplacianSmoothBound {
  double value = 0.0;
  double worst_shift = 0.0;  // maximizing perturbation magnitude s*
};

/// max over s >= 0 of (A + C s) e^{-beta s} where A is the local bound and
/// C = 2 n^2 delta is its growth when every eigenvalue moves up by s.
/// Maximizer s* = max(0, 1/beta - A/C).
inline LaplacianSmoothBound laplacian_smooth_bound(const WeightedGraph& g,
                                                   const ThetaParams& t,
                                                   double beta) {
  if (!(beta > 0.0)) throw Error(ErrorCode::kInvalidParams, "beta must be > 0");
  const double n = static_cast<double>(g.num_vertices());
  const double a = laplacian_ls_bound(g, t);
  const double c = 2.0 * n * n * max_weight(g);
  const double s = std::max(0.0, 1.0 / beta - a / c);
  return {(a + c * s) * std::exp(-beta * s), s};
}

/// n(n-1) theta / (w (w - theta)), w the total edge weight.
inline double closeness_ls_bound(const WeightedGraph& g, const ThetaParams& t) {
  const double w = total_weight(g);
  const double theta = t.theta();
  if (!(w > theta)) {
    throw Error(ErrorCode::kWeightTooSmall,
                "total weight must exceed theta for the closeness bound");
  }
  const double n = static_cast<double>(g.num_vertices());
  return n * (n - 1.0) * theta / (w * (w - theta));
}

/// Damped bound on the local sensitivity of a graph k steps away:
/// n(n-1) theta / ((w - k theta)(w - k theta - theta)) * e^{-beta k}.
/// Only meaningful for k with w - k theta - theta > 0.
struct ClosenessSmoothTerm {
  double n;
  double total_weight;
  double theta;
  double beta;

  bool feasible(std::size_t k) const {
    return total_weight - static_cast<double>(k) * theta - theta > 0.0;
  }
  double operator()(std::size_t k) const {
    const double kk = static_cast<double>(k);
    const double head = total_weight - kk * theta;
    return n * (n - 1.0) * theta / (head * (head - theta)) *
           std::exp(-beta * kk);
  }
};

struct ClosenessSmoothBound {
  Bound bound;
  std::size_t k_star = 0;  // meaningful when bound is finite
};

/// Scans k = 0, 1, ... while the damped term increases and returns the
/// first local maximum. When the next step would leave the feasible range
/// (w - k theta - theta <= 0) the term runs into its pole, so the result is
/// Undefined.
inline ClosenessSmoothBound closeness_smooth_bound(const WeightedGraph& g,
                                                   const ThetaParams& t,
                                                   double beta) {
  if (!(beta > 0.0)) throw Error(ErrorCode::kInvalidParams, "beta must be > 0");
  const double w = total_weight(g);
  if (!(w > t.theta())) {
    throw Error(ErrorCode::kWeightTooSmall,
                "total weight must exceed theta for the closeness bound");
  }
  const ClosenessSmoothTerm f{static_cast<double>(g.num_vertices()), w,
                              t.theta(), beta};
  std::size_t k = 0;
  while (true) {
    if (!f.feasible(k + 1)) return {Bound::undefined(), k};
    if (!(f(k) < f(k + 1))) break;
    ++k;
  }
  return {Bound::of(f(k)), k};
}

struct DivergenceRow {
  double epsilon;
  double gap_after;
  Bound bound_after;
};

/// Two-vertex graph with edge weight theta + epsilon, lowered by theta: the
/// neighbour's spectral gap is 2 epsilon, so the eigenvector local bound
/// grows like 1/epsilon.
inline std::vector<DivergenceRow> eigenvector_unbounded_demo(
    const ThetaParams& t, std::span<const double> epsilons) {
  std::vector<DivergenceRow> rows;
  for (double eps : epsilons) {
    if (!(eps > 0.0)) {
      throw Error(ErrorCode::kInvalidParams, "epsilon must be > 0");
    }
    const WeightedGraph g(2, {{0, 1, t.theta() + eps}});
    const WeightedGraph lowered = g.with_weight(0, g.edge(0).weight - t.theta());
    const SymMatrix a = adjacency_matrix(lowered);
    const Spectrum s = eigen_spectrum(a, {}, SpectrumSource::kAdjacency);
    rows.push_back({eps, spectral_gap(s),
                    eigenvector_ls_bound(s, a.frobenius_norm(), t)});
  }
  return rows;
}

struct GapAnalysis {
  double n;
  double c;
  double theta;
  double gap;
  double psi_min;
};

/// Score margin needed so that Laplace noise of scale sqrt(n) theta / gap
/// misclassifies fewer than c of n vertices in expectation:
/// psi > -ln(2c/n) sqrt(n) theta / gap.
inline GapAnalysis min_classification_gap(double n, double c,
                                          const ThetaParams& t, double gap) {
  if (!(c > 0.0) || !(2.0 * c <= n) || !(gap > 0.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "need 0 < 2c <= n and a positive spectral gap");
  }
  const double psi = -std::log(2.0 * c / n) * std::sqrt(n) * t.theta() / gap;
  return {n, c, t.theta(), gap, psi};
}

struct SensitivityReport {
  Measure measure = Measure::kEigenvector;
  double theta = 0.0;
  std::optional<double> beta;
  EmpiricalSensitivity empirical;
  // Laplacian only: the scan on unnormalized energy drops, which is what
  // ls_bound bounds for that measure.
  std::optional<EmpiricalSensitivity> empirical_unnormalized;
  Bound ls_bound;
  Bound smooth_bound;
  std::optional<std::size_t> smooth_k;        // closeness
  std::optional<double> smooth_worst_shift;   // laplacian
};

inline SensitivityReport sensitivity_report(const WeightedGraph& g,
                                            Measure measure,
                                            const ThetaParams& t,
                                            std::optional<double> beta,
                                            unsigned threads = 0) {
  SensitivityReport r;
  r.measure = measure;
  r.theta = t.theta();
  r.beta = beta;
  r.empirical = empirical_local_sensitivity(g, measure, t, threads);
  switch (measure) {
    case Measure::kEigenvector:
      r.ls_bound = eigenvector_ls_bound(g, t);
      r.smooth_bound = beta ? Bound::unbounded() : Bound::not_available();
      break;
    case Measure::kLaplacian: {
      r.empirical_unnormalized =
          laplacian_unnormalized_local_sensitivity(g, t, threads);
      r.ls_bound = Bound::of(laplacian_ls_bound(g, t));
      if (beta) {
        const auto sb = laplacian_smooth_bound(g, t, *beta);
        r.smooth_bound = Bound::of(sb.value);
        r.smooth_worst_shift = sb.worst_shift;
      }
      break;
    }
    case Measure::kCloseness:
      r.ls_bound = Bound::of(closeness_ls_bound(g, t));
      if (beta) {
        const auto sb = closeness_smooth_bound(g, t, *beta);
        r.smooth_bound = sb.bound;
        if (sb.bound.finite()) r.smooth_k = sb.k_star;
      }
      break;
  }
  return r;
}

}  // namespace dpc
