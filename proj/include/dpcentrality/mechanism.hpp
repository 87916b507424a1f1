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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpcentrality/centrality.hpp"
#include "dpcentrality/error.hpp"
#include "dpcentrality/graph.hpp"
#include "dpcentrality/random.hpp"
#include "dpcentrality/sensitivity.hpp"

namespace dpc {

/// n i.i.d. draws from the density exp(-|z|) / 2 by inverse CDF:
/// z = -sign(u - 1/2) ln(1 - 2|u - 1/2|), u uniform on (0, 1).
inline std::vector<double> sample_standard_noise(std::size_t n,
                                                 std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> z(n);
  for (double& x : z) {
    const double centered = rng.uniform_open() - 0.5;
    const double magnitude = -std::log1p(-2.0 * std::abs(centered));
    x = centered < 0.0 ? -magnitude : magnitude;
  }
  return z;
}

enum class Calibration { kLocalExact, kLocalBound, kSmoothBound };

inline constexpr Calibration kAllCalibrations[] = {
    Calibration::kLocalExact, Calibration::kLocalBound,
    Calibration::kSmoothBound};

constexpr std::string_view calibration_name(Calibration c) {
  switch (c) {
    case Calibration::kLocalExact: return "local_exact";
    case Calibration::kLocalBound: return "local_bound";
    case Calibration::kSmoothBound: return "smooth_bound";
  }
  return "unknown";
}

inline Calibration parse_calibration(std::string_view name) {
  for (Calibration c : kAllCalibrations) {
    if (calibration_name(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown calibration '" + std::string(name) +
                  "' (expected local_exact, local_bound or smooth_bound)");
}

struct DPParams {
  double epsilon = 2.0;
  std::optional<double> beta;
  // Smooth releases record exp(-epsilon / (sqrt(n) beta)). Releases scaled
  // by local sensitivity carry no guarantee and record 0.
  double dp_delta = 0.0;
  double noise_scale = 0.0;
  Calibration calibration = Calibration::kLocalExact;
  std::uint64_t seed = 0;
  double theta = 0.0;

  bool has_guarantee() const { return calibration == Calibration::kSmoothBound; }
};

struct NoiseCalibration {
  double noise_scale = 0.0;
  double dp_delta = 0.0;
};

inline double smooth_release_delta(std::size_t n, double epsilon, double beta) {
  return std::exp(-epsilon / (std::sqrt(static_cast<double>(n)) * beta));
}

/// Noise scale b for one (measure, calibration):
///   local_exact  - endpoint-scan local sensitivity
///   local_bound  - closed-form local sensitivity bound of the measure
///   smooth_bound - smooth bound / alpha with alpha = epsilon / 2
/// Throws UnboundedSensitivity when the quantity does not exist.
inline NoiseCalibration calibrate_noise(const WeightedGraph& g, Measure measure,
                                        Calibration calibration,
                                        const ThetaParams& t, double epsilon,
                                        std::optional<double> beta,
                                        unsigned threads = 0) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidParams, "epsilon must be > 0");
  }
  switch (calibration) {
    case Calibration::kLocalExact:
      return {empirical_local_sensitivity(g, measure, t, threads).value, 0.0};
    case Calibration::kLocalBound: {
      double b = 0.0;
      switch (measure) {
        case Measure::kEigenvector: {
          const Bound bound = eigenvector_ls_bound(g, t);
          if (!bound.finite()) {
            throw Error(ErrorCode::kUnboundedSensitivity,
                        "degenerate spectral gap: eigenvector local bound is "
                        "unbounded");
          }
          b = bound.value;
          break;
        }
        case Measure::kLaplacian: b = laplacian_ls_bound(g, t); break;
        case Measure::kCloseness: b = closeness_ls_bound(g, t); break;
      }
      return {b, 0.0};
    }
    case Calibration::kSmoothBound: {
      if (measure == Measure::kEigenvector) {
        throw Error(ErrorCode::kUnboundedSensitivity,
                    "smooth sensitivity of eigenvector centrality is "
                    "unbounded on weighted graphs (a neighbour can have an "
                    "arbitrarily small spectral gap)");
      }
      if (!beta || !(*beta > 0.0)) {
        throw Error(ErrorCode::kInvalidParams,
                    "smooth calibration needs beta > 0");
      }
      const double alpha = epsilon / 2.0;
      double smooth = 0.0;
      if (measure == Measure::kCloseness) {
        const auto sb = closeness_smooth_bound(g, t, *beta);
        if (!sb.bound.finite()) {
          throw Error(ErrorCode::kUnboundedSensitivity,
                      "closeness smooth sensitivity is undefined within the "
                      "naturals for this (theta, beta)");
        }
        smooth = sb.bound.value;
      } else {
        smooth = laplacian_smooth_bound(g, t, *beta).value;
      }
      return {smooth / alpha,
              smooth_release_delta(g.num_vertices(), epsilon, *beta)};
    }
  }
  throw Error(ErrorCode::kInvalidParams, "unknown calibration");
}

inline CentralityVector add_noise(const CentralityVector& raw, double scale,
                                  std::uint64_t seed) {
  CentralityVector noisy = raw;
  if (scale == 0.0) return noisy;
  const auto z = sample_standard_noise(raw.size(), seed);
  for (std::size_t i = 0; i < z.size(); ++i) noisy.scores[i] += scale * z[i];
  return noisy;
}

struct DPRelease {
  CentralityVector raw;
  CentralityVector noisy;
  DPParams params;
};

struct ReleaseRequest {
  Measure measure = Measure::kCloseness;
  Calibration calibration = Calibration::kSmoothBound;
  double theta = 1.0;
  double epsilon = 2.0;
  std::optional<double> beta;
  std::uint64_t seed = 0;
  // Test hook: bypasses calibration and uses this scale.
  std::optional<double> forced_noise_scale;
};

inline DPRelease dp_release(const WeightedGraph& g, const ReleaseRequest& req,
                            unsigned threads = 0) {
  const ThetaParams t(req.theta);
  DPRelease r;
  r.raw = compute_centrality(g, req.measure);
  r.params.epsilon = req.epsilon;
  r.params.beta = req.beta;
  r.params.calibration = req.calibration;
  r.params.seed = req.seed;
  r.params.theta = req.theta;
  if (req.forced_noise_scale) {
    r.params.noise_scale = *req.forced_noise_scale;
  } else {
    const auto cal = calibrate_noise(g, req.measure, req.calibration, t,
                                     req.epsilon, req.beta, threads);
    r.params.noise_scale = cal.noise_scale;
    r.params.dp_delta = cal.dp_delta;
  }
  r.noisy = add_noise(r.raw, r.params.noise_scale, req.seed);
  return r;
}

/// Serializable view of a release. Raw scores are present only when the
/// caller explicitly asks for them.
struct ReleaseDocument {
  std::string measure;
  std::string calibration;
  double epsilon = 0.0;
  std::optional<double> beta;
  double dp_delta = 0.0;
  double noise_scale = 0.0;
  std::uint64_t seed = 0;
  double theta = 0.0;
  bool dp_guarantee = false;
  std::vector<double> scores;
  std::vector<Vertex> ranking;
  std::optional<std::vector<double>> raw_scores;

  friend bool operator==(const ReleaseDocument&,
                         const ReleaseDocument&) = default;
};

inline ReleaseDocument release_report(const DPRelease& r,
                                      bool include_raw = false) {
  ReleaseDocument doc;
  doc.measure = measure_name(r.noisy.measure);
  doc.calibration = calibration_name(r.params.calibration);
  doc.epsilon = r.params.epsilon;
  doc.beta = r.params.beta;
  doc.dp_delta = r.params.dp_delta;
  doc.noise_scale = r.params.noise_scale;
  doc.seed = r.params.seed;
  doc.theta = r.params.theta;
  doc.dp_guarantee = r.params.has_guarantee();
  doc.scores = r.noisy.scores;
  doc.ranking = rank(r.noisy).order;
  if (include_raw) doc.raw_scores = r.raw.scores;
  return doc;
}

inline void to_json(nlohmann::json& j, const ReleaseDocument& d) {
  j = nlohmann::json{{"measure", d.measure},
                     {"calibration", d.calibration},
                     {"epsilon", d.epsilon},
                     {"beta", nullptr},
                     {"dp_delta", d.dp_delta},
                     {"noise_scale", d.noise_scale},
                     {"seed", d.seed},
                     {"theta", d.theta},
                     {"dp_guarantee", d.dp_guarantee},
                     {"scores", d.scores},
                     {"ranking", d.ranking}};
  if (d.beta) j["beta"] = *d.beta;
  if (d.raw_scores) j["raw_scores"] = *d.raw_scores;
}

inline void from_json(const nlohmann::json& j, ReleaseDocument& d) {
  j.at("measure").get_to(d.measure);
  j.at("calibration").get_to(d.calibration);
  j.at("epsilon").get_to(d.epsilon);
  d.beta = j.at("beta").is_null() ? std::nullopt
                                  : std::optional(j.at("beta").get<double>());
  j.at("dp_delta").get_to(d.dp_delta);
  j.at("noise_scale").get_to(d.noise_scale);
  j.at("seed").get_to(d.seed);
  j.at("theta").get_to(d.theta);
  j.at("dp_guarantee").get_to(d.dp_guarantee);
  j.at("scores").get_to(d.scores);
  j.at("ranking").get_to(d.ranking);
  if (j.contains("raw_scores")) {
    d.raw_scores = j.at("raw_scores").get<std::vector<double>>();
  } else {
    d.raw_scores.reset();
  }
}

}  // namespace dpc
