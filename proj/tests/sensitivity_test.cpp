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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dpcentrality/dpcentrality.hpp"
#include "test_support.hpp"

namespace dpc {
namespace {

using testing::random_connected_graph;

const WeightedGraph kK2w2(2, {{0, 1, 2.0}});

// --- empirical local sensitivity -----------------------------------------

TEST(EmpiricalLS, ClosenessK2IsOne) {
  const auto ls = empirical_local_sensitivity(kK2w2, Measure::kCloseness,
                                              ThetaParams(1.0));
  EXPECT_NEAR(ls.value, 1.0, 1e-12);
  ASSERT_TRUE(ls.argmax.has_value());
  EXPECT_DOUBLE_EQ(ls.argmax->new_weight, 1.0);
  EXPECT_DOUBLE_EQ(ls.argmax->delta, -1.0);
}

TEST(EmpiricalLS, EigenvectorK2IsZero) {
  for (double w : {0.5, 2.0, 9.0}) {
    const auto ls = empirical_local_sensitivity(
        WeightedGraph(2, {{0, 1, w}}), Measure::kEigenvector, ThetaParams(0.3));
    EXPECT_NEAR(ls.value, 0.0, 1e-12);
  }
}

TEST(EmpiricalLS, LaplacianPathMatchesBruteForce) {
  const auto g = testing::path_graph(3);
  const ThetaParams t(1.0);
  auto oracle_scores = [](const WeightedGraph& h) {
    auto d = testing::energy_drop_oracle(h);
    const double e = testing::energy_oracle(h);
    for (double& x : d) x /= e;
    return d;
  };
  const auto base = oracle_scores(g);
  double best = 0.0;
  for (const auto& e : g.edges()) {
    const auto id = static_cast<std::size_t>(g.find_edge(e.u, e.v));
    for (double w : {e.weight + 1.0, std::max(e.weight - 1.0, 1e-6)}) {
      const auto s = oracle_scores(g.with_weight(id, w));
      double l1 = 0.0;
      for (std::size_t i = 0; i < s.size(); ++i) l1 += std::abs(s[i] - base[i]);
      best = std::max(best, l1);
    }
  }
  const auto ls = empirical_local_sensitivity(g, Measure::kLaplacian, t);
  EXPECT_NEAR(ls.value, best, 1e-12);
}

TEST(EmpiricalLS, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(41);
  const auto g = random_connected_graph(rng, 20, 0.2);
  for (Measure m : kAllMeasures) {
    const auto a = empirical_local_sensitivity(g, m, ThetaParams(0.5), 1);
    const auto b = empirical_local_sensitivity(g, m, ThetaParams(0.5), 4);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.argmax->edge_id, b.argmax->edge_id);
  }
}

TEST(EmpiricalLS, EdgelessGraphHasNoArgmax) {
  const auto ls = empirical_local_sensitivity(WeightedGraph(3, {}),
                                              Measure::kCloseness,
                                              ThetaParams(1.0));
  EXPECT_EQ(ls.value, 0.0);
  EXPECT_FALSE(ls.argmax.has_value());
}

// --- local bounds ---------------------------------------------------------

TEST(EigenvectorBound, K2ClosedForm) {
  for (double w : {0.5, 2.0, 5.0}) {
    for (double theta : {0.1, 1.0}) {
      const auto b = eigenvector_ls_bound(WeightedGraph(2, {{0, 1, w}}),
                                          ThetaParams(theta));
      ASSERT_TRUE(b.finite());
      EXPECT_NEAR(b.value, std::sqrt(2.0) * theta / w, 1e-12);
    }
  }
  const double theta = 1.0, eps = 0.25;
  const auto b = eigenvector_ls_bound(WeightedGraph(2, {{0, 1, theta + eps}}),
                                      ThetaParams(theta));
  EXPECT_NEAR(b.value, std::sqrt(2.0) * theta / (theta + eps), 1e-12);
}

TEST(EigenvectorBound, DegenerateGapIsUnbounded) {
  // Two disjoint unit K2s: top eigenvalue 1 has multiplicity two.
  const WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_EQ(eigenvector_ls_bound(g, ThetaParams(1.0)).status,
            BoundStatus::kUnbounded);
}

TEST(LaplacianBound, K2Example) {
  EXPECT_DOUBLE_EQ(laplacian_ls_bound(kK2w2, ThetaParams(1.0)), 16.0);
  const Spectrum s{{0.0, 4.0}, SpectrumSource::kLaplacian};
  EXPECT_DOUBLE_EQ(laplacian_ls_bound(s, 2.0), 16.0);
}

TEST(LaplacianBound, TraceFormMatchesSpectralForm) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_connected_graph(rng, testing::random_size(rng, 2, 30),
                                          0.2);
    const double fast = laplacian_ls_bound(g, ThetaParams(1.0));
    const double slow = laplacian_ls_bound(laplacian_spectrum(g), max_weight(g));
    EXPECT_LT(testing::relative_error(fast, slow), 1e-9);
  }
}

TEST(LaplacianBound, QuadraticInWeightScale) {
  std::mt19937_64 rng(43);
  const auto g = random_connected_graph(rng, 15, 0.3);
  std::vector<Edge> e = g.edges();
  for (auto& x : e) x.weight *= 3.0;
  EXPECT_LT(testing::relative_error(
                laplacian_ls_bound(WeightedGraph(15, e), ThetaParams(1.0)),
                9.0 * laplacian_ls_bound(g, ThetaParams(1.0))),
            1e-12);
}

TEST(ClosenessBound, Examples) {
  EXPECT_DOUBLE_EQ(closeness_ls_bound(kK2w2, ThetaParams(1.0)), 1.0);
  EXPECT_DOUBLE_EQ(closeness_ls_bound(WeightedGraph(3, {{0, 1, 2.0}, {1, 2, 1.0}}),
                                      ThetaParams(1.0)),
                   1.0);
  try {
    closeness_ls_bound(WeightedGraph(2, {{0, 1, 1.0}}), ThetaParams(1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWeightTooSmall);
  }
}

TEST(ClosenessBound, TightOnK2) {
  const ThetaParams t(1.0);
  EXPECT_NEAR(empirical_local_sensitivity(kK2w2, Measure::kCloseness, t).value,
              closeness_ls_bound(kK2w2, t), 1e-9);
}

TEST(Bounds, DominateEmpiricalOnTrees) {
  // Trees satisfy the sum-of-distances assumption behind the closeness bound.
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_connected_graph(rng, testing::random_size(rng, 5, 25),
                                          0.0, 1.0, 3.0);
    const ThetaParams t(0.5);
    EXPECT_LE(empirical_local_sensitivity(g, Measure::kCloseness, t).value,
              closeness_ls_bound(g, t) + 1e-9);
    const auto eb = eigenvector_ls_bound(g, t);
    if (eb.finite()) {
      EXPECT_LE(empirical_local_sensitivity(g, Measure::kEigenvector, t).value,
                eb.value + 1e-9);
    }
    EXPECT_LE(laplacian_unnormalized_local_sensitivity(g, t).value,
              laplacian_ls_bound(g, t) + 1e-9);
  }
}

TEST(ClosenessBound, CanBeExceededOnGraphsWithCycles) {
  // Wheel on four rim vertices, unit weights. Some vertex has a distance sum
  // below the total edge weight, so the closed-form bound no longer covers
  // the scan. Verified against Floyd-Warshall.
  std::vector<Edge> e;
  for (Vertex i = 1; i <= 4; ++i) e.push_back({0, i, 1.0});
  for (Vertex i = 1; i <= 4; ++i) e.push_back({i, Vertex(i % 4 + 1), 1.0});
  const WeightedGraph g(5, e);
  const ThetaParams t(0.99);
  const auto base = testing::closeness_oracle(g);
  double oracle = 0.0;
  for (const auto& [p, h] : enumerate_extreme_neighbors(g, t)) {
    const auto s = testing::closeness_oracle(h);
    double l1 = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) l1 += std::abs(s[i] - base[i]);
    oracle = std::max(oracle, l1);
  }
  const double emp = empirical_local_sensitivity(g, Measure::kCloseness, t).value;
  EXPECT_NEAR(emp, oracle, 1e-12);
  EXPECT_GT(emp, closeness_ls_bound(g, t));
}

TEST(Bounds, IsomorphismInvariant) {
  std::mt19937_64 rng(45);
  const auto g = random_connected_graph(rng, 16, 0.3);
  std::vector<Vertex> perm(16);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto h = relabel(g, perm);
  const ThetaParams t(0.7);
  EXPECT_NEAR(eigenvector_ls_bound(g, t).value, eigenvector_ls_bound(h, t).value,
              1e-9);
  EXPECT_DOUBLE_EQ(laplacian_ls_bound(g, t), laplacian_ls_bound(h, t));
  EXPECT_NEAR(closeness_ls_bound(g, t), closeness_ls_bound(h, t), 1e-12);
}

// --- smooth bounds --------------------------------------------------------

TEST(LaplacianSmooth, K2Example) {
  const auto sb = laplacian_smooth_bound(kK2w2, ThetaParams(1.0), 1.0);
  EXPECT_DOUBLE_EQ(sb.worst_shift, 0.0);
  EXPECT_DOUBLE_EQ(sb.value, 16.0);
}

TEST(LaplacianSmooth, LargeBetaRecoversLocalBound) {
  std::mt19937_64 rng(46);
  const auto g = random_connected_graph(rng, 10, 0.3);
  const ThetaParams t(1.0);
  EXPECT_DOUBLE_EQ(laplacian_smooth_bound(g, t, 1e9).value,
                   laplacian_ls_bound(g, t));
}

TEST(LaplacianSmooth, MatchesGridMaximum) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_connected_graph(rng, testing::random_size(rng, 3, 20),
                                          0.3);
    const ThetaParams t(1.0);
    const double beta = std::pow(10.0, std::uniform_real_distribution<double>(-4, 0)(rng));
    const double n = static_cast<double>(g.num_vertices());
    const double a = laplacian_ls_bound(g, t);
    const double c = 2.0 * n * n * max_weight(g);
    const double grid = testing::grid_max_linear_exp(a, c, beta);
    const double got = laplacian_smooth_bound(g, t, beta).value;
    EXPECT_GE(got, grid * (1 - 1e-12));
    EXPECT_LT(testing::relative_error(got, grid), 1e-6);
    EXPECT_GE(got, a);
  }
}

TEST(ClosenessSmooth, LargeBetaStopsAtZero) {
  const WeightedGraph g(3, {{0, 1, 4.0}, {1, 2, 5.0}});
  const ThetaParams t(1.0);
  const auto sb = closeness_smooth_bound(g, t, 1e3);
  ASSERT_TRUE(sb.bound.finite());
  EXPECT_EQ(sb.k_star, 0u);
  EXPECT_DOUBLE_EQ(sb.bound.value, closeness_ls_bound(g, t));
}

TEST(ClosenessSmooth, PoleAtFirstStepIsUndefined) {
  const auto sb = closeness_smooth_bound(kK2w2, ThetaParams(1.0), 0.01);
  EXPECT_EQ(sb.bound.status, BoundStatus::kUndefined);
  const ClosenessSmoothTerm f{2, 2.0, 1.0, 0.01};
  EXPECT_DOUBLE_EQ(f(0), 1.0);
  EXPECT_FALSE(f.feasible(1));
}

TEST(ClosenessSmooth, SmallBetaRunsIntoPole) {
  // K2 weight 10: the damped term grows from k = 0 on, so the scan hits
  // the pole.
  const auto sb = closeness_smooth_bound(WeightedGraph(2, {{0, 1, 10.0}}),
                                         ThetaParams(1.0), 0.05);
  EXPECT_EQ(sb.bound.status, BoundStatus::kUndefined);
  const auto oracle = testing::closeness_smooth_oracle(2, 10, 1, 0.05);
  EXPECT_TRUE(oracle.undefined);
}

TEST(ClosenessSmooth, ScanStopsAtZeroOrReachesPole) {
  // log f is convex in k, so once the term increases it keeps increasing.
  std::mt19937_64 rng(48);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = 0.1 + u(rng);
    const double w = theta * (1.5 + 30 * u(rng));
    const double beta = std::pow(10.0, -3 + 4 * u(rng));
    const double n = 2 + std::floor(20 * u(rng));
    const ClosenessSmoothTerm f{n, w, theta, beta};
    std::vector<Edge> star;
    for (Vertex i = 1; i < n; ++i) star.push_back({0, i, w / (n - 1)});
    const auto sb = closeness_smooth_bound(WeightedGraph(std::size_t(n), star),
                                           ThetaParams(theta), beta);
    if (sb.bound.finite()) {
      EXPECT_EQ(sb.k_star, 0u);
      EXPECT_LT(testing::relative_error(sb.bound.value, f(0)), 1e-12);
    } else {
      EXPECT_TRUE(!f.feasible(1) || f(0) < f(1));
    }
  }
}

TEST(ClosenessSmooth, DominatesLocalBoundWhenDefined) {
  std::mt19937_64 rng(49);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_connected_graph(rng, 8, 0.3, 1.0, 4.0);
    const ThetaParams t(0.5);
    const auto sb = closeness_smooth_bound(g, t, 2.0);
    if (sb.bound.finite()) {
      EXPECT_GE(sb.bound.value, closeness_ls_bound(g, t) * (1 - 1e-12));
    }
  }
}

TEST(SmoothBounds, RejectNonPositiveBeta) {
  EXPECT_THROW(closeness_smooth_bound(kK2w2, ThetaParams(1.0), 0.0), Error);
  EXPECT_THROW(laplacian_smooth_bound(kK2w2, ThetaParams(1.0), -1.0), Error);
}

// --- demos ----------------------------------------------------------------

TEST(DivergenceDemo, GapAndBound) {
  const std::vector<double> eps{0.1};
  const auto rows = eigenvector_unbounded_demo(ThetaParams(1.0), eps);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].gap_after, 0.2, 1e-12);
  EXPECT_NEAR(rows[0].bound_after.value, std::sqrt(2.0) * 10.0, 1e-9);
}

TEST(DivergenceDemo, ScalesInverselyWithEpsilon) {
  const std::vector<double> eps{1, 0.1, 0.01, 0.001};
  const auto rows = eigenvector_unbounded_demo(ThetaParams(1.0), eps);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].bound_after.value, rows[i - 1].bound_after.value);
    EXPECT_LT(testing::relative_error(rows[i].bound_after.value,
                                      10.0 * rows[i - 1].bound_after.value),
              1e-9);
  }
}

TEST(GapAnalysis, Values) {
  const auto a = min_classification_gap(1e4, 10, ThetaParams(1.0), 1.0);
  EXPECT_NEAR(a.psi_min, -std::log(0.002) * 100.0, 1e-9);
  EXPECT_NEAR(a.psi_min, 621.46, 1e-2);
  EXPECT_EQ(min_classification_gap(100, 50, ThetaParams(1.0), 1.0).psi_min, 0.0);
  EXPECT_GT(min_classification_gap(4e4, 10, ThetaParams(1.0), 1.0).psi_min,
            2 * a.psi_min);
  EXPECT_THROW(min_classification_gap(10, 6, ThetaParams(1.0), 1.0), Error);
  EXPECT_THROW(min_classification_gap(10, 1, ThetaParams(1.0), 0.0), Error);
}

// --- report ---------------------------------------------------------------

TEST(Report, EigenvectorSmoothIsUnboundedWithBeta) {
  const auto r = sensitivity_report(testing::path_graph(4), Measure::kEigenvector,
                                    ThetaParams(1.0), 0.1);
  EXPECT_EQ(r.smooth_bound.status, BoundStatus::kUnbounded);
  const auto j = sensitivity_report_json(r);
  EXPECT_EQ(j["smooth_bound"], "Unbounded");
  EXPECT_TRUE(j["argmax_detail"].contains("smooth_note"));
  const auto no_beta = sensitivity_report(
      testing::path_graph(4), Measure::kEigenvector, ThetaParams(1.0), {});
  EXPECT_EQ(no_beta.smooth_bound.status, BoundStatus::kNotAvailable);
}

TEST(Report, ClosenessK2Text) {
  const auto r = sensitivity_report(kK2w2, Measure::kCloseness, ThetaParams(1.0),
                                    0.01);
  const auto text = sensitivity_report_text(r);
  EXPECT_NE(text.find("empirical_ls=1\n"), std::string::npos);
  EXPECT_NE(text.find("ls_bound=1\n"), std::string::npos);
  EXPECT_NE(text.find("smooth_bound=Undefined\n"), std::string::npos);
}

TEST(Report, LaplacianCarriesUnnormalizedScan) {
  const auto r = sensitivity_report(testing::path_graph(5), Measure::kLaplacian,
                                    ThetaParams(1.0), 0.5);
  ASSERT_TRUE(r.empirical_unnormalized.has_value());
  ASSERT_TRUE(r.smooth_worst_shift.has_value());
  const auto j = sensitivity_report_json(r);
  EXPECT_TRUE(j.contains("empirical_ls_unnormalized"));
  EXPECT_TRUE(j["smooth_bound"].is_number());
}

}  // namespace
}  // namespace dpc
