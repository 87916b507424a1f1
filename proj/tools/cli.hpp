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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpcentrality/dpcentrality.hpp"

// Command-line front end. Exit codes: 0 ok, 1 input error, 2 computation
// error. run_cli never writes anywhere but `out`, `err` and --out paths.

namespace dpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitCompute = 2;

namespace detail {

// Sends text to --out when given, otherwise to the output stream.
inline void emit(const std::string& text, const std::string& out_path,
                 std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrorCode::kIo, "cannot write '" + out_path + "'");
  file << text;
}

inline std::string centrality_table(const CentralityVector& c) {
  const auto order = rank(c).order;
  std::vector<std::size_t> position(c.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i + 1;
  std::ostringstream s;
  s << "# measure=" << measure_name(c.measure) << "\n";
  s << "# vertex score rank\n";
  for (std::size_t v = 0; v < c.size(); ++v) {
    s << v << " " << fmt12(c.scores[v]) << " " << position[v] << "\n";
  }
  return s.str();
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Differentially private centrality analysis", "dpcentrality"};
  app.require_subcommand(1);

  std::string graph_path, measure_name_arg, out_path, format = "text";
  std::optional<double> theta_arg, beta_arg;
  unsigned threads = 0;

  // centrality
  auto* centrality = app.add_subcommand("centrality", "Score every vertex");
  centrality->add_option("--graph", graph_path, "Edge-list file")->required();
  centrality->add_option("--measure", measure_name_arg,
                         "eigenvector | laplacian | closeness")->required();
  centrality->add_option("--out", out_path, "Write output to this file");
  centrality->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // sensitivity
  auto* sensitivity =
      app.add_subcommand("sensitivity", "Local and smooth sensitivity report");
  sensitivity->add_option("--graph", graph_path, "Edge-list file")->required();
  sensitivity->add_option("--measure", measure_name_arg,
                          "eigenvector | laplacian | closeness")->required();
  sensitivity->add_option("--theta", theta_arg,
                          "Max edge-weight change (default: max weight)");
  sensitivity->add_option("--beta", beta_arg, "Smoothing parameter");
  sensitivity->add_option("--threads", threads, "Worker threads (0 = all)");
  sensitivity->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  sensitivity->add_option("--out", out_path, "Write output to this file");

  // release
  std::string calibration_arg;
  double epsilon = 2.0;
  std::uint64_t seed = 0;
  bool debug_raw = false;
  auto* release = app.add_subcommand("release", "Noisy centrality release");
  release->add_option("--graph", graph_path, "Edge-list file")->required();
  release->add_option("--measure", measure_name_arg,
                      "eigenvector | laplacian | closeness")->required();
  release->add_option("--calibration", calibration_arg,
                      "local_exact | local_bound | smooth_bound")->required();
  release->add_option("--theta", theta_arg,
                      "Max edge-weight change (default: max weight)");
  release->add_option("--epsilon", epsilon, "Privacy parameter")
      ->capture_default_str();
  release->add_option("--beta", beta_arg, "Smoothing parameter");
  release->add_option("--seed", seed, "Noise seed")->required();
  release->add_flag("--debug-raw", debug_raw,
                    "Also emit the un-noised scores (breaks privacy)");
  release->add_option("--threads", threads, "Worker threads (0 = all)");
  release->add_option("--out", out_path, "Write output to this file");

  // experiment
  std::string config_path;
  auto* experiment =
      app.add_subcommand("experiment", "Ranking precision under noise");
  experiment->add_option("--config", config_path, "Config file")->required();
  experiment->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  experiment->add_option("--out", out_path, "Write output to this file");

  // generate
  std::string model;
  std::size_t n = 0, m = 2, k = 3;
  double p = 0.1;
  auto* generate = app.add_subcommand("generate", "Synthetic graph");
  generate->add_option("--model", model, "ba | ws")
      ->required()
      ->check(CLI::IsMember({"ba", "ws"}));
  generate->add_option("--n", n, "Vertex count")->required();
  generate->add_option("--m", m, "Edges per arrival (ba)")->capture_default_str();
  generate->add_option("--k", k, "Ring neighbours per side (ws)")
      ->capture_default_str();
  generate->add_option("--p", p, "Rewire probability (ws)")
      ->capture_default_str();
  generate->add_option("--seed", seed, "Generator seed")->required();
  generate->add_option("--out", out_path, "Write output to this file");

  // demo
  int thm = 0;
  std::vector<double> epsilons{1.0, 0.1, 0.01, 0.001};
  double demo_n = 10000, demo_c = 10, gap = 1.0;
  auto* demo = app.add_subcommand(
      "demo", "2: eigenvector bound divergence; 3: required score gap");
  demo->add_option("--thm", thm, "2 or 3")->required()->check(
      CLI::IsMember({2, 3}));
  demo->add_option("--theta", theta_arg, "theta (default 1)");
  demo->add_option("--epsilons", epsilons, "Edge slack values (2)")
      ->delimiter(',');
  demo->add_option("--n", demo_n, "Vertex count (3)")->capture_default_str();
  demo->add_option("--c", demo_c, "Tolerated misclassifications (3)")
      ->capture_default_str();
  demo->add_option("--gap", gap, "Spectral gap (3)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*centrality) {
      const auto g = read_edge_list_file(graph_path);
      const auto c = compute_centrality(g, parse_measure(measure_name_arg));
      std::string text;
      if (format == "json") {
        nlohmann::json j{{"measure", measure_name(c.measure)},
                         {"scores", c.scores},
                         {"ranking", rank(c).order}};
        text = j.dump(2) + "\n";
      } else {
        text = detail::centrality_table(c);
      }
      detail::emit(text, out_path, out);
    } else if (*sensitivity) {
      const auto measure = parse_measure(measure_name_arg);
      const auto g = read_edge_list_file(graph_path);
      const ThetaParams t(theta_arg ? *theta_arg : max_weight(g));
      if (beta_arg && !(*beta_arg > 0.0)) {
        throw Error(ErrorCode::kInvalidParams, "beta must be > 0");
      }
      const auto report = sensitivity_report(g, measure, t, beta_arg, threads);
      detail::emit(format == "json"
                       ? sensitivity_report_json(report).dump(2) + "\n"
                       : sensitivity_report_text(report),
                   out_path, out);
    } else if (*release) {
      const auto g = read_edge_list_file(graph_path);
      ReleaseRequest req;
      req.measure = parse_measure(measure_name_arg);
      req.calibration = parse_calibration(calibration_arg);
      req.theta = theta_arg ? *theta_arg : max_weight(g);
      req.epsilon = epsilon;
      req.beta = beta_arg;
      req.seed = seed;
      const auto r = dp_release(g, req, threads);
      const nlohmann::json j = release_report(r, debug_raw);
      detail::emit(j.dump(2) + "\n", out_path, out);
    } else if (*experiment) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorCode::kIo, "cannot open '" + config_path + "'");
      const auto cfg = parse_experiment_config(
          in, std::filesystem::path(config_path).parent_path());
      const auto table = run_experiment(cfg);
      detail::emit(format == "json" ? experiment_to_json(table).dump(2) + "\n"
                                    : format_experiment_table(table),
                   out_path, out);
    } else if (*generate) {
      const auto g = model == "ba" ? generate_preferential_attachment(n, m, seed)
                                   : generate_small_world(n, k, p, seed);
      detail::emit(write_edge_list(g), out_path, out);
    } else if (*demo) {
      const ThetaParams t(theta_arg ? *theta_arg : 1.0);
      std::ostringstream s;
      if (thm == 2) {
        s << "# two-vertex graph, weight theta+epsilon, lowered by theta\n";
        s << "# theta=" << fmt12(t.theta()) << "\n";
        s << "# epsilon gap_after ls_bound_after\n";
        for (const auto& row : eigenvector_unbounded_demo(t, epsilons)) {
          s << fmt12(row.epsilon) << " " << fmt12(row.gap_after) << " "
            << bound_text(row.bound_after) << "\n";
        }
      } else {
        const auto a = min_classification_gap(demo_n, demo_c, t, gap);
        s << "n=" << fmt12(a.n) << "\n";
        s << "c=" << fmt12(a.c) << "\n";
        s << "theta=" << fmt12(a.theta) << "\n";
        s << "gap=" << fmt12(a.gap) << "\n";
        s << "psi_min=" << fmt12(a.psi_min) << "\n";
      }
      out << s.str();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInput : kExitCompute;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitOk;
}

}  // namespace dpc::cli
