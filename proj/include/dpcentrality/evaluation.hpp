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
#include <filesystem>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpcentrality/centrality.hpp"
#include "dpcentrality/error.hpp"
#include "dpcentrality/format.hpp"
#include "dpcentrality/generators.hpp"
#include "dpcentrality/graph.hpp"
#include "dpcentrality/graph_io.hpp"
#include "dpcentrality/mechanism.hpp"

namespace dpc {

struct PrecisionResult {
  double percent = 0.0;
  std::size_t k = 0;
  double precision = 0.0;  // mean over trials
  std::size_t trials = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for one trial

  double standard_error() const {
    return trials > 0 ? std / std::sqrt(static_cast<double>(trials)) : 0.0;
  }
};

/// k = ceil(p n / 100), clamped to [1, n].
inline std::size_t top_k_size(std::size_t n, double percent) {
  const double raw = std::ceil(percent * static_cast<double>(n) / 100.0);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(raw, 1.0)),
                                 1, n);
}

/// Fraction of the true top-k vertices that are also in the noisy top-k.
inline double top_k_overlap(std::span<const double> raw,
                            std::span<const double> noisy, std::size_t k) {
  if (raw.size() != noisy.size()) {
    throw Error(ErrorCode::kMismatchedLength,
                "raw and noisy vectors differ in length");
  }
  const auto truth = rank(raw).order;
  const auto guess = rank(noisy).order;
  std::vector<char> in_truth(raw.size(), 0);
  for (std::size_t i = 0; i < k; ++i) in_truth[truth[i]] = 1;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) hits += in_truth[guess[i]];
  return static_cast<double>(hits) / static_cast<double>(k);
}

inline PrecisionResult summarize_precision(double percent, std::size_t k,
                                           std::vector<double> samples) {
  // Sorted first so the floating-point sums do not depend on trial order.
  std::sort(samples.begin(), samples.end());
  PrecisionResult r;
  r.percent = percent;
  r.k = k;
  r.trials = samples.size();
  if (samples.empty()) return r;
  double sum = 0.0;
  for (double s : samples) sum += s;
  r.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - r.mean) * (s - r.mean);
    r.std = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  r.precision = r.mean;
  return r;
}

inline PrecisionResult precision_at(const CentralityVector& raw,
                                    const CentralityVector& noisy,
                                    double percent) {
  if (raw.size() != noisy.size()) {
    throw Error(ErrorCode::kMismatchedLength,
                "raw and noisy vectors differ in length");
  }
  if (raw.measure != noisy.measure) {
    throw Error(ErrorCode::kInvalidParams, "vectors are of different measures");
  }
  if (raw.size() == 0 || !(percent > 0.0) || percent > 100.0) {
    throw Error(ErrorCode::kInvalidParams, "need n >= 1 and 0 < percent <= 100");
  }
  const std::size_t k = top_k_size(raw.size(), percent);
  return summarize_precision(percent, k,
                             {top_k_overlap(raw.scores, noisy.scores, k)});
}

/// Precision at each percent over `trials` noisy copies of `raw`, trial i
/// using noise seed base_seed + i.
inline std::vector<PrecisionResult> precision_trials(
    const CentralityVector& raw, double noise_scale,
    std::span<const double> percents, std::size_t trials,
    std::uint64_t base_seed) {
  std::vector<std::vector<double>> samples(percents.size(),
                                           std::vector<double>(trials));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto noisy = add_noise(raw, noise_scale, base_seed + trial);
    for (std::size_t p = 0; p < percents.size(); ++p) {
      const std::size_t k = top_k_size(raw.size(), percents[p]);
      samples[p][trial] = top_k_overlap(raw.scores, noisy.scores, k);
    }
  }
  std::vector<PrecisionResult> out;
  for (std::size_t p = 0; p < percents.size(); ++p) {
    out.push_back(summarize_precision(percents[p],
                                      top_k_size(raw.size(), percents[p]),
                                      std::move(samples[p])));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Experiment configuration
// ---------------------------------------------------------------------------

struct GraphSource {
  enum class Kind { kFile, kDirectedFile, kPreferentialAttachment, kSmallWorld };
  Kind kind = Kind::kPreferentialAttachment;
  std::string path;
  std::size_t n = 1000;
  std::size_t m = 2;    // preferential attachment
  std::size_t k = 3;    // small world
  double p = 0.1;       // small world
  std::uint64_t seed = 1;

  std::string label() const {
    switch (kind) {
      case Kind::kFile:
      case Kind::kDirectedFile:
        return std::filesystem::path(path).filename().string();
      case Kind::kPreferentialAttachment:
        return "ba(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
               ",seed=" + std::to_string(seed) + ")";
      case Kind::kSmallWorld:
        return "ws(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
               ",p=" + fmt12(p) + ",seed=" + std::to_string(seed) + ")";
    }
    return "?";
  }

  WeightedGraph load() const {
    switch (kind) {
      case Kind::kFile: return read_edge_list_file(path);
      case Kind::kDirectedFile: return read_directed_edge_list_file(path);
      case Kind::kPreferentialAttachment:
        return generate_preferential_attachment(n, m, seed);
      case Kind::kSmallWorld: return generate_small_world(n, k, p, seed);
    }
    throw Error(ErrorCode::kInvalidParams, "unknown graph source");
  }
};

struct ExperimentConfig {
  std::vector<GraphSource> graphs;
  std::vector<Measure> measures{std::begin(kAllMeasures),
                                std::end(kAllMeasures)};
  std::vector<Calibration> calibrations{std::begin(kAllCalibrations),
                                        std::end(kAllCalibrations)};
  double epsilon = 2.0;
  std::optional<double> theta;  // empty: maximum edge weight of each graph
  double beta = 0.01;
  std::vector<double> percents{5.0, 10.0, 15.0};
  std::size_t trials = 30;
  std::uint64_t base_seed = 1;
  std::vector<std::pair<Measure, Calibration>> skip;
  bool zero_noise = false;  // test hook: every noise scale forced to 0
  unsigned threads = 0;

  bool skipped(Measure m, Calibration c) const {
    return std::find(skip.begin(), skip.end(), std::pair(m, c)) != skip.end();
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(sep, start);
    const auto piece = trim(s.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start));
    if (!piece.empty()) out.push_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <class T>
T parse_value(const std::string& text, std::string_view key, std::size_t line) {
  T value{};
  if (!parse_number(text, value)) {
    throw Error(ErrorCode::kMalformedLine,
                "bad value '" + text + "' for " + std::string(key), line);
  }
  return value;
}

inline bool parse_bool(const std::string& text, std::size_t line) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error(ErrorCode::kMalformedLine, "bad boolean '" + text + "'", line);
}

inline GraphSource parse_graph_source(const std::string& text,
                                      std::size_t line) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  GraphSource src;
  if (kind == "file" || kind == "directed") {
    std::getline(in, src.path);
    src.path = trim(src.path);
    if (src.path.empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  "graph = " + kind + " needs a path", line);
    }
    src.kind = kind == "file" ? GraphSource::Kind::kFile
                              : GraphSource::Kind::kDirectedFile;
    return src;
  }
  if (kind == "ba") {
    src.kind = GraphSource::Kind::kPreferentialAttachment;
  } else if (kind == "ws") {
    src.kind = GraphSource::Kind::kSmallWorld;
  } else {
    throw Error(ErrorCode::kMalformedLine,
                "graph kind must be file, directed, ba or ws, got '" + kind + "'", line);
  }
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected key=value in graph spec, got '" + token + "'",
                  line);
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n") {
      src.n = parse_value<std::size_t>(value, key, line);
    } else if (key == "m") {
      src.m = parse_value<std::size_t>(value, key, line);
    } else if (key == "k") {
      src.k = parse_value<std::size_t>(value, key, line);
    } else if (key == "p") {
      src.p = parse_value<double>(value, key, line);
    } else if (key == "seed") {
      src.seed = parse_value<std::uint64_t>(value, key, line);
    } else {
      throw Error(ErrorCode::kMalformedLine,
                  "unknown graph parameter '" + key + "'", line);
    }
  }
  return src;
}

}  // namespace detail

/// Flat "key = value" text; '#' starts a comment line. `graph` may repeat.
/// Relative file paths in `graph = file ...` resolve against `base_dir`.
inline ExperimentConfig parse_experiment_config(
    std::istream& in, const std::filesystem::path& base_dir = {}) {
  ExperimentConfig cfg;
  std::string raw_line;
  std::size_t line = 0;
  while (std::getline(in, raw_line)) {
    ++line;
    const std::string text = detail::trim(raw_line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformedLine, "expected key = value", line);
    }
    const std::string key = detail::trim(text.substr(0, eq));
    const std::string value = detail::trim(text.substr(eq + 1));
    if (key == "graph") {
      auto src = detail::parse_graph_source(value, line);
      const bool from_file = src.kind == GraphSource::Kind::kFile ||
                             src.kind == GraphSource::Kind::kDirectedFile;
      if (from_file && !base_dir.empty() &&
          std::filesystem::path(src.path).is_relative()) {
        src.path = (base_dir / src.path).string();
      }
      cfg.graphs.push_back(std::move(src));
    } else if (key == "measures") {
      cfg.measures.clear();
      for (const auto& m : detail::split_list(value, ','))
        cfg.measures.push_back(parse_measure(m));
    } else if (key == "calibrations") {
      cfg.calibrations.clear();
      for (const auto& c : detail::split_list(value, ','))
        cfg.calibrations.push_back(parse_calibration(c));
    } else if (key == "epsilon") {
      cfg.epsilon = detail::parse_value<double>(value, key, line);
    } else if (key == "theta") {
      if (value == "max") {
        cfg.theta.reset();
      } else {
        cfg.theta = detail::parse_value<double>(value, key, line);
      }
    } else if (key == "beta") {
      cfg.beta = detail::parse_value<double>(value, key, line);
    } else if (key == "percents") {
      cfg.percents.clear();
      for (const auto& p : detail::split_list(value, ','))
        cfg.percents.push_back(detail::parse_value<double>(p, key, line));
    } else if (key == "trials") {
      cfg.trials = detail::parse_value<std::size_t>(value, key, line);
    } else if (key == "base_seed") {
      cfg.base_seed = detail::parse_value<std::uint64_t>(value, key, line);
    } else if (key == "skip") {
      for (const auto& pair : detail::split_list(value, ',')) {
        const auto parts = detail::split_list(pair, ':');
        if (parts.size() != 2) {
          throw Error(ErrorCode::kMalformedLine,
                      "skip entries look like measure:calibration", line);
        }
        cfg.skip.emplace_back(parse_measure(parts[0]),
                              parse_calibration(parts[1]));
      }
    } else if (key == "zero_noise") {
      cfg.zero_noise = detail::parse_bool(value, line);
    } else if (key == "threads") {
      cfg.threads = detail::parse_value<unsigned>(value, key, line);
    } else {
      throw Error(ErrorCode::kMalformedLine, "unknown key '" + key + "'", line);
    }
  }
  if (cfg.graphs.empty()) {
    throw Error(ErrorCode::kInvalidParams, "config names no graph");
  }
  if (cfg.trials == 0 || cfg.percents.empty() || !(cfg.epsilon > 0.0) ||
      !(cfg.beta > 0.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "need trials >= 1, percents, epsilon > 0 and beta > 0");
  }
  for (double p : cfg.percents) {
    if (!(p > 0.0) || p > 100.0) {
      throw Error(ErrorCode::kInvalidParams, "percents must lie in (0, 100]");
    }
  }
  return cfg;
}

inline ExperimentConfig parse_experiment_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_experiment_config(in);
}

// ---------------------------------------------------------------------------
// Experiment harness
// ---------------------------------------------------------------------------

enum class CellStatus { kOk, kNotAvailable, kSkipped, kError };

struct ExperimentCell {
  Measure measure = Measure::kEigenvector;
  Calibration calibration = Calibration::kLocalExact;
  CellStatus status = CellStatus::kOk;
  std::string note;
  double noise_scale = 0.0;
  double dp_delta = 0.0;
  std::vector<PrecisionResult> precision;  // one per configured percent
};

struct ExperimentRow {
  std::string graph;
  std::size_t n = 0;
  std::size_t edges = 0;
  double theta = 0.0;
  std::string error;  // graph-level failure (load, empty graph)
  std::vector<ExperimentCell> cells;
};

struct ExperimentTable {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;

  const ExperimentCell* find(std::size_t row, Measure m, Calibration c) const {
    for (const auto& cell : rows.at(row).cells) {
      if (cell.measure == m && cell.calibration == c) return &cell;
    }
    return nullptr;
  }
};

/// For every graph, measure and calibration: calibrate the noise scale once,
/// then draw `trials` noisy vectors (seed base_seed + i) and record mean and
/// standard deviation of precision at each percent. Calibrations that do not
/// exist for a measure become N/A cells; other failures become error cells.
inline ExperimentTable run_experiment(const ExperimentConfig& cfg) {
  ExperimentTable table;
  table.config = cfg;
  for (const auto& src : cfg.graphs) {
    ExperimentRow row;
    row.graph = src.label();
    WeightedGraph g;
    try {
      g = src.load();
      row.n = g.num_vertices();
      row.edges = g.num_edges();
      row.theta = cfg.theta ? *cfg.theta : max_weight(g);
    } catch (const Error& e) {
      row.error = e.what();
      table.rows.push_back(std::move(row));
      continue;
    }
    const ThetaParams t(row.theta);
    for (Measure m : cfg.measures) {
      std::optional<CentralityVector> raw;
      std::string raw_error;
      try {
        raw = compute_centrality(g, m);
      } catch (const Error& e) {
        raw_error = e.what();
      }
      for (Calibration c : cfg.calibrations) {
        ExperimentCell cell;
        cell.measure = m;
        cell.calibration = c;
        if (cfg.skipped(m, c)) {
          cell.status = CellStatus::kSkipped;
          row.cells.push_back(std::move(cell));
          continue;
        }
        if (!raw) {
          cell.status = CellStatus::kError;
          cell.note = raw_error;
          row.cells.push_back(std::move(cell));
          continue;
        }
        try {
          if (!cfg.zero_noise) {
            const auto cal = calibrate_noise(g, m, c, t, cfg.epsilon, cfg.beta,
                                             cfg.threads);
            cell.noise_scale = cal.noise_scale;
            cell.dp_delta = cal.dp_delta;
          }
        } catch (const Error& e) {
          cell.status = e.code() == ErrorCode::kUnboundedSensitivity
                            ? CellStatus::kNotAvailable
                            : CellStatus::kError;
          cell.note = e.what();
          row.cells.push_back(std::move(cell));
          continue;
        }
        cell.precision = precision_trials(*raw, cell.noise_scale, cfg.percents,
                                          cfg.trials, cfg.base_seed);
        row.cells.push_back(std::move(cell));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

constexpr std::string_view cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::kOk: return "ok";
    case CellStatus::kNotAvailable: return "N/A";
    case CellStatus::kSkipped: return "skipped";
    case CellStatus::kError: return "error";
  }
  return "?";
}

/// One block per measure; rows are graphs, column groups are calibrations,
/// each split by percent. Cells read "mean +- std" in percent.
inline std::string format_experiment_table(const ExperimentTable& table) {
  const auto& cfg = table.config;
  std::ostringstream out;
  out << "# epsilon=" << fmt12(cfg.epsilon) << " beta=" << fmt12(cfg.beta)
      << " theta=" << (cfg.theta ? fmt12(*cfg.theta) : std::string("max"))
      << " trials=" << cfg.trials << " base_seed=" << cfg.base_seed << "\n";
  for (Measure m : cfg.measures) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"graph"};
    for (Calibration c : cfg.calibrations) {
      for (double p : cfg.percents) {
        header.push_back(std::string(calibration_name(c)) + "@" + fmt12(p) +
                         "%");
      }
    }
    grid.push_back(header);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const auto& row = table.rows[r];
      std::vector<std::string> line{row.graph};
      for (Calibration c : cfg.calibrations) {
        const ExperimentCell* cell = row.error.empty() ? table.find(r, m, c)
                                                       : nullptr;
        for (std::size_t p = 0; p < cfg.percents.size(); ++p) {
          if (!cell) {
            line.push_back("error");
          } else if (cell->status == CellStatus::kOk) {
            const auto& pr = cell->precision[p];
            line.push_back(fmt12(100.0 * pr.mean) + " +- " +
                           fmt12(100.0 * pr.std));
          } else {
            line.push_back(std::string(cell_status_name(cell->status)));
          }
        }
      }
      grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        width[i] = std::max(width[i], line[i].size());
      }
    }
    out << "\n[" << measure_name(m) << "] precision (%)\n";
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) out << "  ";
        out << line[i] << std::string(width[i] - line[i].size(), ' ');
      }
      out << "\n";
    }
  }
  out << "\n[noise scales]\n";
  for (const auto& row : table.rows) {
    if (!row.error.empty()) {
      out << row.graph << ": " << row.error << "\n";
      continue;
    }
    for (const auto& cell : row.cells) {
      out << row.graph << " " << measure_name(cell.measure) << " "
          << calibration_name(cell.calibration) << ": ";
      if (cell.status == CellStatus::kOk) {
        out << "b=" << fmt12(cell.noise_scale);
        if (cell.calibration == Calibration::kSmoothBound) {
          out << " dp_delta=" << fmt12(cell.dp_delta);
        } else {
          out << " (no DP guarantee)";
        }
      } else {
        out << cell_status_name(cell.status);
        if (!cell.note.empty()) out << " - " << cell.note;
      }
      out << "\n";
    }
  }
  return out.str();
}

inline nlohmann::json experiment_to_json(const ExperimentTable& table) {
  const auto& cfg = table.config;
  nlohmann::json doc;
  doc["epsilon"] = cfg.epsilon;
  doc["beta"] = cfg.beta;
  doc["theta"] = cfg.theta ? nlohmann::json(*cfg.theta) : nlohmann::json("max");
  doc["trials"] = cfg.trials;
  doc["base_seed"] = cfg.base_seed;
  doc["percents"] = cfg.percents;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jr{{"graph", row.graph},
                      {"n", row.n},
                      {"edges", row.edges},
                      {"theta", row.theta}};
    if (!row.error.empty()) jr["error"] = row.error;
    jr["cells"] = nlohmann::json::array();
    for (const auto& cell : row.cells) {
      nlohmann::json jc{{"measure", measure_name(cell.measure)},
                        {"calibration", calibration_name(cell.calibration)},
                        {"status", cell_status_name(cell.status)}};
      if (!cell.note.empty()) jc["note"] = cell.note;
      if (cell.status == CellStatus::kOk) {
        jc["noise_scale"] = cell.noise_scale;
        jc["dp_delta"] = cell.dp_delta;
        jc["dp_guarantee"] = cell.calibration == Calibration::kSmoothBound;
        jc["precision"] = nlohmann::json::array();
        for (const auto& pr : cell.precision) {
          jc["precision"].push_back({{"percent", pr.percent},
                                     {"k", pr.k},
                                     {"trials", pr.trials},
                                     {"mean", pr.mean},
                                     {"std", pr.std}});
        }
      }
      jr["cells"].push_back(std::move(jc));
    }
    doc["rows"].push_back(std::move(jr));
  }
  return doc;
}

}  // namespace dpc
