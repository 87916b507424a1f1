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
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dpcentrality/error.hpp"
#include "dpcentrality/graph.hpp"

// Edge-list text format: one edge per line, "u v w" (0-based ids, positive
// weight) or "u v" (weight 1.0). Lines whose first non-blank character is
// '#' and blank lines are ignored. n is 1 + the largest id seen.

namespace dpc {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
bool parse_number(std::string_view field, T& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && field.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

inline WeightedGraph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = detail::split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2 && fields.size() != 3) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected 'u v [w]', got '" + line + "'", line_no);
    }
    std::uint64_t u = 0, v = 0;
    if (!detail::parse_number(fields[0], u) ||
        !detail::parse_number(fields[1], v) || u > 0xFFFFFFFEULL ||
        v > 0xFFFFFFFEULL) {
      throw Error(ErrorCode::kMalformedLine,
                  "vertex ids must be non-negative integers", line_no);
    }
    double w = 1.0;
    if (fields.size() == 3 && !detail::parse_number(fields[2], w)) {
      throw Error(ErrorCode::kMalformedLine,
                  "weight '" + std::string(fields[2]) + "' is not a number",
                  line_no);
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " +
                  std::to_string(u), line_no);
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "weight must be positive and finite", line_no);
    }
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (u << 32) | v;
    if (const auto [it, inserted] = first_seen.emplace(key, line_no);
        !inserted) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} already given on line " + std::to_string(it->second),
                  line_no);
    }
    n = std::max<std::size_t>(n, v + 1);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline WeightedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

/// Directed edge list ("u v" or "u v w" per line, weights ignored) folded
/// into an unweighted undirected graph: an edge is kept when either direction
/// is present, self-loops are dropped, and every weight is 1.
inline WeightedGraph parse_directed_edge_list(std::istream& in) {
  std::vector<std::uint64_t> keys;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = detail::split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    std::uint64_t u = 0, v = 0;
    if (fields.size() < 2 || fields.size() > 3 ||
        !detail::parse_number(fields[0], u) ||
        !detail::parse_number(fields[1], v) || u > 0xFFFFFFFEULL ||
        v > 0xFFFFFFFEULL) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected 'u v [w]', got '" + line + "'", line_no);
    }
    n = std::max<std::size_t>(n, std::max(u, v) + 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    keys.push_back((u << 32) | v);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Edge> edges;
  edges.reserve(keys.size());
  for (std::uint64_t key : keys) {
    edges.push_back({static_cast<Vertex>(key >> 32),
                     static_cast<Vertex>(key & 0xFFFFFFFFULL), 1.0});
  }
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph read_directed_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_directed_edge_list(in);
}

/// Prints a weight with 12 decimals when that reproduces it exactly, else
/// with 17 significant digits.
inline std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", w);
  double back = 0.0;
  detail::parse_number(std::string_view(buf), back);
  if (back == w) return buf;
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

/// One "u v w" line per edge, sorted by (u, v).
inline std::string write_edge_list(const WeightedGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += format_weight(e.weight);
    out += '\n';
  }
  return out;
}

}  // namespace dpc
