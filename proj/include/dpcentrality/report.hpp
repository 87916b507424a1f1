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

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dpcentrality/format.hpp"
#include "dpcentrality/sensitivity.hpp"

namespace dpc {

inline std::string bound_text(const Bound& b) {
  return b.finite() ? fmt12(b.value) : std::string(bound_status_name(b.status));
}

inline nlohmann::json bound_json(const Bound& b) {
  return b.finite() ? nlohmann::json(b.value)
                    : nlohmann::json(bound_status_name(b.status));
}

namespace detail {

inline nlohmann::json perturbation_json(const EmpiricalSensitivity& e) {
  if (!e.argmax) return nlohmann::json();
  return {{"edge", {e.argmax->u, e.argmax->v}},
          {"delta", e.argmax->delta},
          {"new_weight", e.argmax->new_weight}};
}

inline std::string smooth_note(const SensitivityReport& r) {
  switch (r.smooth_bound.status) {
    case BoundStatus::kUnbounded:
      return "weighted graphs admit neighbours with an arbitrarily small "
             "spectral gap, so eigenvector smooth sensitivity has no finite "
             "bound";
    case BoundStatus::kUndefined:
      return "smooth sensitivity is undefined within the naturals: the "
             "damped bound keeps growing until w - k*theta - theta <= 0";
    case BoundStatus::kNotAvailable:
      return "pass --beta to compute a smooth bound";
    case BoundStatus::kValue:
      return {};
  }
  return {};
}

}  // namespace detail

inline nlohmann::json sensitivity_report_json(const SensitivityReport& r) {
  nlohmann::json j{{"measure", measure_name(r.measure)},
                   {"theta", r.theta},
                   {"beta", r.beta ? nlohmann::json(*r.beta) : nlohmann::json()},
                   {"empirical_ls", r.empirical.value},
                   {"ls_bound", bound_json(r.ls_bound)},
                   {"smooth_bound", bound_json(r.smooth_bound)}};
  nlohmann::json argmax;
  argmax["empirical_ls"] = detail::perturbation_json(r.empirical);
  if (r.empirical_unnormalized) {
    j["empirical_ls_unnormalized"] = r.empirical_unnormalized->value;
    argmax["empirical_ls_unnormalized"] =
        detail::perturbation_json(*r.empirical_unnormalized);
  }
  if (r.smooth_k) argmax["smooth_k"] = *r.smooth_k;
  if (r.smooth_worst_shift) argmax["smooth_worst_shift"] = *r.smooth_worst_shift;
  const auto note = detail::smooth_note(r);
  if (!note.empty()) argmax["smooth_note"] = note;
  j["argmax_detail"] = std::move(argmax);
  return j;
}

/// key=value lines, numbers with 12 significant digits.
inline std::string sensitivity_report_text(const SensitivityReport& r) {
  std::ostringstream out;
  out << "measure=" << measure_name(r.measure) << "\n";
  out << "theta=" << fmt12(r.theta) << "\n";
  out << "beta=" << (r.beta ? fmt12(*r.beta) : std::string("none")) << "\n";
  out << "empirical_ls=" << fmt12(r.empirical.value) << "\n";
  if (r.empirical.argmax) {
    out << "empirical_ls_edge=" << r.empirical.argmax->u << "-"
        << r.empirical.argmax->v << "\n";
    out << "empirical_ls_delta=" << fmt12(r.empirical.argmax->delta) << "\n";
  }
  if (r.empirical_unnormalized) {
    out << "empirical_ls_unnormalized="
        << fmt12(r.empirical_unnormalized->value) << "\n";
  }
  out << "ls_bound=" << bound_text(r.ls_bound) << "\n";
  out << "smooth_bound=" << bound_text(r.smooth_bound) << "\n";
  if (r.smooth_k) out << "smooth_k=" << *r.smooth_k << "\n";
  if (r.smooth_worst_shift) {
    out << "smooth_worst_shift=" << fmt12(*r.smooth_worst_shift) << "\n";
  }
  const auto note = detail::smooth_note(r);
  if (!note.empty()) out << "smooth_note=" << note << "\n";
  return out.str();
}

}  // namespace dpc
