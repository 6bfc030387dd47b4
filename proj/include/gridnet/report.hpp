// Copyright 2026 The gridnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gridnet/bounds.hpp"
#include "gridnet/constructions.hpp"
#include "gridnet/search.hpp"
#include "json.hpp"

namespace gridnet {

enum class OutputFormat { text, json, csv };

namespace detail {

template <typename T>
std::string opt_str(const std::optional<T>& v, std::string_view none = "-") {
  return v ? std::to_string(*v) : std::string(none);
}

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

/// Left-aligned columns separated by two spaces.
inline std::string align(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> width;
  for (const auto& row : table) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

inline std::string csv(const std::vector<std::vector<std::string>>& table) {
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << '\n';
  }
  return os.str();
}

}  // namespace detail

inline std::string render(const SearchResult& r, OutputFormat fmt) {
  std::vector<std::string> witnesses;
  for (const auto& w : r.witnesses) witnesses.push_back(format_params(w));
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["family"] = family_tag(r.family);
    j["order"] = r.order;
    j["mode"] = r.via_new_amsterdam ? "via-na" : "direct";
    j["min_diameter"] = detail::opt_json(r.min_diameter);
    j["optima_count"] = r.optima_count;
    j["candidates_examined"] = r.candidates_examined;
    j["moore_bound_for_min"] = detail::opt_json(r.moore_bound_for_min);
    j["moore_lower_bound"] = r.moore_lower_bound;
    j["predicted"] = detail::opt_json(r.predicted);
    j["meets_prediction"] = verdict_name(r.meets_prediction);
    j["witnesses"] = witnesses;
    return j.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    std::vector<std::vector<std::string>> t{
        {"family", "order", "min_diameter", "optima_count", "candidates_examined", "witness"}};
    for (const auto& w : witnesses) {
      t.push_back({std::string(family_tag(r.family)), std::to_string(r.order),
                   detail::opt_str(r.min_diameter, "none"), std::to_string(r.optima_count),
                   std::to_string(r.candidates_examined), w});
    }
    return detail::csv(t);
  }
  std::vector<std::vector<std::string>> t{
      {"family", std::string(family_tag(r.family))},
      {"order", std::to_string(r.order)},
      {"mode", r.via_new_amsterdam ? "via-na" : "direct"},
      {"min diameter", detail::opt_str(r.min_diameter, "no strongly connected instance")},
      {"optima", std::to_string(r.optima_count)},
      {"candidates", std::to_string(r.candidates_examined)},
      {"moore bound at min", detail::opt_str(r.moore_bound_for_min)},
      {"moore lower bound", std::to_string(r.moore_lower_bound)},
      {"predicted", detail::opt_str(r.predicted)},
      {"meets prediction", std::string(verdict_name(r.meets_prediction))}};
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    t.push_back({i == 0 ? "witnesses" : "", witnesses[i]});
  }
  return detail::align(t);
}

inline std::string render(const std::vector<SweepRow>& rows, OutputFormat fmt) {
  const auto status = [](const SweepRow& r) {
    return r.informational ? std::string("info") : r.pass ? std::string("pass") : std::string("FAIL");
  };
  if (fmt == OutputFormat::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["k"] = r.k;
      j["order"] = r.order;
      j["case"] = r.case_label;
      j["predicted"] = detail::opt_json(r.predicted);
      j["measured"] = detail::opt_json(r.measured);
      j["measured_via_line"] = detail::opt_json(r.measured_via_line);
      j["searched"] = detail::opt_json(r.searched);
      j["status"] = status(r);
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> t{
      {"k", "N", "case", "predicted", "measured", "via-line", "searched", "status"}};
  for (const auto& r : rows) {
    t.push_back({std::to_string(r.k), std::to_string(r.order), r.case_label,
                 detail::opt_str(r.predicted), detail::opt_str(r.measured),
                 detail::opt_str(r.measured_via_line), detail::opt_str(r.searched), status(r)});
  }
  return fmt == OutputFormat::csv ? detail::csv(t) : detail::align(t);
}

inline std::string render(const BoundsReport& r, OutputFormat fmt) {
  const auto range = [](const std::optional<OrderRange>& o) {
    return o ? std::to_string(o->low) + ".." + std::to_string(o->high) : std::string("-");
  };
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["family"] = family_tag(r.family);
    j["k"] = r.k;
    j["moore"] = r.moore_value;
    j["moore_by_sum"] = r.moore_value_by_sum;
    j["moore_window"] = {r.moore_window.low, r.moore_window.high};
    j["achievable"] = r.achievable ? nlohmann::ordered_json{r.achievable->low, r.achievable->high}
                                   : nlohmann::ordered_json(nullptr);
    j["missing_order"] = detail::opt_json(r.missing_order);
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> t{
      {"family", std::string(family_tag(r.family))},
      {"k", std::to_string(r.k)},
      {"moore", std::to_string(r.moore_value)},
      {"moore by sum", std::to_string(r.moore_value_by_sum)},
      {"moore window", range(r.moore_window)},
      {"achievable", range(r.achievable)},
      {"missing order", detail::opt_str(r.missing_order)}};
  return fmt == OutputFormat::csv ? detail::csv(t) : detail::align(t);
}

inline bool all_pass(const std::vector<SweepRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
}

}  // namespace gridnet
