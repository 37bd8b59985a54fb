// Copyright 2026 The itaphon Authors
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

// CSV and JSON renderings of the analysis results. Rows follow inventory
// order, percentages carry two decimals, and JSON keys keep insertion order,
// so identical inputs give byte-identical files.

#ifndef ITAPHON_REPORT_H_
#define ITAPHON_REPORT_H_

#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "itaphon/convergence.h"
#include "itaphon/error.h"
#include "itaphon/harmonizer.h"
#include "itaphon/inventory.h"
#include "itaphon/tabulator.h"

namespace itaphon::report {

using Json = nlohmann::ordered_json;

inline std::string fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

// Rounded for JSON, so the serialized value is stable.
inline double rounded(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string csv_row(std::span<const std::string> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + '\n';
}

// A named column of the frequency report.
struct Column {
  std::string name;
  const FrequencyTable* table;
};

inline void require_mode(std::span<const Column> cols, CountingMode mode) {
  for (const auto& c : cols) {
    if (c.table->mode != mode) {
      throw DataError("column " + c.name + " is not " + std::string(mode_name(mode)));
    }
  }
}

// category,<col>...  Percent appearance per category of the columns' mode
// (30 phonemes, or 50 phoneme/geminate categories).
inline std::string frequency_csv(std::span<const Column> cols) {
  if (cols.empty()) throw InputError("no columns to report");
  const auto mode = cols.front().table->mode;
  require_mode(cols, mode);
  std::vector<std::string> head{mode == CountingMode::kExpanded ? "phoneme" : "category"};
  for (const auto& c : cols) head.push_back(c.name);
  std::string out = csv_row(head);
  for (const auto& key : categories(mode)) {
    std::vector<std::string> row{key.label()};
    for (const auto& c : cols) row.push_back(fixed(100.0 * c.table->frequency(key)));
    out += csv_row(row);
  }
  return out;
}

inline std::string rate_text(const std::optional<double>& r) {
  return r ? fixed(100.0 * *r) : std::string();
}

// phoneme,independent,geminated,rate  All in percent; rate empty if undefined.
inline std::string gemination_csv(const GeminationStats& g) {
  std::string out = "phoneme,independent,geminated,rate\n";
  for (const auto& r : g.rows) {
    const std::vector<std::string> row{arpabet_of(r.phoneme), fixed(100.0 * r.independent_freq),
                                       fixed(100.0 * r.geminated_freq), rate_text(r.rate)};
    out += csv_row(row);
  }
  return out;
}

// group,<col>...
inline std::string class_csv(std::span<const Column> cols) {
  require_mode(cols, CountingMode::kExpanded);
  std::vector<std::string> head{"class"};
  for (const auto& c : cols) head.push_back(c.name);
  std::string out = csv_row(head);
  for (std::size_t k = 0; k < kClassCount; ++k) {
    const auto cls = static_cast<PhonemeClass>(k);
    std::vector<std::string> row{std::string(class_name(cls))};
    for (const auto& c : cols) row.push_back(fixed(100.0 * class_breakdown(*c.table)[cls]));
    out += csv_row(row);
  }
  return out;
}

inline std::string manner_csv(std::span<const Column> cols, MannerOptions options = {}) {
  require_mode(cols, CountingMode::kExpanded);
  std::vector<std::string> head{"manner"};
  for (const auto& c : cols) head.push_back(c.name);
  std::string out = csv_row(head);
  for (std::size_t k = 0; k < kMannerCount; ++k) {
    const auto m = static_cast<Manner>(k);
    std::vector<std::string> row{std::string(manner_name(m))};
    for (const auto& c : cols) {
      row.push_back(fixed(100.0 * manner_breakdown(*c.table, options)[m]));
    }
    out += csv_row(row);
  }
  return out;
}

// Everything `analyze` reports for one column, in percent.
inline Json analysis_json(const std::string& name, const FrequencyTable& expanded,
                          const FrequencyTable* tokenwise,
                          MannerOptions options = {}) {
  Json j;
  j["name"] = name;
  if (!expanded.derived()) j["expanded_total"] = expanded.total;
  if (tokenwise && !tokenwise->derived()) j["token_total"] = tokenwise->total;
  Json freq = Json::object();
  for (Phoneme p : all_phonemes()) freq[arpabet_of(p)] = rounded(100.0 * expanded.frequency(p), 2);
  j["frequencies"] = std::move(freq);
  if (tokenwise) {
    Json gem = Json::array();
    for (const auto& r : gemination_stats_from(*tokenwise).rows) {
      Json row;
      row["phoneme"] = arpabet_of(r.phoneme);
      row["independent"] = rounded(100.0 * r.independent_freq, 2);
      row["geminated"] = rounded(100.0 * r.geminated_freq, 2);
      row["rate"] = r.rate ? Json(rounded(100.0 * *r.rate, 2)) : Json(nullptr);
      gem.push_back(std::move(row));
    }
    j["gemination"] = std::move(gem);
  }
  Json cls = Json::object();
  const auto cb = class_breakdown(expanded);
  for (std::size_t k = 0; k < kClassCount; ++k) {
    const auto c = static_cast<PhonemeClass>(k);
    cls[std::string(class_name(c))] = rounded(100.0 * cb[c], 2);
  }
  j["classes"] = std::move(cls);
  Json man = Json::object();
  const auto mb = manner_breakdown(expanded, options);
  for (std::size_t k = 0; k < kMannerCount; ++k) {
    const auto m = static_cast<Manner>(k);
    man[std::string(manner_name(m))] = rounded(100.0 * mb[m], 2);
  }
  j["manners"] = std::move(man);
  return j;
}

// x,category,delta  One row per tracked category per step, in percentage
// points with four decimals.
inline std::string delta_csv(const ConvergenceSeries& s) {
  std::string out = "x,category,delta\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t c = 0; c < s.categories.size(); ++c) {
      const std::vector<std::string> row{std::to_string(s.xs[i]), s.categories[c].label(),
                                         fixed(s.deltas[i][c], 4)};
      out += csv_row(row);
    }
  }
  return out;
}

// x,average_delta,fitted_value  The fitted column is empty without a fit.
inline std::string average_csv(const ConvergenceSeries& s, const std::optional<PowerFit>& fit) {
  std::string out = "x,average_delta,fitted_value\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::vector<std::string> row{
        std::to_string(s.xs[i]), fixed(s.average[i], 4),
        fit ? fixed(evaluate_fit(*fit, static_cast<double>(s.xs[i])), 4) : std::string()};
    out += csv_row(row);
  }
  return out;
}

inline Json optional_json(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Fit summary for one source. Thresholds are in percentage points.
inline Json fit_json(const std::string& name, const ConvergenceSeries& s,
                     const std::optional<PowerFit>& fit, std::span<const double> thresholds,
                     const std::string& fit_error = {}) {
  Json j;
  j["name"] = name;
  j["increment"] = s.increment_size;
  j["scheme"] = std::string(mode_name(s.scheme));
  j["points"] = s.size();
  j["categories"] = s.categories.size();
  if (fit) {
    Json f;
    f["a"] = rounded(fit->a, 9);
    f["b"] = rounded(fit->b, 9);
    f["r2"] = rounded(fit->r2, 9);
    f["points_used"] = fit->points_used;
    f["points_dropped"] = fit->points_dropped;
    f["reliable"] = fit->reliable;
    j["fit"] = std::move(f);
  } else {
    j["fit"] = nullptr;
    j["fit_error"] = fit_error;
  }
  if (s.size()) {
    j["final_average_delta"] = rounded(s.average.back(), 6);
    j["final_max_delta"] = rounded(s.max_delta(s.size() - 1), 6);
  }
  Json stab = Json::array();
  for (double t : thresholds) {
    Json row;
    row["threshold"] = t;
    row["all_categories"] = optional_json(stability_point(s, t, StabilityScope::kAllCategories));
    row["average"] = optional_json(stability_point(s, t, StabilityScope::kAverage));
    stab.push_back(std::move(row));
  }
  j["stability"] = std::move(stab);
  return j;
}

struct NamedVector {
  std::string name;
  HarmonizedVector vec;
};

// phoneme,<vector>...  Table of harmonized percentages.
inline std::string comparison_csv(std::span<const NamedVector> cols) {
  std::vector<std::string> head{"phoneme"};
  for (const auto& c : cols) head.push_back(c.name);
  std::string out = csv_row(head);
  for (Phoneme p : all_phonemes()) {
    std::vector<std::string> row{arpabet_of(p)};
    for (const auto& c : cols) row.push_back(fixed(c.vec[p]));
    out += csv_row(row);
  }
  return out;
}

inline Json correlation_json(std::span<const NamedVector> cols) {
  std::vector<HarmonizedVector> vs;
  for (const auto& c : cols) vs.push_back(c.vec);
  const auto m = correlation_matrix(vs);
  Json j;
  Json names = Json::array();
  for (const auto& c : cols) names.push_back(c.name);
  j["names"] = std::move(names);
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (double v : r) row.push_back(rounded(v, 6));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

inline Json deviations_json(std::span<const Deviation> devs, double tolerance) {
  Json j;
  j["tolerance"] = tolerance;
  Json rows = Json::array();
  for (const auto& d : devs) {
    Json row;
    row["phoneme"] = arpabet_of(d.phoneme);
    row["computed"] = rounded(d.computed, 4);
    row["published"] = d.published;
    row["difference"] = rounded(d.computed - d.published, 4);
    rows.push_back(std::move(row));
  }
  j["beyond_tolerance"] = std::move(rows);
  return j;
}

// code,ipa,class,manner,geminable,always_geminate_intervocalic
inline std::string inventory_csv() {
  std::string out = "code,ipa,class,manner,geminable,always_geminate_intervocalic\n";
  for (const auto& e : inventory()) {
    const std::vector<std::string> row{
        std::string(e.arpabet), std::string(e.ipa), std::string(class_name(e.cls)),
        e.manner ? std::string(manner_name(*e.manner)) : std::string(),
        e.geminable ? "yes" : "no", e.always_geminate_intervocalic ? "yes" : "no"};
    out += csv_row(row);
  }
  return out;
}

inline Json inventory_json() {
  Json j = Json::array();
  for (const auto& e : inventory()) {
    Json row;
    row["code"] = std::string(e.arpabet);
    row["ipa"] = std::string(e.ipa);
    row["class"] = std::string(class_name(e.cls));
    row["manner"] = e.manner ? Json(std::string(manner_name(*e.manner))) : Json(nullptr);
    row["geminable"] = e.geminable;
    row["always_geminate_intervocalic"] = e.always_geminate_intervocalic;
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace itaphon::report

#endif  // ITAPHON_REPORT_H_
