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

// Mapping historical phoneme-frequency datasets onto the 30-phoneme
// inventory, and comparing frequency vectors.
//
// Dataset files are UTF-8, one "label<TAB>percent" per line ('#' comments
// and blank lines are skipped, a trailing '%' is accepted). Labels:
//
//   T      base phoneme (any ARPAbet code)
//   T:     geminate, counted as two occurrences of T
//   AA'    stress-marked vowel allophone, merged into AA
//   KW     cluster, one K and one W
//   GW     cluster, one G and one W
//   KW:    geminate cluster, two K and no W
//
// The KW: rule is asymmetric on purpose: it is the only reading under which
// the published adjusted Zipf & Rogers values (K 5.07, W 0.84) come out.
// Phonemes absent from a dataset get zero mass, and the result is
// renormalized to 100.

#ifndef ITAPHON_HARMONIZER_H_
#define ITAPHON_HARMONIZER_H_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itaphon/error.h"
#include "itaphon/inventory.h"
#include "itaphon/reference_data.h"
#include "itaphon/tabulator.h"

namespace itaphon {

enum class LabelKind {
  kBase,
  kGeminate,
  kStressedVowel,
  kClusterKW,
  kClusterGW,
  kClusterKWGeminate,
};

struct ParsedLabel {
  LabelKind kind;
  Phoneme phoneme;  // meaningless for clusters

  friend bool operator==(const ParsedLabel&, const ParsedLabel&) = default;
};

inline ParsedLabel parse_label(std::string_view label) {
  if (label == "KW") return {LabelKind::kClusterKW, Phoneme::kK};
  if (label == "GW") return {LabelKind::kClusterGW, Phoneme::kG};
  if (label == "KW:") return {LabelKind::kClusterKWGeminate, Phoneme::kK};
  const auto bad = [&](const std::string& why) {
    return InputError("bad dataset label \"" + std::string(label) + "\": " + why);
  };
  if (label.empty()) throw bad("empty");
  LabelKind kind = LabelKind::kBase;
  auto code = label;
  if (label.back() == ':') {
    kind = LabelKind::kGeminate;
    code.remove_suffix(1);
  } else if (label.back() == '\'') {
    kind = LabelKind::kStressedVowel;
    code.remove_suffix(1);
  }
  const auto p = phoneme_from_arpabet(code);
  if (!p) throw bad("unknown phoneme");
  if (kind == LabelKind::kGeminate && !can_geminate(*p)) throw bad("not geminable");
  if (kind == LabelKind::kStressedVowel && !is_vowel(*p)) throw bad("not a vowel");
  return {kind, *p};
}

struct DatasetEntry {
  std::string label;
  double percent;
};

struct ExternalDataset {
  std::string name;
  std::vector<DatasetEntry> entries;

  void validate() const {
    std::set<std::string> seen;
    for (const auto& e : entries) {
      parse_label(e.label);
      if (!(e.percent > 0)) {
        throw InputError(name + ": frequency of " + e.label + " must be positive");
      }
      if (!seen.insert(e.label).second) {
        throw InputError(name + ": duplicate label " + e.label);
      }
    }
  }
};

inline ExternalDataset parse_dataset(std::istream& in, std::string name) {
  ExternalDataset ds;
  ds.name = std::move(name);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto where = ds.name + ":" + std::to_string(lineno) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InputError(where + "expected label<TAB>percent");
    std::string value = line.substr(tab + 1);
    while (!value.empty() && (value.back() == ' ' || value.back() == '%')) value.pop_back();
    double pct = 0;
    try {
      std::size_t used = 0;
      pct = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InputError(where + "bad percentage \"" + line.substr(tab + 1) + "\"");
    }
    ds.entries.push_back({line.substr(0, tab), pct});
  }
  try {
    ds.validate();
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()));
  }
  return ds;
}

inline ExternalDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open dataset " + path.string());
  return parse_dataset(in, path.stem().string());
}

// 30 percentages keyed by the inventory.
struct HarmonizedVector {
  std::array<double, kPhonemeCount> percent{};
  // Mass before renormalization; 0 for published columns.
  double raw_total = 0.0;

  double operator[](Phoneme p) const { return percent[index_of(p)]; }
  double sum() const {
    double s = 0;
    for (double v : percent) s += v;
    return s;
  }
};

inline HarmonizedVector adjust_dataset(const ExternalDataset& ds) {
  ds.validate();
  std::array<double, kPhonemeCount> raw{};
  const auto add = [&](Phoneme p, double v) { raw[index_of(p)] += v; };
  for (const auto& e : ds.entries) {
    const auto l = parse_label(e.label);
    switch (l.kind) {
      case LabelKind::kBase:
      case LabelKind::kStressedVowel:
        add(l.phoneme, e.percent);
        break;
      case LabelKind::kGeminate:
        add(l.phoneme, 2 * e.percent);
        break;
      case LabelKind::kClusterKW:
        add(Phoneme::kK, e.percent);
        add(Phoneme::kW, e.percent);
        break;
      case LabelKind::kClusterGW:
        add(Phoneme::kG, e.percent);
        add(Phoneme::kW, e.percent);
        break;
      case LabelKind::kClusterKWGeminate:
        add(Phoneme::kK, 2 * e.percent);
        break;
    }
  }
  HarmonizedVector out;
  for (double v : raw) out.raw_total += v;
  if (!(out.raw_total > 0)) throw DataError(ds.name + ": empty dataset");
  for (std::size_t k = 0; k < kPhonemeCount; ++k) {
    out.percent[k] = 100.0 * raw[k] / out.raw_total;
  }
  return out;
}

inline HarmonizedVector to_harmonized(const FrequencyTable& expanded) {
  if (expanded.mode != CountingMode::kExpanded) {
    throw DataError("comparison vectors use expanded counting");
  }
  HarmonizedVector out;
  for (Phoneme p : all_phonemes()) out.percent[index_of(p)] = 100.0 * expanded.frequency(p);
  return out;
}

// Sample Pearson correlation.
inline double pearson(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw InputError("vectors differ in length");
  if (u.size() < 2) throw DataError("correlation needs at least two values");
  const auto n = static_cast<double>(u.size());
  double mu = 0, mv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= n;
  mv /= n;
  double suv = 0, suu = 0, svv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suv += (u[i] - mu) * (v[i] - mv);
    suu += (u[i] - mu) * (u[i] - mu);
    svv += (v[i] - mv) * (v[i] - mv);
  }
  if (!(suu > 0) || !(svv > 0)) throw DataError("correlation of a constant vector");
  return suv / std::sqrt(suu * svv);
}

inline double pearson(const HarmonizedVector& u, const HarmonizedVector& v) {
  return pearson(std::span<const double>(u.percent), std::span<const double>(v.percent));
}

inline std::vector<std::vector<double>> correlation_matrix(
    std::span<const HarmonizedVector> vs) {
  std::vector<std::vector<double>> m(vs.size(), std::vector<double>(vs.size(), 1.0));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      m[i][j] = m[j][i] = pearson(vs[i], vs[j]);
    }
  }
  return m;
}

struct Deviation {
  Phoneme phoneme;
  double computed;
  double published;
};

inline std::vector<Deviation> deviations(const HarmonizedVector& computed,
                                         const HarmonizedVector& published,
                                         double tolerance) {
  std::vector<Deviation> out;
  for (Phoneme p : all_phonemes()) {
    if (std::abs(computed[p] - published[p]) > tolerance) {
      out.push_back({p, computed[p], published[p]});
    }
  }
  return out;
}

// Tolerance for comparing recomputed adjustments against published two-decimal
// values, and the looser one for the Busa column, whose denominator is not
// recoverable.
inline constexpr double kPublishedTolerance = 0.05;
inline constexpr double kBusaTolerance = 0.1;

struct ReferenceTables {
  std::array<std::string, 4> sources;
  std::array<FrequencyTable, 4> per_source;  // expanded, normalized
  FrequencyTable average;                    // expanded, normalized
  std::array<double, kPhonemeCount> average_percent{};  // as published
  ExternalDataset zipf_rogers;
  ExternalDataset busa;
  HarmonizedVector current;        // published comparison columns
  HarmonizedVector zipf_adjusted;
  HarmonizedVector busa_adjusted;
  std::array<std::array<double, 3>, 3> correlations{};
  std::vector<std::string> provenance;
};

namespace detail {

inline Phoneme code_or_die(std::string_view code) {
  const auto p = phoneme_from_arpabet(code);
  if (!p) throw DataError("embedded table has unknown code " + std::string(code));
  return *p;
}

inline void put(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  out += buf;
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

// Canonical text form of every embedded table; its hash is pinned in
// reference::kChecksum.
inline std::string serialize_reference_tables() {
  namespace r = reference;
  std::string out;
  for (const auto& row : r::kCurrentStudy) {
    out += row.code;
    for (double v : row.per_source) { out += ' '; detail::put(out, v); }
    out += ' ';
    detail::put(out, row.average);
    out += '\n';
  }
  for (const auto& row : r::kGemination) {
    out += row.code;
    for (double v : {row.independent, row.geminated, row.rate}) { out += ' '; detail::put(out, v); }
    out += '\n';
  }
  const auto groups = [&](std::span<const r::GroupRow> rows) {
    for (const auto& row : rows) {
      out += row.group;
      for (double v : row.per_source) { out += ' '; detail::put(out, v); }
      out += ' ';
      detail::put(out, row.average);
      out += '\n';
    }
  };
  groups(r::kClassShares);
  groups(r::kMannerShares);
  for (const auto& row : r::kZipfRogers) {
    out += row.label;
    out += ' ';
    detail::put(out, row.percent);
    out += '\n';
  }
  for (const auto& row : r::kBusa) {
    out += row.label;
    out += ' ';
    detail::put(out, row.percent);
    out += '\n';
  }
  for (const auto& row : r::kComparison) {
    out += row.code;
    for (double v : {row.current, row.zipf, row.busa}) { out += ' '; detail::put(out, v); }
    out += '\n';
  }
  for (const auto& row : r::kCorrelations) {
    for (double v : row) { detail::put(out, v); out += ' '; }
    out += '\n';
  }
  return out;
}

inline std::uint64_t reference_checksum(std::string_view serialized) {
  return detail::fnv1a(serialized);
}

inline void verify_reference_checksum(std::string_view serialized, std::uint64_t expected) {
  if (reference_checksum(serialized) != expected) {
    throw DataError("embedded reference data failed its checksum");
  }
}

inline ReferenceTables build_reference_tables() {
  namespace r = reference;
  verify_reference_checksum(serialize_reference_tables(), r::kChecksum);

  ReferenceTables t;
  for (std::size_t s = 0; s < 4; ++s) {
    t.sources[s] = std::string(r::kSourceNames[s]);
    std::vector<std::pair<Category, double>> w;
    for (const auto& row : r::kCurrentStudy) {
      w.push_back({{detail::code_or_die(row.code), false}, row.per_source[s]});
    }
    t.per_source[s] = FrequencyTable::from_weights(CountingMode::kExpanded, w);
  }
  std::vector<std::pair<Category, double>> avg;
  for (const auto& row : r::kCurrentStudy) {
    const auto p = detail::code_or_die(row.code);
    avg.push_back({{p, false}, row.average});
    t.average_percent[index_of(p)] = row.average;
  }
  t.average = FrequencyTable::from_weights(CountingMode::kExpanded, avg);

  t.zipf_rogers.name = "Zipf & Rogers (1939)";
  for (const auto& row : r::kZipfRogers) {
    t.zipf_rogers.entries.push_back({std::string(row.label), row.percent});
  }
  t.busa.name = "Busa et al. (1962)";
  for (const auto& row : r::kBusa) {
    t.busa.entries.push_back({std::string(row.label), row.percent});
  }
  t.zipf_rogers.validate();
  t.busa.validate();

  for (const auto& row : r::kComparison) {
    const auto k = index_of(detail::code_or_die(row.code));
    t.current.percent[k] = row.current;
    t.zipf_adjusted.percent[k] = row.zipf;
    t.busa_adjusted.percent[k] = row.busa;
  }
  t.correlations = r::kCorrelations;
  t.provenance = {
      "four-source table: percent appearance per source (Eco, Manzoni, Labate, "
      "Lahiri), first 6,000 phonemes each, geminates counted twice; the "
      "published average column is kept verbatim (its IY entry is 8.74 where "
      "the mean of the four sources is 8.75)",
      "Zipf & Rogers (1939) as reprinted in Busa et al. (1962); the second "
      "\"/p/ 0.18\" row is read as GN and \"/ʌ/ 0.30\" as LH",
      "Busa et al. (1962); \"/p/ 0.18\" is read as GN and \"/ʌ/ 0.21\" as LH; "
      "stressed vowels are labelled with a trailing apostrophe",
      "adjusted comparison columns and the 3x3 Pearson matrix as published",
  };
  return t;
}

inline const ReferenceTables& load_reference_tables() {
  static const ReferenceTables tables = build_reference_tables();
  return tables;
}

}  // namespace itaphon

#endif  // ITAPHON_HARMONIZER_H_
