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

// Frequency-of-occurrence tables.
//
// Two counting conventions are supported:
//   kExpanded   a geminate counts as two occurrences of its base phoneme;
//               30 categories, denominator = expanded units.
//   kTokenWise  single and geminate forms are separate unit-weight
//               categories; 50 categories, denominator = tokens.

#ifndef ITAPHON_TABULATOR_H_
#define ITAPHON_TABULATOR_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "itaphon/error.h"
#include "itaphon/inventory.h"
#include "itaphon/transcriber.h"

namespace itaphon {

enum class CountingMode { kExpanded, kTokenWise };

inline std::string_view mode_name(CountingMode m) {
  return m == CountingMode::kExpanded ? "expanded" : "tokenwise";
}

struct Category {
  Phoneme phoneme;
  bool geminate = false;

  std::string label() const { return arpabet_of(phoneme, geminate); }

  friend bool operator==(const Category&, const Category&) = default;
};

inline std::vector<Category> categories(CountingMode mode) {
  std::vector<Category> out;
  for (Phoneme p : all_phonemes()) out.push_back({p, false});
  if (mode == CountingMode::kTokenWise) {
    for (Phoneme p : all_phonemes()) {
      if (can_geminate(p)) out.push_back({p, true});
    }
  }
  return out;
}

// Position of `c` in categories(mode).
inline std::optional<std::size_t> category_index(CountingMode mode, Category c) {
  if (!c.geminate) return index_of(c.phoneme);
  if (mode == CountingMode::kExpanded || !can_geminate(c.phoneme)) {
    return std::nullopt;
  }
  std::size_t k = kPhonemeCount;
  for (Phoneme p : all_phonemes()) {
    if (p == c.phoneme) return k;
    if (can_geminate(p)) ++k;
  }
  return std::nullopt;
}

struct FrequencyTable {
  CountingMode mode = CountingMode::kExpanded;
  std::vector<Category> keys;
  // Empty for derived tables (averages, published reference columns).
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  std::vector<double> frequencies;

  double frequency(Category c) const {
    const auto k = category_index(mode, c);
    return k ? frequencies[*k] : 0.0;
  }
  double frequency(Phoneme p) const { return frequency(Category{p, false}); }

  bool derived() const { return counts.empty(); }

  // Builds a table from nonnegative weights (e.g. published percentages),
  // normalized to sum to 1.
  static FrequencyTable from_weights(
      CountingMode mode, std::span<const std::pair<Category, double>> weights) {
    FrequencyTable t;
    t.mode = mode;
    t.keys = categories(mode);
    t.frequencies.assign(t.keys.size(), 0.0);
    double sum = 0.0;
    for (const auto& [c, w] : weights) {
      const auto k = category_index(mode, c);
      if (!k) throw InputError("category " + c.label() + " not valid in this mode");
      if (w < 0) throw InputError("negative weight for " + c.label());
      t.frequencies[*k] += w;
      sum += w;
    }
    if (!(sum > 0)) throw DataError("weights sum to zero");
    for (auto& f : t.frequencies) f /= sum;
    return t;
  }
};

inline FrequencyTable frequency_table(std::span<const PhonemeToken> tokens,
                                      CountingMode mode) {
  if (tokens.empty()) throw DataError("cannot tabulate an empty token sequence");
  FrequencyTable t;
  t.mode = mode;
  t.keys = categories(mode);
  t.counts.assign(t.keys.size(), 0);
  for (const auto& tok : tokens) {
    if (mode == CountingMode::kExpanded) {
      t.counts[index_of(tok.phoneme)] += tok.units();
      t.total += tok.units();
    } else {
      const auto k = category_index(mode, {tok.phoneme, tok.geminate});
      if (!k) throw DataError("geminated " + arpabet_of(tok.phoneme) + " token");
      ++t.counts[*k];
      ++t.total;
    }
  }
  t.frequencies.resize(t.keys.size());
  for (std::size_t k = 0; k < t.keys.size(); ++k) {
    t.frequencies[k] =
        static_cast<double>(t.counts[k]) / static_cast<double>(t.total);
  }
  return t;
}

struct GeminationRow {
  Phoneme phoneme;
  double independent_freq;  // fraction of all tokens
  double geminated_freq;    // fraction of all tokens
  // geminated / (independent + geminated); absent when the phoneme never occurs
  std::optional<double> rate;
};

struct GeminationStats {
  std::vector<GeminationRow> rows;  // the 20 geminable phonemes

  const GeminationRow* find(Phoneme p) const {
    for (const auto& r : rows) {
      if (r.phoneme == p) return &r;
    }
    return nullptr;
  }
};

inline GeminationStats gemination_stats_from(const FrequencyTable& tokenwise) {
  if (tokenwise.mode != CountingMode::kTokenWise) {
    throw DataError("gemination statistics need a token-wise table");
  }
  GeminationStats out;
  for (Phoneme p : all_phonemes()) {
    if (!can_geminate(p)) continue;
    GeminationRow r{p, tokenwise.frequency(Category{p, false}),
                    tokenwise.frequency(Category{p, true}), std::nullopt};
    const double denom = r.independent_freq + r.geminated_freq;
    if (denom > 0) r.rate = r.geminated_freq / denom;
    out.rows.push_back(r);
  }
  return out;
}

inline GeminationStats gemination_stats(std::span<const PhonemeToken> tokens) {
  return gemination_stats_from(frequency_table(tokens, CountingMode::kTokenWise));
}

struct ClassBreakdown {
  std::array<double, kClassCount> share{};
  double operator[](PhonemeClass c) const { return share[static_cast<std::size_t>(c)]; }
};

struct MannerBreakdown {
  std::array<double, kMannerCount> share{};
  double operator[](Manner m) const { return share[static_cast<std::size_t>(m)]; }
};

inline ClassBreakdown class_breakdown(const FrequencyTable& t) {
  if (t.mode != CountingMode::kExpanded) {
    throw DataError("class breakdown needs an expanded table");
  }
  ClassBreakdown out;
  for (Phoneme p : all_phonemes()) {
    out.share[static_cast<std::size_t>(classify(p).cls)] += t.frequency(p);
  }
  return out;
}

struct MannerOptions {
  // /z/ is grouped with the fricatives; the published manner totals include
  // its mass.
  bool include_z = true;
};

// Shares of the whole table, not of the consonants alone.
inline MannerBreakdown manner_breakdown(const FrequencyTable& t,
                                        MannerOptions options = {}) {
  if (t.mode != CountingMode::kExpanded) {
    throw DataError("manner breakdown needs an expanded table");
  }
  MannerBreakdown out;
  for (Phoneme p : all_phonemes()) {
    const auto m = classify(p).manner;
    if (!m) continue;
    if (p == Phoneme::kZ && !options.include_z) continue;
    out.share[static_cast<std::size_t>(*m)] += t.frequency(p);
  }
  return out;
}

// Unweighted mean of per-source frequencies.
inline FrequencyTable average_tables(std::span<const FrequencyTable> tables) {
  if (tables.empty()) throw DataError("nothing to average");
  if (tables.size() == 1) return tables.front();
  FrequencyTable out;
  out.mode = tables.front().mode;
  out.keys = tables.front().keys;
  out.frequencies.assign(out.keys.size(), 0.0);
  for (const auto& t : tables) {
    if (t.mode != out.mode) throw DataError("cannot average tables of different modes");
    if (t.keys != out.keys) throw DataError("cannot average tables with different keys");
    for (std::size_t k = 0; k < out.keys.size(); ++k) out.frequencies[k] += t.frequencies[k];
  }
  const auto n = static_cast<double>(tables.size());
  for (auto& f : out.frequencies) f /= n;
  return out;
}

}  // namespace itaphon

#endif  // ITAPHON_TABULATOR_H_
