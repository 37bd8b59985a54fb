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

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "itaphon/harmonizer.h"
#include "itaphon/tabulator.h"
#include "oracles.h"

namespace itaphon {
namespace {

using P = Phoneme;

PhonemeToken tok(P p, bool g = false) { return {p, g, {}}; }

double sum(const FrequencyTable& t) {
  double s = 0;
  for (double f : t.frequencies) s += f;
  return s;
}

TEST(FrequencyTableTest, SingleToken) {
  const std::vector<PhonemeToken> v{tok(P::kA)};
  const auto t = frequency_table(v, CountingMode::kExpanded);
  EXPECT_EQ(t.frequency(P::kA), 1.0);
  EXPECT_EQ(t.keys.size(), 30u);
  EXPECT_EQ(t.frequency(P::kZ), 0.0);
}

TEST(FrequencyTableTest, ExpandedDoublesGeminates) {
  const std::vector<PhonemeToken> v{tok(P::kT, true), tok(P::kA)};
  const auto t = frequency_table(v, CountingMode::kExpanded);
  EXPECT_DOUBLE_EQ(t.frequency(P::kT), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.frequency(P::kA), 1.0 / 3.0);
  EXPECT_EQ(t.total, 3u);
}

TEST(FrequencyTableTest, TokenWiseSeparatesGeminates) {
  const std::vector<PhonemeToken> v{tok(P::kT, true), tok(P::kA)};
  const auto t = frequency_table(v, CountingMode::kTokenWise);
  EXPECT_EQ(t.keys.size(), 50u);
  EXPECT_DOUBLE_EQ(t.frequency(Category{P::kT, true}), 0.5);
  EXPECT_DOUBLE_EQ(t.frequency(Category{P::kA, false}), 0.5);
  EXPECT_EQ(t.frequency(Category{P::kT, false}), 0.0);
  EXPECT_EQ(t.total, 2u);
}

TEST(FrequencyTableTest, EmptyInputIsError) {
  EXPECT_THROW(frequency_table({}, CountingMode::kExpanded), DataError);
  EXPECT_THROW(gemination_stats({}), DataError);
}

TEST(FrequencyTableTest, TokenWiseRejectsImpossibleGeminate) {
  const std::vector<PhonemeToken> v{tok(P::kZ, true)};
  EXPECT_THROW(frequency_table(v, CountingMode::kTokenWise), DataError);
}

TEST(FrequencyTableTest, FrequenciesSumToOneAndMatchCounts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = oracle::random_tokens(rng, 1 + trial * 7);
    for (auto mode : {CountingMode::kExpanded, CountingMode::kTokenWise}) {
      const auto t = frequency_table(v, mode);
      EXPECT_NEAR(sum(t), 1.0, 1e-12);
      for (std::size_t k = 0; k < t.keys.size(); ++k) {
        EXPECT_EQ(t.frequencies[k], static_cast<double>(t.counts[k]) / t.total);
      }
    }
  }
}

TEST(FrequencyTableTest, PermutationInvariant) {
  std::mt19937_64 rng(11);
  auto v = oracle::random_tokens(rng, 500);
  const auto a = frequency_table(v, CountingMode::kTokenWise);
  std::shuffle(v.begin(), v.end(), rng);
  const auto b = frequency_table(v, CountingMode::kTokenWise);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.frequencies, b.frequencies);
}

TEST(CountingIdentityTest, ExpandedTotalIsTokensPlusGeminates) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(1, 400);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto v = oracle::random_tokens(rng, static_cast<std::size_t>(len(rng)));
    const auto e = frequency_table(v, CountingMode::kExpanded);
    const auto t = frequency_table(v, CountingMode::kTokenWise);
    const auto gems = static_cast<std::uint64_t>(
        std::count_if(v.begin(), v.end(), [](const PhonemeToken& x) { return x.geminate; }));
    ASSERT_EQ(e.total, t.total + gems);
    for (P p : all_phonemes()) {
      if (!can_geminate(p)) continue;
      const auto single = t.counts[*category_index(CountingMode::kTokenWise, {p, false})];
      const auto doubled = t.counts[*category_index(CountingMode::kTokenWise, {p, true})];
      ASSERT_EQ(e.counts[index_of(p)], single + 2 * doubled);
    }
  }
}

TEST(GeminationTest, Example) {
  const std::vector<PhonemeToken> v{tok(P::kN), tok(P::kN, true), tok(P::kN), tok(P::kN)};
  const auto g = gemination_stats(v);
  const auto* n = g.find(P::kN);
  ASSERT_NE(n, nullptr);
  EXPECT_DOUBLE_EQ(n->independent_freq, 0.75);
  EXPECT_DOUBLE_EQ(n->geminated_freq, 0.25);
  ASSERT_TRUE(n->rate);
  EXPECT_DOUBLE_EQ(*n->rate, 0.25);
}

TEST(GeminationTest, AbsentPhonemeHasNoRate) {
  const std::vector<PhonemeToken> v{tok(P::kA), tok(P::kT, true)};
  const auto g = gemination_stats(v);
  EXPECT_EQ(g.rows.size(), 20u);
  EXPECT_FALSE(g.find(P::kN)->rate);
  EXPECT_EQ(g.find(P::kZ), nullptr);
  EXPECT_EQ(g.find(P::kA), nullptr);
}

TEST(GeminationTest, RateIsTheQuotientExactly) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto v = oracle::random_tokens(rng, 300, 0.3);
    const auto t = frequency_table(v, CountingMode::kTokenWise);
    for (const auto& r : gemination_stats(v).rows) {
      const double ind = t.frequency(Category{r.phoneme, false});
      const double gem = t.frequency(Category{r.phoneme, true});
      if (ind + gem > 0) {
        ASSERT_TRUE(r.rate);
        ASSERT_EQ(*r.rate, gem / (ind + gem));
        ASSERT_GE(*r.rate, 0.0);
        ASSERT_LE(*r.rate, 1.0);
      } else {
        ASSERT_FALSE(r.rate);
      }
    }
  }
}

TEST(GeminationTest, NeedsTokenWiseTable) {
  const std::vector<PhonemeToken> v{tok(P::kA)};
  EXPECT_THROW(gemination_stats_from(frequency_table(v, CountingMode::kExpanded)), DataError);
}

FrequencyTable weights(std::initializer_list<std::pair<P, double>> w) {
  std::vector<std::pair<Category, double>> v;
  for (const auto& [p, x] : w) v.push_back({{p, false}, x});
  return FrequencyTable::from_weights(CountingMode::kExpanded, v);
}

TEST(BreakdownTest, Trivial) {
  const auto a = class_breakdown(weights({{P::kA, 1.0}}));
  EXPECT_EQ(a[PhonemeClass::kVowel], 1.0);
  EXPECT_EQ(a[PhonemeClass::kGlide], 0.0);
  EXPECT_EQ(a[PhonemeClass::kConsonant], 0.0);
  EXPECT_EQ(class_breakdown(weights({{P::kJ, 0.5}, {P::kW, 0.5}}))[PhonemeClass::kGlide], 1.0);
  EXPECT_EQ(manner_breakdown(weights({{P::kT, 1.0}}))[Manner::kStop], 1.0);
  EXPECT_EQ(manner_breakdown(weights({{P::kS, 0.5}, {P::kSh, 0.5}}))[Manner::kFricative], 1.0);
}

TEST(BreakdownTest, ZOption) {
  const auto t = weights({{P::kZ, 1.0}, {P::kA, 1.0}});
  EXPECT_DOUBLE_EQ(manner_breakdown(t)[Manner::kFricative], 0.5);
  EXPECT_EQ(manner_breakdown(t, {.include_z = false})[Manner::kFricative], 0.0);
}

TEST(BreakdownTest, ClassesSumToOne) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = frequency_table(oracle::random_tokens(rng, 200), CountingMode::kExpanded);
    const auto c = class_breakdown(t);
    EXPECT_NEAR(c[PhonemeClass::kVowel] + c[PhonemeClass::kGlide] + c[PhonemeClass::kConsonant],
                1.0, 1e-12);
  }
}

TEST(BreakdownTest, Linear) {
  std::mt19937_64 rng(6);
  const auto a = frequency_table(oracle::random_tokens(rng, 300), CountingMode::kExpanded);
  const auto b = frequency_table(oracle::random_tokens(rng, 300), CountingMode::kExpanded);
  const std::vector<FrequencyTable> both{a, b};
  const auto avg = average_tables(both);
  for (std::size_t k = 0; k < kMannerCount; ++k) {
    const auto m = static_cast<Manner>(k);
    EXPECT_NEAR(manner_breakdown(avg)[m],
                0.5 * manner_breakdown(a)[m] + 0.5 * manner_breakdown(b)[m], 1e-15);
  }
  for (std::size_t k = 0; k < kClassCount; ++k) {
    const auto c = static_cast<PhonemeClass>(k);
    EXPECT_NEAR(class_breakdown(avg)[c], 0.5 * class_breakdown(a)[c] + 0.5 * class_breakdown(b)[c],
                1e-15);
  }
}

TEST(BreakdownTest, NeedsExpandedTable) {
  const std::vector<PhonemeToken> v{tok(P::kA)};
  const auto t = frequency_table(v, CountingMode::kTokenWise);
  EXPECT_THROW(class_breakdown(t), DataError);
  EXPECT_THROW(manner_breakdown(t), DataError);
}

// Group sums over the published average column, with the groups spelled out
// by code rather than taken from the inventory.
double group_share(const std::vector<const char*>& codes) {
  const auto& ref = load_reference_tables();
  double s = 0;
  for (const char* c : codes) s += 100.0 * ref.average.frequency(*phoneme_from_arpabet(c));
  return s;
}

TEST(BreakdownTest, PublishedAverageColumn) {
  const auto& ref = load_reference_tables();
  const auto c = class_breakdown(ref.average);
  const auto m = manner_breakdown(ref.average);
  EXPECT_NEAR(100 * c[PhonemeClass::kVowel], 43.58, 0.02);
  EXPECT_NEAR(100 * c[PhonemeClass::kGlide], 2.83, 0.02);
  EXPECT_NEAR(100 * c[PhonemeClass::kConsonant], 53.59, 0.02);
  EXPECT_NEAR(100 * m[Manner::kStop], 19.45, 0.02);
  EXPECT_NEAR(100 * m[Manner::kFricative], 8.02, 0.02);
  EXPECT_NEAR(100 * m[Manner::kAffricate], 2.99, 0.02);
  EXPECT_NEAR(100 * m[Manner::kNasal], 10.19, 0.02);
  EXPECT_NEAR(100 * m[Manner::kLiquid], 12.94, 0.02);

  EXPECT_NEAR(100 * c[PhonemeClass::kVowel],
              group_share({"AA", "EY", "IY", "OW", "EH", "AO", "UW"}), 1e-9);
  EXPECT_NEAR(100 * m[Manner::kFricative], group_share({"S", "V", "F", "SH", "Z"}), 1e-9);
  EXPECT_NEAR(100 * m[Manner::kStop], group_share({"T", "D", "K", "P", "B", "G"}), 1e-9);
}

TEST(BreakdownTest, FricativesWithoutZMissThePublishedTotal) {
  const auto& ref = load_reference_tables();
  const double without = 100 * manner_breakdown(ref.average, {.include_z = false})[Manner::kFricative];
  EXPECT_NEAR(without, 7.97, 0.01);
  EXPECT_GT(std::abs(without - 8.02), 0.02);
}

TEST(AverageTest, PublishedRowAA) {
  const double mean = (10.79 + 11.64 + 10.97 + 12.04) / 4;
  EXPECT_NEAR(mean, 11.36, 0.005);
  const auto& ref = load_reference_tables();
  const std::vector<FrequencyTable> cols(ref.per_source.begin(), ref.per_source.end());
  const auto avg = average_tables(cols);
  EXPECT_NEAR(100 * avg.frequency(P::kA), 11.36, 0.01);
}

TEST(AverageTest, SingleAndIdenticalTables) {
  std::mt19937_64 rng(3);
  const auto t = frequency_table(oracle::random_tokens(rng, 100), CountingMode::kExpanded);
  const std::vector<FrequencyTable> one{t};
  EXPECT_EQ(average_tables(one).frequencies, t.frequencies);
  const std::vector<FrequencyTable> three{t, t, t};
  const auto avg = average_tables(three);
  for (std::size_t k = 0; k < t.keys.size(); ++k) {
    EXPECT_NEAR(avg.frequencies[k], t.frequencies[k], 1e-15);
  }
}

TEST(AverageTest, Errors) {
  EXPECT_THROW(average_tables({}), DataError);
  const std::vector<PhonemeToken> v{tok(P::kA)};
  const std::vector<FrequencyTable> mixed{frequency_table(v, CountingMode::kExpanded),
                                          frequency_table(v, CountingMode::kTokenWise)};
  EXPECT_THROW(average_tables(mixed), DataError);
}

TEST(FromWeightsTest, Validates) {
  const std::vector<std::pair<Category, double>> neg{{{P::kA, false}, -1.0}};
  EXPECT_THROW(FrequencyTable::from_weights(CountingMode::kExpanded, neg), InputError);
  const std::vector<std::pair<Category, double>> zero{{{P::kA, false}, 0.0}};
  EXPECT_THROW(FrequencyTable::from_weights(CountingMode::kExpanded, zero), DataError);
  const std::vector<std::pair<Category, double>> gem{{{P::kT, true}, 1.0}};
  EXPECT_THROW(FrequencyTable::from_weights(CountingMode::kExpanded, gem), InputError);
}

}  // namespace
}  // namespace itaphon
