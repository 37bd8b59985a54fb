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

// Published frequency tables shipped with the library, in percent: the
// four-source reference estimates (Eco, Manzoni, Labate, Lahiri; 6,000
// phonemes each) with their gemination, class and manner summaries, and the
// historical datasets of Zipf & Rogers (1939) and Busa et al. (1962) as
// reprinted in Busa et al. (1962), raw and adjusted to this inventory.

#ifndef ITAPHON_REFERENCE_DATA_H_
#define ITAPHON_REFERENCE_DATA_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace itaphon::reference {

inline constexpr std::array<std::string_view, 4> kSourceNames{
    "Eco", "Manzoni", "Labate", "Lahiri"};

struct SourceRow {
  std::string_view code;
  std::array<double, 4> per_source;
  double average;
};

// Expanded counting (geminate = two occurrences), first 6,000 phonemes of
// each source. Rows in published order.
inline constexpr std::array<SourceRow, 30> kCurrentStudy{{
    {"AA", {10.79, 11.64, 10.97, 12.04}, 11.36},
    {"EY", {10.06, 10.04, 10.08, 8.23}, 9.60},
    {"IY", {9.85, 7.85, 8.98, 8.31}, 8.74},
    {"OW", {8.25, 8.21, 7.65, 9.11}, 8.31},
    {"N", {7.13, 7.26, 7.20, 7.71}, 7.32},
    {"T", {7.13, 6.21, 6.73, 5.85}, 6.48},
    {"R", {6.36, 6.24, 6.59, 6.57}, 6.44},
    {"L", {5.43, 6.88, 6.51, 5.85}, 6.17},
    {"S", {6.07, 4.57, 4.67, 4.83}, 5.03},
    {"K", {4.47, 4.05, 3.52, 4.17}, 4.05},
    {"D", {4.07, 4.51, 4.06, 3.50}, 4.03},
    {"P", {2.63, 2.97, 2.97, 3.59}, 3.04},
    {"M", {2.11, 2.29, 2.40, 3.21}, 2.50},
    {"UW", {2.42, 2.70, 2.07, 2.44}, 2.41},
    {"EH", {2.47, 1.54, 2.22, 2.31}, 2.13},
    {"V", {1.62, 2.35, 1.60, 1.64}, 1.80},
    {"Y", {1.67, 1.41, 1.96, 1.83}, 1.72},
    {"TS", {0.86, 0.57, 1.43, 1.60}, 1.12},
    {"B", {0.58, 0.81, 2.17, 0.90}, 1.11},
    {"W", {1.23, 1.29, 0.75, 1.17}, 1.11},
    {"AO", {0.82, 1.22, 1.10, 0.98}, 1.03},
    {"CH", {1.02, 1.05, 0.90, 0.91}, 0.97},
    {"F", {0.77, 0.92, 1.02, 0.69}, 0.85},
    {"JH", {0.59, 0.98, 0.82, 0.88}, 0.82},
    {"G", {0.54, 0.98, 0.47, 0.93}, 0.73},
    {"GN", {0.45, 0.64, 0.22, 0.16}, 0.37},
    {"LH", {0.34, 0.38, 0.46, 0.14}, 0.33},
    {"SH", {0.19, 0.27, 0.33, 0.35}, 0.29},
    {"DZ", {0.10, 0.08, 0.11, 0.05}, 0.08},
    {"Z", {0.00, 0.08, 0.05, 0.06}, 0.05},
}};

struct GeminationRow {
  std::string_view code;
  double independent;
  double geminated;  // "<0.01" is stored as 0.005
  double rate;
};

// Averaged across the four sources, token-wise.
inline constexpr std::array<GeminationRow, 20> kGemination{{
    {"GN", 0.00, 0.19, 97.87}, {"LH", 0.06, 0.14, 69.39},
    {"SH", 0.06, 0.12, 67.45}, {"TS", 0.34, 0.42, 55.25},
    {"DZ", 0.03, 0.03, 50.02}, {"JH", 0.38, 0.24, 38.26},
    {"B", 0.71, 0.23, 24.32},  {"L", 4.29, 1.09, 16.58},
    {"T", 4.99, 0.91, 15.36},  {"S", 4.21, 0.53, 11.26},
    {"F", 0.74, 0.08, 9.18},   {"CH", 0.86, 0.08, 8.44},
    {"K", 3.83, 0.21, 5.17},   {"P", 2.88, 0.15, 5.09},
    {"M", 2.47, 0.08, 3.12},   {"R", 6.42, 0.17, 2.53},
    {"N", 7.51, 0.18, 2.28},   {"V", 1.83, 0.03, 1.57},
    {"G", 0.76, 0.005, 0.55},  {"D", 4.21, 0.01, 0.30},
}};

struct GroupRow {
  std::string_view group;
  std::array<double, 4> per_source;
  double average;
};

inline constexpr std::array<GroupRow, 3> kClassShares{{
    {"Vowel", {44.65, 43.20, 43.07, 43.40}, 43.58},
    {"Glide", {2.90, 2.70, 2.72, 3.00}, 2.83},
    {"Consonant", {52.45, 54.10, 54.21, 53.60}, 53.59},
}};

inline constexpr std::array<GroupRow, 5> kMannerShares{{
    {"Stop", {19.41, 19.54, 19.92, 18.94}, 19.45},
    {"Fricative", {8.65, 8.20, 7.67, 7.57}, 8.02},
    {"Affricate", {2.58, 2.68, 3.25, 3.45}, 2.99},
    {"Nasal", {9.69, 10.18, 9.82, 11.08}, 10.19},
    {"Liquid", {12.12, 13.50, 13.55, 12.57}, 12.94},
}};

struct LabelRow {
  std::string_view label;  // dataset label syntax, see harmonizer.h
  double percent;
};

// Zipf & Rogers (1939). The reprint lists "/p/ 0.18" twice and has a row
// "/ʌ/ 0.30"; they are read as /ɲ/ and /ʎ/.
inline constexpr std::array<LabelRow, 46> kZipfRogers{{
    {"AA", 11.46}, {"EY", 10.76}, {"IY", 9.30}, {"OW", 9.20}, {"N", 7.60},
    {"R", 6.30},   {"T", 4.62},   {"L", 4.22},  {"S", 3.74},  {"D", 3.48},
    {"K", 3.32},   {"M", 2.52},   {"EH", 2.26}, {"UW", 2.18}, {"P", 2.08},
    {"Y", 1.98},   {"V", 1.48},   {"AO", 1.38}, {"S:", 1.14}, {"L:", 1.10},
    {"F", 1.06},   {"TS", 1.00},  {"CH", 0.80}, {"T:", 0.70}, {"K:", 0.56},
    {"D:", 0.54},  {"B", 0.50},   {"G", 0.48},  {"KW", 0.46}, {"N:", 0.40},
    {"P:", 0.38},  {"JH", 0.38},  {"LH", 0.30}, {"W", 0.26},  {"KW:", 0.26},
    {"M:", 0.24},  {"R:", 0.22},  {"SH", 0.22}, {"F:", 0.20}, {"GN", 0.18},
    {"GW", 0.18},  {"B:", 0.18},  {"JH:", 0.14}, {"V:", 0.10}, {"G:", 0.10},
    {"CH:", 0.04},
}};

// Busa et al. (1962). Stressed vowels carry a trailing apostrophe. Same
// "/p/ 0.18" and "/ʌ/" reading as above.
inline constexpr std::array<LabelRow, 50> kBusa{{
    {"EY", 8.21},  {"OW", 8.00},  {"N", 7.27},   {"R", 6.83},   {"IY", 6.50},
    {"AA", 6.43},  {"T", 5.67},   {"S", 4.42},   {"K", 4.10},   {"AA'", 3.96},
    {"D", 3.31},   {"L", 3.19},   {"M", 3.11},   {"P", 2.98},   {"EY'", 2.83},
    {"OW'", 2.27}, {"EH", 2.23},  {"V", 2.13},   {"Y", 2.09},   {"IY'", 1.93},
    {"AO", 1.38},  {"UW'", 1.27}, {"W", 1.18},   {"UW", 0.85},  {"F", 0.82},
    {"CH", 0.77},  {"T:", 0.67},  {"L:", 0.65},  {"S:", 0.62},  {"B", 0.52},
    {"TS", 0.48},  {"Z", 0.39},   {"G", 0.38},   {"JH", 0.38},  {"B:", 0.25},
    {"LH", 0.21},  {"SH", 0.20},  {"K:", 0.20},  {"GN", 0.18},  {"R:", 0.17},
    {"P:", 0.16},  {"M:", 0.12},  {"N:", 0.12},  {"JH:", 0.10}, {"CH:", 0.08},
    {"F:", 0.05},  {"V:", 0.05},  {"DZ", 0.02},  {"D:", 0.006}, {"G:", 0.004},
}};

struct ComparisonRow {
  std::string_view code;
  double current;
  double zipf;
  double busa;
};

// Four-source averages next to the published adjustments of the two
// historical datasets.
inline constexpr std::array<ComparisonRow, 30> kComparison{{
    {"AA", 11.36, 10.72, 10.14}, {"EY", 9.60, 10.06, 10.77},
    {"IY", 8.74, 8.70, 8.22},    {"OW", 8.31, 8.60, 10.02},
    {"N", 7.32, 7.85, 7.33},     {"T", 6.48, 5.63, 6.84},
    {"R", 6.44, 6.30, 6.99},     {"L", 6.17, 6.00, 4.38},
    {"S", 5.03, 5.63, 5.52},     {"K", 4.05, 5.07, 4.39},
    {"D", 4.03, 4.26, 3.24},     {"P", 3.04, 2.66, 3.22},
    {"M", 2.50, 2.81, 3.27},     {"UW", 2.41, 2.04, 2.07},
    {"EH", 2.13, 2.11, 2.18},    {"V", 1.80, 1.57, 2.18},
    {"Y", 1.72, 1.85, 2.04},     {"TS", 1.12, 0.94, 0.48},
    {"B", 1.11, 0.80, 1.00},     {"W", 1.11, 0.84, 1.15},
    {"AO", 1.03, 1.29, 1.35},    {"CH", 0.97, 0.82, 0.91},
    {"F", 0.85, 1.37, 0.90},     {"JH", 0.82, 0.62, 0.57},
    {"G", 0.73, 0.80, 0.38},     {"GN", 0.37, 0.17, 0.18},
    {"LH", 0.33, 0.28, 0.20},    {"SH", 0.29, 0.21, 0.20},
    {"DZ", 0.08, 0.00, 0.02},    {"Z", 0.05, 0.00, 0.38},
}};

// Order: four-source average, Zipf & Rogers, Busa et al.
inline constexpr std::array<std::array<double, 3>, 3> kCorrelations{{
    {1.0, 0.993, 0.981},
    {0.993, 1.0, 0.982},
    {0.981, 0.982, 1.0},
}};

// FNV-1a over the canonical serialization produced by
// harmonizer.h:serialize_reference_tables().
inline constexpr std::uint64_t kChecksum = 0xeb6da8e50008b194ull;

}  // namespace itaphon::reference

#endif  // ITAPHON_REFERENCE_DATA_H_
