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

// The closed inventory of 30 Italian phonemes (7 vowels, 21 consonants,
// 2 glides), their ARPAbet and IPA spellings, and their classification.
//
// ARPAbet is the machine encoding. A geminate is written as its code
// repeated twice ("TT", "GNGN"); IPA strings are for display only.

#ifndef ITAPHON_INVENTORY_H_
#define ITAPHON_INVENTORY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "itaphon/error.h"

namespace itaphon {

enum class Phoneme : std::uint8_t {
  // vowels
  kA, kE, kOpenE, kO, kOpenO, kI, kU,
  // consonants
  kP, kB, kT, kD, kK, kG,
  kF, kV, kS, kZ, kSh,
  kTs, kDz, kCh, kJh,
  kM, kN, kGn,
  kL, kLh, kR,
  // glides
  kJ, kW,
};

inline constexpr std::size_t kPhonemeCount = 30;

enum class PhonemeClass : std::uint8_t { kVowel, kGlide, kConsonant };

enum class Manner : std::uint8_t {
  kStop, kFricative, kAffricate, kNasal, kLiquid
};

inline constexpr std::size_t kClassCount = 3;
inline constexpr std::size_t kMannerCount = 5;

struct PhonemeInfo {
  Phoneme phoneme;
  std::string_view arpabet;
  std::string_view ipa;
  PhonemeClass cls;
  std::optional<Manner> manner;
  bool geminable;
  bool always_geminate_intervocalic;
};

namespace detail {

using C = PhonemeClass;
using M = Manner;
using P = Phoneme;

inline constexpr std::array<PhonemeInfo, kPhonemeCount> kInventory{{
    {P::kA, "AA", "a", C::kVowel, std::nullopt, false, false},
    {P::kE, "EY", "e", C::kVowel, std::nullopt, false, false},
    {P::kOpenE, "EH", "ɛ", C::kVowel, std::nullopt, false, false},
    {P::kO, "OW", "o", C::kVowel, std::nullopt, false, false},
    {P::kOpenO, "AO", "ɔ", C::kVowel, std::nullopt, false, false},
    {P::kI, "IY", "i", C::kVowel, std::nullopt, false, false},
    {P::kU, "UW", "u", C::kVowel, std::nullopt, false, false},
    {P::kP, "P", "p", C::kConsonant, M::kStop, true, false},
    {P::kB, "B", "b", C::kConsonant, M::kStop, true, false},
    {P::kT, "T", "t", C::kConsonant, M::kStop, true, false},
    {P::kD, "D", "d", C::kConsonant, M::kStop, true, false},
    {P::kK, "K", "k", C::kConsonant, M::kStop, true, false},
    {P::kG, "G", "g", C::kConsonant, M::kStop, true, false},
    {P::kF, "F", "f", C::kConsonant, M::kFricative, true, false},
    {P::kV, "V", "v", C::kConsonant, M::kFricative, true, false},
    {P::kS, "S", "s", C::kConsonant, M::kFricative, true, false},
    {P::kZ, "Z", "z", C::kConsonant, M::kFricative, false, false},
    {P::kSh, "SH", "ʃ", C::kConsonant, M::kFricative, true, true},
    {P::kTs, "TS", "ts", C::kConsonant, M::kAffricate, true, true},
    {P::kDz, "DZ", "dz", C::kConsonant, M::kAffricate, true, true},
    {P::kCh, "CH", "tʃ", C::kConsonant, M::kAffricate, true, false},
    {P::kJh, "JH", "dʒ", C::kConsonant, M::kAffricate, true, false},
    {P::kM, "M", "m", C::kConsonant, M::kNasal, true, false},
    {P::kN, "N", "n", C::kConsonant, M::kNasal, true, false},
    {P::kGn, "GN", "ɲ", C::kConsonant, M::kNasal, true, true},
    {P::kL, "L", "l", C::kConsonant, M::kLiquid, true, false},
    {P::kLh, "LH", "ʎ", C::kConsonant, M::kLiquid, true, true},
    {P::kR, "R", "r", C::kConsonant, M::kLiquid, true, false},
    {P::kJ, "Y", "j", C::kGlide, std::nullopt, false, false},
    {P::kW, "W", "w", C::kGlide, std::nullopt, false, false},
}};

}  // namespace detail

constexpr std::size_t index_of(Phoneme p) {
  return static_cast<std::size_t>(p);
}

constexpr const PhonemeInfo& info(Phoneme p) {
  return detail::kInventory[index_of(p)];
}

constexpr const std::array<PhonemeInfo, kPhonemeCount>& inventory() {
  return detail::kInventory;
}

constexpr std::array<Phoneme, kPhonemeCount> all_phonemes() {
  std::array<Phoneme, kPhonemeCount> out{};
  for (std::size_t i = 0; i < kPhonemeCount; ++i) out[i] = static_cast<Phoneme>(i);
  return out;
}

constexpr bool can_geminate(Phoneme p) { return info(p).geminable; }

// True for /ʎ ɲ ʃ ts dz/, which are always long between vowels.
constexpr bool always_geminate_intervocalic(Phoneme p) {
  return info(p).always_geminate_intervocalic;
}

struct Classification {
  PhonemeClass cls;
  std::optional<Manner> manner;

  friend bool operator==(const Classification&, const Classification&) = default;
};

constexpr Classification classify(Phoneme p) {
  return {info(p).cls, info(p).manner};
}

constexpr bool is_vowel(Phoneme p) { return info(p).cls == PhonemeClass::kVowel; }
constexpr bool is_glide(Phoneme p) { return info(p).cls == PhonemeClass::kGlide; }
constexpr bool is_consonant(Phoneme p) {
  return info(p).cls == PhonemeClass::kConsonant;
}
// Vowel or glide.
constexpr bool is_vocoid(Phoneme p) { return !is_consonant(p); }

inline std::string arpabet_of(Phoneme p, bool geminate = false) {
  const auto code = info(p).arpabet;
  if (!geminate) return std::string(code);
  if (!can_geminate(p)) {
    throw InputError("phoneme " + std::string(code) +
                     " has no geminate form");
  }
  std::string out(code);
  out += code;
  return out;
}

struct ParsedCode {
  Phoneme phoneme;
  bool geminate;

  friend bool operator==(const ParsedCode&, const ParsedCode&) = default;
};

inline std::optional<Phoneme> phoneme_from_arpabet(std::string_view code) {
  for (const auto& entry : detail::kInventory) {
    if (entry.arpabet == code) return entry.phoneme;
  }
  return std::nullopt;
}

// Accepts a single code ("GN") or a doubled one ("GNGN"). Codes are
// whitespace-delimited in every stream, so no longest-match search is needed.
inline ParsedCode parse_arpabet(std::string_view code) {
  if (auto p = phoneme_from_arpabet(code)) return {*p, false};
  if (code.size() % 2 == 0 && !code.empty()) {
    const auto half = code.substr(0, code.size() / 2);
    if (half == code.substr(code.size() / 2)) {
      if (auto p = phoneme_from_arpabet(half)) {
        if (!can_geminate(*p)) {
          throw InputError("phoneme " + std::string(half) +
                           " does not occur geminated: \"" +
                           std::string(code) + "\"");
        }
        return {*p, true};
      }
    }
  }
  throw InputError("unknown ARPAbet code \"" + std::string(code) + "\"");
}

constexpr std::string_view class_name(PhonemeClass c) {
  switch (c) {
    case PhonemeClass::kVowel: return "Vowel";
    case PhonemeClass::kGlide: return "Glide";
    case PhonemeClass::kConsonant: return "Consonant";
  }
  return "";
}

constexpr std::string_view manner_name(Manner m) {
  switch (m) {
    case Manner::kStop: return "Stop";
    case Manner::kFricative: return "Fricative";
    case Manner::kAffricate: return "Affricate";
    case Manner::kNasal: return "Nasal";
    case Manner::kLiquid: return "Liquid";
  }
  return "";
}

}  // namespace itaphon

#endif  // ITAPHON_INVENTORY_H_
