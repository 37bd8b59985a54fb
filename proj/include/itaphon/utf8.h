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

// Minimal UTF-8 handling for Latin-script text: decoding with byte offsets,
// canonical composition of accented vowels, and case folding.

#ifndef ITAPHON_UTF8_H_
#define ITAPHON_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace itaphon::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first unit
  std::size_t length;  // bytes
};

// Invalid sequences decode to U+FFFD one byte at a time.
inline std::vector<CodePoint> decode(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= s.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (!ok) {
      out.push_back({kReplacement, i, 1});
      ++i;
      continue;
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline std::string encode(std::u32string_view cps) {
  std::string out;
  for (char32_t cp : cps) append(out, cp);
  return out;
}

constexpr bool is_combining_mark(char32_t cp) {
  return cp >= 0x0300 && cp <= 0x036F;
}

constexpr bool is_apostrophe(char32_t cp) {
  return cp == U'\'' || cp == 0x2019 || cp == 0x02BC;
}

// Letters of the Latin script: ASCII, Latin-1 Supplement and Latin
// Extended-A. Anything else ends a word.
constexpr bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp >= 0x00C0 && cp <= 0x00FF) return cp != 0x00D7 && cp != 0x00F7;
  return cp >= 0x0100 && cp <= 0x017F;
}

constexpr char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if (cp == 0x0178) return 0x00FF;
  if (cp >= 0x0100 && cp <= 0x017F && cp != 0x0130 && cp != 0x0131 &&
      cp != 0x0138 && cp != 0x0149 && cp != 0x017F) {
    // Latin Extended-A pairs alternate upper/lower; the run 0x0139-0x0148
    // and 0x0179-0x017E is shifted by one.
    const bool odd_run = (cp >= 0x0139 && cp <= 0x0148) ||
                         (cp >= 0x0179 && cp <= 0x017E);
    if (odd_run) return (cp % 2 == 1) ? cp + 1 : cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  return cp;
}

// Precomposed form of base + combining mark for the Latin-1 vowels and a few
// consonants; 0 when there is none.
constexpr char32_t compose(char32_t base, char32_t mark) {
  struct Row {
    char32_t base;
    char32_t grave, acute, circumflex, diaeresis;
  };
  constexpr Row rows[] = {
      {U'a', 0xE0, 0xE1, 0xE2, 0xE4}, {U'e', 0xE8, 0xE9, 0xEA, 0xEB},
      {U'i', 0xEC, 0xED, 0xEE, 0xEF}, {U'o', 0xF2, 0xF3, 0xF4, 0xF6},
      {U'u', 0xF9, 0xFA, 0xFB, 0xFC}, {U'A', 0xC0, 0xC1, 0xC2, 0xC4},
      {U'E', 0xC8, 0xC9, 0xCA, 0xCB}, {U'I', 0xCC, 0xCD, 0xCE, 0xCF},
      {U'O', 0xD2, 0xD3, 0xD4, 0xD6}, {U'U', 0xD9, 0xDA, 0xDB, 0xDC},
  };
  for (const auto& r : rows) {
    if (r.base != base) continue;
    switch (mark) {
      case 0x0300: return r.grave;
      case 0x0301: return r.acute;
      case 0x0302: return r.circumflex;
      case 0x0308: return r.diaeresis;
      default: return 0;
    }
  }
  if (mark == 0x0303) {  // tilde
    if (base == U'n') return 0xF1;
    if (base == U'N') return 0xD1;
  }
  if (mark == 0x0327) {  // cedilla
    if (base == U'c') return 0xE7;
    if (base == U'C') return 0xC7;
  }
  return 0;
}

// Canonical composition (for the marks handled by compose) followed by case
// folding; typographic apostrophes become ASCII.
inline std::u32string normalize(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (char32_t cp : in) {
    if (is_combining_mark(cp) && !out.empty()) {
      if (char32_t c = compose(out.back(), cp)) {
        out.back() = c;
        continue;
      }
    }
    out.push_back(is_apostrophe(cp) ? U'\'' : cp);
  }
  for (auto& cp : out) cp = fold_case(cp);
  return out;
}

inline std::u32string to_u32(std::string_view s) {
  std::u32string out;
  for (const auto& cp : decode(s)) out.push_back(cp.value);
  return out;
}

inline std::string normalize(std::string_view s) {
  return encode(normalize(to_u32(s)));
}

}  // namespace itaphon::utf8

#endif  // ITAPHON_UTF8_H_
