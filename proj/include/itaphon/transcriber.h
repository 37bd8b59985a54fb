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

// Italian orthography to phoneme tokens.
//
// A word is looked up in the lexicon first; otherwise a deterministic rule
// engine maps graphemes to phonemes:
//
//   c, g      K/G before a o u and consonants, CH/JH before e i;
//             "ch"/"gh" give K/G; in "ci"/"gi" + vowel the i is silent
//   gn        GN ("gni" + vowel: silent i)
//   gli       LH; the i is silent before another vowel
//   sc        SH before e i; "sci" + vowel: silent i
//   qu        K W;  "cq" is a geminate K
//   h         silent
//   z         TS (DZ comes only from the lexicon)
//   s         S, also between vowels; Z before b d g l m n r v
//   doubles   one geminate token
//   vowels    a AA, i IY, u UW, e EY, o OW, è EH, ò AO, é EY, ó OW;
//             unaccented i/u before another vowel, or after a vowel that
//             is not itself a glide, are glides Y/W ("piede", "mai")
//
// GN LH SH TS DZ are geminated when flanked by vowels or glides. There is
// no cross-word context: an apostrophe joins its two sides into one unit
// ("l'ascia" behaves like "lascia"), nothing else does.

#ifndef ITAPHON_TRANSCRIBER_H_
#define ITAPHON_TRANSCRIBER_H_

#include <cstddef>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "itaphon/error.h"
#include "itaphon/inventory.h"
#include "itaphon/lexicon.h"
#include "itaphon/utf8.h"

namespace itaphon {

struct PhonemeToken {
  Phoneme phoneme;
  bool geminate = false;
  Span span;

  // Size in expanded phoneme units: a geminate counts twice.
  std::size_t units() const { return geminate ? 2 : 1; }

  std::string arpabet() const { return arpabet_of(phoneme, geminate); }

  friend bool operator==(const PhonemeToken&, const PhonemeToken&) = default;
};

inline std::size_t expanded_size(std::span<const PhonemeToken> tokens) {
  std::size_t n = 0;
  for (const auto& t : tokens) n += t.units();
  return n;
}

enum class IntervocalicS { kVoiceless, kVoiced };
enum class UnknownWordPolicy { kRulesOnly, kError };

struct TranscriptionPolicy {
  IntervocalicS intervocalic_s = IntervocalicS::kVoiceless;
  UnknownWordPolicy unknown_word = UnknownWordPolicy::kRulesOnly;
};

struct Word {
  std::string text;
  Span span;
};

struct TranscribedWord {
  Word word;
  std::vector<PhonemeToken> tokens;
};

// Maximal runs of letters; an apostrophe between two letters is kept inside
// the word. Everything else separates words and is dropped.
inline std::vector<Word> tokenize_words(std::string_view text) {
  const auto cps = utf8::decode(text);
  std::vector<Word> words;
  std::size_t i = 0;
  const auto in_word = [&](std::size_t k) {
    return k < cps.size() &&
           (utf8::is_letter(cps[k].value) || utf8::is_combining_mark(cps[k].value));
  };
  while (i < cps.size()) {
    if (!utf8::is_letter(cps[i].value)) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    while (true) {
      while (in_word(i)) ++i;
      if (i + 1 < cps.size() && utf8::is_apostrophe(cps[i].value) &&
          utf8::is_letter(cps[i + 1].value)) {
        ++i;
        continue;
      }
      break;
    }
    const std::size_t begin = cps[first].offset;
    const std::size_t end = cps[i - 1].offset + cps[i - 1].length;
    words.push_back({std::string(text.substr(begin, end - begin)), {begin, end}});
  }
  return words;
}

namespace detail {

struct Letter {
  char32_t ch;  // composed, case folded
  Span span;
};

struct SplitWord {
  std::vector<Letter> letters;          // apostrophes removed
  std::vector<std::size_t> part_starts;  // letter index where each part starts
  std::string key;                      // normalized text incl. apostrophes
};

inline SplitWord split_word(std::string_view text, std::size_t base_offset) {
  SplitWord out;
  out.part_starts.push_back(0);
  for (const auto& cp : utf8::decode(text)) {
    const Span span{base_offset + cp.offset, base_offset + cp.offset + cp.length};
    if (utf8::is_combining_mark(cp.value) && !out.letters.empty()) {
      auto& prev = out.letters.back();
      if (char32_t c = utf8::compose(prev.ch, cp.value)) prev.ch = c;
      prev.span.end = span.end;
      continue;
    }
    if (utf8::is_apostrophe(cp.value)) {
      out.part_starts.push_back(out.letters.size());
      continue;
    }
    out.letters.push_back({utf8::fold_case(cp.value), span});
  }
  std::size_t p = 1;
  for (std::size_t k = 0; k <= out.letters.size(); ++k) {
    for (; p < out.part_starts.size() && out.part_starts[p] == k; ++p) out.key += '\'';
    if (k < out.letters.size()) utf8::append(out.key, out.letters[k].ch);
  }
  return out;
}

enum class Accent { kNone, kGrave, kAcute, kOther };

struct VowelLetter {
  char base;  // 'a' 'e' 'i' 'o' 'u', or 0 when not a vowel
  Accent accent;
};

constexpr VowelLetter vowel_letter(char32_t c) {
  switch (c) {
    case U'a': return {'a', Accent::kNone};
    case U'e': return {'e', Accent::kNone};
    case U'i': return {'i', Accent::kNone};
    case U'o': return {'o', Accent::kNone};
    case U'u': return {'u', Accent::kNone};
    case U'y': return {'i', Accent::kNone};
    case 0xE0: return {'a', Accent::kGrave};
    case 0xE1: return {'a', Accent::kAcute};
    case 0xE2: case 0xE4: return {'a', Accent::kOther};
    case 0xE8: return {'e', Accent::kGrave};
    case 0xE9: return {'e', Accent::kAcute};
    case 0xEA: case 0xEB: return {'e', Accent::kOther};
    case 0xEC: return {'i', Accent::kGrave};
    case 0xED: return {'i', Accent::kAcute};
    case 0xEE: case 0xEF: return {'i', Accent::kOther};
    case 0xF2: return {'o', Accent::kGrave};
    case 0xF3: return {'o', Accent::kAcute};
    case 0xF4: case 0xF6: return {'o', Accent::kOther};
    case 0xF9: return {'u', Accent::kGrave};
    case 0xFA: return {'u', Accent::kAcute};
    case 0xFB: case 0xFC: return {'u', Accent::kOther};
    case 0xFF: return {'i', Accent::kOther};
    default: return {0, Accent::kNone};
  }
}

constexpr bool is_vowel_letter(char32_t c) { return vowel_letter(c).base != 0; }

constexpr bool is_front_vowel_letter(char32_t c) {
  const auto v = vowel_letter(c);
  return v.base == 'e' || v.base == 'i';
}

constexpr bool is_voiced_consonant_letter(char32_t c) {
  switch (c) {
    case U'b': case U'd': case U'g': case U'l':
    case U'm': case U'n': case U'r': case U'v':
      return true;
    default:
      return false;
  }
}

struct Segment {
  bool is_vowel = false;
  Phoneme phoneme = Phoneme::kA;
  bool geminate = false;
  char32_t letter = 0;  // vowel segments only
  std::size_t first = 0, last = 0;  // letter range, inclusive
};

class RuleEngine {
 public:
  RuleEngine(const std::vector<Letter>& letters, const TranscriptionPolicy& policy,
             const std::string& word, Span word_span)
      : l_(letters), policy_(policy), word_(word), word_span_(word_span) {}

  std::vector<Segment> run() {
    std::size_t i = 0;
    while (i < l_.size()) {
      const char32_t c = l_[i].ch;
      if (is_vowel_letter(c)) {
        Segment s;
        s.is_vowel = true;
        s.letter = c;
        s.first = s.last = i;
        segs_.push_back(s);
        ++i;
      } else if (c == U'h') {
        ++i;
      } else {
        i = consonant(i);
      }
    }
    resolve_vowels();
    geminate_intervocalic();
    return std::move(segs_);
  }

 private:
  char32_t at(std::size_t i) const { return i < l_.size() ? l_[i].ch : 0; }

  // An unaccented i at `i` followed by a vowel letter is only a spelling
  // device after c, g, sc, gl, gn.
  bool silent_i(std::size_t i) const {
    return at(i) == U'i' && is_vowel_letter(at(i + 1));
  }

  void push(Phoneme p, bool gem, std::size_t first, std::size_t last) {
    Segment s;
    s.phoneme = p;
    s.geminate = gem && can_geminate(p);
    s.first = first;
    s.last = last;
    segs_.push_back(s);
  }

  std::size_t consonant(std::size_t start) {
    std::size_t i = start;
    bool gem = false;
    const char32_t c0 = at(i);
    if (at(i + 1) == c0 || (c0 == U'c' && at(i + 1) == U'q')) {
      gem = true;
      ++i;
    }
    const char32_t c = at(i);
    const char32_t n1 = at(i + 1);
    switch (c) {
      case U'c':
        if (n1 == U'h') {
          push(Phoneme::kK, gem, start, i + 1);
          return i + 2;
        }
        if (is_front_vowel_letter(n1)) {
          const std::size_t end = silent_i(i + 1) ? i + 1 : i;
          push(Phoneme::kCh, gem, start, end);
          return end + 1;
        }
        push(Phoneme::kK, gem, start, i);
        return i + 1;
      case U'g':
        if (n1 == U'h') {
          push(Phoneme::kG, gem, start, i + 1);
          return i + 2;
        }
        if (n1 == U'n') {
          const std::size_t end = silent_i(i + 2) ? i + 2 : i + 1;
          push(Phoneme::kGn, gem, start, end);
          return end + 1;
        }
        if (n1 == U'l' && vowel_letter(at(i + 2)).base == 'i') {
          const std::size_t end = silent_i(i + 2) ? i + 2 : i + 1;
          push(Phoneme::kLh, gem, start, end);
          return end + 1;
        }
        if (is_front_vowel_letter(n1)) {
          const std::size_t end = silent_i(i + 1) ? i + 1 : i;
          push(Phoneme::kJh, gem, start, end);
          return end + 1;
        }
        push(Phoneme::kG, gem, start, i);
        return i + 1;
      case U's':
        if (n1 == U'c' && is_front_vowel_letter(at(i + 2))) {
          const std::size_t end = silent_i(i + 2) ? i + 2 : i + 1;
          push(Phoneme::kSh, gem, start, end);
          return end + 1;
        }
        push(s_phoneme(start, i, gem), gem, start, i);
        return i + 1;
      case U'q':
        push(Phoneme::kK, gem, start, i);
        if (n1 == U'u' && is_vowel_letter(at(i + 2))) {
          push(Phoneme::kW, false, i + 1, i + 1);
          return i + 2;
        }
        return i + 1;
      case U'x':
        push(Phoneme::kK, false, start, i);
        push(Phoneme::kS, false, start, i);
        return i + 1;
      case U'z': push(Phoneme::kTs, gem, start, i); return i + 1;
      case U'b': push(Phoneme::kB, gem, start, i); return i + 1;
      case U'd': push(Phoneme::kD, gem, start, i); return i + 1;
      case U'f': push(Phoneme::kF, gem, start, i); return i + 1;
      case U'k': push(Phoneme::kK, gem, start, i); return i + 1;
      case U'l': push(Phoneme::kL, gem, start, i); return i + 1;
      case U'm': push(Phoneme::kM, gem, start, i); return i + 1;
      case U'n': push(Phoneme::kN, gem, start, i); return i + 1;
      case U'p': push(Phoneme::kP, gem, start, i); return i + 1;
      case U'r': push(Phoneme::kR, gem, start, i); return i + 1;
      case U't': push(Phoneme::kT, gem, start, i); return i + 1;
      case U'v': push(Phoneme::kV, gem, start, i); return i + 1;
      case U'j': push(Phoneme::kJ, false, start, i); return i + 1;
      case U'w': push(Phoneme::kW, false, start, i); return i + 1;
      default: {
        std::string g;
        utf8::append(g, c);
        throw TranscriptionError(word_, word_span_,
                                 "no rule for grapheme \"" + g + "\"");
      }
    }
  }

  Phoneme s_phoneme(std::size_t start, std::size_t i, bool gem) const {
    if (gem) return Phoneme::kS;
    if (is_voiced_consonant_letter(at(i + 1))) return Phoneme::kZ;
    if (policy_.intervocalic_s == IntervocalicS::kVoiced && start > 0 &&
        is_vowel_letter(at(start - 1)) && is_vowel_letter(at(i + 1))) {
      return Phoneme::kZ;
    }
    return Phoneme::kS;
  }

  void resolve_vowels() {
    for (std::size_t k = 0; k < segs_.size(); ++k) {
      auto& s = segs_[k];
      if (!s.is_vowel) continue;
      const auto v = vowel_letter(s.letter);
      const bool before_vowel = k + 1 < segs_.size() && segs_[k + 1].is_vowel;
      const bool after_nucleus =
          k > 0 && segs_[k - 1].is_vowel && is_vowel(segs_[k - 1].phoneme);
      const bool glide = v.accent == Accent::kNone && (before_vowel || after_nucleus);
      if (glide && v.base == 'i') {
        s.phoneme = Phoneme::kJ;
      } else if (glide && v.base == 'u') {
        s.phoneme = Phoneme::kW;
      } else {
        switch (v.base) {
          case 'a': s.phoneme = Phoneme::kA; break;
          case 'e':
            s.phoneme = v.accent == Accent::kGrave ? Phoneme::kOpenE : Phoneme::kE;
            break;
          case 'o':
            s.phoneme = v.accent == Accent::kGrave ? Phoneme::kOpenO : Phoneme::kO;
            break;
          case 'i': s.phoneme = Phoneme::kI; break;
          default: s.phoneme = Phoneme::kU; break;
        }
      }
    }
  }

  void geminate_intervocalic() {
    for (std::size_t k = 1; k + 1 < segs_.size(); ++k) {
      auto& s = segs_[k];
      if (s.is_vowel || s.geminate || !always_geminate_intervocalic(s.phoneme)) {
        continue;
      }
      if (is_vocoid(segs_[k - 1].phoneme) && is_vocoid(segs_[k + 1].phoneme)) {
        s.geminate = true;
      }
    }
  }

  const std::vector<Letter>& l_;
  const TranscriptionPolicy& policy_;
  const std::string& word_;
  Span word_span_;
  std::vector<Segment> segs_;
};

inline std::vector<PhonemeToken> from_pronunciation(const Pronunciation& pron,
                                                    Span span) {
  std::vector<PhonemeToken> out;
  out.reserve(pron.size());
  for (const auto& c : pron) out.push_back({c.phoneme, c.geminate, span});
  return out;
}

inline void geminate_intervocalic(std::vector<PhonemeToken>& tokens) {
  for (std::size_t k = 1; k + 1 < tokens.size(); ++k) {
    auto& t = tokens[k];
    if (!t.geminate && always_geminate_intervocalic(t.phoneme) &&
        is_vocoid(tokens[k - 1].phoneme) && is_vocoid(tokens[k + 1].phoneme)) {
      t.geminate = true;
    }
  }
}

inline Span letters_span(const std::vector<Letter>& letters, std::size_t first,
                         std::size_t last) {
  return {letters[first].span.begin, letters[last].span.end};
}

}  // namespace detail

// Describes every place where one word's tokens break the transcription
// invariants: a doubled non-geminable, an undoubled LH/GN/SH/TS/DZ between
// vocoids, or (when `voiceless_s`) a /z/ between vocoids. Empty when clean.
inline std::vector<std::string> invariant_violations(std::span<const PhonemeToken> tokens,
                                                     bool voiceless_s = true) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const auto& t = tokens[k];
    const auto at = " at token " + std::to_string(k);
    if (t.geminate && !can_geminate(t.phoneme)) {
      out.push_back("geminated " + arpabet_of(t.phoneme) + at);
    }
    const bool flanked = k > 0 && k + 1 < tokens.size() &&
                         is_vocoid(tokens[k - 1].phoneme) &&
                         is_vocoid(tokens[k + 1].phoneme);
    if (!flanked) continue;
    if (always_geminate_intervocalic(t.phoneme) && !t.geminate) {
      out.push_back("single intervocalic " + arpabet_of(t.phoneme) + at);
    }
    if (voiceless_s && t.phoneme == Phoneme::kZ) {
      out.push_back("intervocalic Z" + at);
    }
  }
  return out;
}

inline std::vector<PhonemeToken> transcribe_word(const Word& word, const Lexicon& lex,
                                                 const TranscriptionPolicy& policy = {}) {
  const auto split = detail::split_word(word.text, word.span.begin);
  if (split.letters.empty()) {
    throw TranscriptionError(word.text, word.span, "empty word");
  }
  if (const auto* pron = lex.find_normalized(split.key)) {
    return detail::from_pronunciation(*pron, word.span);
  }

  const auto& parts = split.part_starts;
  const auto part_key = [&](std::size_t p) {
    const std::size_t b = parts[p];
    const std::size_t e = p + 1 < parts.size() ? parts[p + 1] : split.letters.size();
    std::string key;
    for (std::size_t k = b; k < e; ++k) utf8::append(key, split.letters[k].ch);
    if (p + 1 < parts.size()) key += '\'';
    return key;
  };
  const auto part_span = [&](std::size_t p) {
    const std::size_t b = parts[p];
    const std::size_t e = p + 1 < parts.size() ? parts[p + 1] : split.letters.size();
    return detail::letters_span(split.letters, b, e - 1);
  };

  if (policy.unknown_word == UnknownWordPolicy::kError) {
    if (parts.size() < 2) {
      throw TranscriptionError(word.text, word.span, "not in lexicon");
    }
    std::vector<PhonemeToken> out;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const auto* pron = lex.find_normalized(part_key(p));
      if (!pron) throw TranscriptionError(word.text, word.span, "not in lexicon");
      const auto toks = detail::from_pronunciation(*pron, part_span(p));
      out.insert(out.end(), toks.begin(), toks.end());
    }
    detail::geminate_intervocalic(out);
    return out;
  }

  const auto segs =
      detail::RuleEngine(split.letters, policy, word.text, word.span).run();
  std::vector<PhonemeToken> out;
  out.reserve(segs.size());
  for (const auto& s : segs) {
    out.push_back({s.phoneme, s.geminate,
                   detail::letters_span(split.letters, s.first, s.last)});
  }

  // The host word of an elision may still have its own lexicon entry.
  if (parts.size() >= 2) {
    const std::size_t host = parts.back();
    const auto* pron = host < split.letters.size()
                           ? lex.find_normalized(part_key(parts.size() - 1))
                           : nullptr;
    bool straddles = false;
    for (const auto& s : segs) straddles |= s.first < host && s.last >= host;
    if (pron && !straddles) {
      std::vector<PhonemeToken> joined;
      for (std::size_t k = 0; k < segs.size(); ++k) {
        if (segs[k].last < host) joined.push_back(out[k]);
      }
      const auto toks = detail::from_pronunciation(*pron, part_span(parts.size() - 1));
      joined.insert(joined.end(), toks.begin(), toks.end());
      detail::geminate_intervocalic(joined);
      return joined;
    }
  }
  return out;
}

inline std::vector<PhonemeToken> transcribe_word(std::string_view word, const Lexicon& lex,
                                                 const TranscriptionPolicy& policy = {}) {
  return transcribe_word(Word{std::string(word), {0, word.size()}}, lex, policy);
}

inline std::vector<TranscribedWord> transcribe_text(std::string_view text,
                                                    const Lexicon& lex,
                                                    const TranscriptionPolicy& policy = {}) {
  std::vector<TranscribedWord> out;
  for (auto& w : tokenize_words(text)) {
    auto tokens = transcribe_word(w, lex, policy);
    out.push_back({std::move(w), std::move(tokens)});
  }
  return out;
}

// Keeps whole words while the running expanded size stays within `limit`.
inline std::vector<TranscribedWord> truncate_to_budget(std::vector<TranscribedWord> words,
                                                       std::size_t limit) {
  std::size_t used = 0;
  std::size_t keep = 0;
  for (; keep < words.size(); ++keep) {
    const std::size_t n = expanded_size(words[keep].tokens);
    if (used + n > limit) break;
    used += n;
  }
  words.resize(keep);
  return words;
}

inline std::vector<PhonemeToken> flatten(std::span<const TranscribedWord> words) {
  std::vector<PhonemeToken> out;
  for (const auto& w : words) out.insert(out.end(), w.tokens.begin(), w.tokens.end());
  return out;
}

inline constexpr std::size_t kNoBudget = std::numeric_limits<std::size_t>::max();

inline std::vector<PhonemeToken> transcribe_corpus(std::string_view text, const Lexicon& lex,
                                                   const TranscriptionPolicy& policy = {},
                                                   std::size_t limit = kNoBudget) {
  return flatten(truncate_to_budget(transcribe_text(text, lex, policy), limit));
}

// Wire format: one line per source word, codes separated by single spaces,
// geminates as doubled codes.
inline void write_stream(std::ostream& os, std::span<const TranscribedWord> words) {
  for (const auto& w : words) {
    for (std::size_t k = 0; k < w.tokens.size(); ++k) {
      if (k) os << ' ';
      os << w.tokens[k].arpabet();
    }
    os << '\n';
  }
}

inline std::string to_stream(std::span<const TranscribedWord> words) {
  std::ostringstream os;
  write_stream(os, words);
  return os.str();
}

// Reads the wire format back. Spans are not recoverable and are left empty.
inline std::vector<TranscribedWord> read_stream(std::istream& in,
                                                const std::string& source = "<stream>") {
  std::vector<TranscribedWord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    TranscribedWord w;
    try {
      for (const auto& c : parse_pronunciation(line)) {
        w.tokens.push_back({c.phoneme, c.geminate, {}});
      }
    } catch (const InputError& e) {
      throw InputError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<TranscribedWord> read_stream(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_stream(in);
}

}  // namespace itaphon

#endif  // ITAPHON_TRANSCRIBER_H_
