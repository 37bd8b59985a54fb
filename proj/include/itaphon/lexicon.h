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

// Pronunciation lexicon: explicit ARPAbet transcriptions that take precedence
// over the grapheme rules.
//
// File format (UTF-8), one entry per line:
//
//   word<TAB>CODE CODE CODE
//
// Lines starting with '#' are comments; blank lines are ignored. Keys are
// composed and case folded, so "Perché" and "perché" collide while
// "perche" stays a separate key. Elided prefixes may be listed with their
// apostrophe ("dell'").

#ifndef ITAPHON_LEXICON_H_
#define ITAPHON_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "itaphon/error.h"
#include "itaphon/inventory.h"
#include "itaphon/utf8.h"

namespace itaphon {

using Pronunciation = std::vector<ParsedCode>;

inline Pronunciation parse_pronunciation(std::string_view codes) {
  Pronunciation out;
  std::istringstream in{std::string(codes)};
  std::string code;
  while (in >> code) out.push_back(parse_arpabet(code));
  return out;
}

class Lexicon {
 public:
  Lexicon() = default;

  void add(std::string_view word, Pronunciation pron) {
    auto key = utf8::normalize(word);
    if (key.empty()) throw InputError("empty lexicon key");
    entries_[std::move(key)] = std::move(pron);
  }

  void add(std::string_view word, std::string_view codes) {
    auto pron = parse_pronunciation(codes);
    if (pron.empty()) {
      throw InputError("empty pronunciation for \"" + std::string(word) + "\"");
    }
    add(word, std::move(pron));
  }

  // Looks up a word after normalization.
  const Pronunciation* find(std::string_view word) const {
    return find_normalized(utf8::normalize(word));
  }

  const Pronunciation* find_normalized(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Entries of `other` replace entries with the same key.
  void merge(const Lexicon& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] = v;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, Pronunciation>& entries() const {
    return entries_;
  }

  static Lexicon parse(std::istream& in, const std::string& source = "<lexicon>") {
    Lexicon lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      const auto where = source + ":" + std::to_string(lineno);
      const auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0) {
        throw InputError(where + ": expected word<TAB>codes");
      }
      try {
        lex.add(std::string_view(line).substr(0, tab),
                std::string_view(line).substr(tab + 1));
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
    }
    return lex;
  }

  static Lexicon load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open lexicon " + path.string());
    return parse(in, path.string());
  }

  // Later files override earlier ones.
  static Lexicon load(const std::vector<std::filesystem::path>& paths) {
    Lexicon lex;
    for (const auto& p : paths) lex.merge(load(p));
    return lex;
  }

 private:
  std::map<std::string, Pronunciation> entries_;
};

}  // namespace itaphon

#endif  // ITAPHON_LEXICON_H_
