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

#ifndef ITAPHON_ERROR_H_
#define ITAPHON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace itaphon {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input: files, lexicon lines, dataset labels,
// ARPAbet codes.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that cannot be processed: untranscribable words, corpora
// too short for an analysis, degenerate statistics.
class DataError : public Error {
 public:
  using Error::Error;
};

// Byte range [begin, end) into a UTF-8 source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

class TranscriptionError : public DataError {
 public:
  TranscriptionError(std::string word, Span span, const std::string& reason)
      : DataError("cannot transcribe \"" + word + "\" at bytes [" +
                  std::to_string(span.begin) + ", " +
                  std::to_string(span.end) + "): " + reason),
        word_(std::move(word)),
        span_(span) {}

  const std::string& word() const { return word_; }
  Span span() const { return span_; }

 private:
  std::string word_;
  Span span_;
};

}  // namespace itaphon

#endif  // ITAPHON_ERROR_H_
