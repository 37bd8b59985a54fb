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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "itaphon/transcriber.h"

namespace itaphon {
namespace {

namespace fs = std::filesystem;

const fs::path kData = ITAPHON_TEST_DATA_DIR;
const fs::path kTestData = ITAPHON_TEST_FILES_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Lexicon& bundled() {
  static const Lexicon lex = Lexicon::load(kData / "lexicon" / "italian_base.tsv");
  return lex;
}

std::string codes(const std::vector<PhonemeToken>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += ' ';
    out += t.arpabet();
  }
  return out;
}

std::string rules(std::string_view word, TranscriptionPolicy policy = {}) {
  return codes(transcribe_word(word, Lexicon{}, policy));
}

std::vector<std::string> texts(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.text);
  return out;
}

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(texts(tokenize_words("cosa può significare")),
            (std::vector<std::string>{"cosa", "può", "significare"}));
  EXPECT_EQ(texts(tokenize_words("l'esito delle elezioni")),
            (std::vector<std::string>{"l'esito", "delle", "elezioni"}));
  EXPECT_TRUE(tokenize_words("").empty());
}

TEST(TokenizeTest, DropsDigitsPunctuationAndStrayApostrophes) {
  EXPECT_EQ(texts(tokenize_words("nel 1628, «don Abbondio»... po' d'un tratto")),
            (std::vector<std::string>{"nel", "don", "Abbondio", "po", "d'un", "tratto"}));
  EXPECT_EQ(texts(tokenize_words("dell’acqua")), (std::vector<std::string>{"dell’acqua"}));
}

TEST(TokenizeTest, SpansPointIntoTheText) {
  const std::string text = "  Città, e può";
  for (const auto& w : tokenize_words(text)) {
    EXPECT_EQ(text.substr(w.span.begin, w.span.end - w.span.begin), w.text);
  }
}

TEST(TranscribeTest, DocumentedExamples) {
  EXPECT_EQ(rules("casa"), "K AA S AA");
  EXPECT_EQ(rules("anno"), "AA NN OW");
  EXPECT_EQ(rules("gnomo"), "GN OW M OW");
  EXPECT_EQ(rules("pazzo"), "P AA TSTS OW");
}

TEST(TranscribeTest, GeminateIsOneTokenSpanningBothLetters) {
  const auto toks = transcribe_word("anno", Lexicon{});
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_TRUE(toks[1].geminate);
  EXPECT_EQ(toks[1].span, (Span{1, 3}));
  EXPECT_EQ(toks[1].units(), 2u);
}

TEST(TranscribeTest, GraphemeRules) {
  EXPECT_EQ(rules("chiaro"), "K Y AA R OW");
  EXPECT_EQ(rules("ghiro"), "G IY R OW");
  EXPECT_EQ(rules("cena"), "CH EY N AA");
  EXPECT_EQ(rules("ciao"), "CH AA OW");
  EXPECT_EQ(rules("giallo"), "JH AA LL OW");
  EXPECT_EQ(rules("ghiaccio"), "G Y AA CHCH OW");
  EXPECT_EQ(rules("figlio"), "F IY LHLH OW");
  EXPECT_EQ(rules("gli"), "LH IY");
  EXPECT_EQ(rules("ogni"), "OW GNGN IY");
  EXPECT_EQ(rules("pesce"), "P EY SHSH EY");
  EXPECT_EQ(rules("lasciare"), "L AA SHSH AA R EY");
  EXPECT_EQ(rules("quando"), "K W AA N D OW");
  EXPECT_EQ(rules("acqua"), "AA KK W AA");
  EXPECT_EQ(rules("soqquadro"), "S OW KK W AA D R OW");
  EXPECT_EQ(rules("hanno"), "AA NN OW");
  EXPECT_EQ(rules("azione"), "AA TSTS Y OW N EY");
  EXPECT_EQ(rules("zio"), "TS Y OW");
  EXPECT_EQ(rules("taxi"), "T AA K S IY");
}

TEST(TranscribeTest, AccentedVowels) {
  EXPECT_EQ(rules("città"), "CH IY TT AA");
  EXPECT_EQ(rules("perché"), "P EY R K EY");
  EXPECT_EQ(rules("caffè"), "K AA FF EH");
  EXPECT_EQ(rules("perciò"), "P EY R CH AO");
  EXPECT_EQ(rules("più"), "P Y UW");
  EXPECT_EQ(rules("PERCHÉ"), "P EY R K EY");
}

TEST(TranscribeTest, SVoicing) {
  EXPECT_EQ(rules("sbaglio"), "Z B AA LHLH OW");
  EXPECT_EQ(rules("smettere"), "Z M EY TT EY R EY");
  EXPECT_EQ(rules("sposa"), "S P OW S AA");
  TranscriptionPolicy voiced;
  voiced.intervocalic_s = IntervocalicS::kVoiced;
  EXPECT_EQ(rules("casa", voiced), "K AA Z AA");
  EXPECT_EQ(rules("sasso", voiced), "S AA SS OW");
}

TEST(TranscribeTest, ElisionKeepsVowelContext) {
  EXPECT_EQ(rules("l'ascia"), "L AA SHSH AA");
  EXPECT_EQ(rules("dell'acqua"), "D EY LL AA KK W AA");
  EXPECT_EQ(codes(transcribe_word("l'esito", bundled())), "L EH S IY T OW");
  EXPECT_EQ(codes(transcribe_word("c'era", bundled())), "CH EH R AA");
}

TEST(TranscribeTest, LexiconWinsAndCoversWholeWord) {
  Lexicon lex;
  lex.add("glicine", "G L IY CH IY N EY");
  const auto toks = transcribe_word("Glicine", lex);
  EXPECT_EQ(codes(toks), "G L IY CH IY N EY");
  for (const auto& t : toks) EXPECT_EQ(t.span, (Span{0, 7}));
}

TEST(TranscribeTest, ErrorPolicyRejectsUnknownWords) {
  TranscriptionPolicy strict;
  strict.unknown_word = UnknownWordPolicy::kError;
  Lexicon lex;
  lex.add("casa", "K AA S AA");
  lex.add("dell'", "D EY LL");
  lex.add("acqua", "AA KK W AA");
  EXPECT_EQ(codes(transcribe_word("casa", lex, strict)), "K AA S AA");
  EXPECT_EQ(codes(transcribe_word("dell'acqua", lex, strict)), "D EY LL AA KK W AA");
  const std::string text = "la casa nuova";
  try {
    transcribe_text(text, lex, strict);
    FAIL();
  } catch (const TranscriptionError& e) {
    EXPECT_EQ(e.word(), "la");
    EXPECT_EQ(e.span(), (Span{0, 2}));
  }
}

TEST(TranscribeTest, UnknownGraphemeReportsSpan) {
  const std::string text = "casa smørrebrød";
  try {
    transcribe_text(text, Lexicon{});
    FAIL();
  } catch (const TranscriptionError& e) {
    EXPECT_EQ(e.word(), "smørrebrød");
    EXPECT_GE(e.span().begin, 5u);
    EXPECT_LE(e.span().end, text.size());
    EXPECT_NE(std::string(e.what()).find("ø"), std::string::npos) << e.what();
  }
}

TEST(TranscribeCorpusTest, BudgetExamples) {
  EXPECT_TRUE(transcribe_corpus("anno casa", Lexicon{}, {}, 0).empty());
  EXPECT_EQ(codes(transcribe_corpus("anno", Lexicon{}, {}, 10)), "AA NN OW");
  const auto two = transcribe_corpus("anno anno anno", Lexicon{}, {}, 8);
  EXPECT_EQ(two.size(), 6u);
  EXPECT_EQ(expanded_size(two), 8u);
  EXPECT_EQ(transcribe_corpus("anno anno anno", Lexicon{}, {}, 7).size(), 3u);
  EXPECT_EQ(expanded_size(transcribe_corpus("anno anno", Lexicon{}, {}, kNoBudget)), 8u);
}

TEST(TranscribeCorpusTest, ConcatenationProperty) {
  const auto text = slurp(kData / "corpus" / "collodi_pinocchio_cap1.txt");
  std::vector<PhonemeToken> expected;
  for (const auto& w : tokenize_words(text)) {
    const auto t = transcribe_word(w, bundled());
    expected.insert(expected.end(), t.begin(), t.end());
  }
  const auto got = transcribe_corpus(text, bundled(), {}, kNoBudget);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].phoneme, expected[i].phoneme);
    EXPECT_EQ(got[i].geminate, expected[i].geminate);
    EXPECT_EQ(got[i].span, expected[i].span);
  }
}

TEST(TranscribeCorpusTest, Deterministic) {
  const auto text = slurp(kData / "corpus" / "manzoni_promessi_sposi_cap1.txt");
  const auto a = transcribe_text(text, bundled());
  const auto b = transcribe_text(text, bundled());
  EXPECT_EQ(to_stream(a), to_stream(b));
}

TEST(TranscribeCorpusTest, ManzoniBudgetIsNearTwelveHundredFiftyWords) {
  const auto text = slurp(kData / "corpus" / "manzoni_promessi_sposi_cap1.txt");
  const auto words = truncate_to_budget(transcribe_text(text, bundled()), 6000);
  EXPECT_GE(words.size(), 1250u * 85 / 100);
  EXPECT_LE(words.size(), 1250u * 115 / 100);
  EXPECT_LE(expanded_size(flatten(words)), 6000u);
  EXPECT_GT(expanded_size(flatten(words)), 5980u);
}

class InvariantTest : public ::testing::TestWithParam<std::string> {};

TEST_P(InvariantTest, CorpusTranscriptionIsClean) {
  const auto text = slurp(kData / "corpus" / GetParam());
  for (const auto& w : transcribe_text(text, bundled())) {
    const auto v = invariant_violations(w.tokens);
    EXPECT_TRUE(v.empty()) << w.word.text << ": " << v.front();
  }
}

INSTANTIATE_TEST_SUITE_P(Corpora, InvariantTest,
                         ::testing::Values("manzoni_promessi_sposi_cap1.txt",
                                           "collodi_pinocchio_cap1.txt"));

TEST(InvariantFuzzTest, RandomWordsAreClean) {
  const std::vector<std::string> pieces{
      "a", "e", "i", "o", "u", "à", "è", "é", "ì", "ò", "ù", "b", "c", "d", "f", "g", "h", "l",
      "m", "n", "p", "q", "r", "s", "t", "v", "z", "gn", "gl", "sc", "ch", "gh", "cq", "qu",
      "zz", "ss", "j", "k", "w", "x", "y", "'"};
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(1, 9);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string word;
    for (int k = len(rng); k > 0; --k) word += pieces[pick(rng)];
    for (const auto& w : tokenize_words(word)) {
      const auto toks = transcribe_word(w, Lexicon{});
      const auto v = invariant_violations(toks);
      ASSERT_TRUE(v.empty()) << w.text << ": " << v.front();
      ++checked;
    }
  }
  EXPECT_GT(checked, 15000);
}

TEST(InvariantTest, DetectsViolations) {
  const std::vector<PhonemeToken> single_gn{
      {Phoneme::kA, false, {}}, {Phoneme::kGn, false, {}}, {Phoneme::kO, false, {}}};
  EXPECT_EQ(invariant_violations(single_gn).size(), 1u);
  const std::vector<PhonemeToken> z{
      {Phoneme::kA, false, {}}, {Phoneme::kZ, false, {}}, {Phoneme::kA, false, {}}};
  EXPECT_EQ(invariant_violations(z).size(), 1u);
  EXPECT_TRUE(invariant_violations(z, false).empty());
  const std::vector<PhonemeToken> yy{{Phoneme::kJ, true, {}}};
  EXPECT_EQ(invariant_violations(yy).size(), 1u);
  const std::vector<PhonemeToken> initial{{Phoneme::kGn, false, {}}, {Phoneme::kO, false, {}}};
  EXPECT_TRUE(invariant_violations(initial).empty());
}

TEST(GoldenTest, Words) {
  std::ifstream in(kTestData / "golden_words.tsv");
  ASSERT_TRUE(in);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const auto word = line.substr(0, tab);
    const auto words = transcribe_text(word, bundled());
    EXPECT_EQ(to_stream(words), line.substr(tab + 1) + "\n") << word;
    ++n;
  }
  EXPECT_GE(n, 50);
}

TEST(GoldenTest, Stream) {
  const auto text = slurp(kTestData / "golden_text.txt");
  const auto expected = slurp(kTestData / "golden_stream.arpa");
  EXPECT_EQ(to_stream(transcribe_text(text, bundled())), expected);
}

TEST(StreamTest, RoundTrip) {
  const auto words = transcribe_text("Quel ramo del lago di Como, tutto a seni e a golfi",
                                     bundled());
  const auto text = to_stream(words);
  const auto back = read_stream(text);
  ASSERT_EQ(back.size(), words.size());
  EXPECT_EQ(to_stream(back), text);
}

TEST(StreamTest, EmptyLinesAreEmptyWords) {
  const auto back = read_stream(std::string_view("AA\n\nTT AA\n"));
  ASSERT_EQ(back.size(), 3u);
  EXPECT_TRUE(back[1].tokens.empty());
  EXPECT_TRUE(back[2].tokens[0].geminate);
}

TEST(StreamTest, ErrorsCarryLineNumbers) {
  std::istringstream in("AA\nAA ZZ\n");
  try {
    read_stream(in, "s.arpa");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("s.arpa:2"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace itaphon
