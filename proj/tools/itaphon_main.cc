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

// itaphon: transcribe Italian text to phonemes and analyze the frequencies.
//
//   itaphon transcribe --corpus text.txt [--out DIR]
//   itaphon analyze    --corpus a.txt b.txt [--format csv|json] [--out DIR]
//   itaphon converge   --corpus a.txt [--increment 250] [--threshold 0.25]
//   itaphon compare    [--dataset zipf busa FILE] [--corpus a.txt]
//   itaphon inventory  [--format csv|json]
//
// Exit status: 0 on success, 2 for bad input (flags, unreadable or malformed
// files), 3 when the data cannot be processed (untranscribable word, corpus
// too short, degenerate statistics).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "itaphon/itaphon.h"

#ifndef ITAPHON_DATA_DIR
#define ITAPHON_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using itaphon::report::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitData = 3;

const fs::path kDefaultLexicon = fs::path(ITAPHON_DATA_DIR) / "lexicon" / "italian_base.tsv";

struct Options {
  std::vector<std::string> corpora;
  std::vector<std::string> transcriptions;
  std::vector<std::string> lexicons;
  bool no_default_lexicon = false;
  std::size_t budget = 6000;
  bool no_budget = false;
  std::string unknown = "rules";
  std::string intervocalic_s = "voiceless";
  std::string mode = "expanded";     // analyze
  std::string scheme = "tokenwise";  // converge
  std::string format = "csv";
  std::string out;
  std::size_t increment = itaphon::kDefaultIncrement;
  std::vector<double> thresholds;
  std::vector<std::string> datasets;
  bool exclude_z = false;
};

struct Source {
  std::string name;
  std::vector<itaphon::TranscribedWord> words;
  std::vector<itaphon::PhonemeToken> tokens;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw itaphon::InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

itaphon::Lexicon load_lexicon(const Options& o) {
  std::vector<fs::path> paths;
  if (!o.no_default_lexicon) paths.push_back(kDefaultLexicon);
  for (const auto& p : o.lexicons) paths.emplace_back(p);
  return itaphon::Lexicon::load(paths);
}

itaphon::TranscriptionPolicy policy_of(const Options& o) {
  itaphon::TranscriptionPolicy p;
  p.unknown_word = o.unknown == "error" ? itaphon::UnknownWordPolicy::kError
                                        : itaphon::UnknownWordPolicy::kRulesOnly;
  p.intervocalic_s = o.intervocalic_s == "voiced" ? itaphon::IntervocalicS::kVoiced
                                                  : itaphon::IntervocalicS::kVoiceless;
  return p;
}

itaphon::CountingMode mode_of(const std::string& name) {
  return name == "tokenwise" ? itaphon::CountingMode::kTokenWise
                             : itaphon::CountingMode::kExpanded;
}

// File stems, made unique by a numeric suffix.
std::vector<std::string> source_names(const std::vector<std::string>& paths) {
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (const auto& p : paths) {
    auto stem = fs::path(p).stem().string();
    if (stem.empty()) stem = "source";
    const int n = seen[stem]++;
    names.push_back(n ? stem + "_" + std::to_string(n + 1) : stem);
  }
  return names;
}

// Corpora are transcribed concurrently; results keep command-line order.
std::vector<Source> load_sources(const Options& o, bool required = true) {
  if (!o.corpora.empty() && !o.transcriptions.empty()) {
    throw itaphon::InputError("use either --corpus or --transcription, not both");
  }
  const bool from_text = !o.corpora.empty();
  const auto& paths = from_text ? o.corpora : o.transcriptions;
  if (paths.empty()) {
    if (required) throw itaphon::InputError("no input: pass --corpus or --transcription");
    return {};
  }
  const auto names = source_names(paths);
  const auto limit = o.no_budget ? itaphon::kNoBudget : o.budget;
  const auto lex = from_text ? load_lexicon(o) : itaphon::Lexicon{};
  const auto policy = policy_of(o);

  std::vector<std::future<Source>> jobs;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      Source s;
      s.name = names[i];
      const auto text = read_file(paths[i]);
      try {
        s.words = from_text ? itaphon::transcribe_text(text, lex, policy)
                            : itaphon::read_stream(std::string_view(text));
      } catch (const itaphon::DataError& e) {
        throw itaphon::DataError(paths[i] + ": " + e.what());
      } catch (const itaphon::InputError& e) {
        throw itaphon::InputError(paths[i] + ": " + e.what());
      }
      s.words = itaphon::truncate_to_budget(std::move(s.words), limit);
      s.tokens = itaphon::flatten(s.words);
      return s;
    }));
  }
  std::vector<Source> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// Collects named outputs and writes them in one place: files under --out, or
// stdout with a header line per section when several are produced.
class Writer {
 public:
  explicit Writer(std::string dir) : dir_(std::move(dir)) {}

  void add(std::string name, std::string content) {
    files_.push_back({std::move(name), std::move(content)});
  }

  void flush() {
    if (!dir_.empty()) {
      std::error_code ec;
      fs::create_directories(dir_, ec);
      if (ec) throw itaphon::InputError("cannot create " + dir_ + ": " + ec.message());
      for (const auto& [name, content] : files_) {
        const auto path = fs::path(dir_) / name;
        std::ofstream f(path, std::ios::binary);
        f << content;
        if (!f) throw itaphon::InputError("cannot write " + path.string());
      }
      return;
    }
    for (const auto& [name, content] : files_) {
      if (files_.size() > 1) std::cout << "# " << name << '\n';
      std::cout << content;
      if (files_.size() > 1 && &content != &files_.back().second) std::cout << '\n';
    }
    std::cout.flush();
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_transcribe(const Options& o) {
  auto sources = load_sources(o);
  Writer w(o.out);
  for (const auto& s : sources) {
    std::fprintf(stderr, "%s: %zu words, %zu tokens, %zu expanded phonemes\n",
                 s.name.c_str(), s.words.size(), s.tokens.size(),
                 itaphon::expanded_size(s.tokens));
    w.add(s.name + ".arpa", itaphon::to_stream(s.words));
  }
  w.flush();
  return kExitOk;
}

int run_analyze(const Options& o) {
  const auto sources = load_sources(o);
  const itaphon::MannerOptions manner{.include_z = !o.exclude_z};
  std::vector<itaphon::FrequencyTable> expanded, tokenwise;
  for (const auto& s : sources) {
    if (s.tokens.empty()) throw itaphon::DataError(s.name + ": empty transcription");
    expanded.push_back(itaphon::frequency_table(s.tokens, itaphon::CountingMode::kExpanded));
    tokenwise.push_back(itaphon::frequency_table(s.tokens, itaphon::CountingMode::kTokenWise));
  }
  const auto avg_expanded = itaphon::average_tables(expanded);
  const auto avg_tokenwise = itaphon::average_tables(tokenwise);

  Writer w(o.out);
  if (o.format == "json") {
    Json j;
    Json arr = Json::array();
    for (std::size_t i = 0; i < sources.size(); ++i) {
      arr.push_back(itaphon::report::analysis_json(sources[i].name, expanded[i], &tokenwise[i],
                                                   manner));
    }
    j["sources"] = std::move(arr);
    j["average"] = itaphon::report::analysis_json("average", avg_expanded, &avg_tokenwise, manner);
    w.add("analysis.json", dump(j));
    w.flush();
    return kExitOk;
  }

  const auto& chosen = mode_of(o.mode) == itaphon::CountingMode::kExpanded ? expanded : tokenwise;
  const auto& chosen_avg =
      mode_of(o.mode) == itaphon::CountingMode::kExpanded ? avg_expanded : avg_tokenwise;
  std::vector<itaphon::report::Column> freq_cols, group_cols;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    freq_cols.push_back({sources[i].name, &chosen[i]});
    group_cols.push_back({sources[i].name, &expanded[i]});
  }
  freq_cols.push_back({"average", &chosen_avg});
  group_cols.push_back({"average", &avg_expanded});
  w.add("frequencies.csv", itaphon::report::frequency_csv(freq_cols));
  for (std::size_t i = 0; i < sources.size(); ++i) {
    w.add("gemination_" + sources[i].name + ".csv",
          itaphon::report::gemination_csv(itaphon::gemination_stats_from(tokenwise[i])));
  }
  w.add("gemination_average.csv",
        itaphon::report::gemination_csv(itaphon::gemination_stats_from(avg_tokenwise)));
  w.add("classes.csv", itaphon::report::class_csv(group_cols));
  w.add("manners.csv", itaphon::report::manner_csv(group_cols, manner));
  w.flush();
  return kExitOk;
}

struct ConvergenceResult {
  itaphon::ConvergenceSeries series;
  std::optional<itaphon::PowerFit> fit;
  std::string fit_error;
};

int run_converge(const Options& o) {
  const auto sources = load_sources(o);
  const auto thresholds = o.thresholds.empty() ? std::vector<double>{0.25, 0.025} : o.thresholds;
  for (double t : thresholds) {
    if (!(t > 0)) throw itaphon::InputError("thresholds must be positive");
  }
  std::vector<std::future<ConvergenceResult>> jobs;
  for (const auto& s : sources) {
    jobs.push_back(std::async(std::launch::async, [&o, &s] {
      ConvergenceResult r;
      try {
        r.series = itaphon::delta_series(s.tokens, o.increment, mode_of(o.scheme));
      } catch (const itaphon::DataError& e) {
        throw itaphon::DataError(s.name + ": " + e.what());
      }
      try {
        r.fit = itaphon::fit_power(r.series);
      } catch (const itaphon::DataError& e) {
        r.fit_error = e.what();
      }
      return r;
    }));
  }
  std::vector<ConvergenceResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  Writer w(o.out);
  Json fits = Json::array();
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto& r = results[i];
    auto summary = itaphon::report::fit_json(sources[i].name, r.series, r.fit, thresholds,
                                             r.fit_error);
    if (o.format == "json") {
      Json avg = Json::array();
      for (std::size_t k = 0; k < r.series.size(); ++k) {
        Json p;
        p["x"] = r.series.xs[k];
        p["average_delta"] = itaphon::report::rounded(r.series.average[k], 6);
        p["max_delta"] = itaphon::report::rounded(r.series.max_delta(k), 6);
        avg.push_back(std::move(p));
      }
      summary["series"] = std::move(avg);
    } else {
      w.add(sources[i].name + "_deltas.csv", itaphon::report::delta_csv(r.series));
      w.add(sources[i].name + "_average.csv", itaphon::report::average_csv(r.series, r.fit));
    }
    fits.push_back(std::move(summary));
  }
  w.add(o.format == "json" ? "convergence.json" : "fits.json", dump(fits));
  w.flush();
  return kExitOk;
}

int run_compare(const Options& o) {
  const auto& ref = itaphon::load_reference_tables();
  using itaphon::report::NamedVector;
  std::vector<NamedVector> cols{{"current", ref.current}};
  for (const auto& s : load_sources(o, false)) {
    if (s.tokens.empty()) throw itaphon::DataError(s.name + ": empty transcription");
    cols.push_back({s.name, itaphon::to_harmonized(itaphon::frequency_table(
                                s.tokens, itaphon::CountingMode::kExpanded))});
  }

  Json devs = Json::object();
  const auto datasets =
      o.datasets.empty() ? std::vector<std::string>{"zipf", "busa"} : o.datasets;
  for (const auto& d : datasets) {
    if (d == "zipf" || d == "busa") {
      const bool zipf = d == "zipf";
      const auto adjusted = itaphon::adjust_dataset(zipf ? ref.zipf_rogers : ref.busa);
      const double tol = zipf ? itaphon::kPublishedTolerance : itaphon::kBusaTolerance;
      const auto dv = itaphon::deviations(adjusted, zipf ? ref.zipf_adjusted : ref.busa_adjusted,
                                          tol);
      for (const auto& x : dv) {
        std::fprintf(stderr, "%s: %s recomputed %.3f, published %.2f (tolerance %.2f)\n",
                     d.c_str(), itaphon::arpabet_of(x.phoneme).c_str(), x.computed,
                     x.published, tol);
      }
      devs[d] = itaphon::report::deviations_json(dv, tol);
      cols.push_back({d, adjusted});
    } else {
      const auto ds = itaphon::load_dataset(d);
      cols.push_back({fs::path(d).stem().string(), itaphon::adjust_dataset(ds)});
    }
  }

  Writer w(o.out);
  if (o.format == "json") {
    Json j;
    Json vecs = Json::object();
    for (const auto& c : cols) {
      Json v = Json::object();
      for (auto p : itaphon::all_phonemes()) {
        v[itaphon::arpabet_of(p)] = itaphon::report::rounded(c.vec[p], 4);
      }
      vecs[c.name] = std::move(v);
    }
    j["vectors"] = std::move(vecs);
    j["correlations"] = itaphon::report::correlation_json(cols);
    j["deviations"] = std::move(devs);
    w.add("comparison.json", dump(j));
  } else {
    w.add("comparison.csv", itaphon::report::comparison_csv(cols));
    Json j = itaphon::report::correlation_json(cols);
    j["deviations"] = std::move(devs);
    w.add("correlations.json", dump(j));
  }
  w.flush();
  return kExitOk;
}

int run_inventory(const Options& o) {
  Writer w(o.out);
  if (o.format == "json") {
    w.add("inventory.json", dump(itaphon::report::inventory_json()));
  } else {
    w.add("inventory.csv", itaphon::report::inventory_csv());
  }
  w.flush();
  return kExitOk;
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--corpus", o.corpora, "UTF-8 corpus text files");
  cmd->add_option("--transcription", o.transcriptions,
                  "ARPAbet stream files written by `transcribe`");
  cmd->add_option("--lexicon", o.lexicons, "extra lexicon files; later ones win");
  cmd->add_flag("--no-default-lexicon", o.no_default_lexicon,
                "do not load the bundled lexicon");
  cmd->add_option("--budget", o.budget, "expanded phonemes kept per corpus")
      ->capture_default_str();
  cmd->add_flag("--no-budget", o.no_budget, "keep whole corpora");
  cmd->add_option("--unknown", o.unknown, "words missing from the lexicon")
      ->check(CLI::IsMember({"rules", "error"}))
      ->capture_default_str();
  cmd->add_option("--intervocalic-s", o.intervocalic_s, "reading of s between vowels")
      ->check(CLI::IsMember({"voiceless", "voiced"}))
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output directory (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Italian phoneme transcription and frequency analysis"};
  app.require_subcommand(1);
  Options o;

  auto* transcribe = app.add_subcommand("transcribe", "write ARPAbet streams");
  add_input_options(transcribe, o);
  transcribe->add_option("--out", o.out, "output directory (default: stdout)");

  auto* analyze = app.add_subcommand("analyze", "frequency, gemination, class, manner tables");
  add_input_options(analyze, o);
  add_output_options(analyze, o);
  analyze->add_option("--mode", o.mode, "counting for the frequency table")
      ->check(CLI::IsMember({"expanded", "tokenwise"}))
      ->capture_default_str();
  analyze->add_flag("--exclude-z", o.exclude_z, "leave /z/ out of the fricatives");

  auto* converge = app.add_subcommand("converge", "delta series, power fits, stability");
  add_input_options(converge, o);
  add_output_options(converge, o);
  converge->add_option("--mode", o.scheme, "categories tracked")
      ->check(CLI::IsMember({"expanded", "tokenwise"}))
      ->capture_default_str();
  converge->add_option("--increment", o.increment, "expanded phonemes per step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  converge->add_option("--threshold", o.thresholds,
                       "stability thresholds in percentage points (default 0.25 0.025)");

  auto* compare = app.add_subcommand("compare", "harmonize datasets and correlate");
  add_input_options(compare, o);
  add_output_options(compare, o);
  compare->add_option("--dataset", o.datasets, "zipf, busa, or a label<TAB>percent file");

  auto* inventory = app.add_subcommand("inventory", "list the phoneme inventory");
  add_output_options(inventory, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (transcribe->parsed()) return run_transcribe(o);
    if (analyze->parsed()) return run_analyze(o);
    if (converge->parsed()) return run_converge(o);
    if (compare->parsed()) return run_compare(o);
    if (inventory->parsed()) return run_inventory(o);
  } catch (const itaphon::InputError& e) {
    std::fprintf(stderr, "itaphon: %s\n", e.what());
    return kExitInput;
  } catch (const itaphon::DataError& e) {
    std::fprintf(stderr, "itaphon: %s\n", e.what());
    return kExitData;
  }
  return kExitInput;
}
