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

// Stability of frequency estimates as a corpus grows.
//
// The corpus is cut into prefixes of k * increment expanded units. A token
// belongs to the prefix in which it starts, so a geminate straddling a
// boundary is counted wholly in the earlier prefix. For k >= 2 the delta of
// a category is |f_k - f_{k-1}| in percentage points. The averaged series is
// fitted with a power law y = a x^b by least squares in log-log space.

#ifndef ITAPHON_CONVERGENCE_H_
#define ITAPHON_CONVERGENCE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itaphon/error.h"
#include "itaphon/tabulator.h"
#include "itaphon/transcriber.h"

namespace itaphon {

inline constexpr std::size_t kDefaultIncrement = 250;

struct SeriesPoint {
  double x;
  double y;
};

struct ConvergenceSeries {
  std::size_t increment_size = kDefaultIncrement;
  CountingMode scheme = CountingMode::kTokenWise;
  // Categories occurring anywhere in the analyzed prefix.
  std::vector<Category> categories;
  // Cumulative expanded units, 2*increment, 3*increment, ...
  std::vector<std::size_t> xs;
  // deltas[i][c]: percentage-point change of categories[c] at xs[i].
  std::vector<std::vector<double>> deltas;
  std::vector<double> average;

  std::size_t size() const { return xs.size(); }

  double max_delta(std::size_t i) const {
    return deltas[i].empty() ? 0.0 : *std::max_element(deltas[i].begin(), deltas[i].end());
  }

  std::vector<SeriesPoint> average_points() const {
    std::vector<SeriesPoint> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.push_back({static_cast<double>(xs[i]), average[i]});
    }
    return out;
  }

  std::vector<SeriesPoint> max_points() const {
    std::vector<SeriesPoint> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.push_back({static_cast<double>(xs[i]), max_delta(i)});
    }
    return out;
  }
};

inline std::size_t minimum_corpus_units(std::size_t increment) { return 2 * increment; }

inline ConvergenceSeries delta_series(std::span<const PhonemeToken> tokens,
                                      std::size_t increment = kDefaultIncrement,
                                      CountingMode scheme = CountingMode::kTokenWise) {
  if (increment == 0) throw InputError("increment must be positive");
  const std::size_t total_units = expanded_size(tokens);
  if (total_units < minimum_corpus_units(increment)) {
    throw DataError("corpus too short: " + std::to_string(total_units) +
                    " expanded phonemes, need at least " +
                    std::to_string(minimum_corpus_units(increment)) +
                    " for increments of " + std::to_string(increment));
  }
  const std::size_t steps = total_units / increment;
  const auto keys = categories(scheme);

  std::vector<std::uint64_t> counts(keys.size(), 0);
  std::uint64_t denom = 0;
  std::vector<std::vector<double>> snapshots;  // index k-1 for prefix k
  const auto snapshot = [&] {
    std::vector<double> f(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
      f[c] = static_cast<double>(counts[c]) / static_cast<double>(denom);
    }
    snapshots.push_back(std::move(f));
  };

  std::size_t pos = 0;
  std::size_t k = 1;
  for (const auto& tok : tokens) {
    while (k <= steps && pos >= k * increment) {
      snapshot();
      ++k;
    }
    if (k > steps) break;
    if (scheme == CountingMode::kExpanded) {
      counts[index_of(tok.phoneme)] += tok.units();
      denom += tok.units();
    } else {
      const auto c = category_index(scheme, {tok.phoneme, tok.geminate});
      if (!c) throw DataError("geminated " + arpabet_of(tok.phoneme) + " token");
      ++counts[*c];
      ++denom;
    }
    pos += tok.units();
  }
  for (; k <= steps; ++k) snapshot();

  ConvergenceSeries s;
  s.increment_size = increment;
  s.scheme = scheme;
  std::vector<std::size_t> tracked;
  for (std::size_t c = 0; c < keys.size(); ++c) {
    if (counts[c] > 0) {
      tracked.push_back(c);
      s.categories.push_back(keys[c]);
    }
  }
  for (std::size_t step = 2; step <= steps; ++step) {
    const auto& cur = snapshots[step - 1];
    const auto& prev = snapshots[step - 2];
    std::vector<double> d;
    d.reserve(tracked.size());
    double sum = 0.0;
    for (std::size_t c : tracked) {
      d.push_back(100.0 * std::abs(cur[c] - prev[c]));
      sum += d.back();
    }
    s.xs.push_back(step * increment);
    s.average.push_back(tracked.empty() ? 0.0 : sum / static_cast<double>(tracked.size()));
    s.deltas.push_back(std::move(d));
  }
  return s;
}

struct PowerFit {
  double a = 0.0;
  double b = 0.0;
  double r2 = 0.0;  // in log space
  std::size_t points_used = 0;
  std::size_t points_dropped = 0;  // zero deltas
  // False when more than half of the points had to be dropped.
  bool reliable = true;
};

inline PowerFit fit_power(std::span<const SeriesPoint> points) {
  std::vector<double> lx, ly;
  std::size_t dropped = 0;
  for (const auto& p : points) {
    if (!(p.x > 0)) throw DataError("power fit needs positive x values");
    if (p.y < 0) throw DataError("power fit needs nonnegative y values");
    if (p.y == 0) {
      ++dropped;
      continue;
    }
    lx.push_back(std::log(p.x));
    ly.push_back(std::log(p.y));
  }
  if (!points.empty() && lx.empty()) throw DataError("all deltas are zero");
  if (lx.size() < 2) throw DataError("power fit needs at least two positive points");

  const auto n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0)) throw DataError("power fit needs at least two distinct x values");

  PowerFit fit;
  fit.b = sxy / sxx;
  const double intercept = my - fit.b * mx;
  fit.a = std::exp(intercept);
  double ss_res = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (intercept + fit.b * lx[i]);
    ss_res += r * r;
  }
  fit.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  fit.points_used = lx.size();
  fit.points_dropped = dropped;
  fit.reliable = 2 * dropped <= points.size();
  return fit;
}

inline PowerFit fit_power(const ConvergenceSeries& s) {
  const auto pts = s.average_points();
  return fit_power(pts);
}

// a * x^b, x > 0.
inline double evaluate_fit(const PowerFit& fit, double x) {
  return fit.a * std::pow(x, fit.b);
}

// Smallest x from which every later y stays strictly below `threshold`.
inline std::optional<double> stability_point(std::span<const SeriesPoint> points,
                                             double threshold) {
  if (!(threshold > 0)) throw InputError("threshold must be positive");
  std::optional<double> found;
  for (std::size_t i = points.size(); i-- > 0;) {
    if (!(points[i].y < threshold)) break;
    found = points[i].x;
  }
  return found;
}

enum class StabilityScope { kAllCategories, kAverage };

inline std::optional<std::size_t> stability_point(const ConvergenceSeries& s,
                                                  double threshold,
                                                  StabilityScope scope) {
  const auto pts =
      scope == StabilityScope::kAverage ? s.average_points() : s.max_points();
  const auto x = stability_point(pts, threshold);
  if (!x) return std::nullopt;
  return static_cast<std::size_t>(*x);
}

}  // namespace itaphon

#endif  // ITAPHON_CONVERGENCE_H_
