// Copyright 2026 The GID Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#pragma once

// Distribution statistics on plain value vectors. Every percentile in the
// engine goes through Quantile(), the nearest-rank-lower estimator.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gid {

// Nearest-rank index (1-based) of percentile fraction p on n sorted values:
// k = ceil(p n), clamped to [1, n].
std::size_t NearestRank(double p, std::size_t n);

// q(p) = x_(k) on already sorted input. p is a fraction in [0, 1].
double QuantileSorted(std::span<const double> sorted, double p);

// Sorts a copy and evaluates every fraction in `ps`.
std::vector<double> Quantiles(std::vector<double> values, std::span<const double> ps);

double KelleySkewness(double p10, double p50, double p90);
double CrowSiddiquiKurtosis(double p2_5, double p25, double p75, double p97_5);

// Gini via sum (2i - n - 1) x_(i) / (n^2 mean) on sorted input.
double GiniSorted(std::span<const double> sorted);

// Share of the total held by the top `fraction` of observations (by rank).
double TopShareSorted(std::span<const double> sorted, double fraction);
double BottomShareSorted(std::span<const double> sorted, double fraction);

struct DistributionSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  std::vector<double> percentiles;  // fractions requested
  std::vector<double> values;       // q(p) per requested fraction
  double p90_p10 = 0.0;
  double sd_2_56 = 0.0;  // 2.56 sigma, the normal-equivalent of p90-p10
  double kelley = 0.0;
  double cs_kurtosis = 0.0;
  double gini = 0.0;
  std::vector<double> top_fractions;
  std::vector<double> top_shares;
};

DistributionSummary Summarize(std::vector<double> values, std::span<const double> percentiles = {},
                              std::span<const double> top_fractions = {});

struct PercentileDeltaRow {
  int year = 0;
  std::size_t n = 0;
  std::vector<double> values;  // q(p) per requested fraction
  std::vector<double> change;  // q(p) minus its base-year value
};

// Percentiles per year and their change since base_year. Years without data
// are skipped; a base year without data is an error.
std::vector<PercentileDeltaRow> PercentileDeltaSeries(const std::map<int, std::vector<double>>& by_year,
                                                      int base_year, std::span<const double> percentiles);

// Equal-count bins over keys: returns a bin id in [0, bins) per observation.
// Ties are split by input position so bin sizes differ by at most one.
std::vector<int> EqualCountBins(std::span<const double> keys, int bins);

enum class BinStat { kP90P10, kKelley, kCsKurtosis };
double ComputeBinStat(std::vector<double> values, BinStat stat);

struct BinnedProfileRow {
  int bin = 0;     // 1-based
  int cls = 0;     // class label passed in
  std::size_t n = 0;
  double key_mean = 0.0;
  double value = 0.0;
};

// Assigns observations to equal-count bins of `keys` (pooled over classes),
// then evaluates `stat` of `values` within every bin x class.
std::vector<BinnedProfileRow> BinnedProfile(std::span<const double> keys,
                                            std::span<const double> values,
                                            std::span<const int> classes, int bins, BinStat stat);

struct ParetoFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t tail_points = 0;
  // Slopes over the upper and lower halves of the tail disagree by more than
  // 10 percent, as for a non-Pareto tail.
  bool unstable = false;
  double slope_upper = 0.0;
  double slope_lower = 0.0;
};

// OLS of log(1 - F) on log(x) over the top `top_fraction` of positive values,
// after dropping the top `exclude_fraction`.
ParetoFit FitParetoTail(std::vector<double> values, double top_fraction, double exclude_fraction = 0.0);

// Fixed-width histogram density over [lo, hi); values outside are clamped to
// the edge bins.
std::vector<double> HistogramDensity(std::span<const double> values, double lo, double hi, int bins);

struct WindowCategoryShare {
  int category = 0;
  double share = 0.0;
};

struct WindowRow {
  int percentile = 0;
  double quantile = 0.0;  // q(p) of the sort key
  std::size_t n = 0;      // persons in the window
  std::vector<double> means;  // per numeric column, NaN entries skipped
  std::vector<std::vector<WindowCategoryShare>> top;  // per categorical column
};

struct WindowSpec {
  std::vector<int> percentiles;
  std::vector<std::span<const double>> numeric;
  std::vector<std::span<const int>> categorical;  // negative = missing
  std::vector<int> top_k;                         // how many categories to report per column
};

// For each p: q(p) of `key`, plus column summaries over persons ranked
// strictly between the nearest ranks of p-1 and p+1. Ties in `key` are broken
// by input position.
std::vector<WindowRow> PercentileWindows(std::span<const double> key, const WindowSpec& spec);

}  // namespace gid
