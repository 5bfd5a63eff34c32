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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gid/earnings_grid.hpp"
#include "gid/panel.hpp"
#include "gid/samples.hpp"

namespace gid {

// Three-year permanent earnings from (y_{t-2}, y_{t-1}, y_t): the mean
// including zeros, defined when at least one year exceeds m_t. NaN when any
// year is unknown or no year clears the floor.
double PermanentP3(double y_t2, double y_t1, double y_t, double floor_t);

// Residuals from a saturated dummy regression: each value minus the mean of
// its cell. The mean uses rows where `estimate` is set (all rows when empty);
// residuals are produced for every non-NaN row whose cell has a mean.
struct CellDemeanResult {
  std::vector<double> residual;
  std::vector<std::uint64_t> singleton_cells;  // cells estimated from one row
};
CellDemeanResult CellDemean(std::span<const double> values, std::span<const std::uint64_t> cells,
                            std::span<const char> estimate = {});

enum class ResidualKind { kAgeSexYear, kAgeEducSexYear, kPermanent };

struct MeasureTable {
  YearMatrix p3;     // P3_it
  YearMatrix eps;    // epsilon_it (log points)
  YearMatrix delta;  // delta_it (log points), rows with y above the floor
  YearMatrix perm;   // P_it
  YearMatrix g1;
  YearMatrix g5;
  std::size_t singleton_cells = 0;
};

// `education` holds one completed code per person (see impute).
MeasureTable ComputeMeasures(const Panel& panel, const AnnualEarningsTable& earnings,
                             std::span<const Education> education);

// g^z_it = eps_{t+z} - eps_t where y_t > m_t and y_{t+z} > m_{t+z}/3.
YearMatrix ResidualChange(const AnnualEarningsTable& earnings, const YearMatrix& eps, int z);

enum class ArcPairs {
  kEitherPositive,  // pairs with x_t + x_{t+1} > 0
  kBothPositive,
};

double ArcChange(double a, double b);

struct LongTermRules {
  CohortRules cohort;
  int period_years = 4;
  ArcPairs arc_pairs = ArcPairs::kEitherPositive;
  int max_employers = 12;
};

struct LongTermRecord {
  std::uint32_t person = 0;
  double w = 0.0;  // mean annual real earnings over the window, zeros included
  int years_full = 0;
  int years_partial = 0;
  int years_inactive = 0;
  std::vector<char> period_active;  // one flag per period
  std::vector<double> period_mean;  // mean annual earnings per period
  bool longterm_active = false;
  double growth = kMissing;
  double arc_volatility = kMissing;
  double avg_hours = kMissing;  // mean annual hours over active years
  int division = 0;
  int sector = -1;              // sector index of the dominant job
  int age_first = 0;            // age in the first window year
};

// One record per cohort member, in cohort order. `job_hours` is aligned with
// panel.jobs() (imputed where unobserved) and may be empty.
std::vector<LongTermRecord> LongTermSummaries(const Panel& panel, const AnalysisSample& cohort,
                                              const LongTermRules& rules, std::span<const double> job_hours);

// Mean of y over the window, zero years included.
double LongTermAverage(std::span<const double> annual);

}  // namespace gid
