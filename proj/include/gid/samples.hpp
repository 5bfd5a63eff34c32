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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gid/earnings_grid.hpp"
#include "gid/panel.hpp"

namespace gid {

enum class SampleKind { kBS, kCS, kLX1, kLX5, kH1, kH5, kPA5, kPA10, kCohort12 };

std::string_view SampleKindName(SampleKind kind);
std::optional<SampleKind> ParseSampleKind(std::string_view text);
// Years ahead of t that the kind needs (0 for BS/CS).
int SampleHorizon(SampleKind kind);

struct SampleRules {
  int age_lo = 25;
  int age_hi = 55;
  int max_employers = 12;
  double winsor_quantile = 0.99999999;
};

struct CohortRules {
  int first_year = 2004;
  int last_year = 2015;
  int age_lo = 25;  // age in first_year
  int age_hi = 54;
};

bool EligibleIn(const PersonRecord& person, int year, int age_lo, int age_hi);

// Alive, SSN active, and aged within [age_lo, age_hi] in `year`.
std::vector<std::uint32_t> EligibleWorkers(const Panel& panel, int year, int age_lo, int age_hi);

// Annual real earnings y_it for the sample-1 measures. Zero when the person
// has no job rows; NaN when the year is unknown (coverage mask), the report
// was discarded for having too many employers, or the person is not alive
// with an active SSN. Values above the per-year winsorization cap are
// replaced by the cap.
struct AnnualEarningsTable {
  YearMatrix y;
  std::vector<double> floor;  // m_t by year offset
  std::vector<double> cap;    // winsorization cap by year offset (NaN when no CS rows)
  std::size_t discarded = 0;  // person-years dropped by the employer rule

  double Floor(int year) const { return floor[static_cast<std::size_t>(year - y.first_year())]; }
};

AnnualEarningsTable PrepareAnnualEarnings(const Panel& panel, const MinWageSeries& minwage, int first_year,
                                          int last_year, const SampleRules& rules);

// Per-year cap at the winsor quantile of values above the floor among
// eligible persons, and replaces larger values. Exposed for testing.
void Winsorize(const Panel& panel, AnnualEarningsTable& table, const SampleRules& rules);

struct AnalysisSample {
  SampleKind kind = SampleKind::kBS;
  int year = 0;
  std::vector<std::uint32_t> persons;  // sorted person indices
  std::string provenance;

  bool Contains(std::uint32_t person) const;
};

// `permanent_resid` (P_it) is needed for the H kinds and `p3` for the PA
// kinds; either may be null otherwise.
AnalysisSample BuildSample(const Panel& panel, const AnnualEarningsTable& earnings, SampleKind kind, int year,
                           const SampleRules& rules, const YearMatrix* permanent_resid = nullptr,
                           const YearMatrix* p3 = nullptr);

// Persons aged [age_lo, age_hi] in the first window year, SSN active, alive
// through the window, with every window year observed and at least one
// positive quarter. Uses raw (unfloored, unwinsorized) earnings.
AnalysisSample BuildCohort12(const Panel& panel, const CohortRules& rules);

}  // namespace gid
