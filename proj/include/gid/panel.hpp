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

// Canonical person / job-year data model, ingestion, deflation and coverage
// masking. A Panel is immutable once built; every transformation returns a
// new Panel.

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gid/geography.hpp"

namespace gid {

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
inline bool IsMissing(double v) { return std::isnan(v); }

struct PersonRecord {
  std::string person_id;
  Sex sex = Sex::kMale;
  RaceEth race = RaceEth::kWhiteNH;
  bool foreign_born = false;
  int birth_year = 0;
  std::optional<int> death_year;
  bool ssn_active = true;
  std::optional<Education> education;
  std::string state;
  int division = 0;

  int group() const { return GroupIndex(foreign_born, sex, race); }
  // Age is calendar year minus birth year.
  int AgeIn(int year) const { return year - birth_year; }
  // A person who dies during a year is still alive (and may earn) in it.
  bool AliveIn(int year) const { return !death_year || year <= *death_year; }
};

struct JobYearRecord {
  std::uint32_t person = 0;    // index into Panel::persons()
  std::uint32_t employer = 0;  // index into Panel::employer_ids()
  int year = 0;
  std::array<double, 4> q{};   // quarterly earnings
  char sector = 'A';
  std::uint8_t state = 0;      // index into StateCodes()
  double hours = kMissing;     // annual hours at this job, NaN when unobserved

  double Total() const { return q[0] + q[1] + q[2] + q[3]; }
  bool HasHours() const { return !std::isnan(hours); }
  std::uint8_t QuarterMask() const {
    std::uint8_t m = 0;
    for (int k = 0; k < 4; ++k) {
      if (q[k] > 0.0) m |= static_cast<std::uint8_t>(1u << k);
    }
    return m;
  }
};

struct DeflatorSeries {
  std::map<int, double> index;
  int reference_year = 0;

  // Factor that converts a nominal amount in `year` to reference-year money.
  double Factor(int year) const;
};

struct MinWageSeries {
  std::map<int, double> wage;  // federal hourly minimum wage by year

  double Wage(int year) const;
  // Annual earnings floor m_t = 260 x hourly minimum wage.
  double Floor(int year) const { return 260.0 * Wage(year); }
};

struct CoverageMask {
  std::set<std::pair<std::uint8_t, int>> cells;  // (state index, year) not reporting

  bool Masked(std::uint8_t state, int year) const { return cells.count({state, year}) > 0; }
};

std::optional<std::uint8_t> StateIndex(std::string_view code);
std::string_view StateCode(std::uint8_t index);

class Panel {
 public:
  Panel() = default;

  // Validates and canonicalises: persons sorted by id, employers sorted by
  // id, jobs sorted by (person, year, employer). Throws on duplicate keys.
  static Panel Create(std::vector<PersonRecord> persons, std::vector<std::string> employer_ids,
                      std::vector<JobYearRecord> jobs);

  const std::vector<PersonRecord>& persons() const { return persons_; }
  const std::vector<JobYearRecord>& jobs() const { return jobs_; }
  const std::vector<std::string>& employer_ids() const { return employer_ids_; }
  std::size_t num_persons() const { return persons_.size(); }
  std::size_t num_employers() const { return employer_ids_.size(); }

  std::span<const JobYearRecord> JobsOf(std::size_t person) const;
  std::span<const JobYearRecord> JobsOf(std::size_t person, int year) const;
  std::optional<std::size_t> FindPerson(std::string_view id) const;

  // Year span covered by job rows (or set explicitly).
  int first_year() const { return first_year_; }
  int last_year() const { return last_year_; }
  int num_years() const { return last_year_ - first_year_ + 1; }

  // Person-years whose earnings are unknown because of non-reporting states.
  bool IsMissingYear(std::size_t person, int year) const;

  bool is_real() const { return reference_year_.has_value(); }
  std::optional<int> reference_year() const { return reference_year_; }

  // Derived panels.
  Panel WithJobs(std::vector<JobYearRecord> jobs) const;
  Panel WithPersons(std::vector<PersonRecord> persons) const;
  // Widens the year span (never narrows below the job rows).
  Panel WithSpan(int first_year, int last_year) const;

 private:
  friend Panel Deflate(const Panel&, const DeflatorSeries&);
  friend Panel ApplyCoverageMask(const Panel&, const CoverageMask&);
  void Index();

  std::vector<PersonRecord> persons_;
  std::vector<std::string> employer_ids_;
  std::vector<JobYearRecord> jobs_;
  std::vector<std::size_t> offsets_;          // CSR offsets into jobs_ by person
  std::vector<std::pair<std::uint32_t, int>> missing_;  // sorted (person, year)
  int first_year_ = 0;
  int last_year_ = -1;
  std::optional<int> reference_year_;
};

struct PanelSources {
  std::filesystem::path persons;
  std::filesystem::path jobs;
  std::filesystem::path deflator;
  std::filesystem::path minwage;
  std::optional<std::filesystem::path> coverage_mask;
};

struct PanelInputs {
  Panel panel;
  DeflatorSeries deflator;
  MinWageSeries minwage;
  CoverageMask mask;
};

Panel LoadPanel(const std::filesystem::path& persons_csv, const std::filesystem::path& jobs_csv);
DeflatorSeries LoadDeflator(const std::filesystem::path& path, int reference_year);
MinWageSeries LoadMinWage(const std::filesystem::path& path);
CoverageMask LoadCoverageMask(const std::filesystem::path& path);

// Loads all sources and checks that deflator and minimum wage cover every
// panel year.
PanelInputs LoadPanelInputs(const PanelSources& sources, int reference_year);

void WritePersons(const Panel& panel, const std::filesystem::path& path);
void WriteJobs(const Panel& panel, const std::filesystem::path& path);
void WriteDeflator(const DeflatorSeries& deflator, const std::filesystem::path& path);
void WriteMinWage(const MinWageSeries& minwage, const std::filesystem::path& path);
void WriteCoverageMask(const CoverageMask& mask, const std::filesystem::path& path);

// Multiplies every amount by index(reference)/index(year). Zero stays zero.
Panel Deflate(const Panel& panel, const DeflatorSeries& deflator);

// Removes job rows in non-reporting (state, year) cells. A person-year left
// without jobs because of the mask becomes missing; so does a zero-earnings
// year when the person's highest-earning job is in a state masked that year.
Panel ApplyCoverageMask(const Panel& panel, const CoverageMask& mask);

// Sum of all quarterly amounts over the person's jobs in `year`; 0 when the
// person has no job rows that year.
double AnnualEarnings(const Panel& panel, std::size_t person, int year);

// Index (into panel.jobs()) of the person's highest-earnings job-year within
// [first, last], ties broken by earliest row.
std::optional<std::size_t> DominantJobRow(const Panel& panel, std::size_t person, int first,
                                          int last);

}  // namespace gid
