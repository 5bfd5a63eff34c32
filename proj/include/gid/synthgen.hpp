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

// Deterministic generator of administrative-style person/job-year panels with
// known ground truth.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gid/panel.hpp"

namespace gid {

struct GroupParams {
  double share = 0.05;
  double person_effect_mean = 10.2;  // log real full-year earnings
  double person_effect_sd = 0.5;
  double participation = 0.9;        // probability of being active in a year
  double persistence = 0.6;          // AR(1) coefficient of the transitory component
  double innovation_sd = 0.3;
  std::array<double, kNumEducation> education_probs = {0.1, 0.3, 0.3, 0.3};
};

struct GenConfig {
  std::uint64_t seed = 20211206;
  std::size_t n_persons = 10000;
  int first_year = 1998;
  int last_year = 2019;
  // Birth years are uniform on [birth_year_min, birth_year_max]; 0 picks a
  // range that keeps most persons of working age in the window.
  int birth_year_min = 0;
  int birth_year_max = 0;
  int work_age_min = 18;
  int work_age_max = 70;

  std::array<GroupParams, kNumGroups> groups = DefaultGroups();

  std::size_t n_firms = 2000;
  double firm_effect_sd = 0.25;
  double job_mobility = 0.12;          // yearly probability of changing main employer
  double coincident_job_prob = 0.06;   // yearly probability of a second, smaller job
  double coincident_job_scale = 0.3;
  double partial_quarter_prob = 1.0;   // spell entry/exit years start/end mid-year with this probability
  double innovation_gradient = 0.0;    // innovation sd multiplied by exp(-g (alpha - group mean))
  std::array<double, kNumEducation> education_returns = {-0.25, 0.0, 0.12, 0.40};
  double education_missing = 0.8;
  double ssn_inactive_rate = 0.005;
  double shared_ssn_rate = 0.0005;     // person-years reported by more than 12 employers
  double death_hazard_base = 0.0015;   // yearly hazard at age 40
  double death_hazard_growth = 0.085;  // log hazard slope per year of age

  double hours_intercept = 2.45;  // log hours = a + b log(job earnings) + noise
  double hours_slope = 0.5;
  double hours_noise_sd = 0.15;
  std::vector<std::string> hours_states = {"WA", "OR", "RI", "MN"};

  int deflator_base_year = 2012;
  double inflation = 0.02;
  int real_reference_year = 2018;  // generated log earnings are in this year's money
  std::vector<std::pair<std::string, int>> masked_cells;

  static std::array<GroupParams, kNumGroups> DefaultGroups();
  // Throws kInvalidConfig naming the offending field.
  void Validate() const;
};

struct GroundTruth {
  std::vector<double> person_effect;          // per person, panel order
  std::vector<double> firm_effect;            // per employer, panel order
  std::array<double, kNumGroups> group_gap{}; // mean person effect minus reference mean
  std::vector<double> job_hours;              // true hours per job row, panel order
  std::vector<Education> education;           // true education per person
};

struct GeneratedPanel {
  Panel panel;  // nominal amounts
  DeflatorSeries deflator;
  MinWageSeries minwage;
  CoverageMask mask;
  GroundTruth truth;
};

GeneratedPanel GeneratePopulation(const GenConfig& config);

// Federal hourly minimum wage by calendar year (1990 onward).
double FederalMinimumWage(int year);

// persons.csv, jobs.csv, deflator.csv, minwage.csv, coverage_mask.csv and
// ground_truth.csv into `dir`.
void WriteGenerated(const GeneratedPanel& gen, const std::filesystem::path& dir);

}  // namespace gid
