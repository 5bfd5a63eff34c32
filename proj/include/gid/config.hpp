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

// Run configuration: a JSON document (schema in docs/config.md). Relative
// paths resolve against the directory holding the config file.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gid/fixed_effects.hpp"
#include "gid/measures.hpp"
#include "gid/samples.hpp"
#include "gid/synthgen.hpp"

namespace gid {

inline constexpr const char* kStageNames[] = {"gen",        "impute",   "samples",   "measures", "akm",
                                              "indicators", "mobility", "decompose", "microagg", "report"};
inline constexpr int kNumStages = 10;

struct InputPaths {
  std::filesystem::path persons;
  std::filesystem::path jobs;
  std::filesystem::path deflator;
  std::filesystem::path minwage;
  std::optional<std::filesystem::path> coverage_mask;
};

struct MicroaggConfig {
  std::size_t min_bin_size = 10;
  std::vector<std::string> measures_variables = {"y", "p3"};
  std::vector<std::string> longterm_variables = {"w"};
  // Standalone use: bin an arbitrary CSV into a file of the output directory.
  std::optional<std::filesystem::path> input;
  std::optional<std::string> output;
  std::vector<std::string> variables;
  std::string year_column = "year";
  std::string sex_column = "sex";
  std::string birth_year_column = "birth_year";
};

struct RunConfig {
  std::filesystem::path output_dir;
  bool generate = false;
  GenConfig gen;
  InputPaths inputs;

  int indicators_first = 1998;
  int indicators_last = 2019;
  CohortRules cohort;
  int reference_year_sample1 = 2018;
  int reference_year_sample2 = 2010;

  std::uint64_t impute_seed = 7;
  std::uint64_t simulation_seed = 11;

  SampleRules samples;
  std::size_t education_min_cell = 30;
  ArcPairs arc_pairs = ArcPairs::kEitherPositive;

  std::vector<int> percentiles = {10, 25, 50, 75, 90};
  std::vector<int> fig1_percentiles = {5, 10, 25, 50, 75, 90, 95, 99};
  int volatility_bins = 41;
  int volatility_first = 2001;
  int volatility_last = 2014;
  std::vector<int> fig4_cohorts = {1998, 2000, 2005, 2009};
  int density_year = 2010;
  std::vector<int> mobility_base_years = {2000, 2003, 2006, 2009};

  FeOptions akm;
  std::size_t decompose_min_group = 500;
  MicroaggConfig microagg;

  std::array<bool, kNumStages> stages{};

  // Normalised JSON of the effective configuration, used for hashing.
  std::string canonical;
};

RunConfig ParseRunConfig(const std::string& json_text, const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

int StageIndex(std::string_view name);

}  // namespace gid
