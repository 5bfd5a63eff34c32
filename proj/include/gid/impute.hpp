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

// Single imputation of unobserved job hours and person education.

#include <cstdint>
#include <string>
#include <vector>

#include "gid/panel.hpp"

namespace gid {

struct ImputeAudit {
  std::string kind;  // "hours" or "education"
  std::string cell;
  std::size_t n_observed = 0;
  std::size_t n_imputed = 0;
  bool fallback = false;  // pooled model (hours) or merged cell (education)
};

struct HoursImputeOptions {
  // Observed rows a stratum needs beyond its column count for its own fit.
  std::size_t min_extra_rows = 10;
};

struct HoursImputation {
  std::vector<double> hours;  // aligned with panel.jobs(); observed values kept
  std::vector<ImputeAudit> audit;
};

// Per stratum (quarterly pattern x dominant/coincident x sex) least squares
// of log hours on a log-earnings quartic, an age quartic, race and nativity
// indicators, sector indicators and log other-jobs earnings; missing rows get
// exp(prediction). Strata without enough observed rows use the pooled fit.
HoursImputation ImputeHours(const Panel& panel, const HoursImputeOptions& options = {});

struct EducationImputeOptions {
  std::uint64_t seed = 1;
  std::size_t min_cell_size = 30;  // observed persons required in a cell
};

struct EducationImputation {
  std::vector<Education> education;  // per person
  std::vector<char> imputed;
  std::vector<ImputeAudit> audit;
};

// Cells key on sex, nativity, birth decade, race/ethnicity, earnings
// quartile and modal industry. Keys are dropped from the right (industry,
// quartile, birth decade, race, nativity, sex) until the cell holds
// min_cell_size observed persons. Missing values are drawn from the cell's
// observed distribution.
EducationImputation ImputeEducation(const Panel& panel, const EducationImputeOptions& options = {});

}  // namespace gid
