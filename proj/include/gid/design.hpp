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

// Person-level design rows for the long-term earnings regressions.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gid {

struct CohortRecord {
  std::uint32_t person = 0;
  int group = 0;
  double w = 0.0;
  double log_w = 0.0;
  double hours = 0.0;        // average annual hours
  int years_inactive = 0;
  int years_partial = 0;
  int division = 1;          // 1..9
  int sector = 0;            // 0..19
  int age = 0;               // age in the first window year
  int education = 1;         // 0..3 (completed)
  double theta = 0.0;        // person effect
  double psi_bar = 0.0;      // average firm effect
};

inline constexpr int kNumModels = 5;

struct DesignMatrix {
  Eigen::MatrixXd x;
  std::vector<std::string> names;
};

// Cumulative covariate blocks: model 1 none; 2 adds the hours quartic (in
// thousands of hours), years inactive and years partially active; 3 adds
// division and industry indicators; 4 adds initial age and education
// indicators; 5 adds the person effect and average firm effect. An
// intercept always leads; group indicators (reference omitted) follow it
// when requested.
DesignMatrix BuildDesign(std::span<const CohortRecord> rows, int model, bool group_dummies);

// Model-4 covariates with intercept, no group indicators.
inline DesignMatrix QuantileDesign(std::span<const CohortRecord> rows) { return BuildDesign(rows, 4, false); }

}  // namespace gid
