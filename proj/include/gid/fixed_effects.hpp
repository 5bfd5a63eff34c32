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

// Two-way (person, firm) fixed-effects least squares on job-year rows.

#include <cstdint>
#include <span>
#include <vector>

namespace gid {

struct ComponentLabels {
  // -1 for nodes without observations. Labels are numbered by first
  // appearance scanning persons in index order.
  std::vector<int> person;
  std::vector<int> firm;
  int count = 0;
};

ComponentLabels ConnectedComponents(std::size_t n_persons, std::size_t n_firms,
                                    std::span<const std::uint32_t> person, std::span<const std::uint32_t> firm);

struct FeOptions {
  double tolerance = 1e-8;  // on the Euclidean norm of the objective gradient
  int max_iterations = 20000;
  bool demean_years = false;  // subtract weighted year means before fitting
  bool record_objective = false;
};

struct FeSolution {
  std::vector<double> theta;  // person effects, NaN for persons without rows
  std::vector<double> psi;    // firm effects, NaN for firms without rows
  ComponentLabels components;
  std::vector<double> year_effect;  // subtracted year means when demean_years
  double rss = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective;  // per iteration when recorded
};

// Minimises sum w (y - theta_person - psi_firm)^2. Within every connected
// component the firm effects satisfy sum_j psi_j n_j = 0, n_j being the
// weighted row count. `weights` and `years` may be empty.
FeSolution FitTwoWayFe(std::size_t n_persons, std::size_t n_firms, std::span<const std::uint32_t> person,
                       std::span<const std::uint32_t> firm, std::span<const double> y,
                       std::span<const double> weights = {}, std::span<const int> years = {},
                       const FeOptions& options = {});

// Row-count-weighted mean of psi over each person's rows (NaN without rows).
std::vector<double> PersonAverageFirmEffect(const FeSolution& solution, std::span<const std::uint32_t> person,
                                            std::span<const std::uint32_t> firm);

}  // namespace gid
