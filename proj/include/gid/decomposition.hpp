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

// Machado-Mata counterfactual simulation and quantile gap decompositions.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gid/quantile_regression.hpp"

namespace gid {

inline constexpr std::array<int, 5> kDecompositionThetas = {10, 25, 50, 75, 90};

// For each row of x_source: draw u keyed by (seed, source_group, key), set
// theta = clamp(ceil(99 u), 1, 99) and emit x' beta_theta. `fit` must hold
// the 99 percentile fits.
std::vector<double> SimulateMM(const QuantileGrid& fit, const Eigen::MatrixXd& x_source,
                               std::span<const std::uint32_t> keys, std::uint64_t seed, int source_group);

// Per-row direct predictions at all 99 percentiles, pooled.
std::vector<double> PooledPredictions(const QuantileGrid& fit, const Eigen::MatrixXd& x);

struct GroupSample {
  int group = 0;
  Eigen::MatrixXd x;  // quantile design
  Eigen::VectorXd log_w;
  std::vector<std::uint32_t> keys;  // person indices
  QuantileGrid fit;
};

struct DecompositionRow {
  int group = 0;
  int theta = 0;
  double actual = 0.0;
  double q_gg = 0.0;  // f*(beta(g); x(g))
  double q_00 = 0.0;  // f*(beta(0); x(0))
  double q_0g = 0.0;  // f*(beta(0); x(g))
  double q_g0 = 0.0;  // f*(beta(g); x(0))
  double predicted = 0.0;
  double residual = 0.0;
  double covariates1 = 0.0, coefficients1 = 0.0;
  double covariates2 = 0.0, coefficients2 = 0.0;
  // NaN when |predicted| is below the blank threshold.
  double share_cov1 = 0.0, share_coef1 = 0.0, share_cov2 = 0.0, share_coef2 = 0.0;
  double ratio_ref_characteristics = 1.0;  // exp(q_g0) / exp(q_00)
  double ratio_ref_coefficients = 1.0;     // exp(q_0g) / exp(q_00)
};

inline constexpr double kShareBlankThreshold = 1e-6;

// Decomposes the gap between `g` and `ref` at each theta (percent). Both
// orderings are filled; counterfactual draws use common random numbers keyed
// by the covariate-source group.
std::vector<DecompositionRow> DecomposeGap(const GroupSample& g, const GroupSample& ref,
                                           std::span<const int> thetas, std::uint64_t seed);

// x-bar' beta_theta across the grid and its sorted (rearranged) version.
struct RearrangementDiagnostic {
  std::vector<double> raw;
  std::vector<double> rearranged;
  int crossings = 0;  // adjacent decreases in raw
};
RearrangementDiagnostic Rearrangement(const QuantileGrid& fit, const Eigen::MatrixXd& x);

}  // namespace gid
