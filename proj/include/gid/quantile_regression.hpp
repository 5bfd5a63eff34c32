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

// Linear quantile regression: minimises sum_i rho_tau(y_i - x_i' beta) with
// rho_tau(r) = r (tau - 1{r < 0}).

#include <vector>

#include <Eigen/Dense>

namespace gid {

double Pinball(double r, double tau);
double PinballObjective(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& beta,
                        double tau);

struct QuantileOptions {
  double gap_tolerance = 1e-10;  // relative duality gap of the interior-point phase
  int max_ipm_iterations = 200;
  bool polish = true;            // finish at an exact vertex by simplex descent
  int max_pivots = 0;            // 0 = 20 n + 200
};

struct QuantileFitResult {
  Eigen::VectorXd beta;          // full length; dropped columns hold 0
  std::vector<int> dropped;
  double objective = 0.0;
  int ipm_iterations = 0;
  int pivots = 0;
  bool converged = false;
  std::vector<int> basis;        // rows interpolated exactly (after polish)
};

QuantileFitResult FitQuantile(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double tau,
                              const QuantileOptions& options = {});

struct QuantileGrid {
  std::vector<double> taus;
  std::vector<Eigen::VectorXd> beta;  // one per tau
  std::vector<char> converged;
  std::vector<double> objective;
  std::vector<int> dropped;
};

// Independent fits at every tau sharing one column screening.
QuantileGrid FitQuantileGrid(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const std::vector<double>& taus,
                             const QuantileOptions& options = {});

// 0.01, 0.02, ..., 0.99
std::vector<double> PercentileTaus();

}  // namespace gid
