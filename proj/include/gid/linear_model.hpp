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

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gid {

// Columns kept by greedy left-to-right selection: a column is dropped when
// it is (numerically) a linear combination of the columns kept before it.
std::vector<int> IndependentColumns(const Eigen::MatrixXd& x, double tolerance = 1e-10);

struct OlsResult {
  Eigen::VectorXd beta;        // full length; dropped columns hold 0
  std::vector<int> dropped;    // indices of dropped columns
  double rss = 0.0;
  double tss = 0.0;
  double r2 = 0.0;
};

OlsResult FitOls(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

}  // namespace gid
