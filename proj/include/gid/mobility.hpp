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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace gid {

// Percentile ranks in (0, 100]: the i-th smallest of n gets 100 i / n, and
// tied values share the mean of their positions' ranks.
std::vector<double> RankPercentiles(std::span<const double> values);

// Ranks computed separately within each cell label.
std::vector<double> RankWithinCells(std::span<const double> values, std::span<const std::int64_t> cells);

struct MobilityProfile {
  std::array<double, 100> mean_rank{};  // mean rank at t+z by integer base rank ceil(rank_t)
  std::array<std::size_t, 100> count{};
};

MobilityProfile BuildMobilityProfile(std::span<const double> rank_t, std::span<const double> rank_tz);

// OLS slope of rank_tz on rank_t. Throws when rank_t has no variance.
double RankRankSlope(std::span<const double> rank_t, std::span<const double> rank_tz);

}  // namespace gid
