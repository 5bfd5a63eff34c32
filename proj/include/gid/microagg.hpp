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

#include <cstddef>
#include <span>
#include <vector>

namespace gid {

struct BinCell {
  int year = 0;
  int sex = 0;
  int birth_year = 0;

  auto operator<=>(const BinCell&) const = default;
};

struct BinAudit {
  BinCell cell;
  int bin = 0;  // 1-based within the cell
  std::size_t size = 0;
  double mean = 0.0;
  bool small_cell = false;  // the whole cell had fewer than min_bin_size records
};

struct MicroaggResult {
  std::vector<double> values;  // binned values, input order; NaN inputs stay NaN
  std::vector<BinAudit> bins;  // ordered by cell then bin
};

// Within each (year, sex, birth-year) cell, sorts by value (ties by input
// position), cuts consecutive bins of `min_bin_size` with the remainder
// merged into the last bin, and replaces each value by its bin mean.
MicroaggResult Microaggregate(std::span<const double> values, std::span<const BinCell> cells,
                              std::size_t min_bin_size = 10);

}  // namespace gid
