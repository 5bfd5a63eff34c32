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

#include <cstdint>
#include <vector>

#include "gid/panel.hpp"

namespace gid {

// Dense person x year view of annual totals, built once per panel so that the
// multi-year measures never rescan job rows.
struct GridCell {
  double total = 0.0;           // sum over jobs and quarters
  std::uint16_t employers = 0;  // distinct employers with a row this year
  std::uint8_t quarters = 0;    // bit k set when any job paid in quarter k
  bool missing = false;         // unknown because of coverage masking
};

class EarningsGrid {
 public:
  EarningsGrid() = default;
  EarningsGrid(const Panel& panel, int first_year, int last_year);

  int first_year() const { return first_year_; }
  int last_year() const { return last_year_; }
  int num_years() const { return last_year_ - first_year_ + 1; }
  std::size_t num_persons() const { return num_persons_; }
  bool Covers(int year) const { return year >= first_year_ && year <= last_year_; }

  const GridCell& At(std::size_t person, int year) const {
    return cells_[person * static_cast<std::size_t>(num_years()) +
                  static_cast<std::size_t>(year - first_year_)];
  }
  GridCell& At(std::size_t person, int year) {
    return cells_[person * static_cast<std::size_t>(num_years()) +
                  static_cast<std::size_t>(year - first_year_)];
  }

  // Annual total, NaN when the year is outside the grid or missing.
  double Total(std::size_t person, int year) const {
    if (!Covers(year)) return kMissing;
    const auto& c = At(person, year);
    return c.missing ? kMissing : c.total;
  }

 private:
  int first_year_ = 0;
  int last_year_ = -1;
  std::size_t num_persons_ = 0;
  std::vector<GridCell> cells_;
};

// Person x year matrix of doubles; NaN marks a missing value and reads
// outside the year range return NaN.
class YearMatrix {
 public:
  YearMatrix() = default;
  YearMatrix(std::size_t num_persons, int first_year, int last_year, double fill = kMissing)
      : first_year_(first_year),
        last_year_(last_year),
        num_persons_(num_persons),
        values_(num_persons * static_cast<std::size_t>(last_year - first_year + 1), fill) {}

  int first_year() const { return first_year_; }
  int last_year() const { return last_year_; }
  int num_years() const { return last_year_ - first_year_ + 1; }
  std::size_t num_persons() const { return num_persons_; }
  bool Covers(int year) const { return year >= first_year_ && year <= last_year_; }

  double operator()(std::size_t person, int year) const {
    if (!Covers(year)) return kMissing;
    return values_[person * static_cast<std::size_t>(num_years()) +
                   static_cast<std::size_t>(year - first_year_)];
  }
  double& At(std::size_t person, int year) {
    return values_[person * static_cast<std::size_t>(num_years()) +
                   static_cast<std::size_t>(year - first_year_)];
  }

 private:
  int first_year_ = 0;
  int last_year_ = -1;
  std::size_t num_persons_ = 0;
  std::vector<double> values_;
};

}  // namespace gid
