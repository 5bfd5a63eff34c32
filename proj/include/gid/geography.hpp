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

// Demographic, geographic and industry code tables.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gid {

enum class Sex : std::uint8_t { kMale = 0, kFemale = 1 };
enum class RaceEth : std::uint8_t { kAsianNH = 0, kBlackNH, kWhiteHisp, kWhiteNH, kAllOther };
enum class Education : std::uint8_t { kLTHS = 0, kHS, kSomeCollege, kBAplus };

inline constexpr int kNumGroups = 20;
inline constexpr int kReferenceGroup = 0;
inline constexpr int kNumDivisions = 9;
inline constexpr int kNumSectors = 20;
inline constexpr int kNumEducation = 4;

// Demographic groups are the cross of nativity x sex x race/ethnicity.
// Index 0 is the reference group: native-born White Non-Hispanic males.
struct DemographicGroup {
  bool foreign_born = false;
  Sex sex = Sex::kMale;
  RaceEth race = RaceEth::kWhiteNH;
};

int GroupIndex(bool foreign_born, Sex sex, RaceEth race);
DemographicGroup GroupFromIndex(int index);

// Groups in table row order: foreign-born females,
// foreign-born males, native-born females, native-born males; races ordered
// Asian, Black, White Hispanic, White Non-Hispanic, All Other.
const std::array<int, kNumGroups>& GroupDisplayOrder();

// e.g. "Native-Born Males"
std::string GroupSection(int index);
// e.g. "Black Non-Hispanic"
std::string_view RaceLabel(RaceEth race);
// e.g. "native_male_black_nh", stable identifier used in CSV outputs.
std::string GroupKey(int index);

std::optional<Sex> ParseSex(std::string_view text);
std::optional<RaceEth> ParseRaceEth(std::string_view text);
std::optional<Education> ParseEducation(std::string_view text);
std::optional<bool> ParseBool(std::string_view text);
std::string_view SexCode(Sex sex);
std::string_view RaceEthCode(RaceEth race);
std::string_view EducationCode(Education educ);

// Census division (1-9) for a two-letter state code, or nullopt when unknown.
std::optional<int> DivisionOfState(std::string_view state);
std::string_view DivisionName(int division);
// All recognised state codes (50 states and DC), in table order.
const std::array<std::string_view, 51>& StateCodes();

// Industry sectors are the letters A-T.
bool IsSectorCode(char code);
inline int SectorIndex(char code) { return code - 'A'; }
inline char SectorCode(int index) { return static_cast<char>('A' + index); }
std::string_view SectorNaics(char code);

}  // namespace gid
