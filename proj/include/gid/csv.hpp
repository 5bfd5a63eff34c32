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

// Minimal delimited-text reader and writer used for every file the engine
// consumes or emits. Fields never contain commas or quotes, so no quoting.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace gid {

class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& path);

  const std::vector<std::string>& header() const { return header_; }
  const std::string& source() const { return source_; }

  // Index of a required column; throws a schema error naming the file.
  std::size_t Column(std::string_view name) const;
  std::optional<std::size_t> FindColumn(std::string_view name) const;

  // Advances to the next data row. Blank lines are skipped.
  bool Next();

  std::string_view Field(std::size_t col) const { return fields_[col]; }
  std::size_t line() const { return line_; }

  double Double(std::size_t col) const;
  std::optional<double> OptionalDouble(std::size_t col) const;
  std::int64_t Int(std::size_t col) const;
  std::optional<std::int64_t> OptionalInt(std::size_t col) const;

  [[noreturn]] void SchemaError(std::size_t col, std::string_view what) const;

 private:
  void Split(std::string_view row);

  std::string source_;
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::vector<std::string> header_;
  std::vector<std::string_view> fields_;
};

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  // Appends one field; the row is terminated by EndRow.
  CsvWriter& Add(std::string_view value);
  CsvWriter& Add(double value);
  CsvWriter& Add(std::int64_t value);
  CsvWriter& Add(int value) { return Add(static_cast<std::int64_t>(value)); }
  CsvWriter& Add(std::size_t value) { return Add(static_cast<std::int64_t>(value)); }
  CsvWriter& Add(const std::optional<double>& value);
  CsvWriter& AddFixed(double value, int decimals);
  void EndRow();

  std::size_t rows() const { return rows_; }
  void Close();

 private:
  void Separator();

  std::filesystem::path path_;
  fmt::memory_buffer buffer_;
  std::FILE* file_ = nullptr;
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
  std::size_t rows_ = 0;
};

// Shortest round-trip text for a double; NaN and infinities become "".
std::string FormatNumber(double value);

// Splits "a,b,c" into trimmed tokens.
std::vector<std::string> SplitList(std::string_view text, char sep = ',');

}  // namespace gid
