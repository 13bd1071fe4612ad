// Copyright 2026 The Scramble Authors
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

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scramble/experiments.hpp"
#include "scramble/series.hpp"

namespace scramble {

/// Parse failure; `row()` is 1-based and counts the header as row 1.
class MalformedCsvError : public std::runtime_error {
 public:
  MalformedCsvError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name, nullopt when absent.
  std::optional<std::size_t> column(const std::string& name) const;
};

/// %.12g; negative zero is written as 0.
std::string format_float(double v);
double parse_float(const std::string& text, std::size_t row);

/// Fields containing a comma, quote or newline are quoted, quotes doubled.
void write_csv(std::ostream& out, const CsvTable& table);
/// Requires a header and a constant column count; LF or CRLF line ends.
CsvTable read_csv(std::istream& in);

const std::vector<std::string>& series_header();
const std::vector<std::string>& summary_header();

CsvTable series_table(const TmiSeries& series);
/// One row per record. Failed records keep their key, leave the numeric
/// columns empty and carry the error in `status`.
CsvTable summary_table(const SweepResult& result);

/// Inverse of series_table for the time/i3/entropy columns.
std::vector<TmiSample> parse_series_table(const CsvTable& table);

}  // namespace scramble
