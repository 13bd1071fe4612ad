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

#include "scramble/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace scramble {

std::optional<std::size_t> CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  return std::nullopt;
}

std::string format_float(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_float(const std::string& text, std::size_t row) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw MalformedCsvError(row, "not a number: '" + text + "'");
  return v;
}

namespace {

bool needs_quotes(const std::string& field) {
  return field.find_first_of(",\"\n\r") != std::string::npos;
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    const auto& f = row[i];
    if (!needs_quotes(f)) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& table) {
  write_row(out, table.header);
  for (const auto& row : table.rows) write_row(out, row);
}

CsvTable read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  bool any = false;
  std::size_t row = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    after_quote = false;
  };
  auto end_record = [&] {
    end_field();
    if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
    record.clear();
    ++row;
  };

  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c != '"') {
        field += c;
        continue;
      }
      if (in.peek() == '"') {
        in.get(c);
        field += '"';
      } else {
        quoted = false;
        after_quote = true;
      }
      continue;
    }
    if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_record();
    } else if (c == '\r') {
      if (in.peek() != '\n') throw MalformedCsvError(row, "stray carriage return");
    } else if (c == '"') {
      if (!field.empty() || after_quote) throw MalformedCsvError(row, "quote inside unquoted field");
      quoted = true;
    } else {
      if (after_quote) throw MalformedCsvError(row, "text after closing quote");
      field += c;
    }
  }
  if (quoted) throw MalformedCsvError(row, "unterminated quoted field");
  if (any && (!field.empty() || !record.empty() || after_quote)) end_record();

  if (records.empty()) throw MalformedCsvError(1, "missing header");
  CsvTable table;
  table.header = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != table.header.size())
      throw MalformedCsvError(i + 1, "expected " + std::to_string(table.header.size()) +
                                         " fields, found " + std::to_string(records[i].size()));
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

const std::vector<std::string>& series_header() {
  static const std::vector<std::string> h{"time", "i3", "s_x", "s_y", "s_z",
                                          "s_xyz", "s_xy", "s_yz", "s_zx"};
  return h;
}

const std::vector<std::string>& summary_header() {
  static const std::vector<std::string> h{"model", "N", "ell", "tau_num", "tau_den", "init",
                                          "i3_avg", "fit_b", "fit_window_start",
                                          "fit_window_end", "hx", "status"};
  return h;
}

CsvTable series_table(const TmiSeries& series) {
  CsvTable t;
  t.header = series_header();
  t.rows.reserve(series.samples.size());
  for (const auto& s : series.samples) {
    const auto& e = s.entropies;
    t.rows.push_back({format_float(s.time), format_float(s.i3), format_float(e.s_x),
                      format_float(e.s_y), format_float(e.s_z), format_float(e.s_xyz),
                      format_float(e.s_xy), format_float(e.s_yz), format_float(e.s_zx)});
  }
  return t;
}

CsvTable summary_table(const SweepResult& result) {
  CsvTable t;
  t.header = summary_header();
  for (const auto& r : result.records) {
    std::string num, den;
    if (auto f = r.key.tau.fraction()) {
      num = std::to_string(f->first);
      den = std::to_string(f->second);
    } else {
      num = format_float(r.key.tau.value() / std::numbers::pi);
      den = "1";
    }
    std::vector<std::string> row{std::string(to_string(r.key.model)), std::to_string(r.key.num_sites),
                                 std::to_string(r.key.ell), num, den,
                                 std::string(to_string(r.key.init))};
    if (r.ok()) {
      row.push_back(format_float(r.i3_avg));
      if (r.fit) {
        row.push_back(format_float(r.fit->exponent));
        auto window_time = [&](std::size_t k) {
          return r.series && k < r.series->samples.size() ? r.series->samples[k].time
                                                           : static_cast<double>(k);
        };
        row.push_back(format_float(window_time(r.fit->window_start)));
        row.push_back(format_float(window_time(r.fit->window_end)));
      } else {
        row.insert(row.end(), 3, std::string());
      }
    } else {
      row.insert(row.end(), 4, std::string());
    }
    row.push_back(format_float(r.key.h_x));
    if (!r.ok())
      row.push_back("error: " + r.error);
    else if (!r.fit && !r.fit_error.empty())
      row.push_back("nofit: " + r.fit_error);
    else
      row.push_back("ok");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<TmiSample> parse_series_table(const CsvTable& table) {
  std::vector<std::size_t> idx;
  for (const auto& name : series_header()) {
    auto c = table.column(name);
    if (!c) throw MalformedCsvError(1, "missing column '" + name + "'");
    idx.push_back(*c);
  }
  std::vector<TmiSample> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t lineno = r + 2;
    auto get = [&](std::size_t k) { return parse_float(row[idx[k]], lineno); };
    TmiSample s;
    s.time = get(0);
    s.i3 = get(1);
    s.entropies = EntropySet{get(2), get(3), get(4), get(5), get(6), get(7), get(8)};
    out.push_back(s);
  }
  return out;
}

}  // namespace scramble
