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

#include "scramble/model.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

std::string trimmed_lower(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// "<coef>[*]<unit>[/<den>]" with unit in {pi, eps}; returns (num, den) of pi.
std::optional<std::pair<std::int64_t, std::int64_t>> parse_symbolic(const std::string& s) {
  std::string unit;
  std::size_t at = std::string::npos;
  for (const char* u : {"pi", "eps"}) {
    at = s.find(u);
    if (at != std::string::npos) {
      unit = u;
      break;
    }
  }
  if (unit.empty()) return std::nullopt;

  std::string coef = s.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  std::int64_t num = 1;
  if (!coef.empty()) {
    auto c = parse_integer(coef);
    if (!c) return std::nullopt;
    num = *c;
  }
  std::string tail = s.substr(at + unit.size());
  std::int64_t den = 1;
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto d = parse_integer(std::string_view(tail).substr(1));
    if (!d || *d <= 0) return std::nullopt;
    den = *d;
  }
  if (unit == "eps") den *= 16;
  return std::pair{num, den};
}

}  // namespace

Period Period::pi_fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw ArgumentError("period denominator must be positive");
  const std::int64_t g = std::gcd(numerator, denominator);
  Period p;
  p.numerator_ = g == 0 ? 0 : numerator / g;
  p.denominator_ = g == 0 ? 1 : denominator / g;
  p.radians_ = std::numbers::pi * static_cast<double>(p.numerator_) / static_cast<double>(p.denominator_);
  return p;
}

Period Period::radians(double value) {
  if (!std::isfinite(value)) throw ArgumentError("period must be finite");
  if (value == 0.0) return pi_fraction(0, 1);
  Period p;
  p.numerator_ = 0;
  p.denominator_ = 0;
  p.radians_ = value;
  return p;
}

Period Period::parse(std::string_view text) {
  const std::string s = trimmed_lower(text);
  if (s.empty()) throw ArgumentError("empty period");
  if (auto frac = parse_symbolic(s)) return pi_fraction(frac->first, frac->second);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ArgumentError("cannot parse period '" + std::string(text) + "'");
  return radians(value);
}

double Period::value() const { return radians_; }

std::optional<std::pair<std::int64_t, std::int64_t>> Period::fraction() const {
  if (!exact()) return std::nullopt;
  return std::pair{numerator_, denominator_};
}

std::string Period::to_string() const {
  if (!exact()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", radians_);
    return buf;
  }
  if (numerator_ == 0) return "0";
  std::string out = numerator_ == 1 ? "" : (numerator_ == -1 ? "-" : std::to_string(numerator_));
  out += "pi";
  if (denominator_ != 1) out += "/" + std::to_string(denominator_);
  return out;
}

Period Period::complement_to_half_pi() const {
  if (!exact()) throw ArgumentError("complement needs an exact period");
  return pi_fraction(denominator_ - 2 * numerator_, 2 * denominator_);
}

bool Period::operator==(const Period& other) const {
  if (exact() && other.exact())
    return numerator_ == other.numerator_ && denominator_ == other.denominator_;
  return radians_ == other.radians_;
}

void ModelParams::validate() const {
  if (num_sites < 2) throw ArgumentError("chain length N must be at least 2");
  if (tau.value() < 0.0) throw ArgumentError("period tau must be non-negative");
  if (!std::isfinite(J) || !std::isfinite(h_x) || !std::isfinite(h_z))
    throw ArgumentError("model couplings must be finite");
}

double epsilon() { return std::numbers::pi / 16.0; }

}  // namespace scramble
