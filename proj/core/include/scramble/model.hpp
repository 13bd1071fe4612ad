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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace scramble {

/// Floquet period. Symbolic inputs are kept as an exact rational multiple of pi
/// so that e.g. pi/4 is represented without decimal truncation.
class Period {
 public:
  constexpr Period() = default;

  /// (numerator / denominator) * pi, reduced to lowest terms.
  static Period pi_fraction(std::int64_t numerator, std::int64_t denominator);
  static Period radians(double value);
  /// k * eps/2 with eps = pi/16, i.e. k*pi/32.
  static Period half_epsilon_multiple(std::int64_t k) { return pi_fraction(k, 32); }

  /// Accepts "pi/4", "3pi/16", "3*pi/16", "pi", "eps", "eps/2", "6*eps/2",
  /// "6eps/2", plain integers (as radians) and decimal floats.
  static Period parse(std::string_view text);

  double value() const;
  bool exact() const { return denominator_ != 0; }
  /// Numerator/denominator of the pi multiple; nullopt for raw radians.
  std::optional<std::pair<std::int64_t, std::int64_t>> fraction() const;

  /// "pi/4", "3pi/32", "0" or a %.12g decimal.
  std::string to_string() const;

  /// Exact complement pi/2 - tau; only for exact periods.
  Period complement_to_half_pi() const;

  bool operator==(const Period& other) const;
  auto operator<=>(const Period& other) const { return value() <=> other.value(); }

 private:
  std::int64_t numerator_ = 0;
  std::int64_t denominator_ = 1;  // 0 marks a raw radian value
  double radians_ = 0.0;
};

/// Periodic Ising chain parameters shared by the kicked and continuous models.
struct ModelParams {
  double J = 1.0;
  double h_x = 0.0;
  double h_z = 1.0;
  Period tau;
  int num_sites = 2;

  bool integrable() const { return h_x == 0.0; }

  /// ArgumentError unless N >= 2 and tau >= 0.
  void validate() const;
};

/// Granularity of the period axis for J = 1.
double epsilon();

}  // namespace scramble
