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

#include <string_view>
#include <vector>

#include "scramble/entropy.hpp"
#include "scramble/state_vector.hpp"

namespace scramble {

enum class InitialStateKind { AllUp, Neel };

std::string_view to_string(InitialStateKind kind);
/// "allup" / "all-up" / "neel"; ArgumentError otherwise.
InitialStateKind parse_initial_state(std::string_view text);

/// X = {0}, Y = {1..ell}, Z = {ell+1..N-1}, W = {N} on a periodic N-site chain.
class Partition {
 public:
  /// ArgumentError unless 1 <= ell <= N-2.
  Partition(int num_sites, int ell);

  int num_sites() const { return num_sites_; }
  int ell() const { return ell_; }

  SubsetMask x() const { return SubsetMask::of({0}); }
  SubsetMask y() const { return SubsetMask::range(1, ell_ + 1); }
  SubsetMask z() const { return SubsetMask::range(ell_ + 1, num_sites_); }
  SubsetMask w() const { return SubsetMask::of({num_sites_}); }

  bool operator==(const Partition&) const = default;

 private:
  int num_sites_;
  int ell_;
};

/// Product state |psi>_XYZ tensored with (|up> + |down>)_W / sqrt 2, no CNOT.
/// Neel starts with up at site 0.
StateVector prepare_product_state(InitialStateKind kind, int num_sites);

/// prepare_product_state followed by CNOT(control = W, target = X = site 0).
StateVector prepare_encoded_state(InitialStateKind kind, int num_sites);

/// The seven entropies entering the tripartite information, in bits.
struct EntropySet {
  double s_x = 0.0;
  double s_y = 0.0;
  double s_z = 0.0;
  double s_xyz = 0.0;
  double s_xy = 0.0;
  double s_yz = 0.0;
  double s_zx = 0.0;

  /// S_X + S_Y + S_Z - S_XY - S_YZ - S_ZX + S_XYZ.
  double expanded_tmi() const;
  /// I2(X:Y) + I2(X:Z) - I2(X:YZ).
  double mutual_information_tmi() const;
};

/// S_A + S_B - S_AB. ArgumentError when A and B overlap.
double bipartite_mi(const StateVector& state, SubsetMask a, SubsetMask b,
                    EntropyMethod method = EntropyMethod::Schmidt);

/// I3(A:B:C) for arbitrary disjoint masks. Both the mutual-information form
/// and the seven-entropy expansion are evaluated; NumericalError if they
/// disagree by more than 1e-9.
double tripartite_mi(const StateVector& state, SubsetMask a, SubsetMask b, SubsetMask c,
                     EntropyMethod method = EntropyMethod::Schmidt);

double tripartite_mi(const StateVector& state, const Partition& part,
                     EntropyMethod method = EntropyMethod::Schmidt);

/// Evaluates the seven entropies of a fixed partition repeatedly, reusing the
/// reshaping index tables.
class TmiEvaluator {
 public:
  explicit TmiEvaluator(const Partition& part, EntropyMethod method = EntropyMethod::Schmidt);

  const Partition& partition() const { return part_; }

  EntropySet entropies(const StateVector& state) const;

  /// Returns the I3 value after checking both formulas agree within 1e-9.
  static double checked_tmi(const EntropySet& s);

 private:
  double entropy(const StateVector& state, std::size_t slot) const;

  Partition part_;
  EntropyMethod method_;
  std::vector<SubsetMask> masks_;
  std::vector<Bipartition> cuts_;
};

}  // namespace scramble
