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

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "scramble/experiments.hpp"

namespace scramble {

/// Parses an experiment description written as `key = value` lines.
///
///   # Floquet tau sweep
///   model = floquet
///   n     = 11            # also 3..11 or 4, 6, 8
///   ell   = 5             # or all
///   tau   = 0..16*eps/2, pi/4
///   init  = allup, neel
///   hx    = 0, 1
///   t1 = 100
///   t2 = 500
///   steps = 500
///
/// Other keys: J, hz, dt, t_end, fit (on/off), fit_delta, fit_smoothing,
/// method (schmidt/oracle). Unknown keys and an empty file raise ArgumentError.
ExperimentSpec parse_experiment_config(std::istream& in);
ExperimentSpec load_experiment_config(const std::filesystem::path& path);

/// The experiment as ordered key/value pairs, in the same syntax the parser accepts.
std::vector<std::pair<std::string, std::string>> describe_experiment(const ExperimentSpec& spec);

}  // namespace scramble
