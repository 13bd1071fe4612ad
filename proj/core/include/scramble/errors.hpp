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

#include <stdexcept>
#include <string>

namespace scramble {

/// Precondition violated by the caller (bad index, overlapping masks, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested object exceeds the dense-storage budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical cross-check or convergence test failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No growth window qualifies for a power-law fit.
class FitInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal state (e.g. an empty propagator was used).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scramble
