// Copyright 2026 The holocode Authors
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

namespace holocode {

/// Operand sizes do not line up (vector lengths, matrix shapes, leg counts).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant does not hold (commutation, independence, isometry).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The parity-check rows are GF(2)-dependent, so no right inverse exists.
class NoRightInverse : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation that needs a CSS code received a non-CSS one.
class NotCssError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unsupported combination of options (family/variant, seed kind, ...).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two failure curves do not cross on the searched interval.
class NoCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace holocode
