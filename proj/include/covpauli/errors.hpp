// Copyright 2026 The covpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace covpauli {

/// Input violates a structural invariant (Hermiticity, completeness,
/// dimension agreement, simplex constraints).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scalar argument outside the domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation only defined for a fixed dimension (qubit input, 4x4 Choi).
class UnsupportedDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix has an eigenvalue below the positivity tolerance.
class NotAStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent evaluations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace covpauli
