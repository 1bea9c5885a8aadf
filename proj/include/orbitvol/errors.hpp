// Copyright 2026 The orbitvol Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITVOL_ERRORS_HPP
#define ORBITVOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitvol {

// Base class for every error raised by the library. Anything derived from
// InputError is the caller's fault (bad shape, invalid state, ...); the CLI
// maps those to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

/// Input failed a numerical validity check (Hermiticity, trace, positivity).
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Shapes or bipartite dimensions do not fit together.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// Requested computation exceeds a configured size limit.
class CapacityError : public InputError {
 public:
  using InputError::InputError;
};

/// Adding exact volumes carrying different powers of pi.
class IncompatibleUnitsError : public InputError {
 public:
  using InputError::InputError;
};

class ArithmeticError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace orbitvol

#endif  // ORBITVOL_ERRORS_HPP
