/* Copyright 2026 The qtsym Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#pragma once

#include <stdexcept>
#include <string>

namespace qtsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when an exact division is requested but the divisor does not divide.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegreeGuardExceeded : public Error {
 public:
  DegreeGuardExceeded(int degree, int guard)
      : Error("degree " + std::to_string(degree) + " exceeds guard " + std::to_string(guard)) {}
};

class UnsupportedConversion : public Error {
 public:
  using Error::Error;
};

/// A quasisymmetric function that was expected to be symmetric is not.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class InhomogeneousInput : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A brick word with rotational symmetry has no Lyndon rotation.
class PeriodicWord : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtsym
