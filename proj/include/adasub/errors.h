// Copyright 2026 The Authors.
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

#ifndef ADASUB_ERRORS_H_
#define ADASUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace adasub {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument or input object violates a documented precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Conditioning on a partial realization that has probability zero.
class NullEventError : public Error {
 public:
  using Error::Error;
};

// An exact enumeration would exceed the configured cap.
class EnumerationCapError : public Error {
 public:
  using Error::Error;
};

// Malformed instance file. The message carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed instance file whose contents violate an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A policy attempted an infeasible action. Always a bug, never user error.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace adasub

#endif  // ADASUB_ERRORS_H_
