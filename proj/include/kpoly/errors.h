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

#ifndef KPOLY_ERRORS_H_
#define KPOLY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kpoly {

// Base class for every error raised by the library. The CLI maps
// PreconditionError to a mathematical violation and everything else to a
// usage/resource failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lattice points of different lengths were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// max/top/homogenize of an empty set.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The input does not satisfy the mathematical hypothesis of an operation
// (not a polymatroid, not zero-one, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace kpoly

#endif  // KPOLY_ERRORS_H_
