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

#ifndef MMC_ERRORS_HPP_
#define MMC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace mmc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which clause of an operation's precondition failed.
enum class Violation {
  not_subset_of_ground,
  element_not_in_ground,
  set_dependent,
  element_in_set,
  extension_independent,
  not_a_base,
  bases_not_distinct,
  element_not_in_difference,
  invalid_argument,
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  PreconditionError(Violation violation, const std::string& what)
      : Error(what), violation_(violation) {}

  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

/// An exhaustive algorithm was asked to run above its configured size
/// bound. Exhaustive checks refuse instead of sampling.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t size, std::size_t bound)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::size_t size() const { return size_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

/// A result that matroid theory guarantees to exist was not found. This
/// means the independence predicate is not a matroid.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// An instance or matching description is malformed or violates a model
/// invariant. `location()` names where (a JSON path, or a byte offset).
class ValidationError : public Error {
 public:
  ValidationError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace mmc

#endif  // MMC_ERRORS_HPP_
