// Copyright 2026 The cuntzsys Authors
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

#ifndef CUNTZSYS_ERRORS_HPP_
#define CUNTZSYS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cuntzsys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (shapes, non-finite entries, bad JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

// A truncation or dense work size exceeds the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Input lies outside the domain of the construction (e.g. not positive).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Linear solve on a singular or ill-conditioned system.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

// An iterative or limiting construction failed to produce a usable result.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cuntzsys

#endif  // CUNTZSYS_ERRORS_HPP_
