// Copyright 2026 The mpilat Authors
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

namespace mpilat {

/// Violated argument precondition (index order, non-square input, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input matrix failed the unitarity check. Carries ||U U^dag - I||_F.
class NotUnitaryError : public PreconditionError {
 public:
  NotUnitaryError(const std::string &what, double defect)
      : PreconditionError(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// Problem size outside what the construction supports: more fermions than
/// ports, oracle enumeration caps, unsupported fermionic sectors.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Numerical self-check inside an algorithm failed (|Z| > 1, no pivot row).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A commutator did not close on the supplied generator span.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(const std::string &what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Malformed textual input (spec strings, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpilat
