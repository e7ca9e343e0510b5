// Copyright 2026 The bireshape Authors.
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

namespace bireshape {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division or inversion by zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Operands belong to different field contexts, or an element is not a
// canonical member of the context it is used with.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Repeated coordinates where pairwise distinct ones are required.
class DistinctnessError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

// An online input violates the degree bounds a plan was built for.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A reshaper step could not be computed: y^eta + I has no element of
// y-degree below delta.
class ReshaperFailure : public Error {
 public:
  ReshaperFailure(int step, int eta, int delta)
      : Error("reshaper computation failed at step " + std::to_string(step) +
              " (eta=" + std::to_string(eta) +
              ", delta=" + std::to_string(delta) + ")"),
        step_(step),
        eta_(eta),
        delta_(delta) {}

  int step() const { return step_; }
  int eta() const { return eta_; }
  int delta() const { return delta_; }

 private:
  int step_;
  int eta_;
  int delta_;
};

}  // namespace bireshape
