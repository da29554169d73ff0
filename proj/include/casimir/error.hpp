/*
 * Copyright 2026 The casimir-lifshitz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (e.g. xi <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A parameter set violates the invariants of its type.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Exact evaluation on an undamped real-axis resonance.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure exhausted its budget before meeting its tolerance.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double partial_value, double achieved_error)
      : Error(what), partial_value_(partial_value), achieved_error_(achieved_error) {}

  double partial_value() const noexcept { return partial_value_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double partial_value_;
  double achieved_error_;
};

}  // namespace casimir
