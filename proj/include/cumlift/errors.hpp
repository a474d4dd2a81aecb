// Copyright 2026 The cumlift Authors
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

namespace cumlift {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. `line` is 1-based, 0 when unknown.
class MalformedInput : public Error {
 public:
  MalformedInput(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Declared counts (tasks, resources, demands) disagree with the data.
class InconsistentCounts : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class NegativeValue : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

/// Some task demands more of a resource than its capacity; no schedule exists.
class InfeasibleTask : public Error {
 public:
  using Error::Error;
};

/// The precedence graph has a cycle of positive length.
class PositiveCycle : public Error {
 public:
  using Error::Error;
};

class ZeroCapacity : public Error {
 public:
  using Error::Error;
};

class EmptySupport : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration was requested above the configured size limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// An inferred inequality failed the brute-force validity oracle.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace cumlift
