// Copyright 2026 The revtri Authors
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

#ifndef REVTRI_ERROR_HPP_
#define REVTRI_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace revtri {

// Base class for every error raised by the library. All subclasses map to the
// "input/validation" exit code of the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: mismatched dimensions, parameters out of range,
// non-unit reference vectors.
class InputError : public Error {
 public:
  using Error::Error;
};

// The request has no solution in the model space (e.g. n > d orthonormal
// vectors, a generator needing more dimensions than available).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A quantity is undefined for the data (zero vector argument, rank-deficient
// family).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// An operation was called on a value in the wrong state.
class StateError : public Error {
 public:
  using Error::Error;
};

// A located input problem. `path()` names the offending field, e.g.
// "bounds[0].params.rho"; `reason()` is the message without the path.
class ValidationError : public InputError {
 public:
  ValidationError(std::string path, std::string reason)
      : InputError(path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}

  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

}  // namespace revtri

#endif  // REVTRI_ERROR_HPP_
