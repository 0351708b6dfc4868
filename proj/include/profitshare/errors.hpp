// Copyright 2026 The profitshare Authors
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

namespace profitshare {

// Base of every error raised by the library. Callers that only need to know
// "the request was rejected" can catch this; the subclasses mirror the
// failure categories exposed through the CLI and the Python module.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A coalition mentions a player outside the valuation's ground set.
class InvalidCoalition : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its configured budget.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class SchemeMismatch : public Error {
 public:
  using Error::Error;
};

class NoOpMove : public Error {
 public:
  using Error::Error;
};

class NoEquilibriumFound : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// Malformed input. `location` is a JSON pointer (or "line:col") naming the
// offending element; it is folded into what() as well.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// A valuation failed the monotone/submodular check at construction time.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace profitshare
