// Copyright 2026 The wordmaps Authors
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

#ifndef WORDMAPS_ERRORS_HPP_
#define WORDMAPS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordmaps {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text. position() is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A caller violated a documented precondition (bad n, p not prime, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested group is outside the range the constructions cover
// (Alt(6), n <= 4, SL_4(2) two-variable requests, ...).
class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

// A size bound (sieve range, enumeration size, expansion length) was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A randomized search ran out of its trial budget.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

// Something that should be impossible happened; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wordmaps

#endif  // WORDMAPS_ERRORS_HPP_
