// Copyright 2026 The Discner Authors.
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

#ifndef DISCNER_ERRORS_H_
#define DISCNER_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace discner {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Why a set of mentions cannot be expressed with two typed components.
enum class IncompatibleReason {
  kPartialOverlap,  // a component is shared by only part of the mentions
  kThreeWaySplit,   // a mention is made of three or more components
  kSpanConflict,    // the span of a set overlaps another mention or set
};

std::string_view ReasonName(IncompatibleReason reason);

class IncompatibleError : public Error {
 public:
  IncompatibleError(IncompatibleReason reason, const std::string &detail)
      : Error(std::string(ReasonName(reason)) + ": " + detail),
        reason_(reason) {}

  IncompatibleReason reason() const { return reason_; }

 private:
  IncompatibleReason reason_;
};

// The encoder produced a tag sequence that breaks a well-formedness rule.
class EncodingViolation : public Error {
 public:
  using Error::Error;
};

// A tag sequence given to the decoder is not well-formed.
class IllFormedError : public Error {
 public:
  using Error::Error;
};

// No accepting path exists in a lattice.
class EmptyLanguageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string &message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  // 1-based line number of the offending input line (0 if unknown).
  int line() const { return line_; }

 private:
  int line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace discner

#endif  // DISCNER_ERRORS_H_
