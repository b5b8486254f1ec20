// Copyright 2026 The Biforge Authors
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

#ifndef BIFORGE_ERROR_HPP_
#define BIFORGE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biforge {

// Base of every error the kernel raises. Callers that only need to report
// can catch this; the CLI maps the concrete subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A child of a construction has the wrong sort (e.g. Succ applied to TT).
class SortError : public Error {
 public:
  using Error::Error;
};

class NotAnAbstraction : public Error {
 public:
  using Error::Error;
};

// Raised by the quantifier-free evaluation strategy.
class QuantifierEncountered : public Error {
 public:
  using Error::Error;
};

// Input is outside the language a transformer accepts.
class LanguageError : public Error {
 public:
  using Error::Error;
};

// A construction does not satisfy the binary-numeral grammar.
class NotBnum : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace biforge

#endif  // BIFORGE_ERROR_HPP_
