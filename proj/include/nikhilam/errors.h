// Copyright 2026 The Nikhilam Authors
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

#ifndef NIKHILAM_ERRORS_H_
#define NIKHILAM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nikhilam {

// Malformed digit string. `position()` is the zero-based index of the
// offending character, or npos for an empty input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An argument outside an operation's domain (zero base, unsupported radix).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Natural subtraction with a < b.
class UnderflowError : public std::underflow_error {
 public:
  using std::underflow_error::underflow_error;
};

// An internal invariant of one of the multiplication algorithms failed. Never
// expected on correct code; raised instead of returning a wrong value.
class AlgorithmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nikhilam

#endif  // NIKHILAM_ERRORS_H_
