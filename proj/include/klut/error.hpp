// Copyright 2026 The klut Authors.
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

#ifndef KLUT_ERROR_HPP_
#define KLUT_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace klut {

// Base class for every failure raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed operand text. The message names the offending position.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A KLUT stream failed a structural check (magic, version, length).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Table generation was refused because it would exceed the memory budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& message, double required_bytes,
              std::uint64_t budget_bytes)
      : Error(message),
        required_bytes_(required_bytes),
        budget_bytes_(budget_bytes) {}

  // Projected size of the refused table, possibly approximate when the
  // exact count does not fit in 64 bits.
  double required_bytes() const { return required_bytes_; }
  std::uint64_t budget_bytes() const { return budget_bytes_; }

 private:
  double required_bytes_;
  std::uint64_t budget_bytes_;
};

}  // namespace klut

#endif  // KLUT_ERROR_HPP_
