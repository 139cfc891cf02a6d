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

#ifndef KLUT_NATURAL_HPP_
#define KLUT_NATURAL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "klut/error.hpp"

namespace klut {

// Radix of a digit sequence. Valid range is [2, 65536]; the radix is a
// per-value attribute and mixing radices in one operation is a hard error.
class Base {
 public:
  explicit Base(std::uint32_t value);

  std::uint32_t value() const { return value_; }

  friend bool operator==(Base a, Base b) { return a.value_ == b.value_; }
  friend bool operator!=(Base a, Base b) { return a.value_ != b.value_; }

 private:
  std::uint32_t value_;
};

// Counters for the primitive operations performed while multiplying.
// A fresh ledger is all zeros and counters only ever increase. One ledger
// per call context: concurrent use of distinct ledgers is safe, concurrent
// mutation of a single ledger is not.
struct CostLedger {
  std::uint64_t single_digit_mults = 0;
  std::uint64_t table_lookups = 0;
  std::uint64_t digit_adds = 0;
  std::uint64_t digit_subs = 0;
  std::uint64_t block_adds = 0;
  std::uint64_t block_subs = 0;
  std::uint64_t comparisons = 0;

  CostLedger& operator+=(const CostLedger& other);

  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

// Arbitrary-precision natural number stored as a base-B digit sequence,
// least-significant digit first. The representation is canonical: no
// trailing (most-significant) zero digit, and zero is the empty sequence.
// Instances are immutable after construction and safe to share across
// threads.
class Natural {
 public:
  // Zero in the given base.
  explicit Natural(Base base) : base_(base) {}

  // Builds from least-significant-first digits. Validates every digit
  // against the base and strips trailing zeros.
  static Natural from_digits(Base base, std::vector<std::uint32_t> digits);

  static Natural from_value(Base base, std::uint64_t value);

  Base base() const { return base_; }
  const std::vector<std::uint32_t>& digits() const { return digits_; }
  std::size_t digit_count() const { return digits_.size(); }
  bool is_zero() const { return digits_.empty(); }

  friend bool operator==(const Natural& a, const Natural& b) {
    return a.base_ == b.base_ && a.digits_ == b.digits_;
  }
  friend bool operator!=(const Natural& a, const Natural& b) {
    return !(a == b);
  }

 private:
  Natural(Base base, std::vector<std::uint32_t> digits)
      : base_(base), digits_(std::move(digits)) {}

  Base base_;
  std::vector<std::uint32_t> digits_;
};

enum class Ordering { less, equal, greater };

// Parses positional text, most significant digit first. Bases up to 36 use
// the characters 0-9a-z (upper case accepted); larger bases take a
// dot-separated list of decimal digit values, e.g. "12.255" in base 256.
Natural from_text(std::string_view text, Base base);

// Inverse of from_text; zero renders as "0".
std::string to_text(const Natural& a);

// Sum of a and b. Charges one digit_add per digit position processed,
// i.e. max(len(a), len(b)); carry propagation is part of the position cost.
Natural add(const Natural& a, const Natural& b, CostLedger& ledger);

// Difference a - b; requires a >= b. Charges len(a) digit_subs.
Natural sub(const Natural& a, const Natural& b, CostLedger& ledger);

// Three-way comparison. The ledger overload charges one comparison.
Ordering compare(const Natural& a, const Natural& b);
Ordering compare(const Natural& a, const Natural& b, CostLedger& ledger);

// a * base^k. A pure digit shift: costs nothing in the ledger.
Natural shift_up(const Natural& a, std::size_t k);

// Splits into `count` blocks of m digits, least significant block first,
// zero-padding the high blocks. Errors when a has more than count*m digits.
std::vector<Natural> split_blocks(const Natural& a, std::size_t m,
                                  std::size_t count);

// Long multiplication, the correctness oracle for every other strategy.
// Charges exactly len(a) * len(b) single_digit_mults.
Natural schoolbook_mul(const Natural& a, const Natural& b, CostLedger& ledger);

// Value as a machine word; throws Error when it does not fit.
std::uint64_t to_uint64(const Natural& a);

}  // namespace klut

#endif  // KLUT_NATURAL_HPP_
