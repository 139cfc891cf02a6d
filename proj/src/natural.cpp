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

#include "klut/natural.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace klut {

namespace {

void require_same_base(const Natural& a, const Natural& b, const char* op) {
  if (a.base() != b.base()) {
    throw Error(std::string(op) + ": base mismatch (" +
                std::to_string(a.base().value()) + " vs " +
                std::to_string(b.base().value()) + ")");
  }
}

// Unledgered digit-sequence comparison; both operands canonical.
Ordering compare_digits(const std::vector<std::uint32_t>& x,
                        const std::vector<std::uint32_t>& y) {
  if (x.size() != y.size()) {
    return x.size() < y.size() ? Ordering::less : Ordering::greater;
  }
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i] ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

}  // namespace

Base::Base(std::uint32_t value) : value_(value) {
  if (value < 2 || value > 65536) {
    throw Error("base must be in [2, 65536], got " + std::to_string(value));
  }
}

CostLedger& CostLedger::operator+=(const CostLedger& other) {
  single_digit_mults += other.single_digit_mults;
  table_lookups += other.table_lookups;
  digit_adds += other.digit_adds;
  digit_subs += other.digit_subs;
  block_adds += other.block_adds;
  block_subs += other.block_subs;
  comparisons += other.comparisons;
  return *this;
}

Natural Natural::from_digits(Base base, std::vector<std::uint32_t> digits) {
  for (std::uint32_t d : digits) {
    if (d >= base.value()) {
      throw Error("digit " + std::to_string(d) + " out of range for base " +
                  std::to_string(base.value()));
    }
  }
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return Natural(base, std::move(digits));
}

Natural Natural::from_value(Base base, std::uint64_t value) {
  std::vector<std::uint32_t> digits;
  while (value != 0) {
    digits.push_back(static_cast<std::uint32_t>(value % base.value()));
    value /= base.value();
  }
  return Natural(base, std::move(digits));
}

Natural from_text(std::string_view text, Base base) {
  if (text.empty()) throw ParseError("empty operand text");
  std::vector<std::uint32_t> digits;
  if (base.value() <= 36) {
    digits.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      const char c = text[pos];
      std::uint32_t d;
      if (c >= '0' && c <= '9') {
        d = static_cast<std::uint32_t>(c - '0');
      } else if (c >= 'a' && c <= 'z') {
        d = 10u + static_cast<std::uint32_t>(c - 'a');
      } else if (c >= 'A' && c <= 'Z') {
        d = 10u + static_cast<std::uint32_t>(c - 'A');
      } else {
        throw ParseError("invalid character '" + std::string(1, c) +
                         "' at position " + std::to_string(pos));
      }
      if (d >= base.value()) {
        throw ParseError("digit '" + std::string(1, c) + "' at position " +
                         std::to_string(pos) + " is not below base " +
                         std::to_string(base.value()));
      }
      digits.push_back(d);
    }
  } else {
    // Dot-separated decimal digit values, most significant first.
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t dot = std::min(text.find('.', pos), text.size());
      if (dot == pos) {
        throw ParseError("empty digit component at position " +
                         std::to_string(pos));
      }
      std::uint64_t d = 0;
      for (std::size_t i = pos; i < dot; ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
          throw ParseError("invalid character '" + std::string(1, c) +
                           "' at position " + std::to_string(i));
        }
        d = d * 10 + static_cast<std::uint64_t>(c - '0');
        if (d >= base.value()) {
          throw ParseError("digit value at position " + std::to_string(pos) +
                           " is not below base " +
                           std::to_string(base.value()));
        }
      }
      digits.push_back(static_cast<std::uint32_t>(d));
      if (dot == text.size()) break;
      pos = dot + 1;
    }
  }
  std::reverse(digits.begin(), digits.end());
  return Natural::from_digits(base, std::move(digits));
}

std::string to_text(const Natural& a) {
  if (a.is_zero()) return "0";
  const auto& digits = a.digits();
  std::string out;
  if (a.base().value() <= 36) {
    out.reserve(digits.size());
    for (std::size_t i = digits.size(); i-- > 0;) {
      const std::uint32_t d = digits[i];
      out.push_back(d < 10 ? static_cast<char>('0' + d)
                           : static_cast<char>('a' + (d - 10)));
    }
  } else {
    for (std::size_t i = digits.size(); i-- > 0;) {
      out += std::to_string(digits[i]);
      if (i != 0) out.push_back('.');
    }
  }
  return out;
}

Natural add(const Natural& a, const Natural& b, CostLedger& ledger) {
  require_same_base(a, b, "add");
  const auto& x = a.digits();
  const auto& y = b.digits();
  const std::size_t positions = std::max(x.size(), y.size());
  const std::uint64_t radix = a.base().value();

  std::vector<std::uint32_t> out;
  out.reserve(positions + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < positions; ++i) {
    std::uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    out.push_back(static_cast<std::uint32_t>(s % radix));
    carry = s / radix;
  }
  if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));

  ledger.digit_adds += positions;
  return Natural::from_digits(a.base(), std::move(out));
}

Natural sub(const Natural& a, const Natural& b, CostLedger& ledger) {
  require_same_base(a, b, "sub");
  if (compare_digits(a.digits(), b.digits()) == Ordering::less) {
    throw Error("sub: underflow, minuend is smaller than subtrahend");
  }
  const auto& x = a.digits();
  const auto& y = b.digits();
  const std::int64_t radix = a.base().value();

  std::vector<std::uint32_t> out;
  out.reserve(x.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(x[i]) - borrow;
    if (i < y.size()) d -= static_cast<std::int64_t>(y[i]);
    if (d < 0) {
      d += radix;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  assert(borrow == 0);

  ledger.digit_subs += x.size();
  return Natural::from_digits(a.base(), std::move(out));
}

Ordering compare(const Natural& a, const Natural& b) {
  require_same_base(a, b, "compare");
  return compare_digits(a.digits(), b.digits());
}

Ordering compare(const Natural& a, const Natural& b, CostLedger& ledger) {
  ledger.comparisons += 1;
  return compare(a, b);
}

Natural shift_up(const Natural& a, std::size_t k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<std::uint32_t> out(k, 0);
  out.insert(out.end(), a.digits().begin(), a.digits().end());
  return Natural::from_digits(a.base(), std::move(out));
}

std::vector<Natural> split_blocks(const Natural& a, std::size_t m,
                                  std::size_t count) {
  if (m < 1) throw Error("split_blocks: block size must be at least 1");
  if (count < 1) throw Error("split_blocks: block count must be at least 1");
  const auto& digits = a.digits();
  if (digits.size() > m * count) {
    throw Error("split_blocks: operand has " + std::to_string(digits.size()) +
                " digits but the plan holds only " + std::to_string(count) +
                " blocks of " + std::to_string(m) +
                " digits; increase the block count or block size");
  }
  std::vector<Natural> blocks;
  blocks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t lo = std::min(i * m, digits.size());
    const std::size_t hi = std::min(lo + m, digits.size());
    blocks.push_back(Natural::from_digits(
        a.base(), std::vector<std::uint32_t>(digits.begin() + lo,
                                             digits.begin() + hi)));
  }
  return blocks;
}

Natural schoolbook_mul(const Natural& a, const Natural& b,
                       CostLedger& ledger) {
  require_same_base(a, b, "schoolbook_mul");
  const auto& x = a.digits();
  const auto& y = b.digits();
  ledger.single_digit_mults +=
      static_cast<std::uint64_t>(x.size()) * y.size();
  if (x.empty() || y.empty()) return Natural(a.base());

  const std::uint64_t radix = a.base().value();
  std::vector<std::uint64_t> acc(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
    }
  }

  std::vector<std::uint32_t> out(acc.size());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const std::uint64_t v = acc[i] + carry;
    out[i] = static_cast<std::uint32_t>(v % radix);
    carry = v / radix;
  }
  assert(carry == 0);
  return Natural::from_digits(a.base(), std::move(out));
}

std::uint64_t to_uint64(const Natural& a) {
  std::uint64_t value = 0;
  const std::uint64_t radix = a.base().value();
  for (std::size_t i = a.digit_count(); i-- > 0;) {
    const std::uint32_t d = a.digits()[i];
    if (value > (UINT64_MAX - d) / radix) {
      throw Error("to_uint64: value does not fit in 64 bits");
    }
    value = value * radix + d;
  }
  return value;
}

}  // namespace klut
