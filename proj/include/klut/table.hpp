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

#ifndef KLUT_TABLE_HPP_
#define KLUT_TABLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "klut/karatsuba.hpp"
#include "klut/natural.hpp"

namespace klut {

inline constexpr std::uint64_t kDefaultTableBudgetBytes = 2ull << 30;  // 2 GiB

struct TableGenOptions {
  std::uint64_t memory_budget_bytes = kDefaultTableBudgetBytes;
  // Fill entry rows across threads when OpenMP is available. The output is
  // byte-identical to the serial fill either way.
  bool parallel = true;
};

// Dense table of every product a*b for 0 <= a, b < base^m. Entries live at
// index a*base^m + b as exactly 2m fixed-width digits, least significant
// first, one or two little-endian bytes per digit depending on the base.
// The full square is stored, so entry(a,b) and entry(b,a) are redundant
// copies. Immutable once built; concurrent reads are safe.
class ProductTable {
 public:
  Base base() const { return base_; }
  std::uint32_t m() const { return m_; }
  std::uint8_t digit_width() const { return digit_width_; }
  std::uint64_t side() const { return side_; }  // base^m
  std::uint64_t entry_count() const { return side_ * side_; }

  // Comparisons one lookup is charged under the binary-search cost model.
  std::uint64_t lookup_cost() const { return lookup_cost_; }

  // Decoded product for raw operand values; no ledger involvement.
  Natural entry(std::uint64_t a_value, std::uint64_t b_value) const;

  // Entry payload in file order.
  const std::vector<std::uint8_t>& raw_bytes() const { return bytes_; }

 private:
  friend ProductTable generate_table(Base, std::uint32_t,
                                     const TableGenOptions&);
  friend ProductTable load_table(std::istream&);

  ProductTable(Base base, std::uint32_t m, std::uint64_t side,
               std::uint8_t digit_width, std::vector<std::uint8_t> bytes);

  Base base_;
  std::uint32_t m_;
  std::uint8_t digit_width_;
  std::uint64_t side_;
  std::uint64_t lookup_cost_;
  std::vector<std::uint8_t> bytes_;
};

// Builds the full base^m x base^m product table with schoolbook products.
// Refuses with BudgetError (reporting the projected size) when the table
// would exceed the memory budget. Deterministic: byte-identical output for
// the same base and m, threaded or not.
ProductTable generate_table(Base base, std::uint32_t m,
                            const TableGenOptions& options = {});

// Exact product of a and b via the table; both operands must be at most m
// digits. Charges one table_lookup plus ceil(2m*log2(base)) comparisons --
// the binary-search model the reported complexities assume -- although the
// implementation addresses the entry directly.
Natural table_lookup(const ProductTable& t, const Natural& a, const Natural& b,
                     CostLedger& ledger);

// KLUT stream: 13-byte header "KLUT" | version byte | base u32 LE | m u32 LE,
// then the entry payload. The per-digit width is derived from the base on
// load. Returns bytes written.
std::uint64_t save_table(const ProductTable& t, std::ostream& out);

// Validates magic, version and total length before accepting.
ProductTable load_table(std::istream& in);

struct VerifyReport {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  // First mismatching operand pair, when any.
  std::uint64_t first_bad_a = 0;
  std::uint64_t first_bad_b = 0;
  std::string first_expected;
  std::string first_actual;

  bool ok() const { return mismatches == 0; }
};

// Rechecks entries against schoolbook_mul: every entry when samples is
// empty, otherwise that many deterministically sampled pairs.
VerifyReport verify_table(const ProductTable& t,
                          std::optional<std::uint64_t> samples);

// Adapts the table to the leaf contract with max_operand_digits = m. The
// table must outlive the returned multiplier.
LeafMultiplier as_leaf_multiplier(const ProductTable& t);

}  // namespace klut

#endif  // KLUT_TABLE_HPP_
