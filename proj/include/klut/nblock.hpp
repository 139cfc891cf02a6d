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

#ifndef KLUT_NBLOCK_HPP_
#define KLUT_NBLOCK_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "klut/karatsuba.hpp"
#include "klut/natural.hpp"

namespace klut {

// One independent product of the (N+1)-block scheme: a diagonal x_i*y_i or
// a pair product (x_i+x_j)(y_i+y_j) with i < j.
struct ProductTerm {
  enum class Kind { diagonal, pair };
  Kind kind;
  std::uint32_t i;
  std::uint32_t j;  // equals i for diagonals

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

// Signed reference to a plan term inside a coefficient list.
struct SignedRef {
  int sign;  // +1 or -1
  std::size_t term;

  friend bool operator==(const SignedRef&, const SignedRef&) = default;
};

// Symbolic plan for multiplying two (N+1)-block operands: the (N+1)
// diagonal products, the C(N+1,2) pair products, and for every power
// p in [0, 2N] the signed combination of terms whose value is
// sum_{i+j=p} x_i*y_j. Cross terms are recovered through the identity
// P_ij - D_i - D_j = x_i*y_j + x_j*y_i.
struct ProductPlan {
  std::uint32_t block_count = 0;  // N+1
  std::vector<ProductTerm> terms;
  std::vector<std::vector<SignedRef>> schema;  // indexed by power p

  std::size_t diagonal_index(std::uint32_t i) const;
  std::size_t pair_index(std::uint32_t i, std::uint32_t j) const;
};

// Builds the plan for N+1 blocks; N must be at least 1. Terms are ordered
// diagonals first, then pairs in lexicographic order, and every term is
// shared across the coefficients that reference it.
ProductPlan make_plan(std::uint32_t block_count_minus_one);

// Block-level add/subtract counts implied by the plan: operations inside
// the coefficient lists, plus the 2N additions joining the 2N+1 shifted
// coefficients.
struct AssemblyOpCounts {
  std::uint64_t within_coefficient = 0;
  std::uint64_t cross_coefficient = 0;
  std::uint64_t total = 0;
};

AssemblyOpCounts count_assembly_ops(std::uint32_t block_count_minus_one);

// Accumulator for schema coefficients. Partial sums may dip below zero even
// though every finished coefficient is non-negative, so the value carries an
// explicit sign. Digit work is charged to the ledger passed per call;
// block-level counting stays with the caller.
class SignedAccumulator {
 public:
  explicit SignedAccumulator(Natural initial);

  void add(const Natural& value, CostLedger& ledger);
  void subtract(const Natural& value, CostLedger& ledger);

  bool negative() const { return sign_ < 0; }

  // Throws Error when the accumulated value is negative.
  const Natural& to_natural() const;

 private:
  int sign_;  // +1 or -1; zero is stored with sign +1
  Natural magnitude_;
};

// Multiplies via the (N+1)-block plan: split both operands into N+1 blocks
// of m digits, evaluate every plan term exactly once through the leaf
// multiplier (pair sums are carry-split so leaf operands stay at most m
// digits), then assemble the per-power coefficients. Leaf invocations per
// call: (N+1) + C(N+1,2).
Natural nblock_mul(const Natural& a, const Natural& b,
                   std::uint32_t block_count_minus_one, std::size_t m,
                   const LeafMultiplier& leaf, CostLedger& ledger);

// Same contract as nblock_mul with the independent plan terms evaluated in
// parallel. Per-term counts are merged into the ledger in term order, so
// the final ledger matches the serial path; the leaf must be safe to call
// concurrently.
Natural nblock_mul_parallel(const Natural& a, const Natural& b,
                            std::uint32_t block_count_minus_one, std::size_t m,
                            const LeafMultiplier& leaf, CostLedger& ledger);

}  // namespace klut

#endif  // KLUT_NBLOCK_HPP_
