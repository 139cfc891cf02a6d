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

#ifndef KLUT_KARATSUBA_HPP_
#define KLUT_KARATSUBA_HPP_

#include <cstdint>
#include <functional>
#include <utility>

#include "klut/natural.hpp"

namespace klut {

// The procedure that terminates the recursion: a single-digit multiply, a
// schoolbook multiply, or a table lookup. Must return the exact product for
// any operands of at most max_operand_digits digits.
struct LeafMultiplier {
  std::uint32_t max_operand_digits = 0;
  std::function<Natural(const Natural&, const Natural&, CostLedger&)> multiply;
};

struct KaratsubaConfig {
  // Recursion stops once the operand width is at or below this.
  std::uint32_t leaf_digits = 1;
  LeafMultiplier leaf;
};

// Leaf that multiplies two digits and charges one single_digit_mult per
// invocation. The charge is positional: a zero operand still costs one
// product, which is what makes the divide-by-two leaf count exact.
LeafMultiplier single_digit_multiplier();

// Leaf backed by schoolbook_mul for operands up to max_digits digits.
LeafMultiplier schoolbook_leaf(std::uint32_t max_digits);

// Rewrites a block sum of up to m+1 digits as (low, carry) with
// low < base^m and carry in {0, 1}, so every product handed to a leaf stays
// at most m digits wide.
std::pair<Natural, bool> carry_split(const Natural& sum, std::size_t m);

// Karatsuba multiplication. Operands are zero-padded to an
// equal even width at every level and split in half; the low, high and
// carry-split middle products recurse until the width reaches
// cfg.leaf_digits, where cfg.leaf takes over. All primitive work is charged
// to the ledger.
Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const KaratsubaConfig& cfg, CostLedger& ledger);

// Leaf products after s divide-by-two steps: 3^s.
std::uint64_t predict_leaf_products(std::uint32_t s);

}  // namespace klut

#endif  // KLUT_KARATSUBA_HPP_
