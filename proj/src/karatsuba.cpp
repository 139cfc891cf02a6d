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

#include "klut/karatsuba.hpp"

#include <algorithm>
#include <cassert>

namespace klut {

LeafMultiplier single_digit_multiplier() {
  LeafMultiplier leaf;
  leaf.max_operand_digits = 1;
  leaf.multiply = [](const Natural& a, const Natural& b, CostLedger& ledger) {
    ledger.single_digit_mults += 1;
    const std::uint64_t da = a.is_zero() ? 0 : a.digits()[0];
    const std::uint64_t db = b.is_zero() ? 0 : b.digits()[0];
    return Natural::from_value(a.base(), da * db);
  };
  return leaf;
}

LeafMultiplier schoolbook_leaf(std::uint32_t max_digits) {
  LeafMultiplier leaf;
  leaf.max_operand_digits = max_digits;
  leaf.multiply = [](const Natural& a, const Natural& b, CostLedger& ledger) {
    return schoolbook_mul(a, b, ledger);
  };
  return leaf;
}

std::pair<Natural, bool> carry_split(const Natural& sum, std::size_t m) {
  if (sum.digit_count() <= m) return {sum, false};
  // Sum of two values below base^m is below 2*base^m: the overflow digit
  // is exactly one.
  assert(sum.digit_count() == m + 1 && sum.digits()[m] == 1);
  std::vector<std::uint32_t> low(sum.digits().begin(),
                                 sum.digits().begin() +
                                     static_cast<std::ptrdiff_t>(m));
  return {Natural::from_digits(sum.base(), std::move(low)), true};
}

namespace {

Natural mul_recursive(const Natural& a, const Natural& b, std::size_t width,
                      const KaratsubaConfig& cfg, CostLedger& ledger) {
  if (width <= cfg.leaf_digits) return cfg.leaf.multiply(a, b, ledger);

  // Width is structural, not the canonical digit count: a block whose value
  // happens to be short still recurses at full width, which keeps the leaf
  // count at exactly 3 per split.
  const std::size_t full = width + (width % 2);
  const std::size_t half = full / 2;

  const auto xs = split_blocks(a, half, 2);
  const auto ys = split_blocks(b, half, 2);

  const auto [sx, cx] = carry_split(add(xs[0], xs[1], ledger), half);
  const auto [sy, cy] = carry_split(add(ys[0], ys[1], ledger), half);

  const Natural d0 = mul_recursive(xs[0], ys[0], half, cfg, ledger);
  const Natural d1 = mul_recursive(xs[1], ys[1], half, cfg, ledger);
  Natural t = mul_recursive(sx, sy, half, cfg, ledger);

  // (x0+x1)(y0+y1) = sx*sy + cx*sy*B^half + cy*sx*B^half + cx*cy*B^(2*half);
  // the carry terms are conditional shifted additions, never products.
  if (cx) t = add(t, shift_up(sy, half), ledger);
  if (cy) t = add(t, shift_up(sx, half), ledger);
  if (cx && cy) {
    t = add(t, shift_up(Natural::from_value(a.base(), 1), 2 * half), ledger);
  }

  const Natural mid = sub(sub(t, d0, ledger), d1, ledger);
  const Natural low_and_mid = add(d0, shift_up(mid, half), ledger);
  return add(low_and_mid, shift_up(d1, 2 * half), ledger);
}

}  // namespace

Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const KaratsubaConfig& cfg, CostLedger& ledger) {
  if (a.base() != b.base()) {
    throw Error("karatsuba_mul: base mismatch");
  }
  if (cfg.leaf_digits < 1) {
    throw Error("karatsuba_mul: leaf_digits must be at least 1");
  }
  if (!cfg.leaf.multiply) {
    throw Error("karatsuba_mul: configuration has no leaf multiplier");
  }
  if (cfg.leaf_digits > cfg.leaf.max_operand_digits) {
    throw Error("karatsuba_mul: leaf_digits " +
                std::to_string(cfg.leaf_digits) +
                " exceeds leaf capacity of " +
                std::to_string(cfg.leaf.max_operand_digits) + " digits");
  }
  const std::size_t width = std::max(a.digit_count(), b.digit_count());
  return mul_recursive(a, b, width, cfg, ledger);
}

std::uint64_t predict_leaf_products(std::uint32_t s) {
  if (s > 40) throw Error("predict_leaf_products: 3^s overflows 64 bits");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= 3;
  return count;
}

}  // namespace klut
