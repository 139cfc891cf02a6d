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

#include "klut/nblock.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace klut {

std::size_t ProductPlan::diagonal_index(std::uint32_t i) const {
  assert(i < block_count);
  return i;
}

std::size_t ProductPlan::pair_index(std::uint32_t i, std::uint32_t j) const {
  assert(i < j && j < block_count);
  const std::uint32_t n = block_count - 1;  // N
  // Pairs follow the N+1 diagonals in lexicographic order.
  const std::size_t before_row =
      static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2;
  return block_count + before_row + (j - i - 1);
}

ProductPlan make_plan(std::uint32_t block_count_minus_one) {
  const std::uint32_t n = block_count_minus_one;
  if (n < 1) {
    throw Error("make_plan: need at least two blocks (N >= 1)");
  }

  ProductPlan plan;
  plan.block_count = n + 1;
  for (std::uint32_t i = 0; i <= n; ++i) {
    plan.terms.push_back({ProductTerm::Kind::diagonal, i, i});
  }
  for (std::uint32_t i = 0; i <= n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      plan.terms.push_back({ProductTerm::Kind::pair, i, j});
    }
  }

  plan.schema.resize(2 * static_cast<std::size_t>(n) + 1);
  for (std::uint32_t p = 0; p <= 2 * n; ++p) {
    auto& refs = plan.schema[p];
    const std::uint32_t first = p > n ? p - n : 0;
    for (std::uint32_t i = first; 2 * i < p; ++i) {
      const std::uint32_t j = p - i;
      if (j > n) continue;
      refs.push_back({+1, plan.pair_index(i, j)});
      refs.push_back({-1, plan.diagonal_index(i)});
      refs.push_back({-1, plan.diagonal_index(j)});
    }
    if (p % 2 == 0) {
      refs.push_back({+1, plan.diagonal_index(p / 2)});
    }
    assert(!refs.empty() && refs.front().sign == +1);
  }
  return plan;
}

AssemblyOpCounts count_assembly_ops(std::uint32_t block_count_minus_one) {
  const ProductPlan plan = make_plan(block_count_minus_one);
  AssemblyOpCounts counts;
  for (const auto& refs : plan.schema) {
    counts.within_coefficient += refs.size() - 1;
  }
  counts.cross_coefficient = 2ull * block_count_minus_one;
  counts.total = counts.within_coefficient + counts.cross_coefficient;
  return counts;
}

SignedAccumulator::SignedAccumulator(Natural initial)
    : sign_(+1), magnitude_(std::move(initial)) {}

void SignedAccumulator::add(const Natural& value, CostLedger& ledger) {
  if (sign_ > 0) {
    magnitude_ = klut::add(magnitude_, value, ledger);
    return;
  }
  // Negative state: result is value - magnitude, with the sign of the
  // larger side.
  if (compare(magnitude_, value) == Ordering::greater) {
    magnitude_ = klut::sub(magnitude_, value, ledger);
  } else {
    magnitude_ = klut::sub(value, magnitude_, ledger);
    sign_ = +1;
  }
}

void SignedAccumulator::subtract(const Natural& value, CostLedger& ledger) {
  if (sign_ < 0) {
    magnitude_ = klut::add(magnitude_, value, ledger);
    return;
  }
  if (compare(magnitude_, value) != Ordering::less) {
    magnitude_ = klut::sub(magnitude_, value, ledger);
  } else {
    magnitude_ = klut::sub(value, magnitude_, ledger);
    sign_ = -1;
  }
}

const Natural& SignedAccumulator::to_natural() const {
  if (sign_ < 0 && !magnitude_.is_zero()) {
    throw Error("SignedAccumulator: coefficient finished negative");
  }
  return magnitude_;
}

namespace {

// Evaluates one plan term through the leaf. Pair sums may carry into an
// extra digit; the carry-split keeps the leaf operands at m digits and
// restores the carry terms with shifted additions.
Natural evaluate_term(const ProductTerm& term, const std::vector<Natural>& xs,
                      const std::vector<Natural>& ys, std::size_t m,
                      const LeafMultiplier& leaf, CostLedger& ledger) {
  if (term.kind == ProductTerm::Kind::diagonal) {
    return leaf.multiply(xs[term.i], ys[term.i], ledger);
  }
  const Natural u = add(xs[term.i], xs[term.j], ledger);
  const Natural v = add(ys[term.i], ys[term.j], ledger);
  const auto [su, cu] = carry_split(u, m);
  const auto [sv, cv] = carry_split(v, m);
  Natural product = leaf.multiply(su, sv, ledger);
  if (cu) product = add(product, shift_up(sv, m), ledger);
  if (cv) product = add(product, shift_up(su, m), ledger);
  if (cu && cv) {
    product = add(product,
                  shift_up(Natural::from_value(product.base(), 1), 2 * m),
                  ledger);
  }
  return product;
}

Natural nblock_mul_impl(const Natural& a, const Natural& b, std::uint32_t n,
                        std::size_t m, const LeafMultiplier& leaf,
                        CostLedger& ledger, bool parallel) {
  if (a.base() != b.base()) {
    throw Error("nblock_mul: base mismatch");
  }
  if (!leaf.multiply) {
    throw Error("nblock_mul: no leaf multiplier configured");
  }
  if (m < 1) throw Error("nblock_mul: block size must be at least 1");
  if (leaf.max_operand_digits < m) {
    throw Error("nblock_mul: block size " + std::to_string(m) +
                " exceeds leaf capacity of " +
                std::to_string(leaf.max_operand_digits) + " digits");
  }
  const ProductPlan plan = make_plan(n);
  const std::size_t capacity = static_cast<std::size_t>(plan.block_count) * m;
  if (std::max(a.digit_count(), b.digit_count()) > capacity) {
    throw Error("nblock_mul: operand has " +
                std::to_string(std::max(a.digit_count(), b.digit_count())) +
                " digits but the plan covers only " +
                std::to_string(capacity) +
                "; increase the block count or block size");
  }

  const std::vector<Natural> xs = split_blocks(a, m, plan.block_count);
  const std::vector<Natural> ys = split_blocks(b, m, plan.block_count);

  std::vector<Natural> products(plan.terms.size(), Natural(a.base()));
  if (parallel) {
    std::vector<CostLedger> term_ledgers(plan.terms.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t t = 0;
         t < static_cast<std::ptrdiff_t>(plan.terms.size()); ++t) {
      products[static_cast<std::size_t>(t)] = evaluate_term(
          plan.terms[static_cast<std::size_t>(t)], xs, ys, m, leaf,
          term_ledgers[static_cast<std::size_t>(t)]);
    }
    // Merge in term order so the totals match the serial path.
    for (const CostLedger& sub : term_ledgers) ledger += sub;
  } else {
    for (std::size_t t = 0; t < plan.terms.size(); ++t) {
      products[t] = evaluate_term(plan.terms[t], xs, ys, m, leaf, ledger);
    }
  }

  // Each coefficient is evaluated left to right; the first reference is
  // always positive and seeds the accumulator.
  std::vector<Natural> coefficients;
  coefficients.reserve(plan.schema.size());
  for (const auto& refs : plan.schema) {
    SignedAccumulator acc(products[refs.front().term]);
    for (std::size_t r = 1; r < refs.size(); ++r) {
      if (refs[r].sign > 0) {
        acc.add(products[refs[r].term], ledger);
        ledger.block_adds += 1;
      } else {
        acc.subtract(products[refs[r].term], ledger);
        ledger.block_subs += 1;
      }
    }
    coefficients.push_back(acc.to_natural());
  }

  Natural result = coefficients[0];
  for (std::size_t p = 1; p < coefficients.size(); ++p) {
    result = add(result, shift_up(coefficients[p], p * m), ledger);
    ledger.block_adds += 1;
  }
  return result;
}

}  // namespace

Natural nblock_mul(const Natural& a, const Natural& b,
                   std::uint32_t block_count_minus_one, std::size_t m,
                   const LeafMultiplier& leaf, CostLedger& ledger) {
  return nblock_mul_impl(a, b, block_count_minus_one, m, leaf, ledger,
                         /*parallel=*/false);
}

Natural nblock_mul_parallel(const Natural& a, const Natural& b,
                            std::uint32_t block_count_minus_one, std::size_t m,
                            const LeafMultiplier& leaf, CostLedger& ledger) {
  return nblock_mul_impl(a, b, block_count_minus_one, m, leaf, ledger,
                         /*parallel=*/true);
}

}  // namespace klut
