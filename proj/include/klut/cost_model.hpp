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

#ifndef KLUT_COST_MODEL_HPP_
#define KLUT_COST_MODEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "klut/natural.hpp"

namespace klut {

// Parameters the closed-form cost formulas range over. lookup_time_ratio is
// the assumed lookup-to-multiplication time ratio; it only weights reported
// costs and never alters raw ledger counts.
struct ModelParams {
  std::uint64_t n = 0;  // total operand digits
  std::uint64_t m = 0;  // block digits
  std::uint32_t block_count_minus_one = 0;  // N
  std::uint32_t divide_steps = 0;           // k
  std::uint32_t split_depth = 0;            // s, when n = 2^s
  Base base{10};
  double lookup_time_ratio = 0.2;

  std::uint64_t lookup_ops_l() const;
};

// Exact non-negative rational in lowest terms.
struct RationalCount {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool is_integer() const { return denominator == 1; }

  friend bool operator==(const RationalCount&, const RationalCount&) = default;
};

// Independent m-digit products needed for N+1 blocks: (N+1) + C(N+1,2).
std::uint64_t nblock_product_count(std::uint32_t block_count_minus_one);

// Lookups needed after k reduction steps under the two mix-and-match
// strategies: k divide-by-two splits (3^k) versus one split into 2^k blocks
// (2^k + C(2^k,2)). Equal at k = 1, strictly ordered for k >= 2.
struct StrategyLookupCounts {
  std::uint64_t karatsuba_then_lookup = 0;
  std::uint64_t block_then_lookup = 0;
};

StrategyLookupCounts strategy_lookup_counts(std::uint32_t k);

// Total operation estimate n*(1 + N/2)^k for k recursive (N+1)-block splits
// followed by lookups, exact as a rational. Minimal in N at N = 1.
RationalCount total_ops_prediction(std::uint64_t n, std::uint32_t block_count_minus_one,
                                   std::uint32_t k);

// Reduced-complexity curve for cutting the recursion off after k of N
// possible divide-by-two steps: 3^N * (2/3)^(N-k), always the integer
// 3^k * 2^(N-k).
std::uint64_t figure1_curve(std::uint32_t n_steps, std::uint32_t k);

// Binary-search cost of one lookup in a base^(2m)-entry table:
// ceil(2m * log2(base)) comparisons.
std::uint64_t lookup_ops(std::uint32_t m, Base base);

// The 500-digit-operand, 6-digit-block scenario: what a flat lookup table
// costs, what the divide-then-lookup hybrid costs, and how large the table
// would have to be. Exact values are computed; the rounded literature
// estimates are carried alongside as constants.
struct RsaScenario {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double flat_lookup_cost = 0;             // n^2 / m
  std::uint64_t paper_flat_estimate = 0;   // 85 n
  std::uint64_t hybrid_cost = 0;           // 3^6 * 6
  std::uint64_t paper_hybrid_estimate = 0;
  double nlogn_reference = 0;              // n * log2(n)
  std::uint64_t paper_nlogn_estimate = 0;
  std::uint64_t table_entries = 0;         // base^(2m)
  std::uint64_t table_bytes_estimate = 0;  // entries * (2m digit bytes + 8-byte key)
  std::uint64_t paper_table_bytes = 0;     // "roughly 20 TB"
};

RsaScenario rsa_scenario();

// Pairing of predicted counts with measured ledger counters.
enum class Algorithm {
  schoolbook,
  karatsuba,
  nblock,
  hybrid_karatsuba,
  hybrid_nblock,
};

struct RunShape {
  Algorithm algorithm = Algorithm::schoolbook;
  std::uint64_t n = 0;            // operand digits (both operands)
  std::uint32_t leaf_digits = 1;  // karatsuba family
  std::uint32_t block_count_minus_one = 0;  // nblock family
};

struct PredictionRow {
  std::string quantity;
  std::uint64_t predicted = 0;
  std::uint64_t measured = 0;
  bool match = false;
};

struct PredictionReport {
  std::vector<PredictionRow> rows;
  bool all_match = true;
};

// Compares the formula predictions for a completed run against its ledger.
// The karatsuba family requires power-of-two n and leaf_digits.
PredictionReport predicted_vs_measured(const RunShape& shape,
                                       const CostLedger& ledger);

// "quantity,predicted,measured,match" rows, header first.
std::string to_csv(const PredictionReport& report);

}  // namespace klut

#endif  // KLUT_COST_MODEL_HPP_
