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

#include "klut/cost_model.hpp"

#include <cmath>
#include <numeric>

#include "klut/karatsuba.hpp"
#include "klut/nblock.hpp"

namespace klut {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b != 0 && a > UINT64_MAX / b) {
    throw Error(std::string(what) + ": count overflows 64 bits");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp,
                          const char* what) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out = checked_mul(out, base, what);
  return out;
}

}  // namespace

std::uint64_t ModelParams::lookup_ops_l() const {
  return lookup_ops(static_cast<std::uint32_t>(m), base);
}

std::uint64_t nblock_product_count(std::uint32_t block_count_minus_one) {
  if (block_count_minus_one < 1) {
    throw Error("nblock_product_count: N must be at least 1");
  }
  const std::uint64_t blocks = block_count_minus_one + 1ull;
  return blocks + blocks * (blocks - 1) / 2;
}

StrategyLookupCounts strategy_lookup_counts(std::uint32_t k) {
  if (k < 1) throw Error("strategy_lookup_counts: k must be at least 1");
  StrategyLookupCounts counts;
  counts.karatsuba_then_lookup = checked_pow(3, k, "strategy_lookup_counts");
  const std::uint64_t blocks = checked_pow(2, k, "strategy_lookup_counts");
  counts.block_then_lookup = blocks + blocks * (blocks - 1) / 2;
  return counts;
}

RationalCount total_ops_prediction(std::uint64_t n,
                                   std::uint32_t block_count_minus_one,
                                   std::uint32_t k) {
  if (n < 1 || k < 1 || block_count_minus_one < 1) {
    throw Error("total_ops_prediction: n, N and k must be at least 1");
  }
  // n * (1 + N/2)^k = n * (N+2)^k / 2^k
  std::uint64_t num = checked_mul(
      n, checked_pow(block_count_minus_one + 2ull, k, "total_ops_prediction"),
      "total_ops_prediction");
  std::uint64_t den = checked_pow(2, k, "total_ops_prediction");
  const std::uint64_t g = std::gcd(num, den);
  return RationalCount{num / g, den / g};
}

std::uint64_t figure1_curve(std::uint32_t n_steps, std::uint32_t k) {
  if (k > n_steps) throw Error("figure1_curve: k must not exceed N");
  return checked_mul(checked_pow(3, k, "figure1_curve"),
                     checked_pow(2, n_steps - k, "figure1_curve"),
                     "figure1_curve");
}

std::uint64_t lookup_ops(std::uint32_t m, Base base) {
  if (m < 1) throw Error("lookup_ops: m must be at least 1");
  // Smallest L with 2^L >= base^(2m). Exact while base^(2m) fits in 128
  // bits; the float fallback only triggers far beyond any buildable table.
  unsigned __int128 target = 1;
  bool overflow = false;
  for (std::uint32_t i = 0; i < 2 * m; ++i) {
    const unsigned __int128 next = target * base.value();
    if (next / base.value() != target) {
      overflow = true;
      break;
    }
    target = next;
  }
  if (!overflow) {
    std::uint64_t l = 0;
    unsigned __int128 p = 1;
    while (p < target) {
      p <<= 1;
      ++l;
    }
    return l;
  }
  return static_cast<std::uint64_t>(
      std::ceil(2.0L * m * std::log2(static_cast<long double>(base.value()))));
}

RsaScenario rsa_scenario() {
  RsaScenario r;
  r.n = 500;
  r.m = 6;
  r.flat_lookup_cost =
      static_cast<double>(r.n) * static_cast<double>(r.n) / r.m;
  r.paper_flat_estimate = 85 * r.n;  // rounds n/m to 85
  r.hybrid_cost = checked_pow(3, 6, "rsa_scenario") * r.m;
  r.paper_hybrid_estimate = 4200;
  r.nlogn_reference = static_cast<double>(r.n) * std::log2(r.n);
  r.paper_nlogn_estimate = 4500;
  r.table_entries = checked_pow(10, 12, "rsa_scenario");  // base^(2m)
  // The lookup model is a sorted table: per entry, 2m one-byte digits of
  // product plus an 8-byte search key.
  r.table_bytes_estimate = checked_mul(r.table_entries, 2 * r.m + 8,
                                       "rsa_scenario");
  r.paper_table_bytes = 20'000'000'000'000ull;
  return r;
}

PredictionReport predicted_vs_measured(const RunShape& shape,
                                       const CostLedger& ledger) {
  PredictionReport report;
  auto push = [&report](const std::string& quantity, std::uint64_t predicted,
                        std::uint64_t measured) {
    const bool match = predicted == measured;
    report.rows.push_back({quantity, predicted, measured, match});
    report.all_match = report.all_match && match;
  };

  auto log2_exact = [](std::uint64_t v, const char* what) {
    std::uint32_t bits = 0;
    while ((1ull << bits) < v) ++bits;
    if ((1ull << bits) != v) {
      throw Error(std::string(what) + ": expected a power of two, got " +
                  std::to_string(v));
    }
    return bits;
  };

  switch (shape.algorithm) {
    case Algorithm::schoolbook:
      push("single_digit_mults",
           checked_mul(shape.n, shape.n, "predicted_vs_measured"),
           ledger.single_digit_mults);
      break;
    case Algorithm::karatsuba:
    case Algorithm::hybrid_karatsuba: {
      const std::uint32_t s = log2_exact(shape.n, "predicted_vs_measured");
      const std::uint32_t j =
          log2_exact(shape.leaf_digits, "predicted_vs_measured");
      if (j > s) throw Error("predicted_vs_measured: leaf wider than operand");
      const std::uint64_t leaves = predict_leaf_products(s - j);
      if (shape.algorithm == Algorithm::karatsuba) {
        push("leaf_products", leaves, ledger.single_digit_mults);
      } else {
        push("leaf_products", leaves, ledger.table_lookups);
        push("single_digit_mults", 0, ledger.single_digit_mults);
      }
      break;
    }
    case Algorithm::nblock:
    case Algorithm::hybrid_nblock: {
      const std::uint32_t n_blocks = shape.block_count_minus_one;
      if (shape.algorithm == Algorithm::hybrid_nblock) {
        push("leaf_products", nblock_product_count(n_blocks),
             ledger.table_lookups);
        push("single_digit_mults", 0, ledger.single_digit_mults);
      }
      push("assembly_ops", count_assembly_ops(n_blocks).total,
           ledger.block_adds + ledger.block_subs);
      break;
    }
  }
  return report;
}

std::string to_csv(const PredictionReport& report) {
  std::string out = "quantity,predicted,measured,match\n";
  for (const auto& row : report.rows) {
    out += row.quantity + ',' + std::to_string(row.predicted) + ',' +
           std::to_string(row.measured) + ',' + (row.match ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace klut
