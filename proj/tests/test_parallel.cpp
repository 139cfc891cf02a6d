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
//
// The threaded paths must be drop-in replacements for the serial reference
// implementations: identical bytes out of table generation, identical
// products and ledgers out of the block multiplier.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "klut/nblock.hpp"
#include "klut/table.hpp"
#include "oracle.hpp"

using namespace klut;

TEST_CASE("parallel table generation is byte-identical to serial") {
  TableGenOptions serial;
  serial.parallel = false;
  TableGenOptions parallel;
  parallel.parallel = true;

  struct Shape {
    std::uint32_t base;
    std::uint32_t m;
  };
  for (const auto& shape : {Shape{10, 2}, Shape{2, 6}, Shape{31, 2},
                            Shape{1000, 1}, Shape{10, 3}}) {
    const auto reference = generate_table(Base(shape.base), shape.m, serial);
    const auto threaded = generate_table(Base(shape.base), shape.m, parallel);
    CHECK(reference.raw_bytes() == threaded.raw_bytes());
    CHECK(reference.side() == threaded.side());
  }
}

TEST_CASE("parallel nblock matches the serial reference, ledger included") {
  std::mt19937_64 rng(601);
  const auto table = generate_table(Base(10), 2);
  const auto table_leaf = as_leaf_multiplier(table);

  for (const std::uint32_t n : {1u, 3u, 4u, 7u}) {
    for (int i = 0; i < 40; ++i) {
      const std::size_t m = 2;
      const std::size_t max_len = (n + 1) * m;
      const auto a = oracle::random_exact(Base(10), 1 + rng() % max_len, rng);
      const auto b = oracle::random_exact(Base(10), 1 + rng() % max_len, rng);

      CostLedger serial_ledger, parallel_ledger;
      const auto serial_product =
          nblock_mul(a, b, n, m, table_leaf, serial_ledger);
      const auto parallel_product =
          nblock_mul_parallel(a, b, n, m, table_leaf, parallel_ledger);
      CHECK(serial_product == parallel_product);
      CHECK(serial_ledger == parallel_ledger);
    }
  }
}

TEST_CASE("parallel nblock with a schoolbook leaf on long operands") {
  std::mt19937_64 rng(607);
  for (const std::uint32_t base_value : {2u, 256u}) {
    const Base base(base_value);
    const std::uint32_t n = 15;
    const std::size_t m = 8;
    const auto a = oracle::random_exact(base, (n + 1) * m, rng);
    const auto b = oracle::random_exact(base, (n + 1) * m, rng);

    CostLedger serial_ledger, parallel_ledger;
    const auto leaf = schoolbook_leaf(m);
    const auto expected = nblock_mul(a, b, n, m, leaf, serial_ledger);
    const auto actual =
        nblock_mul_parallel(a, b, n, m, leaf, parallel_ledger);
    CHECK(expected == actual);
    CHECK(serial_ledger == parallel_ledger);
  }
}

TEST_CASE("concurrent lookups against one shared table") {
  const auto table = generate_table(Base(10), 2);
  const int workers = 8;
  std::vector<CostLedger> ledgers(workers);
  std::vector<bool> ok(workers, false);

#ifdef _OPENMP
#pragma omp parallel for num_threads(workers)
#endif
  for (int w = 0; w < workers; ++w) {
    std::mt19937_64 rng(1000 + static_cast<unsigned>(w));
    CostLedger scratch;
    bool all_good = true;
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t av = rng() % 100;
      const std::uint64_t bv = rng() % 100;
      const auto product =
          table_lookup(table, Natural::from_value(Base(10), av),
                       Natural::from_value(Base(10), bv), ledgers[w]);
      all_good = all_good && oracle::has_value(product, av * bv);
      (void)scratch;
    }
    ok[w] = all_good;
  }

  for (int w = 0; w < workers; ++w) {
    CHECK(ok[w]);
    CHECK(ledgers[w].table_lookups == 2000);
    CHECK(ledgers[w].comparisons == 2000 * table.lookup_cost());
  }
}
