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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "klut/natural.hpp"
#include "oracle.hpp"

using namespace klut;

TEST_CASE("base range is enforced") {
  CHECK_THROWS_AS(Base(1), Error);
  CHECK_THROWS_AS(Base(0), Error);
  CHECK_THROWS_AS(Base(65537), Error);
  CHECK_NOTHROW(Base(2));
  CHECK_NOTHROW(Base(65536));
}

TEST_CASE("fresh ledger is all zeros") {
  CostLedger ledger;
  CHECK(ledger == CostLedger{});
  CHECK(ledger.single_digit_mults == 0);
  CHECK(ledger.comparisons == 0);
}

TEST_CASE("from_text parses positional notation") {
  const Base b10(10);
  CHECK(from_text("0", b10).is_zero());
  CHECK(from_text("0", b10).digits().empty());
  CHECK(from_text("1234", b10).digits() ==
        std::vector<std::uint32_t>{4, 3, 2, 1});
  CHECK(from_text("000", b10).is_zero());
  CHECK(from_text("00012", b10).digits() == std::vector<std::uint32_t>{2, 1});

  const Base b16(16);
  CHECK(from_text("ff", b16).digits() == std::vector<std::uint32_t>{15, 15});
  CHECK(from_text("FF", b16).digits() == std::vector<std::uint32_t>{15, 15});
}

TEST_CASE("from_text for bases above 36 takes dot-separated digit values") {
  const Base b256(256);
  CHECK(from_text("255", b256).digits() == std::vector<std::uint32_t>{255});
  CHECK(from_text("12.255", b256).digits() ==
        std::vector<std::uint32_t>{255, 12});
  CHECK(to_text(from_text("255", b256)) == "255");
  CHECK_THROWS_AS(from_text("1..2", b256), ParseError);
  CHECK_THROWS_AS(from_text("300", b256), ParseError);
  CHECK_THROWS_AS(from_text("1.x", b256), ParseError);
}

TEST_CASE("from_text rejects bad digits and names the position") {
  const Base b10(10);
  CHECK_THROWS_AS(from_text("", b10), ParseError);
  CHECK_THROWS_AS(from_text("12a4", b10), ParseError);
  CHECK_THROWS_WITH_AS(from_text("1!4", b10),
                       doctest::Contains("position 1"), ParseError);
  const Base b2(2);
  CHECK_THROWS_AS(from_text("102", b2), ParseError);
}

TEST_CASE("to_text round-trips") {
  CHECK(to_text(Natural(Base(10))) == "0");
  CHECK(to_text(from_text("1234", Base(10))) == "1234");

  std::mt19937_64 rng(42);
  for (const std::uint32_t base_value : {2u, 10u, 36u, 256u, 65536u}) {
    const Base base(base_value);
    for (int i = 0; i < 200; ++i) {
      const auto n = oracle::random_exact(base, 1 + rng() % 20, rng);
      CHECK(from_text(to_text(n), base) == n);
    }
  }
}

TEST_CASE("add matches the reference and counts positions") {
  const Base b10(10);
  CostLedger ledger;

  SUBCASE("identity") {
    const auto x = from_text("987", b10);
    CHECK(add(Natural(b10), x, ledger) == x);
    CHECK(ledger.digit_adds == 3);
  }

  SUBCASE("carry chain") {
    const auto sum = add(from_text("999", b10), from_text("1", b10), ledger);
    CHECK(to_text(sum) == "1000");
    CHECK(ledger.digit_adds == 3);  // one per position, carry included
  }

  SUBCASE("random cross-check") {
    std::mt19937_64 rng(7);
    for (const std::uint32_t base_value : {2u, 10u, 256u}) {
      const Base base(base_value);
      for (int i = 0; i < 500; ++i) {
        const auto a = oracle::random_exact(base, 1 + rng() % 30, rng);
        const auto b = oracle::random_exact(base, 1 + rng() % 30, rng);
        const auto sum = add(a, b, ledger);
        CHECK(oracle::cmp(oracle::from_natural(sum),
                          oracle::add(oracle::from_natural(a),
                                      oracle::from_natural(b))) == 0);
      }
    }
  }

  SUBCASE("base mismatch") {
    CHECK_THROWS_AS(add(Natural(b10), Natural(Base(2)), ledger), Error);
  }
}

TEST_CASE("sub inverts add and counts len(a) positions") {
  const Base b10(10);
  CostLedger ledger;

  const auto x = from_text("123456", b10);
  CHECK(sub(x, Natural(b10), ledger) == x);
  CHECK(ledger.digit_subs == 6);
  CHECK(sub(x, x, ledger).is_zero());

  CHECK_THROWS_AS(sub(from_text("5", b10), from_text("6", b10), ledger),
                  Error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto a = oracle::random_exact(b10, 1 + rng() % 25, rng);
    auto b = oracle::random_exact(b10, 1 + rng() % 25, rng);
    if (compare(a, b) == Ordering::less) std::swap(a, b);
    CHECK(add(sub(a, b, ledger), b, ledger) == a);
  }
}

TEST_CASE("compare is consistent and charges only when ledgered") {
  const Base b10(10);
  CHECK(compare(Natural(b10), Natural(b10)) == Ordering::equal);
  CHECK(compare(from_text("9", b10), from_text("10", b10)) == Ordering::less);
  CHECK(compare(from_text("10", b10), from_text("9", b10)) ==
        Ordering::greater);

  CostLedger ledger;
  compare(from_text("4", b10), from_text("4", b10), ledger);
  CHECK(ledger.comparisons == 1);

  CHECK_THROWS_AS(compare(Natural(b10), Natural(Base(16))), Error);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_exact(b10, 1 + rng() % 12, rng);
    const auto b = oracle::random_exact(b10, 1 + rng() % 12, rng);
    const int expected =
        oracle::cmp(oracle::from_natural(a), oracle::from_natural(b));
    const Ordering got = compare(a, b);
    CHECK((expected < 0 ? Ordering::less
                        : expected > 0 ? Ordering::greater : Ordering::equal) ==
          got);
  }
}

TEST_CASE("shift_up appends zeros and costs nothing") {
  const Base b10(10);
  CHECK(shift_up(Natural(b10), 5).is_zero());
  CHECK(to_text(shift_up(from_text("12", b10), 2)) == "1200");

  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_exact(b10, 1 + rng() % 10, rng);
    const std::size_t k = rng() % 8;
    const auto shifted = shift_up(a, k);
    CHECK(to_text(shifted) == to_text(a) + std::string(k, '0'));
  }
}

TEST_CASE("split_blocks splits, pads and rejoins") {
  const Base b10(10);
  CostLedger ledger;

  const auto parts = split_blocks(from_text("1234", b10), 2, 2);
  REQUIRE(parts.size() == 2);
  CHECK(to_text(parts[0]) == "34");
  CHECK(to_text(parts[1]) == "12");

  const auto padded = split_blocks(from_text("7", b10), 2, 2);
  CHECK(to_text(padded[0]) == "7");
  CHECK(padded[1].is_zero());

  CHECK_THROWS_AS(split_blocks(from_text("12345", b10), 2, 2), Error);
  CHECK_THROWS_AS(split_blocks(from_text("1", b10), 0, 2), Error);

  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_exact(b10, 1 + rng() % 24, rng);
    const std::size_t m = 1 + rng() % 6;
    const std::size_t count = (a.digit_count() + m - 1) / m + rng() % 3;
    const auto blocks = split_blocks(a, m, count);
    Natural joined(b10);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      joined = add(joined, shift_up(blocks[b], b * m), ledger);
    }
    CHECK(joined == a);
  }
}

TEST_CASE("schoolbook_mul is the oracle-grade reference") {
  const Base b10(10);
  CostLedger ledger;

  SUBCASE("zero short-circuits with zero mult count") {
    const auto product = schoolbook_mul(from_text("123", b10), Natural(b10),
                                        ledger);
    CHECK(product.is_zero());
    CHECK(ledger.single_digit_mults == 0);
  }

  SUBCASE("known product") {
    const auto p =
        schoolbook_mul(from_text("1234", b10), from_text("5678", b10), ledger);
    CHECK(to_text(p) == "7006652");
    CHECK(ledger.single_digit_mults == 16);
  }

  SUBCASE("count is the full grid") {
    CostLedger grid;
    schoolbook_mul(from_text("123", b10), from_text("4567", b10), grid);
    CHECK(grid.single_digit_mults == 12);
  }

  SUBCASE("matches repeated addition exhaustively below 100x100") {
    CostLedger scratch;
    for (std::uint32_t a = 0; a < 100; ++a) {
      const auto na = Natural::from_value(b10, a);
      for (std::uint32_t b = 0; b < 100; ++b) {
        const auto nb = Natural::from_value(b10, b);
        Natural repeated(b10);
        for (std::uint32_t i = 0; i < b; ++i) {
          repeated = add(repeated, na, scratch);
        }
        CHECK(schoolbook_mul(na, nb, scratch) == repeated);
      }
    }
  }

  SUBCASE("commutative and matches the reference on random operands") {
    std::mt19937_64 rng(23);
    for (const std::uint32_t base_value : {2u, 10u, 256u, 65536u}) {
      const Base base(base_value);
      for (int i = 0; i < 300; ++i) {
        const auto a = oracle::random_exact(base, 1 + rng() % 20, rng);
        const auto b = oracle::random_exact(base, 1 + rng() % 20, rng);
        const auto ab = schoolbook_mul(a, b, ledger);
        CHECK(schoolbook_mul(b, a, ledger) == ab);
        CHECK(oracle::cmp(oracle::from_natural(ab),
                          oracle::mul(oracle::from_natural(a),
                                      oracle::from_natural(b))) == 0);
      }
    }
  }
}

TEST_CASE("operations keep the representation canonical") {
  std::mt19937_64 rng(29);
  const Base b10(10);
  CostLedger ledger;
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_exact(b10, 1 + rng() % 15, rng);
    auto b = oracle::random_exact(b10, 1 + rng() % 15, rng);
    if (compare(a, b) == Ordering::less) std::swap(a, b);
    for (const Natural& n :
         {add(a, b, ledger), sub(a, b, ledger), schoolbook_mul(a, b, ledger),
          shift_up(a, 3)}) {
      CHECK((n.digits().empty() || n.digits().back() != 0));
    }
  }
}

TEST_CASE("ledger counters never decrease") {
  const Base b10(10);
  CostLedger ledger;
  std::mt19937_64 rng(31);
  CostLedger before = ledger;
  for (int i = 0; i < 100; ++i) {
    auto a = oracle::random_exact(b10, 1 + rng() % 10, rng);
    auto b = oracle::random_exact(b10, 1 + rng() % 10, rng);
    if (compare(a, b) == Ordering::less) std::swap(a, b);
    add(a, b, ledger);
    sub(a, b, ledger);
    schoolbook_mul(a, b, ledger);
    compare(a, b, ledger);
    CHECK(ledger.digit_adds >= before.digit_adds);
    CHECK(ledger.digit_subs >= before.digit_subs);
    CHECK(ledger.single_digit_mults >= before.single_digit_mults);
    CHECK(ledger.comparisons >= before.comparisons);
    before = ledger;
  }
}

TEST_CASE("ledger merge sums every counter") {
  CostLedger a;
  a.single_digit_mults = 3;
  a.digit_adds = 5;
  CostLedger b;
  b.single_digit_mults = 2;
  b.table_lookups = 7;
  b.comparisons = 1;
  a += b;
  CHECK(a.single_digit_mults == 5);
  CHECK(a.digit_adds == 5);
  CHECK(a.table_lookups == 7);
  CHECK(a.comparisons == 1);
}

TEST_CASE("to_uint64 bounds") {
  const Base b256(256);
  CHECK(to_uint64(Natural::from_value(b256, 0xdeadbeefULL)) == 0xdeadbeefULL);
  CHECK(to_uint64(Natural(b256)) == 0);
  // 2^64 itself no longer fits.
  auto big = shift_up(Natural::from_value(b256, 1), 8);
  CHECK_THROWS_AS(to_uint64(big), Error);
}
