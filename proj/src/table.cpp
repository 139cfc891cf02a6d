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

#include "klut/table.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>

#include "klut/cost_model.hpp"

namespace klut {

namespace {

constexpr char kMagic[4] = {'K', 'L', 'U', 'T'};
constexpr std::uint8_t kFormatVersion = 1;
constexpr std::uint64_t kHeaderBytes = 13;

std::uint8_t width_for_base(Base base) {
  return base.value() <= 256 ? 1 : 2;
}

struct TableDims {
  bool fits_u64 = false;
  std::uint64_t side = 0;
  std::uint64_t payload_bytes = 0;
  long double approx_entries = 0;
  long double approx_payload = 0;
};

TableDims compute_dims(Base base, std::uint32_t m) {
  TableDims dims;
  const std::uint8_t width = width_for_base(base);
  dims.approx_entries =
      std::pow(static_cast<long double>(base.value()), 2.0L * m);
  dims.approx_payload = dims.approx_entries * 2.0L * m * width;

  unsigned __int128 side = 1;
  bool overflow = false;
  for (std::uint32_t i = 0; i < m; ++i) {
    side *= base.value();
    // Anything past 2^32 per side cannot yield a 64-bit payload anyway.
    if (side > (static_cast<unsigned __int128>(1) << 32)) {
      overflow = true;
      break;
    }
  }
  if (!overflow) {
    const unsigned __int128 payload = side * side * (2ull * m) * width;
    if (payload <= UINT64_MAX) {
      dims.fits_u64 = true;
      dims.side = static_cast<std::uint64_t>(side);
      dims.payload_bytes = static_cast<std::uint64_t>(payload);
    }
  }
  return dims;
}

std::string format_approx(long double v) {
  char buf[64];
  if (v < 1e15L) {
    std::snprintf(buf, sizeof(buf), "%.0Lf", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.3Le", v);
  }
  return buf;
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t read_u32_le(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw FormatError("truncated header");
  return static_cast<std::uint32_t>(bytes[0]) |
         (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

// Writes a product as exactly 2m fixed-width digits at the entry offset.
void encode_entry(std::vector<std::uint8_t>& bytes, std::uint64_t index,
                  std::uint32_t m, std::uint8_t width,
                  const Natural& product) {
  const std::size_t offset =
      static_cast<std::size_t>(index) * 2 * m * width;
  const auto& digits = product.digits();
  for (std::uint32_t d = 0; d < 2 * m; ++d) {
    const std::uint32_t v = d < digits.size() ? digits[d] : 0;
    bytes[offset + static_cast<std::size_t>(d) * width] =
        static_cast<std::uint8_t>(v & 0xff);
    if (width == 2) {
      bytes[offset + static_cast<std::size_t>(d) * width + 1] =
          static_cast<std::uint8_t>((v >> 8) & 0xff);
    }
  }
}

std::uint64_t operand_value(const ProductTable& t, const Natural& a,
                            const char* who) {
  if (a.base() != t.base()) {
    throw Error(std::string(who) + ": operand base " +
                std::to_string(a.base().value()) + " does not match table base " +
                std::to_string(t.base().value()));
  }
  if (a.digit_count() > t.m()) {
    throw Error(std::string(who) + ": operand has " +
                std::to_string(a.digit_count()) + " digits, table holds " +
                std::to_string(t.m()) + "-digit operands");
  }
  std::uint64_t v = 0;
  for (std::size_t i = a.digit_count(); i-- > 0;) {
    v = v * t.base().value() + a.digits()[i];
  }
  return v;
}

}  // namespace

ProductTable::ProductTable(Base base, std::uint32_t m, std::uint64_t side,
                           std::uint8_t digit_width,
                           std::vector<std::uint8_t> bytes)
    : base_(base),
      m_(m),
      digit_width_(digit_width),
      side_(side),
      lookup_cost_(lookup_ops(m, base)),
      bytes_(std::move(bytes)) {}

Natural ProductTable::entry(std::uint64_t a_value,
                            std::uint64_t b_value) const {
  if (a_value >= side_ || b_value >= side_) {
    throw Error("entry: operand value out of table range");
  }
  const std::uint64_t index = a_value * side_ + b_value;
  const std::size_t offset =
      static_cast<std::size_t>(index) * 2 * m_ * digit_width_;
  std::vector<std::uint32_t> digits(2 * m_);
  for (std::uint32_t d = 0; d < 2 * m_; ++d) {
    std::uint32_t v = bytes_[offset + static_cast<std::size_t>(d) * digit_width_];
    if (digit_width_ == 2) {
      v |= static_cast<std::uint32_t>(
               bytes_[offset + static_cast<std::size_t>(d) * digit_width_ + 1])
           << 8;
    }
    digits[d] = v;
  }
  return Natural::from_digits(base_, std::move(digits));
}

ProductTable generate_table(Base base, std::uint32_t m,
                            const TableGenOptions& options) {
  if (m < 1) throw Error("generate_table: m must be at least 1");
  const TableDims dims = compute_dims(base, m);
  if (!dims.fits_u64 ||
      dims.payload_bytes + kHeaderBytes > options.memory_budget_bytes) {
    const long double required = dims.approx_payload + kHeaderBytes;
    throw BudgetError(
        "generate_table: base " + std::to_string(base.value()) + ", m " +
            std::to_string(m) + " needs about " +
            format_approx(dims.approx_entries) + " entries and " +
            format_approx(required) + " bytes, over the budget of " +
            std::to_string(options.memory_budget_bytes) +
            " bytes (set KLUT_MEMORY_BUDGET_BYTES to raise it)",
        static_cast<double>(required), options.memory_budget_bytes);
  }

  const std::uint8_t width = width_for_base(base);
  const std::uint64_t side = dims.side;
  std::vector<std::uint8_t> bytes(dims.payload_bytes, 0);

  // One Natural per operand value, shared by every row.
  std::vector<Natural> operands;
  operands.reserve(static_cast<std::size_t>(side));
  for (std::uint64_t v = 0; v < side; ++v) {
    operands.push_back(Natural::from_value(base, v));
  }

  if (options.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(side); ++a) {
      CostLedger scratch;
      for (std::uint64_t b = 0; b < side; ++b) {
        const Natural product =
            schoolbook_mul(operands[static_cast<std::size_t>(a)],
                           operands[static_cast<std::size_t>(b)], scratch);
        encode_entry(bytes, static_cast<std::uint64_t>(a) * side + b, m, width,
                     product);
      }
    }
  } else {
    CostLedger scratch;
    for (std::uint64_t a = 0; a < side; ++a) {
      for (std::uint64_t b = 0; b < side; ++b) {
        const Natural product =
            schoolbook_mul(operands[static_cast<std::size_t>(a)],
                           operands[static_cast<std::size_t>(b)], scratch);
        encode_entry(bytes, a * side + b, m, width, product);
      }
    }
  }

  return ProductTable(base, m, side, width, std::move(bytes));
}

Natural table_lookup(const ProductTable& t, const Natural& a, const Natural& b,
                     CostLedger& ledger) {
  if (a.base() != b.base()) throw Error("table_lookup: base mismatch");
  const std::uint64_t av = operand_value(t, a, "table_lookup");
  const std::uint64_t bv = operand_value(t, b, "table_lookup");
  ledger.table_lookups += 1;
  ledger.comparisons += t.lookup_cost();
  return t.entry(av, bv);
}

std::uint64_t save_table(const ProductTable& t, std::ostream& out) {
  out.write(kMagic, 4);
  out.put(static_cast<char>(kFormatVersion));
  write_u32_le(out, t.base().value());
  write_u32_le(out, t.m());
  out.write(reinterpret_cast<const char*>(t.raw_bytes().data()),
            static_cast<std::streamsize>(t.raw_bytes().size()));
  if (!out) {
    throw Error("save_table: write failed after " +
                std::to_string(kHeaderBytes + t.raw_bytes().size()) +
                " bytes attempted");
  }
  return kHeaderBytes + t.raw_bytes().size();
}

ProductTable load_table(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || magic[0] != 'K' || magic[1] != 'L' || magic[2] != 'U' ||
      magic[3] != 'T') {
    throw FormatError("bad magic: not a KLUT stream");
  }
  const int version = in.get();
  if (version != kFormatVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  const std::uint32_t base_value = read_u32_le(in);
  if (base_value < 2 || base_value > 65536) {
    throw FormatError("invalid base " + std::to_string(base_value));
  }
  const std::uint32_t m = read_u32_le(in);
  if (m < 1) throw FormatError("invalid block size 0");
  const Base base(base_value);

  const TableDims dims = compute_dims(base, m);
  if (!dims.fits_u64) {
    throw FormatError("declared table size overflows 64 bits");
  }
  std::vector<std::uint8_t> bytes(dims.payload_bytes);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::uint64_t>(in.gcount()) != bytes.size()) {
    throw FormatError("truncated entries: expected " +
                      std::to_string(bytes.size()) + " payload bytes, got " +
                      std::to_string(in.gcount()));
  }
  if (in.peek() != std::istream::traits_type::eof()) {
    throw FormatError("trailing bytes after entry payload");
  }
  return ProductTable(base, m, dims.side, width_for_base(base),
                      std::move(bytes));
}

VerifyReport verify_table(const ProductTable& t,
                          std::optional<std::uint64_t> samples) {
  VerifyReport report;
  CostLedger scratch;

  auto check = [&](std::uint64_t a, std::uint64_t b) {
    const Natural na = Natural::from_value(t.base(), a);
    const Natural nb = Natural::from_value(t.base(), b);
    const Natural expected = schoolbook_mul(na, nb, scratch);
    const Natural actual = t.entry(a, b);
    ++report.checked;
    if (actual != expected) {
      if (report.mismatches == 0) {
        report.first_bad_a = a;
        report.first_bad_b = b;
        report.first_expected = to_text(expected);
        report.first_actual = to_text(actual);
      }
      ++report.mismatches;
    }
  };

  if (!samples.has_value()) {
    for (std::uint64_t a = 0; a < t.side(); ++a) {
      for (std::uint64_t b = 0; b < t.side(); ++b) check(a, b);
    }
  } else {
    std::mt19937_64 rng(0x6b6c7574u);  // fixed seed: sampling is reproducible
    std::uniform_int_distribution<std::uint64_t> pick(0, t.side() - 1);
    for (std::uint64_t i = 0; i < *samples; ++i) check(pick(rng), pick(rng));
  }
  return report;
}

LeafMultiplier as_leaf_multiplier(const ProductTable& t) {
  LeafMultiplier leaf;
  leaf.max_operand_digits = t.m();
  leaf.multiply = [&t](const Natural& a, const Natural& b,
                       CostLedger& ledger) {
    return table_lookup(t, a, b, ledger);
  };
  return leaf;
}

}  // namespace klut
