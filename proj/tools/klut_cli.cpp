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
// klut command line: generate and verify product tables, multiply under any
// strategy with operation counts, and emit the cost-model datasets as CSV.
//
// Exit codes: 0 success, 1 usage error, 2 verification/correctness failure,
// 3 resource refusal.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "klut/cost_model.hpp"
#include "klut/karatsuba.hpp"
#include "klut/nblock.hpp"
#include "klut/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitRefused = 3;

std::uint64_t memory_budget_from_env() {
  const char* raw = std::getenv("KLUT_MEMORY_BUDGET_BYTES");
  if (raw == nullptr || *raw == '\0') return klut::kDefaultTableBudgetBytes;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw klut::Error(
        "KLUT_MEMORY_BUDGET_BYTES must be a positive byte count, got '" +
        std::string(raw) + "'");
  }
  return value;
}

klut::ProductTable load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw klut::Error("cannot open table file '" + path + "'");
  return klut::load_table(in);
}

void print_counts(std::ostream& out, const klut::CostLedger& ledger) {
  out << "single_digit_mults=" << ledger.single_digit_mults << '\n'
      << "table_lookups=" << ledger.table_lookups << '\n'
      << "digit_adds=" << ledger.digit_adds << '\n'
      << "digit_subs=" << ledger.digit_subs << '\n'
      << "block_adds=" << ledger.block_adds << '\n'
      << "block_subs=" << ledger.block_subs << '\n'
      << "comparisons=" << ledger.comparisons << '\n';
}

std::string format_double(double v) {
  if (v == static_cast<double>(static_cast<std::uint64_t>(v))) {
    return std::to_string(static_cast<std::uint64_t>(v));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct MulSettings {
  std::string algo = "school";
  std::uint32_t base = 10;
  std::uint32_t leaf_digits = 0;  // 0: pick a default per algorithm
  std::uint32_t blocks = 0;       // N; nblock family requires >= 1
  std::uint32_t block_digits = 0; // 0: derive from operand length
  std::string table_path;
};

// Runs one multiplication under the named strategy. The returned table
// pointer keeps a loaded table alive for the duration of the call chain.
klut::Natural run_algorithm(const MulSettings& s, const klut::Natural& a,
                            const klut::Natural& b, klut::CostLedger& ledger) {
  const std::size_t max_len = std::max(a.digit_count(), b.digit_count());

  if (s.algo == "school") {
    return klut::schoolbook_mul(a, b, ledger);
  }

  if (s.algo == "karatsuba") {
    const std::uint32_t leaf_digits = s.leaf_digits == 0 ? 1 : s.leaf_digits;
    klut::KaratsubaConfig cfg{
        leaf_digits, leaf_digits == 1 ? klut::single_digit_multiplier()
                                      : klut::schoolbook_leaf(leaf_digits)};
    return klut::karatsuba_mul(a, b, cfg, ledger);
  }

  if (s.algo == "nblock") {
    if (s.blocks < 1) {
      throw klut::Error("nblock needs --blocks N with N >= 1");
    }
    std::size_t m = s.block_digits;
    if (m == 0) m = std::max<std::size_t>(1, (max_len + s.blocks) / (s.blocks + 1));
    return klut::nblock_mul(a, b, s.blocks, m, klut::schoolbook_leaf(
                                static_cast<std::uint32_t>(m)), ledger);
  }

  if (s.algo == "hybrid-karatsuba") {
    if (s.table_path.empty()) {
      throw klut::Error("hybrid-karatsuba needs --table");
    }
    const auto table = load_table_file(s.table_path);
    const std::uint32_t leaf_digits =
        s.leaf_digits == 0 ? table.m() : s.leaf_digits;
    klut::KaratsubaConfig cfg{leaf_digits, klut::as_leaf_multiplier(table)};
    return klut::karatsuba_mul(a, b, cfg, ledger);
  }

  if (s.algo == "hybrid-nblock") {
    if (s.table_path.empty()) {
      throw klut::Error("hybrid-nblock needs --table");
    }
    if (s.blocks < 1) {
      throw klut::Error("hybrid-nblock needs --blocks N with N >= 1");
    }
    const auto table = load_table_file(s.table_path);
    return klut::nblock_mul(a, b, s.blocks, table.m(),
                            klut::as_leaf_multiplier(table), ledger);
  }

  throw klut::Error("unknown algorithm '" + s.algo + "'");
}

int cmd_gen(std::uint32_t base, std::uint32_t m, const std::string& out_path) {
  klut::TableGenOptions options;
  options.memory_budget_bytes = memory_budget_from_env();
  const auto table = klut::generate_table(klut::Base(base), m, options);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw klut::Error("cannot open '" + out_path + "' for writing");
  const std::uint64_t bytes = klut::save_table(table, out);
  out.close();
  if (!out) throw klut::Error("write to '" + out_path + "' failed");

  std::cout << "entries=" << table.entry_count() << " bytes=" << bytes
            << " out=" << out_path << '\n';
  return kExitOk;
}

int cmd_mul(const MulSettings& settings, const std::string& a_text,
            const std::string& b_text, bool counts) {
  const klut::Base base(settings.base);
  const auto a = klut::from_text(a_text, base);
  const auto b = klut::from_text(b_text, base);
  klut::CostLedger ledger;
  const auto product = run_algorithm(settings, a, b, ledger);
  std::cout << klut::to_text(product) << '\n';
  if (counts) print_counts(std::cout, ledger);
  return kExitOk;
}

int cmd_verify(const std::string& table_path, std::uint64_t samples,
               bool exhaustive) {
  const auto table = load_table_file(table_path);
  const auto report = klut::verify_table(
      table, exhaustive ? std::nullopt : std::optional(samples));
  if (report.ok()) {
    std::cout << "checked=" << report.checked << " mismatches=0 ok\n";
    return kExitOk;
  }
  std::cerr << "checked=" << report.checked
            << " mismatches=" << report.mismatches << " first at ("
            << report.first_bad_a << ", " << report.first_bad_b
            << "): expected " << report.first_expected << ", found "
            << report.first_actual << '\n';
  return kExitVerification;
}

void write_csv(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw klut::Error("cannot open '" + out_path + "' for writing");
  out << body;
}

int cmd_model_figure1(std::uint32_t n_steps, const std::string& out_path) {
  std::ostringstream csv;
  csv << "N,k,value\n";
  for (std::uint32_t k = 0; k <= n_steps; ++k) {
    csv << n_steps << ',' << k << ',' << klut::figure1_curve(n_steps, k)
        << '\n';
  }
  write_csv(out_path, csv.str());
  return kExitOk;
}

int cmd_model_rsa(const std::string& out_path) {
  const auto r = klut::rsa_scenario();
  std::ostringstream csv;
  csv << "quantity,exact,paper_estimate\n";
  csv << "flat_lookup_cost," << format_double(r.flat_lookup_cost) << ','
      << r.paper_flat_estimate << '\n';
  csv << "hybrid_cost," << r.hybrid_cost << ',' << r.paper_hybrid_estimate
      << '\n';
  csv << "nlogn_reference," << format_double(r.nlogn_reference) << ','
      << r.paper_nlogn_estimate << '\n';
  csv << "table_entries," << r.table_entries << ',' << r.table_entries
      << '\n';
  csv << "table_bytes_estimate," << r.table_bytes_estimate << ','
      << r.paper_table_bytes << '\n';
  write_csv(out_path, csv.str());
  return kExitOk;
}

int cmd_model_predict(std::uint64_t n, std::uint32_t blocks, std::uint32_t k,
                      std::uint32_t m, std::uint32_t base,
                      const std::string& out_path) {
  std::ostringstream csv;
  csv << "quantity,value\n";
  const auto total = klut::total_ops_prediction(n, blocks, k);
  csv << "total_ops,"
      << (total.is_integer() ? std::to_string(total.numerator)
                             : format_double(total.value()))
      << '\n';
  csv << "product_count," << klut::nblock_product_count(blocks) << '\n';
  const auto strategies = klut::strategy_lookup_counts(k);
  csv << "karatsuba_then_lookup," << strategies.karatsuba_then_lookup << '\n';
  csv << "block_then_lookup," << strategies.block_then_lookup << '\n';
  if (m > 0) {
    csv << "lookup_ops," << klut::lookup_ops(m, klut::Base(base)) << '\n';
  }
  write_csv(out_path, csv.str());
  return kExitOk;
}

int cmd_bench(const std::vector<std::uint64_t>& sizes,
              const std::vector<std::string>& algos, std::uint32_t base_value,
              std::uint32_t leaf_digits, std::uint32_t blocks,
              const std::string& table_path, std::uint64_t seed, bool timed,
              const std::string& out_path) {
  const klut::Base base(base_value);

  // One shared table load for the hybrid rows.
  std::unique_ptr<klut::ProductTable> table;
  for (const auto& algo : algos) {
    if (algo.rfind("hybrid", 0) == 0 && table == nullptr) {
      if (table_path.empty()) {
        throw klut::Error("bench with hybrid algorithms needs --table");
      }
      table = std::make_unique<klut::ProductTable>(load_table_file(table_path));
      if (table->base() != base) {
        throw klut::Error("table base does not match --base");
      }
    }
  }

  std::ostringstream csv;
  csv << "algorithm,digits,single_digit_mults,table_lookups,digit_adds,"
         "digit_subs,block_adds,block_subs,wall_time_ns\n";

  for (const std::uint64_t size : sizes) {
    if (size < 1) throw klut::Error("bench sizes must be at least 1");
    // Operands are a deterministic function of (seed, size).
    std::mt19937_64 rng(seed ^ (size * 0x9e3779b97f4a7c15ull));
    std::vector<std::uint32_t> a_digits(size), b_digits(size);
    for (auto& d : a_digits) d = static_cast<std::uint32_t>(rng() % base_value);
    for (auto& d : b_digits) d = static_cast<std::uint32_t>(rng() % base_value);
    a_digits[size - 1] = 1 + static_cast<std::uint32_t>(rng() % (base_value - 1));
    b_digits[size - 1] = 1 + static_cast<std::uint32_t>(rng() % (base_value - 1));
    const auto a = klut::Natural::from_digits(base, a_digits);
    const auto b = klut::Natural::from_digits(base, b_digits);

    std::optional<klut::Natural> reference;
    for (const auto& algo : algos) {
      MulSettings settings;
      settings.algo = algo;
      settings.base = base_value;
      settings.leaf_digits = leaf_digits;
      settings.table_path = table_path;
      if (algo == "nblock") {
        settings.blocks = blocks;
      } else if (algo == "hybrid-nblock") {
        const std::uint64_t m = table->m();
        settings.blocks = static_cast<std::uint32_t>(
            std::max<std::uint64_t>(1, (size + m - 1) / m - 1));
      }

      klut::CostLedger ledger;
      const auto start = std::chrono::steady_clock::now();
      const auto product = run_algorithm(settings, a, b, ledger);
      const auto stop = std::chrono::steady_clock::now();

      if (!reference.has_value()) {
        reference = product;
      } else if (product != *reference) {
        std::cerr << "product mismatch: " << algo << " disagrees at size "
                  << size << '\n';
        return kExitVerification;
      }

      const std::uint64_t wall_ns =
          timed ? static_cast<std::uint64_t>(
                      std::chrono::duration_cast<std::chrono::nanoseconds>(
                          stop - start)
                          .count())
                : 0;
      csv << algo << ',' << size << ',' << ledger.single_digit_mults << ','
          << ledger.table_lookups << ',' << ledger.digit_adds << ','
          << ledger.digit_subs << ',' << ledger.block_adds << ','
          << ledger.block_subs << ',' << wall_ns << '\n';
    }
  }

  write_csv(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arbitrary-precision multiplication with precomputed product tables"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a KLUT product table");
  std::uint32_t gen_base = 10, gen_m = 0;
  std::string gen_out;
  gen->add_option("--base", gen_base, "radix of the table operands")
      ->capture_default_str();
  gen->add_option("--m", gen_m, "operand digits per entry")->required();
  gen->add_option("--out", gen_out, "output file path")->required();

  // mul
  auto* mul = app.add_subcommand("mul", "multiply two numbers");
  MulSettings mul_settings;
  bool mul_counts = false;
  std::string mul_a, mul_b;
  mul->add_option("--algo", mul_settings.algo,
                  "school, karatsuba, nblock, hybrid-karatsuba, hybrid-nblock")
      ->capture_default_str()
      ->check(CLI::IsMember({"school", "karatsuba", "nblock",
                             "hybrid-karatsuba", "hybrid-nblock"}));
  mul->add_option("--base", mul_settings.base, "operand radix")
      ->capture_default_str();
  mul->add_option("--leaf", mul_settings.leaf_digits,
                  "leaf threshold in digits (karatsuba family)");
  mul->add_option("--blocks", mul_settings.blocks,
                  "N: split into N+1 blocks (nblock family)");
  mul->add_option("--block-digits", mul_settings.block_digits,
                  "digits per block (default: fit the operands)");
  mul->add_option("--table", mul_settings.table_path,
                  "KLUT table for hybrid algorithms");
  mul->add_flag("--counts", mul_counts, "print the operation counters");
  mul->add_option("a", mul_a, "left operand")->required();
  mul->add_option("b", mul_b, "right operand")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "recheck a table against "
                                              "schoolbook products");
  std::string verify_table_path;
  std::uint64_t verify_samples = 1000;
  bool verify_exhaustive = false;
  verify->add_option("--table", verify_table_path, "KLUT table path")
      ->required();
  verify->add_option("--samples", verify_samples,
                     "random entries to check")
      ->capture_default_str();
  verify->add_flag("--exhaustive", verify_exhaustive, "check every entry");

  // model
  auto* model = app.add_subcommand("model", "emit cost-model datasets as CSV");
  model->require_subcommand(1);
  model->fallthrough();  // lets --out appear after the mode name
  std::string model_out;
  model->add_option("--out", model_out, "write CSV here instead of stdout");

  auto* figure1 = model->add_subcommand(
      "figure1", "early-cutoff curve 3^k * 2^(N-k) for k in 0..N");
  std::uint32_t figure1_n = 6;
  figure1->add_option("--N", figure1_n, "number of divide steps")
      ->capture_default_str();

  auto* rsa = model->add_subcommand(
      "rsa", "the 500-digit/6-digit-block lookup scenario");

  auto* predict = model->add_subcommand(
      "predict", "formula predictions for a configuration");
  std::uint64_t predict_n = 0;
  std::uint32_t predict_blocks = 1, predict_k = 1, predict_m = 0,
                predict_base = 10;
  predict->add_option("--n", predict_n, "total operand digits")->required();
  predict->add_option("--N", predict_blocks, "blocks minus one")
      ->capture_default_str();
  predict->add_option("--k", predict_k, "reduction steps")
      ->capture_default_str();
  predict->add_option("--m", predict_m, "block digits (enables lookup_ops)");
  predict->add_option("--base", predict_base, "radix")->capture_default_str();

  // bench
  auto* bench = app.add_subcommand(
      "bench", "count-and-time strategies on deterministic operands");
  std::vector<std::uint64_t> bench_sizes;
  std::vector<std::string> bench_algos{"school", "karatsuba"};
  std::uint32_t bench_base = 10, bench_leaf = 0, bench_blocks = 4;
  std::string bench_table, bench_out;
  std::uint64_t bench_seed = 12345;
  bool bench_time = false;
  bench->add_option("--sizes", bench_sizes, "operand digit counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--algos", bench_algos, "algorithms to run")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--base", bench_base, "operand radix")
      ->capture_default_str();
  bench->add_option("--leaf", bench_leaf, "karatsuba leaf threshold");
  bench->add_option("--blocks", bench_blocks, "N for the nblock rows")
      ->capture_default_str();
  bench->add_option("--table", bench_table, "KLUT table for hybrid rows");
  bench->add_option("--seed", bench_seed, "operand generator seed")
      ->capture_default_str();
  bench->add_flag("--time", bench_time,
                  "record wall time (off by default so output is "
                  "byte-identical across runs)");
  bench->add_option("--out", bench_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_base, gen_m, gen_out);
    if (mul->parsed()) return cmd_mul(mul_settings, mul_a, mul_b, mul_counts);
    if (verify->parsed()) {
      return cmd_verify(verify_table_path, verify_samples, verify_exhaustive);
    }
    if (model->parsed()) {
      if (figure1->parsed()) return cmd_model_figure1(figure1_n, model_out);
      if (rsa->parsed()) return cmd_model_rsa(model_out);
      if (predict->parsed()) {
        return cmd_model_predict(predict_n, predict_blocks, predict_k,
                                 predict_m, predict_base, model_out);
      }
    }
    if (bench->parsed()) {
      return cmd_bench(bench_sizes, bench_algos, bench_base, bench_leaf,
                       bench_blocks, bench_table, bench_seed, bench_time,
                       bench_out);
    }
  } catch (const klut::BudgetError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const klut::FormatError& e) {
    std::cerr << "table format error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const klut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const klut::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
