// Copyright 2026 The Nikhilam Authors
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

#include "nikhilam/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "nikhilam/schoolbook.h"

namespace nikhilam {
namespace {

Natural random_exact_bits(std::uint64_t bits, std::mt19937_64& rng) {
  std::vector<Natural::Word> words((bits + 63) / 64);
  for (auto& w : words) w = rng();
  if (bits % 64 != 0) words.back() &= (Natural::Word{1} << (bits % 64)) - 1;
  words.back() |= Natural::Word{1} << ((bits - 1) % 64);
  return Natural::from_words(std::move(words));
}

void write_row(std::ostream& out, const BenchRecord& r) {
  out << algorithm_name(r.algorithm) << ',' << r.bits << ',' << r.trial << ','
      << r.elapsed_ns << ',' << r.ops.digit_mults << ',' << r.ops.adds << ','
      << r.ops.subs << ',' << r.ops.shifts << ',' << r.ops.exact_divisions
      << '\n';
}

std::uint64_t parse_field(const std::string& field, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("bad integer field '" + field + "' on CSV line " +
                         std::to_string(line),
                     line);
  }
  return v;
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::pair<Natural, Natural> bench_operands(std::uint64_t bits,
                                           std::uint64_t trial,
                                           std::uint64_t seed) {
  if (bits == 0) throw DomainError("bench operand size must be at least 1 bit");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(bits),
                    static_cast<std::uint32_t>(bits >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  Natural a = random_exact_bits(bits, rng);
  Natural b = random_exact_bits(bits, rng);
  return {std::move(a), std::move(b)};
}

std::vector<BenchRecord> bench_run(const std::vector<Algorithm>& algorithms,
                                   const std::vector<std::uint64_t>& sizes,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const HybridConfig& cfg) {
  if (trials < 1) throw DomainError("bench needs at least one trial");
  if (sizes.empty()) throw DomainError("bench needs at least one size");
  validate(cfg);

  std::vector<Algorithm> algos = algorithms;
  std::sort(algos.begin(), algos.end());
  algos.erase(std::unique(algos.begin(), algos.end()), algos.end());
  const std::vector<std::uint64_t> bit_sizes = sorted_unique(sizes);

  std::vector<BenchRecord> records;
  records.reserve(algos.size() * bit_sizes.size() * trials);
  for (std::uint64_t bits : bit_sizes) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      const auto [a, b] = bench_operands(bits, trial, seed);
      const Natural reference = school_mul(a, b);
      for (Algorithm algo : algos) {
        const auto start = std::chrono::steady_clock::now();
        const Natural product = multiply(algo, a, b, cfg);
        const auto stop = std::chrono::steady_clock::now();

        const MeteredResult metered = metered_call(algo, a, b, cfg);
        if (product != reference || metered.value != reference) {
          throw BenchMismatchError(
              "product mismatch: algorithm=" +
              std::string(algorithm_name(algo)) +
              " bits=" + std::to_string(bits) +
              " trial=" + std::to_string(trial) +
              " seed=" + std::to_string(seed));
        }

        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                .count();
        records.push_back({algo, bits, trial,
                           std::max<std::uint64_t>(1, ns), metered.ops});
      }
    }
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& x, const BenchRecord& y) {
                     if (x.algorithm != y.algorithm) {
                       return x.algorithm < y.algorithm;
                     }
                     if (x.bits != y.bits) return x.bits < y.bits;
                     return x.trial < y.trial;
                   });
  return records;
}

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  const auto old_mask = out.exceptions();
  out.exceptions(std::ios_base::badbit | std::ios_base::failbit);
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) write_row(out, r);
  out.flush();
  out.exceptions(old_mask);
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError("missing or wrong CSV header", 0);
  }
  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 9) {
      throw ParseError("expected 9 fields on CSV line " +
                           std::to_string(line_no),
                       line_no);
    }
    const auto algo = parse_algorithm(fields[0]);
    if (!algo) {
      throw ParseError("unknown algorithm '" + fields[0] + "' on CSV line " +
                           std::to_string(line_no),
                       line_no);
    }
    BenchRecord r;
    r.algorithm = *algo;
    r.bits = parse_field(fields[1], line_no);
    r.trial = parse_field(fields[2], line_no);
    r.elapsed_ns = parse_field(fields[3], line_no);
    r.ops.radix = 2;
    r.ops.digit_mults = parse_field(fields[4], line_no);
    r.ops.adds = parse_field(fields[5], line_no);
    r.ops.subs = parse_field(fields[6], line_no);
    r.ops.shifts = parse_field(fields[7], line_no);
    r.ops.exact_divisions = parse_field(fields[8], line_no);
    records.push_back(r);
  }
  return records;
}

std::vector<SweepRecord> threshold_sweep(
    const std::vector<std::uint64_t>& thresholds,
    const std::vector<std::uint64_t>& sizes, std::uint64_t trials,
    std::uint64_t seed, BaseCase base_case) {
  const Algorithm algo = base_case == BaseCase::kNikhilam
                             ? Algorithm::kKaratsubaHybrid
                             : Algorithm::kKaratsubaPlain;
  std::vector<SweepRecord> out;
  for (std::uint64_t t : sorted_unique(thresholds)) {
    HybridConfig cfg{t, base_case};
    for (BenchRecord& r : bench_run({algo}, sizes, trials, seed, cfg)) {
      out.push_back({t, std::move(r)});
    }
  }
  return out;
}

void emit_sweep_csv(const std::vector<SweepRecord>& records,
                    std::ostream& out) {
  const auto old_mask = out.exceptions();
  out.exceptions(std::ios_base::badbit | std::ios_base::failbit);
  out << "threshold," << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << r.threshold << ',';
    write_row(out, r.record);
  }
  out.flush();
  out.exceptions(old_mask);
}

}  // namespace nikhilam
