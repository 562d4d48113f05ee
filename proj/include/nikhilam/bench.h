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

#ifndef NIKHILAM_BENCH_H_
#define NIKHILAM_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nikhilam/errors.h"
#include "nikhilam/karatsuba.h"
#include "nikhilam/metering.h"
#include "nikhilam/natural.h"
#include "nikhilam/op_counts.h"

namespace nikhilam {

// One timed multiplication.
struct BenchRecord {
  Algorithm algorithm = Algorithm::kSchoolbook;
  std::uint64_t bits = 0;
  std::uint64_t trial = 0;
  std::uint64_t elapsed_ns = 0;  // always > 0
  OpCounts ops;                  // radix 2, from a separate metered run

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// A product disagreed with the schoolbook reference during a bench run.
class BenchMismatchError : public AlgorithmError {
 public:
  using AlgorithmError::AlgorithmError;
};

// The operand pair for (bits, trial) under `seed`: two values of exactly
// `bits` bits, reproducible across runs and platforms.
std::pair<Natural, Natural> bench_operands(std::uint64_t bits,
                                           std::uint64_t trial,
                                           std::uint64_t seed);

// Times every (algorithm, size, trial) cell. All algorithms see the same
// operands for a given (size, trial). Each product is checked against
// school_mul before its record is kept; a mismatch throws
// BenchMismatchError naming the cell and seed. Records come back ordered by
// algorithm, then size, then trial.
std::vector<BenchRecord> bench_run(const std::vector<Algorithm>& algorithms,
                                   const std::vector<std::uint64_t>& sizes,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const HybridConfig& cfg = {});

inline constexpr char kCsvHeader[] =
    "algo,bits,trial,nanos,digit_mults,adds,subs,shifts,exact_divisions";

// Header line, then one line per record. Throws std::ios_base::failure if
// the stream goes bad.
void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out);

// Inverse of emit_csv. Throws ParseError on a malformed document.
std::vector<BenchRecord> parse_csv(std::istream& in);

// Karatsuba runs repeated over several thresholds, for locating the
// crossover by hand or downstream tooling.
struct SweepRecord {
  std::uint64_t threshold = 0;
  BenchRecord record;
};

std::vector<SweepRecord> threshold_sweep(
    const std::vector<std::uint64_t>& thresholds,
    const std::vector<std::uint64_t>& sizes, std::uint64_t trials,
    std::uint64_t seed, BaseCase base_case = BaseCase::kNikhilam);

// "threshold," followed by the bench columns.
void emit_sweep_csv(const std::vector<SweepRecord>& records,
                    std::ostream& out);

}  // namespace nikhilam

#endif  // NIKHILAM_BENCH_H_
