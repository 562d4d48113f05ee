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

#ifndef NIKHILAM_OP_COUNTS_H_
#define NIKHILAM_OP_COUNTS_H_

#include <cstdint>

namespace nikhilam {

// Tally of primitive operations, counted in digits of `radix`.
//
// Granularity follows the worked examples the counts are meant to reproduce:
// one multi-digit addition is one add, a multiply or divide by a power of
// the base is one shift regardless of distance, and only products of two
// single digits count as digit_mults.
struct OpCounts {
  int radix = 2;
  std::uint64_t digit_mults = 0;
  std::uint64_t adds = 0;
  std::uint64_t subs = 0;
  std::uint64_t shifts = 0;
  std::uint64_t exact_divisions = 0;

  OpCounts& operator+=(const OpCounts& other) {
    digit_mults += other.digit_mults;
    adds += other.adds;
    subs += other.subs;
    shifts += other.shifts;
    exact_divisions += other.exact_divisions;
    return *this;
  }

  // adds + subs + shifts; the part of the cost that should grow linearly.
  std::uint64_t linear_ops() const { return adds + subs + shifts; }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Accumulator threaded explicitly through the instrumented algorithm paths.
// Algorithms accept a nullable `Meter*`; passing nullptr disables counting.
// A Meter is owned by one call chain and must not be shared across threads.
class Meter {
 public:
  explicit Meter(int radix = 2) { counts_.radix = radix; }

  void mult(std::uint64_t n = 1) { counts_.digit_mults += n; }
  void add(std::uint64_t n = 1) { counts_.adds += n; }
  void sub(std::uint64_t n = 1) { counts_.subs += n; }
  void shift(std::uint64_t n = 1) { counts_.shifts += n; }
  void exact_division(std::uint64_t n = 1) { counts_.exact_divisions += n; }

  const OpCounts& counts() const { return counts_; }

 private:
  OpCounts counts_;
};

}  // namespace nikhilam

#endif  // NIKHILAM_OP_COUNTS_H_
