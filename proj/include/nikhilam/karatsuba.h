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

#ifndef NIKHILAM_KARATSUBA_H_
#define NIKHILAM_KARATSUBA_H_

#include <cstdint>
#include <utility>

#include "nikhilam/natural.h"
#include "nikhilam/op_counts.h"

namespace nikhilam {

enum class BaseCase { kNikhilam, kSchoolbook };

// Operands shorter than `threshold_n0` bits go to the base-case multiplier
// instead of being split again.
struct HybridConfig {
  std::uint64_t threshold_n0 = 32;
  BaseCase base_case = BaseCase::kNikhilam;
};

// Throws DomainError unless threshold_n0 >= 1.
void validate(const HybridConfig& cfg);

// (a mod 2^k, floor(a / 2^k)).
std::pair<Natural, Natural> split(const Natural& a, std::uint64_t k);

struct RecursionStats {
  // Deepest nesting of calls that split their operands.
  std::uint64_t split_depth = 0;
  std::uint64_t base_calls = 0;
};

// Karatsuba with the difference form of the middle product:
//   C = C0 + (C0 + C1 - sA*sB*C2) 2^k + C1 2^2k
// where C2 = |A0 - A1| * |B0 - B1| and sA, sB are the signs of the
// differences (sign(0) = 0). n is the longer operand's bit length and
// k = floor(n / 2). Operands below 2 bits are always a base case.
Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const HybridConfig& cfg = {});
Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const HybridConfig& cfg, Meter* meter,
                      RecursionStats* stats = nullptr);

}  // namespace nikhilam

#endif  // NIKHILAM_KARATSUBA_H_
