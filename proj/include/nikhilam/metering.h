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

#ifndef NIKHILAM_METERING_H_
#define NIKHILAM_METERING_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nikhilam/karatsuba.h"
#include "nikhilam/natural.h"
#include "nikhilam/op_counts.h"

namespace nikhilam {

enum class Algorithm {
  kSchoolbook,
  kNikhilam,
  kKaratsubaPlain,
  kKaratsubaHybrid,
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kSchoolbook,
    Algorithm::kNikhilam,
    Algorithm::kKaratsubaPlain,
    Algorithm::kKaratsubaHybrid,
};

// "schoolbook", "nikhilam", "karatsuba_plain", "karatsuba_hybrid".
std::string_view algorithm_name(Algorithm algorithm);

// Accepts the canonical names plus "karatsuba" and "hybrid".
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Unmetered product by the named algorithm. Plain Karatsuba uses the
// schoolbook base case and hybrid uses nik_mul; both take cfg's threshold.
Natural multiply(Algorithm algorithm, const Natural& a, const Natural& b,
                 const HybridConfig& cfg = {});

struct MeteredResult {
  Natural value;
  OpCounts ops;
};

// Same value as multiply(), plus radix-2 primitive counts.
MeteredResult metered_call(Algorithm algorithm, const Natural& a,
                           const Natural& b, const HybridConfig& cfg = {});

// nik_square with radix-2 counts.
MeteredResult metered_square(const Natural& a);

enum class DigitProcedure { kSchoolbook, kKaratsuba, kNikhilamNearBase };

std::optional<DigitProcedure> parse_digit_procedure(std::string_view name);
std::string_view digit_procedure_name(DigitProcedure procedure);

struct NamedValue {
  std::string name;
  SignedInt value;
};

struct DigitProcedureResult {
  Natural value;
  OpCounts ops;
  // Top-level quantities of the hand procedure, e.g. A, B, C, D for
  // Karatsuba or the base and deficits for the near-base method.
  std::vector<NamedValue> intermediates;
};

// Executes a pencil-and-paper multiplication on digit strings in `radix`
// (2, 10 or 16) and counts what a person would count:
//
//   schoolbook  one digit_mult per digit pair.
//   karatsuba   the two-way split with sums, (a1 + a0)(b1 + b0); recursion
//               continues until both factors are single digits. The low
//               part takes ceil(n / 2) digits.
//   nikhilam    deficits from the base nearest the multiplicand, their
//               product, the cross sum or difference, one base shift and
//               a final add or subtract. Multi-digit deficits are multiplied
//               by the schoolbook procedure.
//
// Throws ParseError on invalid digits and DomainError on other radices.
DigitProcedureResult count_digit_procedure(DigitProcedure procedure,
                                           std::string_view m,
                                           std::string_view n, int radix);

}  // namespace nikhilam

#endif  // NIKHILAM_METERING_H_
