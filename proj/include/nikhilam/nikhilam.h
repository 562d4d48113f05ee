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

#ifndef NIKHILAM_NIKHILAM_H_
#define NIKHILAM_NIKHILAM_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nikhilam/natural.h"
#include "nikhilam/op_counts.h"

namespace nikhilam {

// One iteration i (2..n) of the squaring recurrence, with j = n - i + 1.
// `residue` is A_i from the forward pass and `partial` is B_i from the
// reverse pass. `bit_set` records whether the forward pass stripped 2^j.
struct SquaringStep {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  bool bit_set = false;
  Natural residue;
  Natural partial;

  friend bool operator==(const SquaringStep&, const SquaringStep&) = default;
};

// Complete record of one squaring, laid out like the worked tables: residue
// A_c heads column c and the partial written under it is B_{n+1-c}, which
// always equals A_c squared.
struct SquaringTrace {
  Natural input;
  std::uint64_t bit_length = 0;
  std::vector<SquaringStep> steps;
  Natural base_residue;  // A_n
  Natural base_partial;  // B_1 = A_n * A_n
  Natural result;        // B_n

  struct Column {
    std::uint64_t index = 0;  // c, 1-based
    Natural residue;          // A_c
    Natural partial;          // B_{n+1-c}
  };
  std::vector<Column> columns() const;

  friend bool operator==(const SquaringTrace&, const SquaringTrace&) = default;
};

// a^2 by the residue/partial recurrence. Only one 1-bit product is formed;
// everything else is subtraction of powers of two, addition and shifting.
// Trailing zero bits are factored out first and restored with one shift.
Natural nik_square(const Natural& a);
Natural nik_square(const Natural& a, Meter* meter);

// Runs the recurrence on `a` exactly as given (no trailing-zero factoring)
// and records every step.
SquaringTrace nik_square_traced(const Natural& a);

// a * b = ((a + b)^2 - |a - b|^2) / 4 with both squares from nik_square.
// The quarter is an exactness-checked 2-bit shift; a nonzero remainder throws
// AlgorithmError. Trailing zeros of each operand are factored out.
Natural nik_mul(const Natural& a, const Natural& b);
Natural nik_mul(const Natural& a, const Natural& b, Meter* meter);

// Intermediate values of a near-base product m * n around base x, with
// signed deficits a = m - x and b = n - x.
struct NearBaseSteps {
  Natural base;
  SignedInt deficit_m;        // a
  SignedInt deficit_n;        // b
  SignedInt cross;            // m + b (= n + a)
  SignedInt deficit_product;  // a * b
  Natural result;             // x * cross + a * b
};

// m * n = x * (m + b) + a * b. Throws DomainError when x is zero.
Natural near_base_mul(const Natural& m, const Natural& n, const Natural& x);
NearBaseSteps near_base_mul_steps(const Natural& m, const Natural& n,
                                  const Natural& x);

// Exponent p in {d - 1, d} (d = digit count of m in `radix`) minimising
// |m - radix^p|; ties go to the smaller power. Throws DomainError when m is
// zero or radix < 2.
std::uint64_t nearest_base(const Natural& m, int radix);

// radix^p.
Natural radix_power(int radix, std::uint64_t p);

// Machine-readable trace:
//   {"input", "bit_length", "steps": [{"i", "j", "bit_set", "residue",
//    "partial"}], "base_residue", "base_partial", "result"}
// with every numeral a binary string.
std::string trace_to_json(const SquaringTrace& trace, int indent = 2);

// Inverse of trace_to_json. Throws ParseError on malformed documents.
SquaringTrace trace_from_json(std::string_view json);

// Aligned table in the "Base Difference / Next Difference" layout. Residues
// are written at their column width, so A_2 of 101010 prints as 01010.
std::string render_trace_table(const SquaringTrace& trace);

}  // namespace nikhilam

#endif  // NIKHILAM_NIKHILAM_H_
