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

#include "nikhilam/nikhilam.h"

#include <algorithm>
#include <utility>

#include "algorithms.h"
#include "nikhilam/errors.h"
#include "nikhilam/schoolbook.h"
#include "word_ops.h"

namespace nikhilam {
namespace detail {

Natural square_dispatch(const Natural& a, Meter* meter) {
  return nik_square(a, meter);
}

Wide square_dispatch(Wide a, Meter* meter) {
  if (WideOps::bit_length(a) <= kNarrowSquareBits) {
    return square<NarrowOps>(static_cast<Narrow>(a), meter);
  }
  return square<WideOps>(a, meter);
}

Narrow square_dispatch(Narrow a, Meter* meter) {
  return square<NarrowOps>(a, meter);
}

Natural nikhilam_base_dispatch(const Natural& a, const Natural& b,
                               Meter* meter) {
  return nik_mul(a, b, meter);
}

Wide nikhilam_base_dispatch(Wide a, Wide b, Meter* meter) {
  if (std::max(WideOps::bit_length(a), WideOps::bit_length(b)) <=
      kNarrowMulBits) {
    return multiply<NarrowOps>(static_cast<Narrow>(a), static_cast<Narrow>(b),
                               meter);
  }
  return multiply<WideOps>(a, b, meter);
}

Narrow nikhilam_base_dispatch(Narrow a, Narrow b, Meter* meter) {
  return multiply<NarrowOps>(a, b, meter);
}

}  // namespace detail

Natural nik_square(const Natural& a) { return nik_square(a, nullptr); }

Natural nik_square(const Natural& a, Meter* meter) {
  if (bit_length(a) <= detail::kWideSquareBits) {
    return detail::from_wide(detail::square_dispatch(detail::to_wide(a), meter));
  }
  return detail::square<detail::NaturalOps>(a, meter);
}

Natural nik_mul(const Natural& a, const Natural& b) {
  return nik_mul(a, b, nullptr);
}

Natural nik_mul(const Natural& a, const Natural& b, Meter* meter) {
  if (std::max(bit_length(a), bit_length(b)) <= detail::kWideMulBits) {
    return detail::from_wide(detail::nikhilam_base_dispatch(
        detail::to_wide(a), detail::to_wide(b), meter));
  }
  return detail::multiply<detail::NaturalOps>(a, b, meter);
}

SquaringTrace nik_square_traced(const Natural& a) {
  SquaringTrace trace;
  trace.input = a;
  const std::uint64_t n = bit_length(a);
  trace.bit_length = n;
  if (n <= 1) {
    trace.base_residue = a;
    trace.base_partial = a;
    trace.result = a;
    return trace;
  }

  // residues[i] = A_i, 1-based.
  std::vector<Natural> residues(n + 1);
  residues[1] = a;
  trace.steps.resize(n - 1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    const std::uint64_t j = n - i + 1;
    SquaringStep& step = trace.steps[i - 2];
    step.i = i;
    step.j = j;
    step.bit_set = bit(residues[i - 1], j);
    residues[i] =
        step.bit_set ? sub(residues[i - 1], pow2(j)) : residues[i - 1];
    step.residue = residues[i];
  }

  trace.base_residue = residues[n];
  trace.base_partial = school_mul(residues[n], residues[n]);

  Natural partial = trace.base_partial;
  for (std::uint64_t i = 2; i <= n; ++i) {
    const std::uint64_t j = n - i + 1;
    if (residues[j] != residues[j + 1]) {
      partial =
          add(partial, shl(add(residues[j], residues[j + 1]), n - j));
    }
    trace.steps[i - 2].partial = partial;
  }
  trace.result = partial;
  return trace;
}

std::vector<SquaringTrace::Column> SquaringTrace::columns() const {
  std::vector<Column> out;
  if (bit_length <= 1) {
    out.push_back({1, input, result});
    return out;
  }
  const std::uint64_t n = bit_length;
  for (std::uint64_t c = 1; c <= n; ++c) {
    Column col;
    col.index = c;
    col.residue = c == 1 ? input : steps[c - 2].residue;
    const std::uint64_t k = n + 1 - c;
    col.partial = k == 1 ? base_partial : steps[k - 2].partial;
    out.push_back(std::move(col));
  }
  return out;
}

Natural radix_power(int radix, std::uint64_t p) {
  if (radix < 2) throw DomainError("radix must be at least 2");
  if ((radix & (radix - 1)) == 0) {
    return pow2(p * static_cast<std::uint64_t>(std::countr_zero(
                        static_cast<unsigned>(radix))));
  }
  Natural out(1);
  const Natural r(static_cast<Natural::Word>(radix));
  for (std::uint64_t i = 0; i < p; ++i) out = school_mul(out, r);
  return out;
}

std::uint64_t nearest_base(const Natural& m, int radix) {
  if (radix < 2) throw DomainError("radix must be at least 2");
  if (is_zero(m)) throw DomainError("nearest base of zero is undefined");

  // d = number of radix digits of m, so radix^(d-1) <= m < radix^d.
  std::uint64_t d = 1;
  Natural upper(static_cast<Natural::Word>(radix));
  Natural lower(1);
  const Natural r(static_cast<Natural::Word>(radix));
  while (upper <= m) {
    lower = upper;
    upper = school_mul(upper, r);
    ++d;
  }
  const Natural below = sub(m, lower);
  const Natural above = sub(upper, m);
  return below <= above ? d - 1 : d;
}

NearBaseSteps near_base_mul_steps(const Natural& m, const Natural& n,
                                  const Natural& x) {
  if (is_zero(x)) throw DomainError("near-base multiplication needs x > 0");

  NearBaseSteps s;
  s.base = x;
  s.deficit_m = abs_diff(m, x);
  s.deficit_n = abs_diff(n, x);
  s.cross = add(SignedInt(m), s.deficit_n);
  s.deficit_product =
      SignedInt(s.deficit_m.sign() * s.deficit_n.sign(),
                nik_mul(s.deficit_m.magnitude(), s.deficit_n.magnitude()));

  // x * cross is a shift when x is a power of two.
  const Natural& cross_mag = s.cross.magnitude();
  const Natural scaled =
      popcount(x) == 1 ? shl(cross_mag, countr_zero(x)) : school_mul(x, cross_mag);
  const SignedInt total =
      add(SignedInt(s.cross.sign(), scaled), s.deficit_product);
  if (total.is_negative()) {
    throw AlgorithmError("near-base product came out negative");
  }
  s.result = total.magnitude();
  return s;
}

Natural near_base_mul(const Natural& m, const Natural& n, const Natural& x) {
  return near_base_mul_steps(m, n, x).result;
}

}  // namespace nikhilam
