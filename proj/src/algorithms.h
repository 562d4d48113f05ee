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

#ifndef NIKHILAM_SRC_ALGORITHMS_H_
#define NIKHILAM_SRC_ALGORITHMS_H_

// The squaring, multiplication and Karatsuba recurrences, written once over
// the arithmetic traits in word_ops.h. Metering lives here too so that the
// machine-word and arbitrary-precision paths report identical counts.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nikhilam/errors.h"
#include "nikhilam/karatsuba.h"
#include "nikhilam/op_counts.h"
#include "word_ops.h"

namespace nikhilam::detail {

// Largest operands for which every intermediate of a product fits in 128
// bits: (a + b)^2 needs 2 * (61 + 1) bits.
inline constexpr std::uint64_t kWideMulBits = 61;
// Largest input whose square fits in 128 bits.
inline constexpr std::uint64_t kWideSquareBits = 63;
// The same two limits for 64-bit values.
inline constexpr std::uint64_t kNarrowMulBits = 31;
inline constexpr std::uint64_t kNarrowSquareBits = 32;

// Squaring and Karatsuba recursion entry points. The Natural and Wide
// overloads decide per call whether the value fits a narrower path.
Natural square_dispatch(const Natural& a, Meter* meter);
Wide square_dispatch(Wide a, Meter* meter);
Narrow square_dispatch(Narrow a, Meter* meter);
Natural karatsuba_dispatch(const Natural& a, const Natural& b,
                           const HybridConfig& cfg, Meter* meter,
                           RecursionStats* stats, std::uint64_t depth);
Wide karatsuba_dispatch(Wide a, Wide b, const HybridConfig& cfg, Meter* meter,
                        RecursionStats* stats, std::uint64_t depth);
Narrow karatsuba_dispatch(Narrow a, Narrow b, const HybridConfig& cfg,
                          Meter* meter, RecursionStats* stats,
                          std::uint64_t depth);
Natural nikhilam_base_dispatch(const Natural& a, const Natural& b,
                               Meter* meter);
Wide nikhilam_base_dispatch(Wide a, Wide b, Meter* meter);
Narrow nikhilam_base_dispatch(Narrow a, Narrow b, Meter* meter);

// The recurrence itself on `a` as given.
//
// Forward: A_1 = a; for i = 2..n, j = n-i+1, strip 2^j from A_{i-1} when bit
// j is set. The strip test is a bit test rather than a strict comparison so
// that A_{i-1} == 2^j is handled. Base: B_1 = A_n * A_n, a 1-bit product.
// Reverse: for i = 2..n, B_i = B_{i-1} + (A_j + A_{j+1}) 2^(n-j) whenever
// A_j != A_{j+1}.
template <class Ops>
typename Ops::Value square_raw(const typename Ops::Value& a, Meter* meter) {
  using V = typename Ops::Value;
  const std::uint64_t n = Ops::bit_length(a);
  if (n <= 1) {
    if (meter) meter->mult();
    return a;
  }

  V residue = a;
  for (std::uint64_t i = 2; i <= n; ++i) {
    const std::uint64_t j = n - i + 1;
    if (Ops::bit(residue, j)) {
      residue = Ops::sub(residue, Ops::pow2(j));
      if (meter) meter->sub();
    }
  }

  // residue is A_n, a single bit.
  V partial = Ops::is_zero(residue) ? V{} : residue;
  if (meter) meter->mult();

  // A_j is a mod 2^(n-j+1): the forward pass only ever clears top bits. So
  // A_j != A_{j+1} exactly when bit n-j of a is set.
  for (std::uint64_t i = 2; i <= n; ++i) {
    const std::uint64_t j = n - i + 1;
    if (!Ops::bit(a, n - j)) continue;
    const V upper = Ops::low_bits(a, n - j + 1);
    const V lower = Ops::low_bits(a, n - j);
    partial = Ops::add(partial, Ops::shl(Ops::add(upper, lower), n - j));
    if (meter) {
      meter->add(2);
      meter->shift();
    }
  }
  return partial;
}

template <class Ops>
typename Ops::Value square(const typename Ops::Value& a, Meter* meter) {
  const std::uint64_t t = Ops::countr_zero(a);
  if (t == 0 || Ops::bit_length(a) <= 1) return square_raw<Ops>(a, meter);
  if (meter) meter->shift(2);
  return Ops::shl(square_raw<Ops>(Ops::shr(a, t), meter), 2 * t);
}

// ((x + y)^2 - |x - y|^2) / 4 on the odd parts, then restore trailing zeros.
template <class Ops>
typename Ops::Value multiply(const typename Ops::Value& a,
                             const typename Ops::Value& b, Meter* meter) {
  using V = typename Ops::Value;
  const std::uint64_t ta = Ops::countr_zero(a);
  const std::uint64_t tb = Ops::countr_zero(b);
  V x = a;
  V y = b;
  if (ta != 0) {
    x = Ops::shr(a, ta);
    if (meter) meter->shift();
  }
  if (tb != 0) {
    y = Ops::shr(b, tb);
    if (meter) meter->shift();
  }

  const V sum = Ops::add(x, y);
  const V diff = Ops::compare(x, y) >= 0 ? Ops::sub(x, y) : Ops::sub(y, x);
  if (meter) {
    meter->add();
    meter->sub();
  }

  const V d1 = square_dispatch(sum, meter);
  const V d2 = square_dispatch(diff, meter);
  const V four_ab = Ops::sub(d1, d2);
  if (meter) meter->sub();
  if (!Ops::is_zero(Ops::low_bits(four_ab, 2))) {
    throw AlgorithmError(
        "difference of squares is not divisible by 4; squaring is broken");
  }
  V product = Ops::shr(four_ab, 2);
  if (meter) meter->exact_division();

  if (ta + tb != 0) {
    product = Ops::shl(product, ta + tb);
    if (meter) meter->shift();
  }
  return product;
}

template <class Ops>
typename Ops::Value karatsuba(const typename Ops::Value& a,
                              const typename Ops::Value& b,
                              const HybridConfig& cfg, Meter* meter,
                              RecursionStats* stats, std::uint64_t depth) {
  using V = typename Ops::Value;
  const std::uint64_t n = std::max(Ops::bit_length(a), Ops::bit_length(b));
  if (n < cfg.threshold_n0 || n < 2) {
    if (stats) ++stats->base_calls;
    if (cfg.base_case == BaseCase::kNikhilam) {
      return nikhilam_base_dispatch(a, b, meter);
    }
    count_schoolbook(Ops::bit_length(a), Ops::bit_length(b), meter);
    return Ops::times(a, b);
  }
  if (stats) stats->split_depth = std::max(stats->split_depth, depth + 1);

  const std::uint64_t k = n / 2;
  const V a0 = Ops::low_bits(a, k);
  const V a1 = Ops::shr(a, k);
  const V b0 = Ops::low_bits(b, k);
  const V b1 = Ops::shr(b, k);
  const int sa = Ops::compare(a0, a1);
  const int sb = Ops::compare(b0, b1);
  const V da = sa >= 0 ? Ops::sub(a0, a1) : Ops::sub(a1, a0);
  const V db = sb >= 0 ? Ops::sub(b0, b1) : Ops::sub(b1, b0);
  if (meter) {
    meter->shift(2);
    meter->sub(2);
  }

  const V c0 = karatsuba_dispatch(a0, b0, cfg, meter, stats, depth + 1);
  const V c1 = karatsuba_dispatch(a1, b1, cfg, meter, stats, depth + 1);
  const V c2 = karatsuba_dispatch(da, db, cfg, meter, stats, depth + 1);

  // C0 + C1 - sA sB C2 == A0 B1 + A1 B0 >= 0.
  V middle = Ops::add(c0, c1);
  if (meter) meter->add();
  if (sa * sb > 0) {
    if (Ops::compare(middle, c2) < 0) {
      throw AlgorithmError("negative Karatsuba middle term at " +
                           std::to_string(n) + " bits");
    }
    middle = Ops::sub(middle, c2);
    if (meter) meter->sub();
  } else if (sa * sb < 0) {
    middle = Ops::add(middle, c2);
    if (meter) meter->add();
  }

  const V result =
      Ops::add(Ops::add(c0, Ops::shl(middle, k)), Ops::shl(c1, 2 * k));
  if (meter) {
    meter->shift(2);
    meter->add(2);
  }
  return result;
}

}  // namespace nikhilam::detail

#endif  // NIKHILAM_SRC_ALGORITHMS_H_
