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

#ifndef NIKHILAM_SRC_WORD_OPS_H_
#define NIKHILAM_SRC_WORD_OPS_H_

// Arithmetic traits the algorithm templates are written against. NaturalOps
// works on arbitrary-precision values; WideOps and NarrowOps run the same
// code on 128- and 64-bit machine integers once the operands are small
// enough that every intermediate fits.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "nikhilam/errors.h"
#include "nikhilam/natural.h"
#include "nikhilam/op_counts.h"
#include "nikhilam/schoolbook.h"

namespace nikhilam::detail {

using Wide = unsigned __int128;
using Narrow = std::uint64_t;

inline void count_schoolbook(std::uint64_t la, std::uint64_t lb,
                             Meter* meter) {
  if (meter == nullptr) return;
  meter->mult(la * lb);
  const std::uint64_t rows = std::min(la, lb);
  if (rows > 1) {
    meter->add(rows - 1);
    meter->shift(rows - 1);
  }
}

struct NaturalOps {
  using Value = Natural;

  static std::uint64_t bit_length(const Natural& v) {
    return nikhilam::bit_length(v);
  }
  static bool bit(const Natural& v, std::uint64_t j) {
    return nikhilam::bit(v, j);
  }
  static bool is_zero(const Natural& v) { return nikhilam::is_zero(v); }
  static std::uint64_t countr_zero(const Natural& v) {
    return nikhilam::countr_zero(v);
  }
  static int compare(const Natural& a, const Natural& b) {
    const auto c = nikhilam::cmp(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  static Natural add(const Natural& a, const Natural& b) {
    return nikhilam::add(a, b);
  }
  static Natural sub(const Natural& a, const Natural& b) {
    return nikhilam::sub(a, b);
  }
  static Natural shl(const Natural& v, std::uint64_t k) {
    return nikhilam::shl(v, k);
  }
  static Natural shr(const Natural& v, std::uint64_t k) {
    return nikhilam::shr(v, k);
  }
  static Natural low_bits(const Natural& v, std::uint64_t k) {
    return nikhilam::low_bits(v, k);
  }
  static Natural pow2(std::uint64_t k) { return nikhilam::pow2(k); }
  // Full product, used only for the schoolbook base case.
  static Natural times(const Natural& a, const Natural& b) {
    return school_mul(a, b);
  }
};

struct WideOps {
  using Value = Wide;

  static std::uint64_t bit_length(Wide v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(v));
  }
  static bool bit(Wide v, std::uint64_t j) {
    return j < 128 && ((v >> j) & 1) != 0;
  }
  static bool is_zero(Wide v) { return v == 0; }
  static std::uint64_t countr_zero(Wide v) {
    if (v == 0) return 0;
    const auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(v >> 64));
  }
  static int compare(Wide a, Wide b) { return a < b ? -1 : (a > b ? 1 : 0); }
  static Wide add(Wide a, Wide b) { return a + b; }
  static Wide sub(Wide a, Wide b) {
    if (a < b) {
      throw UnderflowError("natural subtraction underflow: minuend is smaller");
    }
    return a - b;
  }
  static Wide shl(Wide v, std::uint64_t k) { return k >= 128 ? 0 : v << k; }
  static Wide shr(Wide v, std::uint64_t k) { return k >= 128 ? 0 : v >> k; }
  static Wide low_bits(Wide v, std::uint64_t k) {
    return k >= 128 ? v : v & ((Wide{1} << k) - 1);
  }
  static Wide pow2(std::uint64_t k) { return Wide{1} << k; }
  static Wide times(Wide a, Wide b) { return a * b; }
};

struct NarrowOps {
  using Value = Narrow;

  static std::uint64_t bit_length(Narrow v) { return std::bit_width(v); }
  static bool bit(Narrow v, std::uint64_t j) {
    return j < 64 && ((v >> j) & 1) != 0;
  }
  static bool is_zero(Narrow v) { return v == 0; }
  static std::uint64_t countr_zero(Narrow v) {
    return v == 0 ? 0 : std::countr_zero(v);
  }
  static int compare(Narrow a, Narrow b) { return a < b ? -1 : (a > b ? 1 : 0); }
  static Narrow add(Narrow a, Narrow b) { return a + b; }
  static Narrow sub(Narrow a, Narrow b) {
    if (a < b) {
      throw UnderflowError("natural subtraction underflow: minuend is smaller");
    }
    return a - b;
  }
  static Narrow shl(Narrow v, std::uint64_t k) { return k >= 64 ? 0 : v << k; }
  static Narrow shr(Narrow v, std::uint64_t k) { return k >= 64 ? 0 : v >> k; }
  static Narrow low_bits(Narrow v, std::uint64_t k) {
    return k >= 64 ? v : v & ((Narrow{1} << k) - 1);
  }
  static Narrow pow2(std::uint64_t k) { return Narrow{1} << k; }
  static Narrow times(Narrow a, Narrow b) { return a * b; }
};

inline Wide to_wide(const Natural& v) {
  const auto w = v.words();
  Wide out = 0;
  if (!w.empty()) out = w[0];
  if (w.size() > 1) out |= static_cast<Wide>(w[1]) << 64;
  return out;
}

inline Natural from_wide(Wide v) {
  return Natural::from_words({static_cast<std::uint64_t>(v),
                              static_cast<std::uint64_t>(v >> 64)});
}

}  // namespace nikhilam::detail

#endif  // NIKHILAM_SRC_WORD_OPS_H_
