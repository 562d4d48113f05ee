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

#include "nikhilam/karatsuba.h"

#include <algorithm>
#include <string>

#include "algorithms.h"
#include "nikhilam/errors.h"
#include "word_ops.h"

namespace nikhilam {
namespace detail {

Natural karatsuba_dispatch(const Natural& a, const Natural& b,
                           const HybridConfig& cfg, Meter* meter,
                           RecursionStats* stats, std::uint64_t depth) {
  if (std::max(bit_length(a), bit_length(b)) <= kWideMulBits) {
    return from_wide(karatsuba_dispatch(to_wide(a), to_wide(b), cfg, meter,
                                        stats, depth));
  }
  return karatsuba<NaturalOps>(a, b, cfg, meter, stats, depth);
}

Wide karatsuba_dispatch(Wide a, Wide b, const HybridConfig& cfg, Meter* meter,
                        RecursionStats* stats, std::uint64_t depth) {
  if (std::max(WideOps::bit_length(a), WideOps::bit_length(b)) <=
      kNarrowMulBits) {
    return karatsuba<NarrowOps>(static_cast<Narrow>(a), static_cast<Narrow>(b),
                                cfg, meter, stats, depth);
  }
  return karatsuba<WideOps>(a, b, cfg, meter, stats, depth);
}

Narrow karatsuba_dispatch(Narrow a, Narrow b, const HybridConfig& cfg,
                          Meter* meter, RecursionStats* stats,
                          std::uint64_t depth) {
  return karatsuba<NarrowOps>(a, b, cfg, meter, stats, depth);
}

}  // namespace detail

void validate(const HybridConfig& cfg) {
  if (cfg.threshold_n0 < 1) {
    throw DomainError("threshold_n0 must be at least 1, got " +
                      std::to_string(cfg.threshold_n0));
  }
}

std::pair<Natural, Natural> split(const Natural& a, std::uint64_t k) {
  return {low_bits(a, k), shr(a, k)};
}

Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const HybridConfig& cfg) {
  return karatsuba_mul(a, b, cfg, nullptr, nullptr);
}

Natural karatsuba_mul(const Natural& a, const Natural& b,
                      const HybridConfig& cfg, Meter* meter,
                      RecursionStats* stats) {
  validate(cfg);
  return detail::karatsuba_dispatch(a, b, cfg, meter, stats, 0);
}

}  // namespace nikhilam
