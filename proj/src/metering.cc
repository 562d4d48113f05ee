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

#include "nikhilam/metering.h"

#include "nikhilam/errors.h"
#include "nikhilam/karatsuba.h"
#include "nikhilam/nikhilam.h"
#include "nikhilam/schoolbook.h"

namespace nikhilam {
namespace {

HybridConfig with_base(const HybridConfig& cfg, BaseCase base) {
  HybridConfig out = cfg;
  out.base_case = base;
  return out;
}

Natural run(Algorithm algorithm, const Natural& a, const Natural& b,
            const HybridConfig& cfg, Meter* meter) {
  switch (algorithm) {
    case Algorithm::kSchoolbook:
      return school_mul(a, b, meter);
    case Algorithm::kNikhilam:
      return nik_mul(a, b, meter);
    case Algorithm::kKaratsubaPlain:
      return karatsuba_mul(a, b, with_base(cfg, BaseCase::kSchoolbook), meter);
    case Algorithm::kKaratsubaHybrid:
      return karatsuba_mul(a, b, with_base(cfg, BaseCase::kNikhilam), meter);
  }
  throw DomainError("unknown algorithm");
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSchoolbook:
      return "schoolbook";
    case Algorithm::kNikhilam:
      return "nikhilam";
    case Algorithm::kKaratsubaPlain:
      return "karatsuba_plain";
    case Algorithm::kKaratsubaHybrid:
      return "karatsuba_hybrid";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "schoolbook") return Algorithm::kSchoolbook;
  if (name == "nikhilam") return Algorithm::kNikhilam;
  if (name == "karatsuba" || name == "karatsuba_plain") {
    return Algorithm::kKaratsubaPlain;
  }
  if (name == "hybrid" || name == "karatsuba_hybrid") {
    return Algorithm::kKaratsubaHybrid;
  }
  return std::nullopt;
}

Natural multiply(Algorithm algorithm, const Natural& a, const Natural& b,
                 const HybridConfig& cfg) {
  if (algorithm == Algorithm::kSchoolbook) return school_mul(a, b);
  return run(algorithm, a, b, cfg, nullptr);
}

MeteredResult metered_call(Algorithm algorithm, const Natural& a,
                           const Natural& b, const HybridConfig& cfg) {
  Meter meter(2);
  Natural value = run(algorithm, a, b, cfg, &meter);
  return {std::move(value), meter.counts()};
}

MeteredResult metered_square(const Natural& a) {
  Meter meter(2);
  Natural value = nik_square(a, &meter);
  return {std::move(value), meter.counts()};
}

}  // namespace nikhilam
