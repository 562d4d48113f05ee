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

// Digit-level hand procedures. These deliberately do not reuse the binary
// algorithms: values are held as radix digit vectors so the counts reflect
// how the computation is done on paper.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nikhilam/errors.h"
#include "nikhilam/metering.h"
#include "nikhilam/nikhilam.h"

namespace nikhilam {
namespace {

// Least significant digit first, no high zeros; zero is empty.
struct Digits {
  std::vector<std::uint32_t> d;

  // Written digit count; zero is the single digit "0".
  std::size_t count() const { return d.empty() ? 1 : d.size(); }
  bool is_zero() const { return d.empty(); }
};

void trim(Digits& x) {
  while (!x.d.empty() && x.d.back() == 0) x.d.pop_back();
}

Digits parse_digits(std::string_view text, int radix) {
  from_text(text, radix);  // validation and error reporting
  Digits x;
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    const char c = *it;
    const std::uint32_t v =
        c <= '9' ? c - '0' : (c >= 'a' ? c - 'a' + 10 : c - 'A' + 10);
    x.d.push_back(v);
  }
  trim(x);
  return x;
}

Natural to_natural(const Digits& x, int radix) {
  if (x.is_zero()) return Natural();
  static constexpr char kChars[] = "0123456789abcdef";
  std::string s;
  for (auto it = x.d.rbegin(); it != x.d.rend(); ++it) s.push_back(kChars[*it]);
  return from_text(s, radix);
}

int compare(const Digits& x, const Digits& y) {
  if (x.d.size() != y.d.size()) return x.d.size() < y.d.size() ? -1 : 1;
  for (std::size_t i = x.d.size(); i-- > 0;) {
    if (x.d[i] != y.d[i]) return x.d[i] < y.d[i] ? -1 : 1;
  }
  return 0;
}

Digits add(const Digits& x, const Digits& y, std::uint32_t r) {
  Digits out;
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < std::max(x.d.size(), y.d.size()); ++i) {
    std::uint32_t s = carry;
    if (i < x.d.size()) s += x.d[i];
    if (i < y.d.size()) s += y.d[i];
    out.d.push_back(s % r);
    carry = s / r;
  }
  if (carry != 0) out.d.push_back(carry);
  trim(out);
  return out;
}

// x - y with x >= y.
Digits sub(const Digits& x, const Digits& y, std::uint32_t r) {
  Digits out;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < x.d.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(x.d[i]) - borrow -
                     (i < y.d.size() ? y.d[i] : 0);
    borrow = v < 0;
    if (v < 0) v += r;
    out.d.push_back(static_cast<std::uint32_t>(v));
  }
  if (borrow != 0) throw AlgorithmError("digit subtraction underflow");
  trim(out);
  return out;
}

// x * r^p.
Digits shift(const Digits& x, std::size_t p) {
  if (x.is_zero()) return x;
  Digits out;
  out.d.assign(p, 0);
  out.d.insert(out.d.end(), x.d.begin(), x.d.end());
  return out;
}

std::pair<Digits, Digits> split_at(const Digits& x, std::size_t k) {
  Digits low;
  Digits high;
  for (std::size_t i = 0; i < x.d.size(); ++i) {
    (i < k ? low : high).d.push_back(x.d[i]);
  }
  trim(low);
  trim(high);
  return {low, high};
}

struct SignedDigits {
  int sign = 0;
  Digits mag;
};

SignedDigits make_signed(int sign, Digits mag) {
  return {mag.is_zero() ? 0 : sign, std::move(mag)};
}

SignedDigits signed_add(const SignedDigits& x, const SignedDigits& y,
                        std::uint32_t r) {
  if (x.sign == 0) return y;
  if (y.sign == 0) return x;
  if (x.sign == y.sign) return make_signed(x.sign, add(x.mag, y.mag, r));
  const int c = compare(x.mag, y.mag);
  if (c == 0) return {};
  if (c > 0) return make_signed(x.sign, sub(x.mag, y.mag, r));
  return make_signed(y.sign, sub(y.mag, x.mag, r));
}

SignedInt to_signed(const SignedDigits& x, int radix) {
  return SignedInt(x.sign, to_natural(x.mag, radix));
}

// Long multiplication: every digit of y times every digit of x, one shifted
// row per digit of y.
Digits school(const Digits& x, const Digits& y, std::uint32_t r,
              Meter& meter) {
  const std::size_t nx = x.count();
  const std::size_t ny = y.count();
  meter.mult(nx * ny);
  if (ny > 1) {
    meter.add(ny - 1);
    meter.shift(ny - 1);
  }
  if (x.is_zero() || y.is_zero()) return {};

  std::vector<std::uint64_t> cols(nx + ny + 1, 0);
  for (std::size_t i = 0; i < ny; ++i) {
    for (std::size_t j = 0; j < nx; ++j) {
      cols[i + j] += static_cast<std::uint64_t>(y.d[i]) * x.d[j];
    }
  }
  Digits out;
  std::uint64_t carry = 0;
  for (std::uint64_t c : cols) {
    const std::uint64_t v = c + carry;
    out.d.push_back(static_cast<std::uint32_t>(v % r));
    carry = v / r;
  }
  while (carry != 0) {
    out.d.push_back(static_cast<std::uint32_t>(carry % r));
    carry /= r;
  }
  trim(out);
  return out;
}

struct KaratsubaTop {
  Digits a, b, c, d;
};

// A = x1 y1, B = x0 y0, C = (x1 + x0)(y1 + y0), D = C - A - B,
// result = A r^2k + D r^k + B.
Digits karatsuba(const Digits& x, const Digits& y, std::uint32_t r,
                 Meter& meter, KaratsubaTop* top) {
  if (x.count() == 1 && y.count() == 1) {
    meter.mult();
    const std::uint32_t p =
        (x.is_zero() || y.is_zero()) ? 0 : x.d[0] * y.d[0];
    Digits out{{p % r, p / r}};
    trim(out);
    return out;
  }
  const std::size_t n = std::max(x.count(), y.count());
  const std::size_t k = (n + 1) / 2;
  const auto [x0, x1] = split_at(x, k);
  const auto [y0, y1] = split_at(y, k);

  const Digits a = karatsuba(x1, y1, r, meter, nullptr);
  const Digits b = karatsuba(x0, y0, r, meter, nullptr);
  const Digits sx = add(x1, x0, r);
  const Digits sy = add(y1, y0, r);
  meter.add(2);
  const Digits c = karatsuba(sx, sy, r, meter, nullptr);
  const Digits d = sub(sub(c, a, r), b, r);
  meter.sub(2);
  const Digits out = add(add(shift(a, 2 * k), shift(d, k), r), b, r);
  meter.shift(2);
  meter.add(2);
  if (top != nullptr) *top = {a, b, c, d};
  return out;
}

}  // namespace

std::optional<DigitProcedure> parse_digit_procedure(std::string_view name) {
  if (name == "schoolbook") return DigitProcedure::kSchoolbook;
  if (name == "karatsuba") return DigitProcedure::kKaratsuba;
  if (name == "nikhilam" || name == "nikhilam_near_base") {
    return DigitProcedure::kNikhilamNearBase;
  }
  return std::nullopt;
}

std::string_view digit_procedure_name(DigitProcedure procedure) {
  switch (procedure) {
    case DigitProcedure::kSchoolbook:
      return "schoolbook";
    case DigitProcedure::kKaratsuba:
      return "karatsuba";
    case DigitProcedure::kNikhilamNearBase:
      return "nikhilam_near_base";
  }
  return "unknown";
}

DigitProcedureResult count_digit_procedure(DigitProcedure procedure,
                                           std::string_view m,
                                           std::string_view n, int radix) {
  const Digits x = parse_digits(m, radix);
  const Digits y = parse_digits(n, radix);
  const auto r = static_cast<std::uint32_t>(radix);
  Meter meter(radix);
  DigitProcedureResult result;

  switch (procedure) {
    case DigitProcedure::kSchoolbook: {
      result.value = to_natural(school(x, y, r, meter), radix);
      break;
    }
    case DigitProcedure::kKaratsuba: {
      KaratsubaTop top;
      result.value = to_natural(karatsuba(x, y, r, meter, &top), radix);
      if (x.count() > 1 || y.count() > 1) {
        result.intermediates = {
            {"A", SignedInt(to_natural(top.a, radix))},
            {"B", SignedInt(to_natural(top.b, radix))},
            {"C", SignedInt(to_natural(top.c, radix))},
            {"D", SignedInt(to_natural(top.d, radix))},
        };
      }
      break;
    }
    case DigitProcedure::kNikhilamNearBase: {
      // Base nearest the multiplicand; fall back to the multiplier, then 1.
      std::size_t p = 0;
      if (!x.is_zero()) {
        p = nearest_base(to_natural(x, radix), radix);
      } else if (!y.is_zero()) {
        p = nearest_base(to_natural(y, radix), radix);
      }
      const Digits base = shift(Digits{{1}}, p);

      auto deficit = [&](const Digits& v) {
        meter.sub();
        const int c = compare(v, base);
        if (c >= 0) return make_signed(1, sub(v, base, r));
        return make_signed(-1, sub(base, v, r));
      };
      const SignedDigits dm = deficit(x);
      const SignedDigits dn = deficit(y);

      const SignedDigits product =
          make_signed(dm.sign * dn.sign, school(dm.mag, dn.mag, r, meter));

      // m + b: an addition when b >= 0, a subtraction otherwise.
      const SignedDigits cross = signed_add(make_signed(1, x), dn, r);
      if (dn.sign >= 0) {
        meter.add();
      } else {
        meter.sub();
      }

      const SignedDigits scaled = make_signed(cross.sign, shift(cross.mag, p));
      meter.shift();
      const SignedDigits total = signed_add(scaled, product, r);
      if (product.sign >= 0) {
        meter.add();
      } else {
        meter.sub();
      }
      if (total.sign < 0) {
        throw AlgorithmError("near-base digit procedure went negative");
      }
      result.value = to_natural(total.mag, radix);
      result.intermediates = {
          {"base", SignedInt(to_natural(base, radix))},
          {"deficit_m", to_signed(dm, radix)},
          {"deficit_n", to_signed(dn, radix)},
          {"cross", to_signed(cross, radix)},
          {"deficit_product", to_signed(product, radix)},
      };
      break;
    }
  }
  result.ops = meter.counts();
  return result;
}

}  // namespace nikhilam
