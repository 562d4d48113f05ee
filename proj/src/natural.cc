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

#include "nikhilam/natural.h"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <string>
#include <utility>

#include "nikhilam/errors.h"

namespace nikhilam {
namespace {

using Word = Natural::Word;
using DoubleWord = unsigned __int128;

constexpr Word kPow10_19 = 10000000000000000000ull;

void trim(std::vector<Word>& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

void check_radix(int radix) {
  if (radix != 2 && radix != 10 && radix != 16) {
    throw DomainError("radix must be 2, 10 or 16, got " +
                      std::to_string(radix));
  }
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return 99;
}

// w = w * m + c, in place.
void mul_add_small(std::vector<Word>& w, Word m, Word c) {
  Word carry = c;
  for (Word& x : w) {
    const DoubleWord t = static_cast<DoubleWord>(x) * m + carry;
    x = static_cast<Word>(t);
    carry = static_cast<Word>(t >> 64);
  }
  if (carry != 0) w.push_back(carry);
}

// w = floor(w / d), returns the remainder.
Word div_small(std::vector<Word>& w, Word d) {
  DoubleWord rem = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    const DoubleWord cur = (rem << 64) | w[i];
    w[i] = static_cast<Word>(cur / d);
    rem = cur % d;
  }
  trim(w);
  return static_cast<Word>(rem);
}

}  // namespace

Natural::Natural(Word value) {
  if (value != 0) words_.push_back(value);
}

Natural Natural::from_words(std::vector<Word> words) {
  Natural n;
  n.words_ = std::move(words);
  n.normalize();
  return n;
}

void Natural::normalize() { trim(words_); }

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  return cmp(a, b);
}

Natural from_text(std::string_view text, int radix) {
  check_radix(radix);
  if (text.empty()) {
    throw ParseError("empty digit string", std::string_view::npos);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (digit_value(text[i]) >= radix) {
      throw ParseError("invalid digit '" + std::string(1, text[i]) +
                           "' for radix " + std::to_string(radix) +
                           " at position " + std::to_string(i),
                       i);
    }
  }

  std::vector<Word> w;
  if (radix == 10) {
    // Horner over chunks of up to 19 decimal digits.
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t len = std::min<std::size_t>(19, text.size() - pos);
      Word chunk = 0;
      Word scale = 1;
      for (std::size_t i = 0; i < len; ++i) {
        chunk = chunk * 10 + static_cast<Word>(text[pos + i] - '0');
        scale *= 10;
      }
      mul_add_small(w, scale, chunk);
      pos += len;
    }
    return Natural::from_words(std::move(w));
  }

  const int bits_per_digit = radix == 2 ? 1 : 4;
  const std::size_t total_bits = text.size() * bits_per_digit;
  w.assign((total_bits + 63) / 64, 0);
  std::uint64_t shift = 0;
  for (std::size_t i = text.size(); i-- > 0;) {
    const Word d = static_cast<Word>(digit_value(text[i]));
    w[shift / 64] |= d << (shift % 64);
    shift += bits_per_digit;
  }
  return Natural::from_words(std::move(w));
}

std::string to_text(const Natural& n, int radix) {
  check_radix(radix);
  if (is_zero(n)) return "0";

  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  if (radix == 10) {
    std::vector<Word> w(n.words().begin(), n.words().end());
    while (!w.empty()) {
      Word chunk = div_small(w, kPow10_19);
      for (int i = 0; i < 19; ++i) {
        out.push_back(kDigits[chunk % 10]);
        chunk /= 10;
        if (w.empty() && chunk == 0) break;
      }
    }
  } else {
    const int bits_per_digit = radix == 2 ? 1 : 4;
    const std::uint64_t len = bit_length(n);
    for (std::uint64_t pos = 0; pos < len; pos += bits_per_digit) {
      unsigned d = 0;
      for (int b = 0; b < bits_per_digit; ++b) {
        d |= static_cast<unsigned>(bit(n, pos + b)) << b;
      }
      out.push_back(kDigits[d]);
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

Natural add(const Natural& a, const Natural& b) {
  const auto x = a.words().size() >= b.words().size() ? a.words() : b.words();
  const auto y = a.words().size() >= b.words().size() ? b.words() : a.words();
  std::vector<Word> out(x.size() + 1);
  Word carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Word yi = i < y.size() ? y[i] : 0;
    const DoubleWord t = static_cast<DoubleWord>(x[i]) + yi + carry;
    out[i] = static_cast<Word>(t);
    carry = static_cast<Word>(t >> 64);
  }
  out[x.size()] = carry;
  return Natural::from_words(std::move(out));
}

Natural sub(const Natural& a, const Natural& b) {
  if (cmp(a, b) < 0) {
    throw UnderflowError("natural subtraction underflow: minuend is smaller");
  }
  const auto x = a.words();
  const auto y = b.words();
  std::vector<Word> out(x.size());
  Word borrow = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Word yi = i < y.size() ? y[i] : 0;
    const Word d1 = x[i] - yi;
    const Word b1 = x[i] < yi;
    out[i] = d1 - borrow;
    borrow = b1 | (d1 < borrow);
  }
  return Natural::from_words(std::move(out));
}

std::strong_ordering cmp(const Natural& a, const Natural& b) {
  const auto x = a.words();
  const auto y = b.words();
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

Natural shl(const Natural& a, std::uint64_t k) {
  if (is_zero(a) || k == 0) return a;
  const std::size_t word_shift = k / 64;
  const unsigned bit_shift = k % 64;
  const auto x = a.words();
  std::vector<Word> out(x.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i + word_shift] |= x[i] << bit_shift;
    if (bit_shift != 0) out[i + word_shift + 1] = x[i] >> (64 - bit_shift);
  }
  return Natural::from_words(std::move(out));
}

Natural shr(const Natural& a, std::uint64_t k) {
  if (k == 0) return a;
  if (k >= bit_length(a)) return Natural();
  const std::size_t word_shift = k / 64;
  const unsigned bit_shift = k % 64;
  const auto x = a.words();
  std::vector<Word> out(x.size() - word_shift);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = x[i + word_shift] >> bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < x.size()) {
      out[i] |= x[i + word_shift + 1] << (64 - bit_shift);
    }
  }
  return Natural::from_words(std::move(out));
}

bool bit(const Natural& a, std::uint64_t j) {
  const auto w = a.words();
  if (j / 64 >= w.size()) return false;
  return (w[j / 64] >> (j % 64)) & 1;
}

std::uint64_t bit_length(const Natural& a) {
  const auto w = a.words();
  if (w.empty()) return 0;
  return (w.size() - 1) * 64 + std::bit_width(w.back());
}

bool is_zero(const Natural& a) { return a.words().empty(); }

std::uint64_t countr_zero(const Natural& a) {
  std::uint64_t n = 0;
  for (Word w : a.words()) {
    if (w != 0) return n + std::countr_zero(w);
    n += 64;
  }
  return 0;
}

std::uint64_t popcount(const Natural& a) {
  std::uint64_t n = 0;
  for (Word w : a.words()) n += std::popcount(w);
  return n;
}

Natural low_bits(const Natural& a, std::uint64_t k) {
  if (k >= bit_length(a)) return a;
  const auto x = a.words();
  std::vector<Word> out(x.begin(), x.begin() + (k + 63) / 64);
  if (k % 64 != 0) out.back() &= (Word{1} << (k % 64)) - 1;
  return Natural::from_words(std::move(out));
}

Natural pow2(std::uint64_t k) {
  std::vector<Word> out(k / 64 + 1, 0);
  out.back() = Word{1} << (k % 64);
  return Natural::from_words(std::move(out));
}

}  // namespace nikhilam
