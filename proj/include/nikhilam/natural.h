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

#ifndef NIKHILAM_NATURAL_H_
#define NIKHILAM_NATURAL_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nikhilam {

// Arbitrary-precision non-negative integer.
//
// The magnitude is a little-endian sequence of 64-bit words with no zero words
// at the most significant end; zero is the empty sequence. Values are
// immutable once built and every operation below returns a fresh canonical
// value, so instances can be shared freely between threads.
class Natural {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Natural() = default;
  explicit Natural(Word value);

  // Takes ownership of `words` (least significant first) and strips zero
  // words from the top.
  static Natural from_words(std::vector<Word> words);

  std::span<const Word> words() const { return words_; }

  // Low 64 bits of the value.
  Word low_word() const { return words_.empty() ? 0 : words_.front(); }

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

 private:
  void normalize();

  std::vector<Word> words_;
};

// Parses `text` in radix 2, 10 or 16. Leading zeros are accepted; hex digits
// may be either case. Throws ParseError on an empty string or a character
// that is not a digit of `radix`, DomainError on any other radix.
Natural from_text(std::string_view text, int radix);

// Shortest digit string for `n` ("0" for zero), lower-case for hex.
std::string to_text(const Natural& n, int radix);

Natural add(const Natural& a, const Natural& b);

// a - b. Throws UnderflowError when a < b.
Natural sub(const Natural& a, const Natural& b);

std::strong_ordering cmp(const Natural& a, const Natural& b);

// a * 2^k and floor(a / 2^k).
Natural shl(const Natural& a, std::uint64_t k);
Natural shr(const Natural& a, std::uint64_t k);

// Coefficient of 2^j.
bool bit(const Natural& a, std::uint64_t j);
std::uint64_t bit_length(const Natural& a);
bool is_zero(const Natural& a);

// Number of trailing zero bits; 0 for zero.
std::uint64_t countr_zero(const Natural& a);
std::uint64_t popcount(const Natural& a);

// a mod 2^k.
Natural low_bits(const Natural& a, std::uint64_t k);

// 2^k.
Natural pow2(std::uint64_t k);

// Sign plus magnitude. The sign is zero exactly when the magnitude is.
class SignedInt {
 public:
  SignedInt() = default;
  explicit SignedInt(Natural magnitude);
  SignedInt(int sign, Natural magnitude);

  int sign() const { return sign_; }
  const Natural& magnitude() const { return magnitude_; }
  bool is_negative() const { return sign_ < 0; }

  SignedInt operator-() const;

  friend bool operator==(const SignedInt&, const SignedInt&) = default;

 private:
  int sign_ = 0;
  Natural magnitude_;
};

SignedInt add(const SignedInt& a, const SignedInt& b);
SignedInt sub(const SignedInt& a, const SignedInt& b);

// Sign of a - b together with |a - b|.
SignedInt abs_diff(const Natural& a, const Natural& b);

// Decimal-style rendering with a leading '-' for negatives.
std::string to_text(const SignedInt& n, int radix);

}  // namespace nikhilam

#endif  // NIKHILAM_NATURAL_H_
