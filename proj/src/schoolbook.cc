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

#include "nikhilam/schoolbook.h"

#include <algorithm>
#include <vector>

#include "word_ops.h"

namespace nikhilam {

Natural school_mul(const Natural& a, const Natural& b) {
  // Outer loop over the shorter operand.
  const auto x = a.words().size() >= b.words().size() ? a.words() : b.words();
  const auto y = a.words().size() >= b.words().size() ? b.words() : a.words();
  if (y.empty()) return Natural();

  using DoubleWord = unsigned __int128;
  std::vector<Natural::Word> out(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    Natural::Word carry = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const DoubleWord t =
          static_cast<DoubleWord>(y[i]) * x[j] + out[i + j] + carry;
      out[i + j] = static_cast<Natural::Word>(t);
      carry = static_cast<Natural::Word>(t >> 64);
    }
    out[i + x.size()] = carry;
  }
  return Natural::from_words(std::move(out));
}

Natural school_mul(const Natural& a, const Natural& b, Meter* meter) {
  detail::count_schoolbook(bit_length(a), bit_length(b), meter);
  return school_mul(a, b);
}

}  // namespace nikhilam
