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

#include <utility>

#include "nikhilam/errors.h"
#include "nikhilam/natural.h"

namespace nikhilam {

SignedInt::SignedInt(Natural magnitude)
    : sign_(is_zero(magnitude) ? 0 : 1), magnitude_(std::move(magnitude)) {}

SignedInt::SignedInt(int sign, Natural magnitude)
    : magnitude_(std::move(magnitude)) {
  if (is_zero(magnitude_)) {
    sign_ = 0;
  } else if (sign == 0) {
    throw DomainError("zero sign with a nonzero magnitude");
  } else {
    sign_ = sign < 0 ? -1 : 1;
  }
}

SignedInt SignedInt::operator-() const {
  SignedInt out = *this;
  out.sign_ = -sign_;
  return out;
}

SignedInt add(const SignedInt& a, const SignedInt& b) {
  if (a.sign() == 0) return b;
  if (b.sign() == 0) return a;
  if (a.sign() == b.sign()) {
    return SignedInt(a.sign(), add(a.magnitude(), b.magnitude()));
  }
  // Opposite signs: the result takes the sign of the larger magnitude.
  const SignedInt d = abs_diff(a.magnitude(), b.magnitude());
  return SignedInt(d.sign() * a.sign(), d.magnitude());
}

SignedInt sub(const SignedInt& a, const SignedInt& b) { return add(a, -b); }

SignedInt abs_diff(const Natural& a, const Natural& b) {
  const auto order = cmp(a, b);
  if (order == 0) return SignedInt();
  if (order > 0) return SignedInt(1, sub(a, b));
  return SignedInt(-1, sub(b, a));
}

std::string to_text(const SignedInt& n, int radix) {
  std::string body = to_text(n.magnitude(), radix);
  return n.is_negative() ? "-" + body : body;
}

}  // namespace nikhilam
