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

#ifndef NIKHILAM_SCHOOLBOOK_H_
#define NIKHILAM_SCHOOLBOOK_H_

#include "nikhilam/natural.h"
#include "nikhilam/op_counts.h"

namespace nikhilam {

// Long multiplication, word by word over the shorter operand. This is the
// reference every other multiplier is checked against, so it stays plain.
Natural school_mul(const Natural& a, const Natural& b);

// Metered variant. Counts follow the radix-2 shift-and-add model: one
// digit_mult per bit pair, plus one add and one shift per row after the first.
Natural school_mul(const Natural& a, const Natural& b, Meter* meter);

}  // namespace nikhilam

#endif  // NIKHILAM_SCHOOLBOOK_H_
