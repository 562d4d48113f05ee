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

#ifndef NIKHILAM_CLI_H_
#define NIKHILAM_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace nikhilam {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. Returns 0 on success, 2 for bad arguments or
// operands and 1 when an algorithm invariant or cross-check fails.
//
//   mul A B [--algo schoolbook|nikhilam|karatsuba|hybrid] [--threshold N]
//           [--radix-in R] [--radix-out R] [--count] [--format text|json]
//   square A [--radix-in R] [--radix-out R] [--count] [--format text|json]
//   trace A [--radix-in R] [--format text|json]
//   count M N [--radix R] [--proc schoolbook|karatsuba|nikhilam]
//             [--format text|json]
//   bench [--sizes 64,128] [--trials T] [--seed S] [--algos a,b]
//         [--threshold N] [--thresholds 8,16,32] [--out FILE]
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nikhilam

#endif  // NIKHILAM_CLI_H_
