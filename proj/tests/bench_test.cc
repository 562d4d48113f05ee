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

#include "nikhilam/bench.h"

#include <cstdint>
#include <ios>
#include <iterator>
#include <sstream>
#include <streambuf>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "nikhilam/errors.h"
#include "nikhilam/schoolbook.h"

namespace nikhilam {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(BenchOperandsTest, ExactLengthAndReproducible) {
  for (std::uint64_t bits : {1u, 2u, 63u, 64u, 65u, 4096u}) {
    for (std::uint64_t trial = 0; trial < 4; ++trial) {
      const auto [a, b] = bench_operands(bits, trial, 7);
      EXPECT_EQ(bit_length(a), bits);
      EXPECT_EQ(bit_length(b), bits);
      EXPECT_EQ(bench_operands(bits, trial, 7), std::make_pair(a, b));
    }
  }
  EXPECT_NE(bench_operands(256, 0, 7), bench_operands(256, 1, 7));
  EXPECT_NE(bench_operands(256, 0, 7), bench_operands(256, 0, 8));
}

TEST(BenchRunTest, OneRecordPerCell) {
  const std::vector<BenchRecord> records =
      bench_run({std::begin(kAllAlgorithms), std::end(kAllAlgorithms)}, {64}, 3, 7);
  ASSERT_EQ(records.size(), 12u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].algorithm, kAllAlgorithms[i / 3]);
    EXPECT_EQ(records[i].bits, 64u);
    EXPECT_EQ(records[i].trial, i % 3);
    EXPECT_GT(records[i].elapsed_ns, 0u);
    EXPECT_EQ(records[i].ops.radix, 2);
  }
  // Counts depend only on the operands, so a rerun reproduces them.
  const std::vector<BenchRecord> again =
      bench_run({std::begin(kAllAlgorithms), std::end(kAllAlgorithms)}, {64}, 3, 7);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].ops, again[i].ops);
  }
}

TEST(BenchRunTest, NikhilamRecordsTwoMults) {
  for (const BenchRecord& r :
       bench_run({Algorithm::kNikhilam}, {64, 256}, 2, 3)) {
    EXPECT_EQ(r.ops.digit_mults, 2u);
    EXPECT_EQ(r.ops.exact_divisions, 1u);
  }
}

TEST(CsvTest, EmptyRunIsHeaderOnly) {
  std::ostringstream out;
  emit_csv({}, out);
  EXPECT_EQ(out.str(), std::string(kCsvHeader) + "\n");
}

TEST(CsvTest, SingleRecordLayout) {
  BenchRecord r;
  r.algorithm = Algorithm::kKaratsubaHybrid;
  r.bits = 256;
  r.trial = 4;
  r.elapsed_ns = 1234;
  r.ops.digit_mults = 5;
  r.ops.adds = 6;
  r.ops.subs = 7;
  r.ops.shifts = 8;
  r.ops.exact_divisions = 9;
  std::ostringstream out;
  emit_csv({r}, out);
  const auto lines = Lines(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], kCsvHeader);
  EXPECT_EQ(lines[1], std::string(algorithm_name(r.algorithm)) +
                          ",256,4,1234,5,6,7,8,9");
}

TEST(CsvTest, ParseBackRoundTrip) {
  const std::vector<BenchRecord> records = bench_run(
      {std::begin(kAllAlgorithms), std::end(kAllAlgorithms)}, {64, 100}, 2, 11);
  std::stringstream buf;
  emit_csv(records, buf);
  EXPECT_EQ(Lines(buf.str()).size(), records.size() + 1);
  EXPECT_EQ(parse_csv(buf), records);
}

TEST(CsvTest, MalformedInputThrows) {
  const std::string header = std::string(kCsvHeader) + "\n";
  for (const std::string& doc :
       {std::string(""), std::string("algo,bits\n"),
        header + "schoolbook,64,0,10,1,2,3\n",
        header + "toom,64,0,10,1,2,3,4,5\n",
        header + "schoolbook,64,x,10,1,2,3,4,5\n",
        header + "schoolbook,64,0,-3,1,2,3,4,5\n"}) {
    std::istringstream in(doc);
    EXPECT_THROW(parse_csv(in), ParseError) << doc;
  }
}

class FailingBuf : public std::streambuf {
 protected:
  int_type overflow(int_type) override { return traits_type::eof(); }
};

TEST(CsvTest, WriteFailureThrows) {
  FailingBuf buf;
  std::ostream out(&buf);
  EXPECT_THROW(emit_csv({}, out), std::ios_base::failure);
}

TEST(SweepTest, OneRowPerThresholdCell) {
  const auto records = threshold_sweep({2, 16}, {64, 128}, 2, 5);
  ASSERT_EQ(records.size(), 8u);
  std::ostringstream out;
  emit_sweep_csv(records, out);
  const auto lines = Lines(out.str());
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], std::string("threshold,") + kCsvHeader);
  EXPECT_EQ(lines[1].rfind("2,", 0), 0u);
  EXPECT_EQ(lines[8].rfind("16,", 0), 0u);
}

}  // namespace
}  // namespace nikhilam
