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

#include "nikhilam/nikhilam.h"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "algorithms.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "nikhilam/errors.h"
#include "nikhilam/schoolbook.h"
#include "test_util.h"
#include "word_ops.h"

namespace nikhilam {
namespace {

using testing::Bin;
using testing::RandomNatural;

TEST(NikSquareTest, WorkedExamples) {
  EXPECT_EQ(nik_square(Bin("101010")), Bin("11011100100"));
  EXPECT_EQ(nik_square(Bin("11")), Bin("1001"));
  EXPECT_EQ(nik_square(Bin("1111")), Bin("11100001"));
}

TEST(NikSquareTest, SingleBitInputs) {
  EXPECT_EQ(nik_square(Natural()), Natural());
  EXPECT_EQ(nik_square(Natural(1)), Natural(1));
}

// 100 has A_1 == 2^j on the first step; a strict comparison would skip it.
TEST(NikSquareTest, ExactPowerOfTwoResidue) {
  EXPECT_EQ(nik_square(Bin("100")), Bin("10000"));
  const SquaringTrace t = nik_square_traced(Bin("100"));
  EXPECT_TRUE(t.steps[0].bit_set);
  EXPECT_EQ(t.result, Bin("10000"));
  for (std::uint64_t k = 0; k < 200; k += 7) {
    EXPECT_EQ(nik_square(pow2(k)), pow2(2 * k));
    EXPECT_EQ(nik_square_traced(pow2(k)).result, pow2(2 * k));
  }
}

TEST(NikSquareTest, AllOnesAcrossWordBoundaries) {
  for (std::uint64_t n : {60u, 62u, 63u, 64u, 65u, 127u, 128u, 129u, 500u}) {
    const Natural x = sub(pow2(n), Natural(1));
    EXPECT_EQ(nik_square(x), school_mul(x, x)) << n;
  }
}

TEST(NikSquareTest, MatchesSchoolbook) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 3000; ++i) {
    const Natural a = RandomNatural(0, i < 2500 ? 300 : 2500, rng);
    ASSERT_EQ(nik_square(a), school_mul(a, a)) << to_text(a, 2);
  }
}

TEST(NikSquareTracedTest, ReproducesWorkedTrace) {
  const SquaringTrace t = nik_square_traced(Bin("101010"));
  EXPECT_EQ(t.input, Bin("101010"));
  EXPECT_EQ(t.bit_length, 6u);
  ASSERT_EQ(t.steps.size(), 5u);

  const std::vector<Natural> residues = {Bin("01010"), Bin("1010"), Bin("010"),
                                         Bin("10"), Bin("0")};
  const std::vector<Natural> partials = {Bin("100"), Bin("100"),
                                         Bin("1100100"), Bin("1100100"),
                                         Bin("11011100100")};
  const std::vector<bool> stripped = {true, false, true, false, true};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(t.steps[k].i, k + 2);
    EXPECT_EQ(t.steps[k].j, 6 - (k + 2) + 1);
    EXPECT_EQ(t.steps[k].bit_set, stripped[k]) << k;
    EXPECT_EQ(t.steps[k].residue, residues[k]) << k;
    EXPECT_EQ(t.steps[k].partial, partials[k]) << k;
  }
  EXPECT_EQ(t.base_residue, Bin("0"));
  EXPECT_EQ(t.base_partial, Bin("0"));
  EXPECT_EQ(t.result, Bin("11011100100"));
}

TEST(NikSquareTracedTest, TrivialInputs) {
  const SquaringTrace one = nik_square_traced(Natural(1));
  EXPECT_TRUE(one.steps.empty());
  EXPECT_EQ(one.result, Natural(1));
  const SquaringTrace zero = nik_square_traced(Natural());
  EXPECT_TRUE(zero.steps.empty());
  EXPECT_EQ(zero.result, Natural());
  EXPECT_EQ(zero.columns().size(), 1u);
}

// Every column's partial is the square of its residue, the residue chain
// strips exactly the recorded bits, and each partial changes only when the
// neighbouring residues differ.
TEST(NikSquareTracedTest, TraceInvariants) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 2000; ++iter) {
    const Natural a = RandomNatural(2, 16, rng);
    const SquaringTrace t = nik_square_traced(a);
    const std::uint64_t n = t.bit_length;
    ASSERT_EQ(t.steps.size(), n - 1);
    ASSERT_EQ(t.result, school_mul(a, a));
    ASSERT_EQ(t.result, nik_square(a));

    for (const auto& col : t.columns()) {
      ASSERT_EQ(col.partial, school_mul(col.residue, col.residue));
    }

    std::vector<Natural> residue(n + 1);
    residue[1] = a;
    for (const SquaringStep& s : t.steps) residue[s.i] = s.residue;
    for (const SquaringStep& s : t.steps) {
      const Natural expected =
          s.bit_set ? sub(residue[s.i - 1], pow2(s.j)) : residue[s.i - 1];
      ASSERT_EQ(s.residue, expected);
    }

    Natural previous = t.base_partial;
    for (const SquaringStep& s : t.steps) {
      const std::uint64_t j = s.j;
      if (residue[j] == residue[j + 1]) {
        ASSERT_EQ(s.partial, previous);
      } else {
        ASSERT_EQ(s.partial,
                  add(previous, shl(add(residue[j], residue[j + 1]), n - j)));
      }
      previous = s.partial;
    }
  }
}

TEST(NikMulTest, WorkedExamples) {
  EXPECT_EQ(nik_mul(Bin("101"), Bin("110")), Bin("11110"));
  EXPECT_EQ(nik_mul(Natural(95), Natural(96)), Natural(9120));
  EXPECT_EQ(nik_mul(Natural(105), Natural(106)), Natural(11130));
  EXPECT_EQ(nik_mul(Bin("11"), Bin("11")), Bin("1001"));
}

TEST(NikMulTest, ZeroOperands) {
  const Natural x = testing::Dec("987654321987654321987654321987654321");
  EXPECT_EQ(nik_mul(x, Natural()), Natural());
  EXPECT_EQ(nik_mul(Natural(), x), Natural());
  EXPECT_EQ(nik_mul(Natural(), Natural()), Natural());
}

TEST(NikMulTest, EqualOperandsMatchSquaring) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Natural x = RandomNatural(0, 800, rng);
    ASSERT_EQ(nik_mul(x, x), nik_square(x));
  }
}

TEST(NikMulTest, MatchesSchoolbook) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t hi = i < 1800 ? 200 : 2000;
    const Natural a = RandomNatural(0, hi, rng);
    const Natural b = RandomNatural(0, hi, rng);
    ASSERT_EQ(nik_mul(a, b), school_mul(a, b));
  }
}

TEST(NikMulTest, DifferenceOfSquaresIsAQuarterExact) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 1000; ++i) {
    const Natural a = RandomNatural(0, 400, rng);
    const Natural b = RandomNatural(0, 400, rng);
    const Natural d = sub(nik_square(add(a, b)),
                          nik_square(abs_diff(a, b).magnitude()));
    ASSERT_TRUE(is_zero(low_bits(d, 2)));
    ASSERT_EQ(shr(d, 2), school_mul(a, b));
  }
}

// The 128-bit path and the arbitrary-precision path run the same template;
// they must agree on values and on every operation count.
TEST(NikMulTest, WidePathMatchesNaturalPath) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 3000; ++i) {
    const Natural a = RandomNatural(0, detail::kWideMulBits, rng);
    const Natural b = RandomNatural(0, detail::kWideMulBits, rng);
    Meter wide_meter;
    Meter natural_meter;
    const Natural wide = detail::from_wide(detail::multiply<detail::WideOps>(
        detail::to_wide(a), detail::to_wide(b), &wide_meter));
    const Natural big =
        detail::multiply<detail::NaturalOps>(a, b, &natural_meter);
    ASSERT_EQ(wide, big);
    ASSERT_EQ(wide, school_mul(a, b));
    ASSERT_EQ(wide_meter.counts(), natural_meter.counts());

    Meter ws;
    Meter ns;
    ASSERT_EQ(detail::from_wide(detail::square_raw<detail::WideOps>(
                  detail::to_wide(a), &ws)),
              detail::square_raw<detail::NaturalOps>(a, &ns));
    ASSERT_EQ(ws.counts(), ns.counts());
  }
}

TEST(NikMulTest, NarrowPathMatchesNaturalPath) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 3000; ++i) {
    const Natural a = RandomNatural(0, detail::kNarrowMulBits, rng);
    const Natural b = RandomNatural(0, detail::kNarrowMulBits, rng);
    Meter narrow_meter;
    Meter natural_meter;
    const Natural narrow(detail::multiply<detail::NarrowOps>(
        a.low_word(), b.low_word(), &narrow_meter));
    ASSERT_EQ(narrow, detail::multiply<detail::NaturalOps>(a, b, &natural_meter));
    ASSERT_EQ(narrow_meter.counts(), natural_meter.counts());

    const HybridConfig cfg{1 + static_cast<std::uint64_t>(i % 9)};
    Meter nk;
    Meter bk;
    ASSERT_EQ(Natural(detail::karatsuba<detail::NarrowOps>(
                  a.low_word(), b.low_word(), cfg, &nk, nullptr, 0)),
              detail::karatsuba<detail::NaturalOps>(a, b, cfg, &bk, nullptr, 0));
    ASSERT_EQ(nk.counts(), bk.counts());
  }
}

TEST(NearBaseTest, DeficitsBelowBase) {
  const NearBaseSteps s =
      near_base_mul_steps(Natural(95), Natural(96), Natural(100));
  EXPECT_EQ(s.deficit_m, SignedInt(-1, Natural(5)));
  EXPECT_EQ(s.deficit_n, SignedInt(-1, Natural(4)));
  EXPECT_EQ(s.cross, SignedInt(Natural(91)));
  EXPECT_EQ(s.deficit_product, SignedInt(Natural(20)));
  EXPECT_EQ(s.result, Natural(9120));
}

TEST(NearBaseTest, SurplusAboveBase) {
  const NearBaseSteps s =
      near_base_mul_steps(Natural(105), Natural(106), Natural(100));
  EXPECT_EQ(s.cross, SignedInt(Natural(111)));
  EXPECT_EQ(s.deficit_product, SignedInt(Natural(30)));
  EXPECT_EQ(s.result, Natural(11130));
}

TEST(NearBaseTest, BinaryExamples) {
  const NearBaseSteps s = near_base_mul_steps(Bin("11"), Bin("11"), Bin("10"));
  EXPECT_EQ(s.cross, SignedInt(Bin("100")));
  EXPECT_EQ(s.deficit_product, SignedInt(Bin("1")));
  EXPECT_EQ(s.result, Bin("1001"));

  const NearBaseSteps t =
      near_base_mul_steps(Bin("101"), Bin("110"), Bin("100"));
  EXPECT_EQ(t.cross, SignedInt(Bin("111")));
  EXPECT_EQ(t.deficit_product, SignedInt(Bin("10")));
  EXPECT_EQ(t.result, Bin("11110"));
}

TEST(NearBaseTest, CarryMixedSignsAndFarOperands) {
  // a * b = 400 >= x.
  EXPECT_EQ(near_base_mul(Natural(80), Natural(80), Natural(100)),
            Natural(6400));
  EXPECT_EQ(near_base_mul(Natural(95), Natural(105), Natural(100)),
            Natural(9975));
  EXPECT_EQ(near_base_mul(Natural(1), Natural(1), Natural(100)), Natural(1));
  EXPECT_EQ(near_base_mul(Natural(), Natural(77), Natural(100)), Natural());
}

TEST(NearBaseTest, ZeroDeficits) {
  const Natural x(1000);
  const NearBaseSteps s = near_base_mul_steps(x, x, x);
  EXPECT_EQ(s.deficit_m.sign(), 0);
  EXPECT_EQ(s.deficit_n.sign(), 0);
  EXPECT_EQ(s.result, Natural(1000000));
}

TEST(NearBaseTest, ZeroBaseIsADomainError) {
  EXPECT_THROW(near_base_mul(Natural(3), Natural(4), Natural()), DomainError);
}

TEST(NearBaseTest, ResultIndependentOfBase) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 500; ++i) {
    const Natural m = RandomNatural(0, 200, rng);
    const Natural n = RandomNatural(0, 200, rng);
    const Natural expected = school_mul(m, n);
    for (int k = 0; k < 4; ++k) {
      const Natural x = RandomNatural(1, 220, rng);
      ASSERT_EQ(near_base_mul(m, n, x), expected);
    }
    ASSERT_EQ(near_base_mul(m, n, pow2(rng() % 230)), expected);
  }
}

TEST(NearestBaseTest, Examples) {
  EXPECT_EQ(nearest_base(Natural(95), 10), 2u);
  EXPECT_EQ(nearest_base(Natural(105), 10), 2u);
  EXPECT_EQ(nearest_base(Natural(1), 10), 0u);
  EXPECT_EQ(nearest_base(Natural(1), 2), 0u);
  EXPECT_EQ(nearest_base(Bin("101"), 2), 2u);
  EXPECT_EQ(nearest_base(Bin("111"), 2), 3u);
  EXPECT_EQ(nearest_base(Natural(999), 10), 3u);
}

TEST(NearestBaseTest, TiesGoToTheSmallerPower) {
  EXPECT_EQ(nearest_base(Natural(55), 10), 1u);  // 45 from 10 and from 100
  EXPECT_EQ(nearest_base(Bin("11"), 2), 1u);     // 1 from 10 and from 100
  EXPECT_EQ(nearest_base(Natural(6), 2), 2u);    // 2 from 4 and from 8
}

TEST(NearestBaseTest, MinimisesDistanceOverAdjacentPowers) {
  std::mt19937_64 rng(28);
  for (int radix : {2, 3, 10, 16}) {
    for (int i = 0; i < 300; ++i) {
      const Natural m = RandomNatural(1, 150, rng);
      const std::uint64_t p = nearest_base(m, radix);
      const auto dist = [&](std::uint64_t q) {
        return abs_diff(m, radix_power(radix, q)).magnitude();
      };
      ASSERT_LE(radix_power(radix, p == 0 ? 0 : p - 1), m);
      if (p > 0) {
        ASSERT_LT(dist(p), dist(p - 1));
      }
      ASSERT_LE(dist(p), dist(p + 1));
    }
  }
}

TEST(NearestBaseTest, Errors) {
  EXPECT_THROW(nearest_base(Natural(), 10), DomainError);
  EXPECT_THROW(nearest_base(Natural(5), 1), DomainError);
}

TEST(TraceFormatTest, JsonSchemaAndRoundTrip) {
  const SquaringTrace t = nik_square_traced(Bin("101010"));
  const std::string text = trace_to_json(t);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["input"], "101010");
  EXPECT_EQ(doc["bit_length"], 6);
  ASSERT_EQ(doc["steps"].size(), 5u);
  EXPECT_EQ(doc["steps"][0]["i"], 2);
  EXPECT_EQ(doc["steps"][0]["j"], 5);
  EXPECT_EQ(doc["steps"][0]["bit_set"], true);
  EXPECT_EQ(doc["steps"][0]["residue"], "1010");
  EXPECT_EQ(doc["steps"][2]["partial"], "1100100");
  EXPECT_EQ(doc["result"], "11011100100");
  EXPECT_EQ(trace_from_json(text), t);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const SquaringTrace r = nik_square_traced(RandomNatural(0, 40, rng));
    ASSERT_EQ(trace_from_json(trace_to_json(r, -1)), r);
  }
}

TEST(TraceFormatTest, MalformedJson) {
  EXPECT_THROW(trace_from_json("{"), ParseError);
  EXPECT_THROW(trace_from_json("[]"), ParseError);
  EXPECT_THROW(trace_from_json(R"({"input": "12"})"), ParseError);
  EXPECT_THROW(trace_from_json(R"({"input": "1", "bit_length": 1})"),
               ParseError);
}

TEST(TraceFormatTest, TableLayout) {
  const std::string table =
      render_trace_table(nik_square_traced(Bin("101010")));
  EXPECT_NE(table.find("Base Difference"), std::string::npos);
  EXPECT_NE(table.find("Next Difference"), std::string::npos);
  EXPECT_NE(table.find("01010"), std::string::npos);
  EXPECT_NE(table.find("B_4=1100100"), std::string::npos);

  // Header, two operand rows, B_1..B_5 and the result.
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < table.size()) {
    const std::size_t end = table.find('\n', start);
    lines.push_back(table.substr(start, end - start));
    start = end + 1;
  }
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines.back().rfind("Result", 0), 0u);
  EXPECT_NE(lines.back().find("11011100100"), std::string::npos);
  for (const std::string& line : lines) {
    EXPECT_EQ(line.size(), lines.front().size());
  }
}

}  // namespace
}  // namespace nikhilam
