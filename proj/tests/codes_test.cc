// Copyright 2026 The QSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/codes.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qss/error.h"
#include "test_support.h"

namespace qss {
namespace {

using testing::BruteField;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qss::Error thrown";
  return ErrorCode::kIoError;
}

std::set<Vector> CodewordSet(const LinearCode& code) {
  std::set<Vector> out;
  for (const auto& c : code.Codewords()) out.insert(c.values);
  return out;
}

std::set<std::vector<int>> Supports(const std::vector<MinimalCodeword>& words) {
  std::set<std::vector<int>> out;
  for (const auto& mc : words) out.insert(mc.word.Support());
  return out;
}

TEST(LinearCode, FromGeneratorDropsDependentRows) {
  const auto code =
      LinearCode::FromGenerator(Field::Prime(2), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(code.k(), 2u);
  EXPECT_EQ(code.n(), 3u);
}

TEST(LinearCode, ExampleCodeHasExpectedShape) {
  const auto code = testing::ExampleCode();
  EXPECT_EQ(code.k(), 6u);
  EXPECT_EQ(code.n(), 11u);
  // The printed parity-check matrix is already in reduced row-echelon form.
  EXPECT_EQ(code.parity_check(), testing::ExampleParityCheck());
}

TEST(LinearCode, TernaryRepetitionHasRankTwoParityCheck) {
  const auto code = LinearCode::FromGenerator(Field::Prime(3), {{1, 1, 1}});
  EXPECT_EQ(code.k(), 1u);
  EXPECT_EQ(code.parity_check().size(), 2u);
  for (const auto& h : code.parity_check()) {
    EXPECT_EQ(Field::Prime(3).Dot(h, code.generator()[0]), 0u);
  }
}

TEST(LinearCode, RejectsZeroAndBadEntries) {
  EXPECT_EQ(CodeOf([] { LinearCode::FromGenerator(Field::Prime(2), {{0, 0, 0}}); }),
            ErrorCode::kZeroCode);
  EXPECT_EQ(CodeOf([] { LinearCode::FromGenerator(Field::Prime(3), {{0, 3, 0}}); }),
            ErrorCode::kBadEntry);
  EXPECT_EQ(CodeOf([] { LinearCode::FromGenerator(Field::Prime(2), {{1, 0}, {1}}); }),
            ErrorCode::kBadEntry);
}

TEST(LinearCode, DualExamples) {
  const Field f2 = Field::Prime(2);
  const auto full = LinearCode::FromGenerator(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(CodeOf([&] { full.Dual(); }), ErrorCode::kZeroCode);

  const auto rep = LinearCode::FromGenerator(f2, {{1, 1, 1}});
  const auto even = rep.Dual();
  EXPECT_EQ(even.k(), 2u);
  EXPECT_EQ(CodewordSet(even),
            (std::set<Vector>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));

  const auto example_dual = testing::ExampleCode().Dual();
  EXPECT_EQ(example_dual.k(), 5u);
  EXPECT_EQ(CodewordSet(example_dual),
            testing::BruteSpan(BruteField::Prime(2), testing::ExampleParityCheck()));

  const auto zero_sum_dual = testing::ZeroSumCode().Dual();
  EXPECT_EQ(CodewordSet(zero_sum_dual),
            (std::set<Vector>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
}

TEST(LinearCode, ContainsExamples) {
  const auto code = testing::ExampleCode();
  const Vector& e = testing::ExampleSecretDirection();
  EXPECT_TRUE(code.Contains(e));
  EXPECT_TRUE(code.Contains(Vector(11, 0)));
  EXPECT_FALSE(code.DualContains(e));
  EXPECT_FALSE(code.Dual().Contains(e));
  EXPECT_EQ(CodeOf([&] { code.Contains(Vector(10, 0)); }), ErrorCode::kLengthMismatch);
}

TEST(LinearCode, EnumerationCounts) {
  EXPECT_EQ(testing::ExampleCode().Codewords().size(), 64u);
  EXPECT_EQ(testing::ZeroSumCode().Codewords().size(), 9u);
  EXPECT_EQ(CodeOf([] { testing::ExampleCode().Codewords(63); }),
            ErrorCode::kEnumerationTooLarge);
}

TEST(LinearCode, EnumerationMatchesBruteSpan) {
  EXPECT_EQ(CodewordSet(testing::ExampleCode()),
            testing::BruteSpan(BruteField::Prime(2), testing::ExampleGenerator()));
  const auto gf4 = testing::Gf4Code();
  EXPECT_EQ(CodewordSet(gf4), testing::BruteSpan(BruteField::Gf4(), gf4.generator()));
}

TEST(Covers, Examples) {
  EXPECT_TRUE(Covers(Codeword{{1, 1, 1, 0, 0}}, Codeword{{0, 1, 1, 0, 0}}));
  EXPECT_TRUE(Covers(Codeword{{0, 2, 0}}, Codeword{{0, 0, 0}}));
  // {2,3,4,6,8} does not contain {6,9,11}.
  EXPECT_FALSE(Covers(Codeword{{0, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0}},
                      Codeword{{0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1}}));
  EXPECT_EQ(CodeOf([] { Covers(Codeword{{1}}, Codeword{{1, 0}}); }),
            ErrorCode::kLengthMismatch);
}

TEST(MinimalCodewords, ElevenQubitCodeHasTwentyOneSets) {
  const auto minimal = MinimalCodewordsOutsideDual(testing::ExampleCode());
  ASSERT_EQ(minimal.size(), 21u);
  EXPECT_EQ(Supports(minimal), testing::ExampleGammaMin());
  int weight3 = 0;
  int weight5 = 0;
  for (const auto& mc : minimal) {
    weight3 += mc.word.Weight() == 3;
    weight5 += mc.word.Weight() == 5;
    EXPECT_EQ(mc.multiplicity, 1u);
  }
  EXPECT_EQ(weight3, 5);
  EXPECT_EQ(weight5, 16);
  EXPECT_EQ(minimal.front().word.Support(), (std::vector<int>{1, 8, 11}));
}

TEST(MinimalCodewords, HammingGivesItsSevenWeightThreeWords) {
  const auto minimal = MinimalCodewordsOutsideDual(testing::HammingCode());
  ASSERT_EQ(minimal.size(), 7u);
  for (const auto& mc : minimal) EXPECT_EQ(mc.word.Weight(), 3u);
}

TEST(MinimalCodewords, ZeroSumIsTwoOfThree) {
  EXPECT_EQ(Supports(MinimalCodewordsOutsideDual(testing::ZeroSumCode())),
            (std::set<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(MinimalCodewords, AgreeWithDefinitionOnCorpus) {
  struct Case {
    LinearCode code;
    BruteField field;
  };
  const std::vector<Case> cases = {
      {testing::ExampleCode(), BruteField::Prime(2)},
      {testing::HammingCode(), BruteField::Prime(2)},
      {testing::ZeroSumCode(), BruteField::Prime(3)},
      {testing::DegenerateCode(), BruteField::Prime(2)},
      {testing::Gf4Code(), BruteField::Gf4()},
      {testing::ImpureCode(), BruteField::Prime(2)},
  };
  for (const auto& c : cases) {
    const auto minimal = MinimalCodewordsOutsideDual(c.code);
    EXPECT_EQ(Supports(minimal), testing::BruteMinimalSupports(c.field, c.code.generator()));
  }
}

TEST(MinimalCodewords, OutputInvariants) {
  for (const auto& code : {testing::ExampleCode(), testing::HammingCode(),
                           testing::ZeroSumCode(), testing::Gf4Code()}) {
    const auto minimal = MinimalCodewordsOutsideDual(code);
    const auto all = code.Codewords();
    for (const auto& mc : minimal) {
      EXPECT_TRUE(code.Contains(mc.word.values));
      EXPECT_FALSE(code.DualContains(mc.word.values));
      EXPECT_EQ(NormalizeLeading(code.field(), mc.word.values), mc.word.values);
      for (const auto& other : all) {
        if (other.Weight() == 0 || !Covers(mc.word, other)) continue;
        // Any covered nonzero codeword is a scalar multiple.
        EXPECT_EQ(NormalizeLeading(code.field(), other.values), mc.word.values);
      }
      for (const auto& mc2 : minimal) {
        if (&mc == &mc2) continue;
        EXPECT_FALSE(Covers(mc.word, mc2.word));
      }
    }
    // Sorted by (weight, support).
    for (std::size_t i = 1; i < minimal.size(); ++i) {
      const auto& a = minimal[i - 1].word;
      const auto& b = minimal[i].word;
      EXPECT_TRUE(a.Weight() < b.Weight() ||
                  (a.Weight() == b.Weight() && a.Support() < b.Support()));
    }
  }
}

TEST(MinimalCodewords, EveryMinimumWeightWordIsMinimal) {
  const auto code = testing::ExampleCode();
  const auto supports = Supports(MinimalCodewordsOutsideDual(code));
  for (const auto& c : code.Codewords()) {
    if (c.Weight() == 3 && !code.DualContains(c.values)) {
      EXPECT_TRUE(supports.count(c.Support()));
    }
  }
}

TEST(MinimalCodewords, RequiresCssPair) {
  const auto code = LinearCode::FromGenerator(Field::Prime(2), {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(CodeOf([&] { MinimalCodewordsOutsideDual(code); }), ErrorCode::kNotCssPair);
  EXPECT_EQ(CodeOf([&] { MinWeightOutsideDual(code); }), ErrorCode::kNotCssPair);
}

TEST(MinWeightOutsideDual, Examples) {
  EXPECT_EQ(MinWeightOutsideDual(testing::ExampleCode()), 3u);
  EXPECT_EQ(MinWeightOutsideDual(testing::HammingCode()), 3u);
  EXPECT_EQ(MinWeightOutsideDual(testing::ZeroSumCode()), 2u);
  EXPECT_EQ(MinWeightOutsideDual(testing::DegenerateCode()), 1u);
}

// Random generator matrices over small fields.
TEST(LinearCode, RandomCodesSatisfyStructuralInvariants) {
  std::mt19937_64 rng(20261018);
  const std::vector<Field> fields = {Field::Prime(2), Field::Prime(3), Field::Make(2, 2),
                                     Field::Prime(5)};
  for (int trial = 0; trial < 60; ++trial) {
    const Field& f = fields[trial % fields.size()];
    const std::size_t n = 2 + rng() % 5;
    const std::size_t rows = 1 + rng() % n;
    Matrix g(rows, Vector(n));
    for (auto& row : g) {
      for (auto& x : row) x = static_cast<Symbol>(rng() % f.q());
    }
    bool all_zero = true;
    for (const auto& row : g) {
      for (auto x : row) all_zero = all_zero && x == 0;
    }
    if (all_zero) continue;
    const auto code = LinearCode::FromGenerator(f, g);
    EXPECT_EQ(code.k() + code.parity_check().size(), n);
    for (const auto& gr : code.generator()) {
      for (const auto& hr : code.parity_check()) EXPECT_EQ(f.Dot(gr, hr), 0u);
    }
    for (const auto& row : g) EXPECT_TRUE(code.Contains(row));
    const auto words = code.Codewords();
    EXPECT_EQ(words.size(), code.NumCodewords());
    std::set<Vector> distinct;
    for (const auto& w : words) {
      EXPECT_TRUE(code.Contains(w.values));
      distinct.insert(w.values);
    }
    EXPECT_EQ(distinct.size(), words.size());
    if (code.k() < n) {
      const auto back = code.Dual().Dual();
      for (const auto& row : back.generator()) EXPECT_TRUE(code.Contains(row));
      for (const auto& row : code.generator()) EXPECT_TRUE(back.Contains(row));
    }
  }
}

}  // namespace
}  // namespace qss
