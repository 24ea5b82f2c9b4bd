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

#include "qss/access.h"

#include <gtest/gtest.h>

#include <random>

#include "qss/error.h"
#include "test_support.h"

namespace qss {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qss::Error thrown";
  return ErrorCode::kIoError;
}

QssScheme ExampleScheme() {
  SchemeOptions options;
  options.g = testing::ExampleSecretDirection();
  return QssScheme::Build(testing::ExampleCode(), options);
}

std::set<std::vector<int>> AsSets(const AccessStructure& s) {
  std::set<std::vector<int>> out;
  for (const auto& t : s.gamma_min) out.insert(t.positions());
  return out;
}

PartySet Set(std::vector<int> positions, std::size_t n) {
  return PartySet::FromPositions(std::move(positions), n);
}

TEST(PartySet, Construction) {
  const PartySet t = Set({11, 3, 10}, 11);
  EXPECT_EQ(t.positions(), (std::vector<int>{3, 10, 11}));
  EXPECT_EQ(t.ToString(), "{3,10,11}");
  EXPECT_EQ(t.mask(), (1ull << 2) | (1ull << 9) | (1ull << 10));
  EXPECT_EQ(PartySet::FromMask(t.mask()), t);
  EXPECT_EQ(Set({}, 4).ToString(), "{}");
  EXPECT_EQ(Set({1, 2}, 4).Complement(4), Set({3, 4}, 4));
  EXPECT_TRUE(Set({3, 10}, 11).IsSubsetOf(t));
  EXPECT_FALSE(t.IsSubsetOf(Set({3, 10}, 11)));
}

TEST(PartySet, Validation) {
  EXPECT_EQ(CodeOf([] { Set({0}, 3); }), ErrorCode::kBadPartySet);
  EXPECT_EQ(CodeOf([] { Set({4}, 3); }), ErrorCode::kBadPartySet);
  EXPECT_EQ(CodeOf([] { Set({1, 1}, 3); }), ErrorCode::kBadPartySet);
  EXPECT_EQ(CodeOf([] { Set({1}, 65); }), ErrorCode::kBadPartySet);
}

TEST(PartySet, OrderingIsSizeThenLex) {
  EXPECT_LT(Set({5}, 6), Set({1, 2}, 6));
  EXPECT_LT(Set({1, 8, 11}, 11), Set({2, 3, 4}, 11));
  EXPECT_LT(Set({1, 2, 9}, 11), Set({1, 8, 11}, 11));
}

TEST(GammaFromTheorem, ElevenQubitCode) {
  const AccessStructure gamma = GammaFromTheorem(ExampleScheme());
  EXPECT_EQ(gamma.n, 11u);
  EXPECT_EQ(gamma.gamma_min.size(), 21u);
  EXPECT_EQ(AsSets(gamma), testing::ExampleGammaMin());
  EXPECT_EQ(gamma.gamma_min.front(), Set({1, 8, 11}, 11));
  EXPECT_TRUE(std::is_sorted(gamma.gamma_min.begin(), gamma.gamma_min.end()));
  EXPECT_TRUE(gamma.IsAntichain());
  for (std::size_t m : gamma.multiplicity) EXPECT_EQ(m, 1u);
}

TEST(GammaFromTheorem, ZeroSumIsTwoOfThree) {
  const AccessStructure gamma = GammaFromTheorem(QssScheme::Build(testing::ZeroSumCode()));
  EXPECT_EQ(AsSets(gamma), (std::set<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(GammaFromTheorem, SteaneIsFanoLines) {
  const AccessStructure gamma = GammaFromTheorem(QssScheme::Build(testing::HammingCode()));
  EXPECT_EQ(gamma.gamma_min.size(), 7u);
  for (const auto& t : gamma.gamma_min) EXPECT_EQ(t.size(), 3u);
  // Any two lines meet in exactly one point.
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      EXPECT_EQ(std::popcount(gamma.gamma_min[i].mask() & gamma.gamma_min[j].mask()), 1);
    }
  }
}

TEST(GammaFromTheorem, MatchesBruteForceOnCorpus) {
  const std::vector<std::pair<LinearCode, testing::BruteField>> cases = {
      {testing::ExampleCode(), testing::BruteField::Prime(2)},
      {testing::HammingCode(), testing::BruteField::Prime(2)},
      {testing::ZeroSumCode(), testing::BruteField::Prime(3)},
      {testing::DegenerateCode(), testing::BruteField::Prime(2)},
      {testing::Gf4Code(), testing::BruteField::Gf4()},
  };
  for (const auto& [code, bf] : cases) {
    EXPECT_EQ(AsSets(GammaFromTheorem(QssScheme::Build(code))),
              testing::BruteMinimalSupports(bf, code.generator()));
  }
}

TEST(GammaFromTheorem, IndependentOfG) {
  const auto expected = AsSets(GammaFromTheorem(ExampleScheme()));
  EXPECT_EQ(AsSets(GammaFromTheorem(QssScheme::Build(testing::ExampleCode()))), expected);
}

TEST(AccessStructure, IsAuthorized) {
  const AccessStructure gamma = GammaFromTheorem(ExampleScheme());
  EXPECT_TRUE(gamma.IsAuthorized(Set({3, 10, 11}, 11)));
  EXPECT_TRUE(gamma.IsAuthorized(Set({1, 3, 10, 11}, 11)));
  EXPECT_FALSE(gamma.IsAuthorized(Set({3, 10}, 11)));
  EXPECT_FALSE(gamma.IsAuthorized(Set({}, 11)));
}

TEST(Oracle, ExampleSingleSets) {
  const QssScheme s = ExampleScheme();
  OracleOptions options;
  options.max_operators = 1ull << 18;  // complements of two-party sets
  const GottesmanOracle oracle(s, options);
  EXPECT_TRUE(oracle.IsUnauthorized(Set({3, 10}, 11)).holds);
  EXPECT_FALSE(oracle.IsAuthorized(Set({3, 10}, 11)).holds);

  const OracleVerdict leak = oracle.IsUnauthorized(Set({3, 10, 11}, 11));
  ASSERT_FALSE(leak.holds);
  ASSERT_TRUE(leak.witness.has_value());
  const PartySet within = Set({3, 10, 11}, 11);
  for (int t : leak.witness->op.Support()) EXPECT_TRUE(within.mask() >> (t - 1) & 1);
  EXPECT_GT(std::abs(leak.witness->lhs - leak.witness->rhs), 1e-6);

  EXPECT_TRUE(oracle.IsAuthorized(Set({3, 10, 11}, 11)).holds);
  EXPECT_FALSE(oracle.IsAuthorized(Set({1, 2}, 11)).holds);
  EXPECT_TRUE(oracle.IsUnauthorized(Set({1, 2}, 11)).holds);
}

TEST(Oracle, FreeFunctionsAgreeWithClass) {
  const QssScheme s = QssScheme::Build(testing::ZeroSumCode());
  EXPECT_TRUE(IsAuthorizedOracle(s, Set({1, 2}, 3)).holds);
  EXPECT_TRUE(IsUnauthorizedOracle(s, Set({3}, 3)).holds);
  EXPECT_FALSE(IsAuthorizedOracle(s, Set({3}, 3)).holds);
}

TEST(Oracle, SparseElementMatchesDense) {
  std::mt19937_64 rng(17);
  for (const auto& [name, scheme] : testing::Corpus()) {
    SCOPED_TRACE(name);
    const GottesmanOracle oracle(scheme);
    for (int trial = 0; trial < 40; ++trial) {
      PauliWord e = PauliWord::Identity(scheme.n());
      for (auto& x : e.a) x = static_cast<Symbol>(rng() % scheme.q());
      for (auto& x : e.b) x = static_cast<Symbol>(rng() % scheme.q());
      const Symbol i = rng() % scheme.q();
      const Symbol j = rng() % scheme.q();
      const Amplitude dense = MatrixElement(oracle.states()[i], e, oracle.states()[j]);
      EXPECT_NEAR(std::abs(oracle.Element(i, e, j) - dense), 0.0, 1e-12);
    }
  }
}

TEST(Oracle, ResourceLimits) {
  const QssScheme s = ExampleScheme();
  OracleOptions small;
  small.max_amplitudes = 1024;
  EXPECT_EQ(CodeOf([&] { GottesmanOracle(s, small); }), ErrorCode::kDimensionTooLarge);
  OracleOptions few_ops;
  few_ops.max_operators = 16;
  const GottesmanOracle oracle(s, few_ops);
  EXPECT_EQ(CodeOf([&] { oracle.IsUnauthorized(Set({3, 10, 11}, 11)); }),
            ErrorCode::kOperatorScanTooLarge);
  EXPECT_EQ(CodeOf([&] { FullOracleStructure(s); }), ErrorCode::kOperatorScanTooLarge);
}

TEST(FullOracleStructure, DegenerateHasSingleParty) {
  const OracleReport report = FullOracleStructure(QssScheme::Build(testing::DegenerateCode()));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.subsets_scanned, 8u);
  ASSERT_EQ(report.structure.gamma_min.size(), 1u);
  EXPECT_EQ(report.structure.gamma_min[0], Set({3}, 3));
  EXPECT_EQ(report.authorized.size(), 4u);
}

TEST(FullOracleStructure, MatchesTheoremOnScannableCorpus) {
  for (const auto& [name, scheme] : testing::ScannableCorpus()) {
    SCOPED_TRACE(name);
    const OracleReport report = FullOracleStructure(scheme);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.structure.source, StructureSource::kOracle);
    EXPECT_TRUE(CompareStructures(GammaFromTheorem(scheme), report.structure).empty());
    const AccessStructure gamma = GammaFromTheorem(scheme);
    for (const auto& t : report.authorized) EXPECT_TRUE(gamma.IsAuthorized(t));
  }
}

TEST(CompareStructures, ReportsDifferences) {
  AccessStructure a{3, {Set({1, 2}, 3), Set({1, 3}, 3)}, {1, 1}};
  AccessStructure b{3, {Set({1, 2}, 3), Set({2, 3}, 3)}, {1, 1}};
  const StructureDiff diff = CompareStructures(a, b);
  EXPECT_EQ(diff.only_in_first, (std::vector<PartySet>{Set({1, 3}, 3)}));
  EXPECT_EQ(diff.only_in_second, (std::vector<PartySet>{Set({2, 3}, 3)}));
  EXPECT_TRUE(CompareStructures(a, a).empty());
  AccessStructure c{4, {}, {}};
  EXPECT_EQ(CodeOf([&] { CompareStructures(a, c); }), ErrorCode::kSizeMismatch);
}

TEST(DetectabilityLink, ExampleUpToFourParties) {
  const DetectabilityReport report = CheckDetectabilityLink(ExampleScheme(), 4);
  EXPECT_TRUE(report.passed);
  EXPECT_FALSE(report.witness.has_value());
  EXPECT_GT(report.words_checked, 0u);
}

TEST(DetectabilityLink, Corpus) {
  for (const auto& [name, scheme] : testing::Corpus()) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(CheckDetectabilityLink(scheme, 3).passed);
  }
}

TEST(MinimumWeight, AllMinimumWeightSupportsAreMinimal) {
  for (const auto& [name, scheme] : testing::Corpus()) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(MissingMinimumWeightSupports(scheme, GammaFromTheorem(scheme)).empty());
  }
  const QssScheme s = ExampleScheme();
  AccessStructure trimmed = GammaFromTheorem(s);
  trimmed.gamma_min.erase(trimmed.gamma_min.begin());
  trimmed.multiplicity.erase(trimmed.multiplicity.begin());
  EXPECT_EQ(MissingMinimumWeightSupports(s, trimmed),
            (std::vector<PartySet>{Set({1, 8, 11}, 11)}));
}

}  // namespace
}  // namespace qss
