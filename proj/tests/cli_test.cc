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

#include "qss/cli.h"

#include <gtest/gtest.h>

#include "json.hpp"
#include <sstream>

#include "qss/code_file.h"
#include "qss/error.h"
#include "test_support.h"

namespace qss {
namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

std::string Fixture(const std::string& name) {
  return std::string(QSS_FIXTURE_DIR) + "/" + name;
}

CliResult Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = RunCli(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, GammaJsonOnExampleCode) {
  const CliResult r = Cli({"gamma", Fixture("example11.code"), "--g", "00000100101", "--json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "gamma");
  EXPECT_EQ(j["n"], 11);
  EXPECT_EQ(j["k"], 6);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["pure"], true);
  EXPECT_EQ(j["beta"], 1);
  ASSERT_EQ(j["gamma_min"].size(), 21u);
  EXPECT_EQ(j["gamma_min"][0], nlohmann::json({1, 8, 11}));
  std::set<std::vector<int>> sets;
  for (const auto& t : j["gamma_min"]) sets.insert(t.template get<std::vector<int>>());
  EXPECT_EQ(sets, testing::ExampleGammaMin());
  EXPECT_EQ(j["multiplicity"]["1,8,11"], 1);
}

TEST(Cli, JsonIsByteStable) {
  const std::vector<std::string> args = {"gamma", Fixture("example11.code"), "--g",
                                         "00000100101", "--json"};
  EXPECT_EQ(Cli(args).out, Cli(args).out);
}

TEST(Cli, RecoverExampleWitness) {
  const CliResult r = Cli({"recover", Fixture("example11.code"), "--g", "00000100101", "--secret", "1",
                     "--set", "3,10,11", "--json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["recovered"], 1);
  EXPECT_EQ(j["authorized"], true);
  EXPECT_EQ(j["classical_agrees"], true);
  EXPECT_GE(j["fidelity"].get<double>(), 1.0 - 1e-9);
  EXPECT_EQ(j["witness_support"], nlohmann::json({3, 10, 11}));
}

TEST(Cli, RecoverUnauthorizedSetFails) {
  const CliResult r = Cli({"recover", Fixture("example11.code"), "--secret", "1", "--set", "3,10",
                     "--json"});
  EXPECT_EQ(r.status, kExitValidation);
  EXPECT_EQ(nlohmann::json::parse(r.out)["authorized"], false);
}

TEST(Cli, CompareAgreesOnSteane) {
  const CliResult r = Cli({"compare", Fixture("steane.code"), "--json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["agree"], true);
}

TEST(Cli, OracleSingleSet) {
  const CliResult r = Cli({"oracle", Fixture("zerosum3.code"), "--set", "1,2", "--json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["authorized"], true);
  EXPECT_EQ(j["unauthorized"], false);
}

TEST(Cli, TextCommands) {
  const CliResult minimal = Cli({"minimal", Fixture("zerosum3.code")});
  ASSERT_EQ(minimal.status, kExitOk);
  EXPECT_NE(minimal.out.find("3 minimal codewords"), std::string::npos);
  const CliResult stab = Cli({"stabilizer", Fixture("zerosum3.code")});
  ASSERT_EQ(stab.status, kExitOk);
  EXPECT_NE(stab.out.find("1 1 1 | 0 0 0"), std::string::npos);
  EXPECT_EQ(Cli({"validate", Fixture("gf4_tricode.code")}).status, kExitOk);
  EXPECT_EQ(Cli({"encode", Fixture("zerosum3.code"), "--secret", "2"}).status, kExitOk);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(Cli({"validate", Fixture("malformed.code")}).status, kExitInput);
  EXPECT_EQ(Cli({"validate", Fixture("noncss.code")}).status, kExitValidation);
  EXPECT_EQ(Cli({"validate", Fixture("impure9.code")}).status, kExitValidation);
  EXPECT_EQ(Cli({"validate", Fixture("impure9.code"), "--allow-impure"}).status, kExitOk);
  EXPECT_EQ(Cli({"validate", Fixture("missing.code")}).status, kExitInput);
  EXPECT_EQ(Cli({"validate"}).status, kExitInput);
  EXPECT_EQ(Cli({"bogus"}).status, kExitInput);
  EXPECT_EQ(Cli({"validate", Fixture("example11.code"), "--g", "10000000000"}).status,
            kExitValidation);
}

TEST(Cli, ResourceLimitsExitTwo) {
  EXPECT_EQ(Cli({"encode", Fixture("example11.code"), "--secret", "0", "--max-dim", "1000"}).status,
            kExitResource);
  EXPECT_EQ(Cli({"oracle", Fixture("example11.code"), "--t-cap", "100"}).status, kExitResource);
  EXPECT_EQ(Cli({"encode", Fixture("zerosum3.code"), "--secret", "1", "--max-dim", "5",
                 "--force"}).status,
            kExitOk);
}

TEST(CodeFile, RoundTrip) {
  for (const LinearCode& code : {testing::ExampleCode(), testing::Gf4Code(),
                                 testing::ZeroSumCode()}) {
    const LinearCode back = ParseCodeText(FormatCodeFile(code));
    EXPECT_EQ(back.generator(), code.generator());
    EXPECT_EQ(back.field(), code.field());
  }
}

TEST(CodeFile, ParseErrors) {
  auto code_of = [](std::string_view text) {
    try {
      ParseCodeText(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  EXPECT_EQ(code_of("field: p=3 m=1\nrows: k=1 n=2\n1 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("field: p=3 m=1\nrows: k=2 n=2\n1 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("rows: k=1 n=2\n1 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("field: p=3 m=1\nrows: k=1 n=2\n0 0\n"), ErrorCode::kZeroCode);
  EXPECT_EQ(code_of("field: p=4 m=1\nrows: k=1 n=1\n1\n"), ErrorCode::kNonPrimeCharacteristic);
  const LinearCode c = ParseCodeText("# comment\nfield: p=3 m=1\n\nrows: k=1 n=3  # tail\n1 1 1\n");
  EXPECT_EQ(c.n(), 3u);
}

TEST(CodeFile, Digest) {
  EXPECT_EQ(Fnv1aHex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1aHex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace qss
