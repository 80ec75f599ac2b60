// Copyright 2026 The wordmaps Authors
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

#include "wordmaps/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "wordmaps/altwords.hpp"

namespace wordmaps::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Width) {
  const auto r = call({"width", "--k", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["bound"], 4);
  EXPECT_EQ(j["element"], "(1 2 3 4 5 6 7 8 9)");
}

TEST(Cli, ConstructAlt) {
  const auto r = call({"construct", "alt", "--n", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["word"], print_word(construct_word_alt(7).word));
  EXPECT_EQ(r.json()["arity"], 2);
}

TEST(Cli, ConstructSl) {
  const auto r = call({"construct", "sl", "--n", "5", "--q", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["case"], "n_big");
}

TEST(Cli, VerifyIsDeterministicWithoutTiming) {
  const std::vector<std::string> args{"verify", "alt",    "--n", "10",         "--samples",
                                      "400",    "--seed", "3",   "--no-timing"};
  const auto a = call(args);
  auto more = args;
  more.insert(more.begin(), {"--threads", "2"});
  const auto b = call(more);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["pass"], true);
  EXPECT_FALSE(a.json().contains("elapsed_ms"));
}

TEST(Cli, VerifySlExhaustive) {
  const auto r = call({"verify", "sl", "--n", "2", "--q", "3", "--mode", "exhaustive"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["evaluations"], 24);
}

TEST(Cli, Witness) {
  const auto r = call({"witness", "alt", "--n", "11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["value_class"], "three_cycle");
  const auto s = call({"witness", "sl", "--n", "3", "--q", "2"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(s.json()["value_class"], "transvection");
}

TEST(Cli, Parse) {
  const auto r = call({"parse", "[x1,x2]^x1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["word"], "[x1,x2]^x1");
  EXPECT_EQ(j["arity"], 2);
  EXPECT_EQ(j["reduced"], "x1^-2 x2^-1 x1 x2 x1");
}

TEST(Cli, TextFormat) {
  const auto r = call({"--format", "text", "width", "--k", "2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("n=7"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"construct", "alt"}).code, kExitUsage);
  EXPECT_EQ(call({"construct", "alt", "--n", "6"}).code, kExitUsage);
  EXPECT_EQ(call({"construct", "sl", "--n", "3", "--q", "6"}).code, kExitUsage);
  EXPECT_EQ(call({"parse", "[x1"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "alt", "--n", "12", "--mode", "exhaustive"}).code, kExitUsage);
  EXPECT_EQ(call({"--format", "yaml", "width", "--k", "2"}).code, kExitUsage);
  const auto r = call({"construct", "alt", "--n", "6"});
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(call({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace wordmaps::cli
