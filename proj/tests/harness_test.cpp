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

#include "wordmaps/harness.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "wordmaps/altwords.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/slwords.hpp"

namespace wordmaps {
namespace {

TEST(Modes, Names) {
  for (auto m : {VerifyMode::ExhaustiveByClass, VerifyMode::ExhaustiveFull, VerifyMode::Sample}) {
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  }
  EXPECT_EQ(mode_name(VerifyMode::ExhaustiveByClass), "exhaustive-classes");
  EXPECT_THROW(parse_mode("everything"), PreconditionError);
  EXPECT_EQ(value_class_key(ValueClass::DoubleTransvection), "double_transvection");
}

TEST(Report, MergeAddsTotals) {
  VerifyReport a, b;
  a.evaluations = 10;
  a.classes[0] = 7;
  a.classes[1] = 3;
  b.evaluations = 5;
  b.classes[1] = 4;
  b.classes[5] = 1;
  b.violation_count = 1;
  b.violations.push_back({{"()"}, "(1 2)(3 4)", "other(2+2)"});
  a.merge(b);
  EXPECT_EQ(a.evaluations, 15u);
  EXPECT_EQ(a.count(ValueClass::ThreeCycle), 7u);
  EXPECT_EQ(a.count(ValueClass::Other), 1u);
  EXPECT_EQ(a.violation_count, 1u);
  ASSERT_EQ(a.violations.size(), 1u);
}

TEST(Report, MergeKeepsAtMostTheViolationCap) {
  VerifyReport a, b;
  for (std::size_t i = 0; i < kMaxViolations; ++i) a.violations.push_back({{}, "x", "other"});
  a.violation_count = kMaxViolations;
  b.violations.push_back({{}, "y", "other"});
  b.violation_count = 1;
  a.merge(b);
  EXPECT_EQ(a.violations.size(), kMaxViolations);
  EXPECT_EQ(a.violation_count, kMaxViolations + 1);
}

TEST(Verify, ThreadCountDoesNotChangeTheReport) {
  VerifyOptions o;
  o.samples = 3000;
  o.seed = 99;
  o.threads = 1;
  const auto one = report_to_json(verify_image_alt(11, o), false);
  o.threads = 3;
  const auto three = report_to_json(verify_image_alt(11, o), false);
  EXPECT_EQ(one, three);
  o.seed = 100;
  EXPECT_NE(report_to_json(verify_image_alt(11, o), false)["classes"], one["classes"]);

  VerifyOptions s;
  s.mode = VerifyMode::ExhaustiveFull;
  s.threads = 1;
  const auto sl1 = report_to_json(verify_image_sl(2, 5, s), false);
  s.threads = 4;
  EXPECT_EQ(report_to_json(verify_image_sl(2, 5, s), false), sl1);
}

TEST(Verify, ReportSchema) {
  VerifyOptions o;
  o.samples = 500;
  const auto j = report_to_json(verify_image_alt(10, o));
  for (const char* key : {"group", "word", "mode", "seed", "evaluations", "classes", "violations",
                          "violation_count", "witness", "pass", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["group"]["kind"], "alt");
  EXPECT_EQ(j["group"]["n"], 10);
  EXPECT_EQ(j["evaluations"], 500);
  EXPECT_EQ(j["pass"], true);
  EXPECT_FALSE(report_to_json(verify_image_alt(10, o), false).contains("elapsed_ms"));
  std::uint64_t total = 0;
  for (const auto& [k, v] : j["classes"].items()) total += v.get<std::uint64_t>();
  EXPECT_EQ(total, 500u);
}

TEST(Verify, ExhaustiveClassesOnAltSeven) {
  VerifyOptions o;
  o.mode = VerifyMode::ExhaustiveByClass;
  const auto r = verify_image_alt(7, o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.evaluations, 9u * 2520u);  // class reps of Alt(7) times |Alt(7)|
  EXPECT_EQ(r.violation_count, 0u);
  EXPECT_GT(r.count(ValueClass::ThreeCycle), 0u);
}

TEST(Verify, DistinctTrackingOnSl2) {
  VerifyOptions o;
  o.mode = VerifyMode::ExhaustiveFull;
  o.track_distinct = true;
  const auto r = verify_image_sl(2, 4, o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.distinct.at("transvection"), 15u);
}

TEST(Verify, LimitsAndPreconditions) {
  VerifyOptions o;
  o.mode = VerifyMode::ExhaustiveFull;
  EXPECT_THROW(verify_image_alt(12, o), LimitExceeded);
  EXPECT_THROW(verify_image_sl(5, 2, o), LimitExceeded);
  VerifyOptions g;
  g.gl = true;
  EXPECT_THROW(verify_image_sl(3, 3, g), PreconditionError);
  EXPECT_THROW(verify_image_alt(6, VerifyOptions{}), UnsupportedGroup);
}

TEST(Equivariance, HoldsForConstructedWords) {
  EXPECT_TRUE(equivariance_selftest_alt(9, construct_word_alt(9).word, 200, 1).pass());
  EXPECT_TRUE(equivariance_selftest_sl(3, 5, construct_word_sl(3, 5).word, 200, 1).pass());
}

TEST(Equivariance, CatchesACorruptedEvaluator) {
  PermGroup g(7);
  const Word w = construct_word_alt(7).word;
  Evaluator<PermGroup> ev(w, g);
  const Permutation skew = Permutation::from_cycles(7, {{1, 2, 3}});
  const auto bad = [&](std::span<const Permutation> xs) { return ev(xs) * skew; };
  const auto sample = [](Rng& rng) { return random_even_perm(7, rng); };
  const auto good = [&](std::span<const Permutation> xs) { return ev(xs); };
  EXPECT_TRUE(equivariance_check(g, good, 2, sample, 300, 5).pass());
  const auto r = equivariance_check(g, bad, 2, sample, 300, 5);
  EXPECT_EQ(r.trials, 300u);
  EXPECT_GT(r.failures, 0u);
}

TEST(Gates, Sl2AndSl5HaveNoCounterexamples) {
  for (auto [n, q] : {std::pair{2, 5u}, std::pair{5, 2u}, std::pair{3, 3u}}) {
    const auto r = transvection_gate_check(n, q, 2000, 7);
    EXPECT_EQ(r.samples, 2000u);
    EXPECT_GT(r.gates_open, 0u) << n << "," << q;
    EXPECT_TRUE(r.pass()) << n << "," << q;
  }
  EXPECT_EQ(gate_report_to_json(transvection_gate_check(2, 3, 10, 0))["samples"], 10);
}

}  // namespace
}  // namespace wordmaps
