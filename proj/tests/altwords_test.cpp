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

#include "wordmaps/altwords.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "wordmaps/arith.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/evaluate.hpp"

namespace wordmaps {
namespace {

Permutation eval_on(const AltWordPlan& plan, const std::vector<Permutation>& xs) {
  PermGroup g(static_cast<std::size_t>(plan.n));
  return evaluate(plan.word, std::span<const Permutation>(xs), g);
}

TEST(Ladder, InvariantsHoldForAllN) {
  for (int n = 8; n <= 2000; ++n) {
    if (n == 13) continue;
    const PrimeLadder l = prime_ladder(n);
    ASSERT_TRUE(ladder_valid(l)) << n;
    ASSERT_FALSE(l.primes.empty()) << n;
    std::uint64_t rest = static_cast<std::uint64_t>(n);
    std::uint64_t prev = UINT64_MAX;
    for (std::uint64_t p : l.primes) {
      EXPECT_TRUE(is_prime_u64(p)) << n;
      EXPECT_GT(p, 3u) << n;
      EXPECT_LT(p, prev) << n;
      EXPECT_GT(2 * p, rest) << n;
      rest -= p;
      prev = p;
    }
    EXPECT_EQ(static_cast<int>(rest), l.remainder) << n;
    EXPECT_GE(l.remainder, 3) << n;
    EXPECT_LE(l.remainder, 5) << n;
  }
}

TEST(Ladder, RejectsUncoveredDegreesAndCorruption) {
  EXPECT_THROW(prime_ladder(13), Error);
  EXPECT_THROW(prime_ladder(7), Error);
  PrimeLadder l = prime_ladder(100);
  l.remainder += 1;
  EXPECT_FALSE(ladder_valid(l));
  l = prime_ladder(100);
  l.primes.front() = 49;
  EXPECT_FALSE(ladder_valid(l));
}

TEST(Construct, Coverage) {
  EXPECT_THROW(construct_word_alt(6), UnsupportedGroup);
  EXPECT_THROW(construct_word_alt(4), UnsupportedGroup);
  EXPECT_THROW(construct_word_sym(6), UnsupportedGroup);
  EXPECT_EQ(construct_word_alt(5).variant, AltVariant::N5);
  EXPECT_EQ(construct_word_alt(7).variant, AltVariant::N7);
  EXPECT_EQ(construct_word_alt(13).variant, AltVariant::N13);
  EXPECT_EQ(construct_word_alt(13).arity, 3);
  EXPECT_EQ(construct_word_alt(50).arity, 2);
  EXPECT_EQ(construct_word_sym(7).variant, AltVariant::Sym7);
  EXPECT_EQ(construct_word_sym(8).variant, AltVariant::SymGeneral);
  EXPECT_TRUE(construct_word_sym(8).symmetric);
  for (int n : {5, 7, 8, 13, 40}) {
    const auto plan = construct_word_alt(n);
    EXPECT_EQ(plan.word.arity(), plan.arity);
    EXPECT_EQ(parse_word(print_word(plan.word)), plan.word);
    EXPECT_EQ(plan.M, exponent_alt(n).M);
  }
}

TEST(Construct, GeneralExponents) {
  for (int n : {8, 9, 10, 11, 20, 33, 100}) {
    const auto plan = construct_word_alt(n);
    ASSERT_TRUE(plan.ladder.has_value());
    EXPECT_EQ(plan.m0, plan.M.without(3));
    ASSERT_EQ(plan.m.size(), plan.ladder->primes.size());
    for (std::size_t i = 0; i < plan.m.size(); ++i) {
      EXPECT_EQ(plan.m[i], plan.M.without(plan.ladder->primes[i]));
    }
  }
}

TEST(Construct, Alt5ImageByEnumeration) {
  const auto plan = construct_word_alt(5);
  const auto elems = all_perms(5, true);
  std::uint64_t three = 0;
  std::vector<Permutation> xs(1);
  for (const auto& x : elems) {
    xs[0] = x;
    const auto c = classify_alt_value(eval_on(plan, xs));
    ASSERT_TRUE(c.kind == AltValueKind::Identity || c.kind == AltValueKind::ThreeCycle)
        << x.to_string();
    if (c.kind == AltValueKind::ThreeCycle) ++three;
  }
  EXPECT_EQ(three, 20u);
}

TEST(Witness, ConstructiveForGeneralN) {
  for (int n = 8; n <= 60; ++n) {
    if (n == 13) continue;
    const auto plan = construct_word_alt(n);
    const auto w = witness_alt(n);
    EXPECT_FALSE(w.randomized) << n;
    ASSERT_EQ(w.assignment.size(), static_cast<std::size_t>(plan.arity));
    for (const auto& a : w.assignment) EXPECT_TRUE(a.is_even()) << n;
    const Permutation v = eval_on(plan, w.assignment);
    EXPECT_EQ(v, w.value) << n;
    EXPECT_EQ(classify_alt_value(v).kind, AltValueKind::ThreeCycle) << n;
  }
}

TEST(Witness, SearchedForSevenAndThirteen) {
  for (int n : {7, 13}) {
    const auto w = witness_alt(n, 1);
    EXPECT_TRUE(w.randomized);
    EXPECT_EQ(classify_alt_value(eval_on(construct_word_alt(n), w.assignment)).kind,
              AltValueKind::ThreeCycle);
  }
  EXPECT_THROW(witness_alt(13, 1, 0), SearchExhausted);
}

TEST(Witness, SymWords) {
  for (int n : {7, 8, 9, 16, 17}) {
    const auto w = witness_sym(n, 3);
    EXPECT_EQ(classify_alt_value(eval_on(construct_word_sym(n), w.assignment)).kind,
              AltValueKind::ThreeCycle)
        << n;
  }
}

TEST(Regression, SymEightNeedsLargerTwoPart) {
  // An odd 8-cycle has order 8, which the Alt(8) exponent does not kill.
  const std::vector<Permutation> xs{Permutation::from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}}),
                                    Permutation::from_cycles(8, {{6, 7, 8}})};
  const auto on_alt_word = classify_alt_value(eval_on(construct_word_alt(8), xs));
  EXPECT_EQ(on_alt_word.kind, AltValueKind::Other);
  const auto on_sym_word = classify_alt_value(eval_on(construct_word_sym(8), xs));
  EXPECT_TRUE(on_sym_word.kind == AltValueKind::Identity ||
              on_sym_word.kind == AltValueKind::ThreeCycle);
  EXPECT_EQ(construct_word_sym(8).M.valuation(2), 3u);
}

TEST(PCycle, PlansAndWitnesses) {
  EXPECT_THROW(construct_word_pcycle(9, 3), PreconditionError);
  EXPECT_THROW(construct_word_pcycle(9, 9), PreconditionError);
  EXPECT_THROW(construct_word_pcycle(9, 11), PreconditionError);
  for (auto [n, p] : {std::pair{9, 5}, std::pair{12, 5}, std::pair{12, 7}}) {
    const auto plan = construct_word_pcycle(n, p);
    EXPECT_EQ(plan.p, p);
    EXPECT_EQ(plan.image_spec(), (std::vector<std::string>{"identity", "p_cycle"}));
    const auto w = witness_pcycle(n, p, 5);
    const auto c = classify_alt_value(eval_on(plan, w.assignment));
    EXPECT_EQ(c.kind, AltValueKind::PCycle);
    EXPECT_EQ(c.p, p);
  }
}

TEST(Width, Certificates) {
  for (int k = 1; k <= 20; ++k) {
    const auto c = width_certificate(k);
    EXPECT_EQ(c.n, 2 * k + 3);
    EXPECT_GE(c.bound, k + 1);
    EXPECT_EQ(cycle_type(c.element).lengths, std::vector<int>{c.n});
  }
  EXPECT_THROW(width_certificate(0), PreconditionError);
  EXPECT_EQ(three_cycle_distance(Permutation::identity(5)), 0);
  EXPECT_EQ(three_cycle_distance(Permutation::from_cycles(5, {{1, 2, 3}})), 1);
  EXPECT_EQ(three_cycle_distance(Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})), 2);
  EXPECT_EQ(three_cycle_distance(Permutation::from_cycles(5, {{1, 2}, {3, 4}})), 2);
}

TEST(Json, PlanFields) {
  const auto j = plan_to_json(construct_word_alt(9));
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["group"], "alt");
  EXPECT_EQ(j["arity"], 2);
  EXPECT_EQ(j["word"], print_word(construct_word_alt(9).word));
  EXPECT_TRUE(j["ladder"].is_array());
  const auto w = witness_to_json(witness_alt(9));
  EXPECT_EQ(w["value_class"], "three_cycle");
  EXPECT_EQ(w["randomized"], false);
}

}  // namespace
}  // namespace wordmaps
