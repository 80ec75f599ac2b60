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

#include "wordmaps/slwords.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "wordmaps/errors.hpp"
#include "wordmaps/evaluate.hpp"

namespace wordmaps {
namespace {

struct Group {
  int n;
  std::uint32_t q;
};

Matrix eval_on(const SLWordPlan& plan, const std::vector<Matrix>& xs) {
  MatrixGroup g(plan.q, plan.n);
  return evaluate(plan.word, std::span<const Matrix>(xs), g);
}

TEST(Cases, Dispatch) {
  EXPECT_EQ(sl_word_params(2, 7).sl_case, SlCase::N2);
  EXPECT_EQ(sl_word_params(3, 2).sl_case, SlCase::N3Q2Q4);
  EXPECT_EQ(sl_word_params(3, 4).sl_case, SlCase::N3Q2Q4);
  EXPECT_EQ(sl_word_params(3, 3).sl_case, SlCase::N3General);
  EXPECT_EQ(sl_word_params(4, 2).sl_case, SlCase::N4Q2);
  EXPECT_EQ(sl_word_params(4, 3).sl_case, SlCase::N4Q3);
  EXPECT_EQ(sl_word_params(4, 5).sl_case, SlCase::N4General);
  EXPECT_EQ(sl_word_params(5, 2).sl_case, SlCase::NBig);
  EXPECT_THROW(sl_word_params(1, 2), UnsupportedGroup);
  EXPECT_THROW(sl_word_params(3, 6), UnsupportedGroup);
}

TEST(Plans, Shapes) {
  for (auto [n, q] : {Group{2, 5}, Group{3, 2}, Group{3, 4}, Group{4, 2}, Group{4, 3}}) {
    const auto plan = construct_word_sl(n, q);
    EXPECT_TRUE(plan.single_variable()) << n << "," << q;
    EXPECT_EQ(plan.arity, 1);
  }
  for (auto [n, q] :
       {Group{3, 3}, Group{3, 7}, Group{4, 4}, Group{4, 7}, Group{5, 2}, Group{6, 3}}) {
    const auto plan = construct_word_sl(n, q);
    EXPECT_FALSE(plan.single_variable()) << n << "," << q;
    EXPECT_EQ(plan.arity, 2);
    ASSERT_TRUE(plan.A && plan.B && plan.outer);
    EXPECT_EQ(plan.B->valuation(plan.p), 0u);
    EXPECT_EQ(plan.outer->to_u64(), std::uint64_t{q - 1} * (q * q - 1));
    EXPECT_EQ(parse_word(print_word(plan.word)), plan.word);
  }
  EXPECT_TRUE(construct_word_sl(4, 7).Abar.has_value());
  EXPECT_FALSE(construct_word_sl(5, 2).Abar.has_value());
  EXPECT_EQ(*sl_word_params(5, 2).r_alpha, (PrimePower{7, 1}));
  EXPECT_EQ(*sl_word_params(5, 4).r_alpha, (PrimePower{7, 1}));
  EXPECT_EQ(*sl_word_params(6, 3).r_alpha, (PrimePower{5, 1}));
  EXPECT_EQ(*sl_word_params(8, 2).r_alpha, zsigmondy_prime_power(2, 6));
}

TEST(Plans, ImageSpec) {
  EXPECT_EQ(construct_word_sl(4, 2).image_spec(),
            (std::vector<SlValueKind>{SlValueKind::Identity, SlValueKind::Transvection,
                                      SlValueKind::DoubleTransvection}));
  EXPECT_EQ(construct_word_sl(5, 2).image_spec(),
            (std::vector<SlValueKind>{SlValueKind::Identity, SlValueKind::Transvection}));
}

TEST(Gates, ClosedOnIdentity) {
  const auto plan = construct_word_sl(4, 7);
  const GaloisField f(7);
  EXPECT_FALSE(plan.gates_open(f, Matrix::identity(4)));
}

TEST(Witness, ValueIsATransvection) {
  for (auto [n, q] :
       {Group{2, 2}, Group{2, 3}, Group{2, 4}, Group{2, 5}, Group{2, 7}, Group{2, 8}, Group{2, 9},
        Group{3, 2}, Group{3, 3}, Group{3, 4}, Group{3, 5}, Group{3, 7}, Group{4, 2}, Group{4, 3},
        Group{4, 4}, Group{4, 7}, Group{5, 2}, Group{5, 3}, Group{6, 2}, Group{7, 2}}) {
    const auto plan = construct_word_sl(n, q);
    const auto w = witness_sl(n, q, 1);
    ASSERT_EQ(w.assignment.size(), static_cast<std::size_t>(plan.arity));
    const GaloisField f(q);
    for (const auto& m : w.assignment) EXPECT_EQ(det(f, m), 1);
    const Matrix v = eval_on(plan, w.assignment);
    EXPECT_EQ(v, w.value) << n << "," << q;
    EXPECT_EQ(classify_sl_value(f, v), SlValueKind::Transvection) << n << "," << q;
  }
}

TEST(Witness, ConstructiveForLargeN) {
  for (auto [n, q] : {Group{5, 2}, Group{5, 4}, Group{5, 7}, Group{6, 3}, Group{7, 2}}) {
    const auto w = witness_sl(n, q);
    EXPECT_NE(w.method, "random") << n << "," << q;
    EXPECT_EQ(w.value_class, SlValueKind::Transvection);
  }
}

TEST(Json, PlanAndWitness) {
  const auto j = sl_plan_to_json(construct_word_sl(5, 2));
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["q"], 2);
  const auto w = witness_sl_to_json(witness_sl(2, 3));
  EXPECT_EQ(w["value_class"], "transvection");
}

}  // namespace
}  // namespace wordmaps
