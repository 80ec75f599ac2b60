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

#include "wordmaps/perm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/evaluate.hpp"

namespace wordmaps {
namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<int>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

// Conjugacy classes of the group by orbit computation.
std::multiset<std::pair<std::string, std::uint64_t>> brute_classes(int n, bool even_only) {
  const auto elems = all_perms(n, even_only);
  std::set<Permutation> seen;
  std::multiset<std::pair<std::string, std::uint64_t>> out;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    std::set<Permutation> orbit;
    for (const auto& g : elems) orbit.insert(x.conjugate(g));
    seen.insert(orbit.begin(), orbit.end());
    out.insert({cycle_type(x).to_string(), orbit.size()});
  }
  return out;
}

TEST(Permutation, RightActionConvention) {
  const Permutation s = cyc(4, {{1, 2}}), t = cyc(4, {{2, 3}});
  const Permutation st = s * t;
  for (int pt = 1; pt <= 4; ++pt) EXPECT_EQ(st.image(pt), t.image(s.image(pt)));
  EXPECT_EQ(st.to_string(), "(1 3 2)");
  EXPECT_EQ(cyc(5, {{1, 2, 3}}).conjugate(cyc(5, {{3, 4}})), cyc(5, {{1, 2, 4}}));
}

TEST(Permutation, Basics) {
  const Permutation p = cyc(7, {{1, 2, 3}, {4, 5}});
  EXPECT_EQ(p.degree(), 7u);
  EXPECT_EQ(p.to_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(p.support(), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_FALSE(p.is_even());
  EXPECT_EQ(p.order().to_u64(), 6u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.pow(Exponent(6)), Permutation::identity(7));
  EXPECT_EQ(p.pow(Exponent(-1)), p.inverse());
  EXPECT_EQ(p.pow(Exponent(BigInt("1000000000000000000001"))), p.pow(Exponent(5)));
  EXPECT_EQ(Permutation::identity(3).to_string(), "()");
  const std::uint16_t bad[] = {0, 0, 1};
  EXPECT_THROW(Permutation::from_images(bad), PreconditionError);
}

TEST(Permutation, ParseCycleNotation) {
  EXPECT_EQ(parse_permutation("(1 2 3)(4 5)", 6), cyc(6, {{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(parse_permutation("()", 4), Permutation::identity(4));
  EXPECT_EQ(parse_permutation("", 4), Permutation::identity(4));
  EXPECT_EQ(parse_permutation("(1 2)(2 3)", 3), cyc(3, {{1, 2}}) * cyc(3, {{2, 3}}));
  EXPECT_THROW(parse_permutation("(1 9)", 4), Error);
  EXPECT_THROW(parse_permutation("(1 2", 4), Error);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_perm(12, rng);
    EXPECT_EQ(parse_permutation(p.to_string(), 12), p);
  }
}

TEST(CycleType, AndClassification) {
  const CycleType t = cycle_type(cyc(9, {{1, 2, 3}, {4, 5}, {6, 7}}));
  EXPECT_EQ(t.lengths, (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(t.fixed_points, 2);
  EXPECT_TRUE(t.even);
  EXPECT_EQ(t.to_string(), "3+2+2");
  EXPECT_EQ(classify_alt_value(Permutation::identity(5)).kind, AltValueKind::Identity);
  EXPECT_EQ(classify_alt_value(cyc(9, {{2, 5, 7}})).kind, AltValueKind::ThreeCycle);
  const auto five = classify_alt_value(cyc(9, {{1, 2, 3, 4, 5}}));
  EXPECT_EQ(five.kind, AltValueKind::PCycle);
  EXPECT_EQ(five.p, 5);
  EXPECT_EQ(five.to_string(), "p_cycle(5)");
  EXPECT_EQ(classify_alt_value(cyc(9, {{1, 2}, {3, 4}})).to_string(), "other(2+2)");
  EXPECT_EQ(classify_alt_value(cyc(9, {{1, 2, 3, 4}})).kind, AltValueKind::Other);
}

TEST(ClassReps, AgreeWithOrbitComputation) {
  for (int n = 2; n <= 7; ++n) {
    for (bool even : {true, false}) {
      const auto reps = even ? alt_class_reps(n) : sym_class_reps(n);
      std::multiset<std::pair<std::string, std::uint64_t>> got;
      std::uint64_t total = 0;
      for (const auto& r : reps) {
        EXPECT_EQ(r.rep.degree(), static_cast<std::size_t>(n));
        if (even) EXPECT_TRUE(r.rep.is_even());
        got.insert({cycle_type(r.rep).to_string(), r.size});
        total += r.size;
      }
      EXPECT_EQ(got, brute_classes(n, even)) << "n=" << n << " even=" << even;
      EXPECT_EQ(total, even ? factorial(n) / 2 : factorial(n));
    }
  }
}

TEST(ClassReps, SplitClassesAreNotConjugate) {
  // Alt(7): 7-cycles split into two classes of 360.
  const auto reps = alt_class_reps(7);
  std::vector<Permutation> sevens;
  for (const auto& r : reps) {
    if (cycle_type(r.rep).to_string() == "7") sevens.push_back(r.rep);
  }
  ASSERT_EQ(sevens.size(), 2u);
  for (const auto& g : all_perms(7, true)) EXPECT_NE(sevens[0].conjugate(g), sevens[1]);
}

TEST(Exponents, AgreeWithBruteForce) {
  for (int n = 5; n <= 10; ++n) {
    const auto alt = exponent_alt(n);
    EXPECT_EQ(alt.M.factors(), oracle::group_exponent(n, true)) << n;
    const auto sym = exponent_sym(n);
    EXPECT_EQ(sym.M.factors(), oracle::group_exponent(n, false)) << n;
    for (const auto& [p, l] : alt.l) EXPECT_EQ(alt.M.valuation(p), l);
  }
}

TEST(Exponents, AltTwoPart) {
  EXPECT_EQ(exponent_alt(8).l.at(2), 2u);   // 4 + 2 <= 8 < 8 + 2
  EXPECT_EQ(exponent_alt(10).l.at(2), 3u);  // 8 + 2 <= 10
  EXPECT_EQ(exponent_sym(8).l.at(2), 3u);
}

TEST(Factorial, Bounds) {
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(20), 2432902008176640000ULL);
  EXPECT_THROW(factorial(21), LimitExceeded);
}

TEST(AllPerms, CountsAndOrder) {
  const auto s = all_perms(5, false);
  EXPECT_EQ(s.size(), 120u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<Permutation>(s.begin(), s.end()).size(), 120u);
  EXPECT_EQ(all_perms(6, true).size(), 360u);
}

TEST(RandomPerm, EvenAndSeeded) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(random_even_perm(11, rng).is_even());
  EXPECT_EQ(random_even_perm(30, 42), random_even_perm(30, 42));
}

TEST(PermGroup, PowerMatchesRepeatedMultiplication) {
  PermGroup g(9);
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const Permutation a = random_perm(9, rng);
    const auto e = static_cast<std::int64_t>(uniform_below(rng, 61)) - 30;
    Permutation expect = Permutation::identity(9);
    const Permutation step = e < 0 ? a.inverse() : a;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) expect = expect * step;
    EXPECT_EQ(g.power(a, g.prepare(Exponent(e))), expect);
  }
}

TEST(Evaluator, HomomorphismAndConventions) {
  PermGroup g(6);
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::vector<Permutation> xs{random_perm(6, rng), random_perm(6, rng),
                                      random_perm(6, rng)};
    const auto ev = [&](const char* text) {
      return evaluate(parse_word(text), std::span<const Permutation>(xs), g);
    };
    EXPECT_EQ(ev("[x1,x2]"), xs[0].inverse() * xs[1].inverse() * xs[0] * xs[1]);
    EXPECT_EQ(ev("x1^x2"), xs[1].inverse() * xs[0] * xs[1]);
    EXPECT_EQ(ev("[x1,x2,x3]"), ev("[[x1,x2],x3]"));
    EXPECT_EQ(ev("x1*x2*x3"), xs[0] * xs[1] * xs[2]);
    EXPECT_EQ(ev("(x1*x2)^-1"), ev("x2^-1*x1^-1"));
    EXPECT_EQ(ev("x1^5*x1^-2"), ev("x1^3"));
  }
}

TEST(Evaluator, PartialBindingMatchesFull) {
  PermGroup g(8);
  const Word w = parse_word("[x1^x2,x3^2,x1]^x2*[x2,x1]^7");
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::vector<Permutation> xs{random_perm(8, rng), random_perm(8, rng),
                                      random_perm(8, rng)};
    const int bound[] = {1, 2};
    const Permutation bv[] = {xs[0], xs[1]};
    Evaluator<PermGroup> partial(w, g, bound, bv);
    EXPECT_EQ(partial(xs), evaluate(w, std::span<const Permutation>(xs), g));
  }
}

TEST(Evaluator, ShortAssignmentThrows) {
  PermGroup g(4);
  const std::vector<Permutation> xs{Permutation::identity(4)};
  EXPECT_THROW(evaluate(parse_word("[x1,x2]"), std::span<const Permutation>(xs), g),
               PreconditionError);
}

}  // namespace
}  // namespace wordmaps
