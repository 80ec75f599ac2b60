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

#include "wordmaps/matrix.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/evaluate.hpp"

namespace wordmaps {
namespace {

const std::vector<std::uint32_t> kFields{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

// Unipotent rank-one elements I + N with N^2 = 0, from all n x n matrices N.
std::uint64_t brute_transvections(const GaloisField& f, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= f.q();
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m(n);
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m.set(i, j, static_cast<std::uint8_t>(c % f.q()));
        c /= f.q();
      }
    }
    if (rank(f, m) == 1 && mat_mul(f, m, m) == Matrix(n)) ++count;
  }
  return count;
}

TEST(Field, Axioms) {
  for (std::uint32_t q : kFields) {
    GaloisField f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto x = static_cast<std::uint8_t>(a);
      EXPECT_EQ(f.add(x, f.neg(x)), 0);
      EXPECT_EQ(f.mul(x, 1), x);
      if (a != 0) EXPECT_EQ(f.mul(x, f.inv(x)), 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto y = static_cast<std::uint8_t>(b);
        EXPECT_EQ(f.add(x, y), f.add(y, x));
        EXPECT_EQ(f.mul(x, y), f.mul(y, x));
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto z = static_cast<std::uint8_t>(c);
          EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
          EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        }
      }
    }
    std::set<std::uint8_t> powers;
    for (std::uint32_t k = 0; k + 1 < q; ++k) powers.insert(f.pow(f.primitive_element(), k));
    EXPECT_EQ(powers.size(), q - 1) << q;
    EXPECT_THROW(f.inv(0), PreconditionError);
  }
  EXPECT_THROW(GaloisField(6), UnsupportedGroup);
  EXPECT_THROW(GaloisField(25), UnsupportedGroup);
}

TEST(Field, CharacteristicAddition) {
  GaloisField f(9);
  EXPECT_EQ(f.p(), 3u);
  EXPECT_EQ(f.u(), 2u);
  // codes are base-3 digit pairs: 5 = 2 + 1x, 7 = 1 + 2x, sum = 0 + 0x
  EXPECT_EQ(f.add(5, 7), 0);
  EXPECT_EQ(f.from_int(-1), 2);
  GaloisField g(8);
  EXPECT_EQ(g.add(5, 3), 6);
}

TEST(Matrix, RightActionOnRows) {
  for (std::uint32_t q : {2u, 5u, 9u}) {
    GaloisField f(q);
    Rng rng(q);
    for (int t = 0; t < 50; ++t) {
      const Matrix a = random_gl(f, 4, rng), b = random_gl(f, 4, rng);
      Vec v(4);
      for (auto& x : v) x = static_cast<std::uint8_t>(uniform_below(rng, q));
      EXPECT_EQ(row_times(f, v, mat_mul(f, a, b)), row_times(f, row_times(f, v, a), b));
      EXPECT_EQ(row_times(f, unit_vector(4, 2), a)[3], a.at(1, 3));
    }
  }
}

TEST(Matrix, GroupLaws) {
  for (std::uint32_t q : kFields) {
    GaloisField f(q);
    Rng rng(100 + q);
    for (int t = 0; t < 20; ++t) {
      const int n = 1 + static_cast<int>(uniform_below(rng, 6));
      const Matrix a = random_sl(f, n, rng), b = random_gl(f, n, rng);
      EXPECT_EQ(det(f, a), 1);
      EXPECT_EQ(det(f, mat_mul(f, a, b)), f.mul(det(f, a), det(f, b)));
      EXPECT_EQ(mat_mul(f, a, mat_inverse(f, a)), Matrix::identity(n));
      EXPECT_EQ(rank(f, b), n);
      EXPECT_EQ(mat_commutator(f, a, b),
                mat_mul(f, mat_mul(f, mat_inverse(f, a), mat_inverse(f, b)), mat_mul(f, a, b)));
    }
  }
}

TEST(Matrix, PowerAndOrder) {
  GaloisField f(3);
  MatrixGroup g(3, 3);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = random_sl(f, 3, rng);
    Matrix acc = Matrix::identity(3);
    std::uint64_t ord = 0;
    do {
      acc = mat_mul(f, acc, a);
      ++ord;
    } while (acc != Matrix::identity(3));
    EXPECT_EQ(matrix_order(f, a).to_u64(), ord);
    EXPECT_EQ(mat_pow(f, a, BigInt(ord + 2)), mat_mul(f, a, a));
    EXPECT_EQ(g.power(a, g.prepare(Exponent(-1))), mat_inverse(f, a));
    EXPECT_EQ(g.power(a, g.prepare(Exponent(static_cast<std::int64_t>(ord) * 1000 + 1))), a);
  }
}

TEST(Matrix, ParseAndPrint) {
  GaloisField f(4);
  const Matrix m = parse_matrix("1 2;3 0", f);
  EXPECT_EQ(m.dim(), 2);
  EXPECT_EQ(m.at(0, 1), 2);
  EXPECT_EQ(m.at(1, 0), 3);
  EXPECT_EQ(matrix_to_string(m), "1 2;3 0");
  EXPECT_THROW(parse_matrix("1 4;0 1", f), Error);
  EXPECT_THROW(parse_matrix("1 0;0", f), Error);
}

TEST(Enumeration, CountsMatchOrderFormula) {
  struct Case {
    int n;
    std::uint32_t q;
  };
  for (auto [n, q] : {Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{2, 5}, Case{2, 7}, Case{2, 8},
                      Case{2, 9}, Case{3, 2}, Case{3, 3}, Case{4, 2}}) {
    GaloisField f(q);
    const auto sl = enumerate_sl(f, n);
    EXPECT_EQ(BigInt(sl.size()), sl_order(n, q)) << n << "," << q;
    EXPECT_EQ(std::set<Matrix>(sl.begin(), sl.end()).size(), sl.size());
    for (const auto& m : sl) EXPECT_EQ(det(f, m), 1);
  }
  for (std::uint32_t q : {2u, 3u, 4u}) {
    GaloisField f(q);
    EXPECT_EQ(BigInt(enumerate_gl(f, 2).size()), gl_order(2, q));
  }
  EXPECT_EQ(sl_order(4, 3), BigInt(12130560));
  EXPECT_EQ(gl_order(2, 3), BigInt(48));
  EXPECT_EQ(first_row_count(3, 4), 63u);
}

TEST(Enumeration, FirstRowChunksPartitionTheGroup) {
  GaloisField f(3);
  std::uint64_t total = 0;
  for (std::uint64_t b = 0; b < first_row_count(3, 3); b += 5) {
    enumerate_matrices(f, 3, false, b, std::min(b + 5, first_row_count(3, 3)),
                       [&](const Matrix&) { ++total; });
  }
  EXPECT_EQ(BigInt(total), sl_order(3, 3));
}

TEST(Classify, TransvectionCountIsRankOneUnipotentCount) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    GaloisField f(q);
    std::uint64_t trans = 0;
    for (const auto& m : enumerate_sl(f, 2)) {
      if (classify_sl_value(f, m) == SlValueKind::Transvection) ++trans;
    }
    const std::uint64_t brute = brute_transvections(f, 2);
    EXPECT_EQ(trans, brute) << q;
    EXPECT_EQ(brute, std::uint64_t{q} * q - 1) << q;
    EXPECT_EQ(oracle::sl2_transvections(f), brute) << q;
  }
  GaloisField f2(2);
  std::uint64_t trans = 0, dbl = 0;
  for (const auto& m : enumerate_sl(f2, 4)) {
    const auto k = classify_sl_value(f2, m);
    if (k == SlValueKind::Transvection) ++trans;
    if (k == SlValueKind::DoubleTransvection) ++dbl;
  }
  EXPECT_EQ(trans, brute_transvections(f2, 4));
  EXPECT_EQ(trans, (16u - 1) * (8u - 1));
  EXPECT_GT(dbl, 0u);
}

TEST(Classify, Examples) {
  GaloisField f(5);
  EXPECT_EQ(classify_sl_value(f, Matrix::identity(3)), SlValueKind::Identity);
  EXPECT_EQ(classify_sl_value(f, elementary(3, 1, 3, 2)), SlValueKind::Transvection);
  EXPECT_EQ(classify_sl_value(f, mat_mul(f, elementary(4, 1, 3, 1), elementary(4, 2, 4, 1))),
            SlValueKind::DoubleTransvection);
  EXPECT_EQ(classify_sl_value(f, diagonal({2, 3, 1})), SlValueKind::Other);
  EXPECT_EQ(classify_sl_value(f, parse_matrix("4 0;0 4", f)), SlValueKind::Other);
}

TEST(ClassReps, SizesSumToGroupOrder) {
  struct Case {
    int n;
    std::uint32_t q;
    bool gl;
  };
  for (auto [n, q, gl] : {Case{2, 3, false}, Case{2, 5, false}, Case{3, 2, false}, Case{2, 3, true},
                          Case{3, 3, false}}) {
    GaloisField f(q);
    const auto reps = matrix_class_reps(f, n, gl);
    std::uint64_t total = 0;
    for (const auto& r : reps) total += r.size;
    EXPECT_EQ(BigInt(total), gl ? gl_order(n, q) : sl_order(n, q));
  }
  EXPECT_EQ(matrix_class_reps(GaloisField(2), 3, false).size(), 6u);
  EXPECT_THROW(matrix_class_reps(GaloisField(3), 4, false), LimitExceeded);
}

TEST(Special, SingerAndCompanion) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    GaloisField f(q);
    for (int d = 2; d <= 4; ++d) {
      const auto poly = primitive_polynomial(f, d);
      const Matrix c = companion(f, poly);
      std::uint64_t expect = 1;
      for (int i = 0; i < d; ++i) expect *= q;
      EXPECT_EQ(matrix_order(f, c).to_u64(), expect - 1);
    }
    const Matrix s = singer_torus_element(f, 5);
    EXPECT_EQ(det(f, s), 1);
  }
  EXPECT_EQ(jordan_block(3).at(0, 1), 1);
  EXPECT_EQ(block_diag(Matrix::identity(2), jordan_block(2)).dim(), 4);
}

TEST(Exponent, MultipleKillsEveryElement) {
  for (auto [n, q] : {std::pair{3, 4u}, std::pair{4, 3u}, std::pair{5, 2u}}) {
    GaloisField f(q);
    const BigInt E = exponent_multiple_sl(n, q).E.value();
    Rng rng(n * 100 + q);
    for (int t = 0; t < 50; ++t) {
      EXPECT_EQ(mat_pow(f, random_gl(f, n, rng), E), Matrix::identity(n));
    }
  }
}

TEST(Evaluator, MatrixHomomorphism) {
  MatrixGroup g(7, 3);
  const GaloisField& f = g.field();
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::vector<Matrix> xs{g.random(rng), g.random(rng)};
    const Matrix c = evaluate(parse_word("[x1,x2]^x1"), std::span<const Matrix>(xs), g);
    const Matrix x1i = mat_inverse(f, xs[0]);
    const Matrix comm = mat_commutator(f, xs[0], xs[1]);
    EXPECT_EQ(c, mat_mul(f, mat_mul(f, x1i, comm), xs[0]));
  }
}

}  // namespace
}  // namespace wordmaps
