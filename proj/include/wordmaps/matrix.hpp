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


#ifndef WORDMAPS_MATRIX_HPP_
#define WORDMAPS_MATRIX_HPP_

// Square matrices over GF(q) of size n <= 8, acting on row vectors from the
// right, and the groups SL_n(q) and GL_n(q).

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/arith.hpp"
#include "wordmaps/field.hpp"
#include "wordmaps/random.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix; throws PreconditionError unless 1 <= n <= 8.
  explicit Matrix(int n);
  static Matrix identity(int n);

  int dim() const { return n_; }
  std::uint8_t at(int i, int j) const { return e_[static_cast<std::size_t>(i * simd::kMatrixStride + j)]; }
  void set(int i, int j, std::uint8_t v) { e_[static_cast<std::size_t>(i * simd::kMatrixStride + j)] = v; }
  const std::uint8_t* data() const { return e_.data(); }
  std::uint8_t* data() { return e_.data(); }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  alignas(32) std::array<std::uint8_t, 64> e_{};
};

using Vec = std::vector<std::uint8_t>;

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const GaloisField& f, const Matrix& a, const Matrix& b);
std::uint8_t det(const GaloisField& f, const Matrix& m);
int rank(const GaloisField& f, const Matrix& m);
/// Throws PreconditionError when m is singular.
Matrix mat_inverse(const GaloisField& f, const Matrix& m);
Matrix mat_pow(const GaloisField& f, const Matrix& m, const BigInt& e);
/// Commutator [a, b] = a^-1 b^-1 a b.
Matrix mat_commutator(const GaloisField& f, const Matrix& a, const Matrix& b);

/// v * m for a row vector v.
Vec row_times(const GaloisField& f, const Vec& v, const Matrix& m);
/// Rank of a list of row vectors of equal length.
int rank_of_rows(const GaloisField& f, std::vector<Vec> rows);
Vec unit_vector(int n, int i);  // 1-based i

/// E_{i,j}(lambda) = I + lambda * e_{ij}, 1-based, i != j.
Matrix elementary(int n, int i, int j, std::uint8_t lambda);
Matrix diagonal(const std::vector<std::uint8_t>& entries);
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Jordan block J_k(1): ones on the diagonal and superdiagonal.
Matrix jordan_block(int k);
/// Companion matrix of the monic polynomial x^m + c_{m-1} x^{m-1} + ... + c_0
/// (coefficients low degree first, size m): e_i C = e_{i+1} for i < m and
/// e_m C = -(c_0 e_1 + ... + c_{m-1} e_m).
Matrix companion(const GaloisField& f, const std::vector<std::uint8_t>& coefficients);
/// Lexicographically least monic polynomial of the given degree whose
/// companion matrix has order q^degree - 1.
std::vector<std::uint8_t> primitive_polynomial(const GaloisField& f, int degree);
/// Multiplicative order of an invertible matrix.
FactoredInt matrix_order(const GaloisField& f, const Matrix& m);

enum class SlValueKind { Identity, Transvection, DoubleTransvection, Other };

/// "identity", "transvection", "double_transvection", "other".
std::string sl_value_name(SlValueKind k);

/// Identity iff m = I; Transvection iff rank(m - I) = 1 and (m - I)^2 = 0;
/// DoubleTransvection iff rank(m - I) = 2 and (m - I)^2 = 0.
SlValueKind classify_sl_value(const GaloisField& f, const Matrix& m);

/// Id_2 + C^(q-1) with C the companion matrix of primitive_polynomial(n - 2).
Matrix singer_torus_element(const GaloisField& f, int n);

struct SLExponents {
  int n = 0;
  std::uint32_t q = 0;
  /// p^ceil(log_p n) * lcm(q^d - 1 : d = 1..n); a multiple of the exponent
  /// of GL_n(q).
  FactoredInt E;
};

SLExponents exponent_multiple_sl(int n, std::uint32_t q);

BigInt sl_order(int n, std::uint32_t q);
BigInt gl_order(int n, std::uint32_t q);

Matrix random_gl(const GaloisField& f, int n, Rng& rng);
Matrix random_sl(const GaloisField& f, int n, Rng& rng);
Matrix random_sl(const GaloisField& f, int n, std::uint64_t seed);

/// Number of nonzero first rows, q^n - 1; enumeration chunks index them.
std::uint64_t first_row_count(int n, std::uint32_t q);

/// Calls fn on every element of SL_n(q) (or GL_n(q)) whose first row has
/// index in [first_begin, first_end) among the nonzero vectors, each once.
void enumerate_matrices(const GaloisField& f, int n, bool gl, std::uint64_t first_begin,
                        std::uint64_t first_end, const std::function<void(const Matrix&)>& fn);
std::vector<Matrix> enumerate_sl(const GaloisField& f, int n);
std::vector<Matrix> enumerate_gl(const GaloisField& f, int n);

struct MatrixClassRep {
  Matrix rep;
  std::uint64_t size = 0;
};

/// Conjugacy classes of SL_n(q) (or GL_n(q)) by orbit computation over the
/// whole group; |G| must be at most kMaxClassGroupOrder.
inline constexpr std::uint64_t kMaxClassGroupOrder = 2'000'000;
std::vector<MatrixClassRep> matrix_class_reps(const GaloisField& f, int n, bool gl);

/// Rows separated by ';', entries by spaces, as element codes.
std::string matrix_to_string(const Matrix& m);
Matrix parse_matrix(std::string_view text, const GaloisField& f);

struct MatrixExponent {
  std::vector<bool> bits;  // most significant first
};

/// SL_n(q) or GL_n(q) as a GroupContext. Exponents are reduced modulo the
/// exponent multiple E before powering.
class MatrixGroup {
 public:
  using element_type = Matrix;
  using prepared_exponent = MatrixExponent;

  MatrixGroup(std::uint32_t q, int n, bool gl = false);

  const GaloisField& field() const { return field_; }
  int dim() const { return n_; }
  bool is_gl() const { return gl_; }
  const FactoredInt& exponent_multiple() const { return E_; }

  Matrix identity() const { return Matrix::identity(n_); }
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix inverse(const Matrix& a) const { return mat_inverse(field_, a); }
  bool equal(const Matrix& a, const Matrix& b) const { return a == b; }
  MatrixExponent prepare(const Exponent& e) const;
  Matrix power(const Matrix& a, const MatrixExponent& e) const;
  Matrix random(Rng& rng) const;

 private:
  GaloisField field_;
  int n_;
  bool gl_;
  FactoredInt E_;
  BigInt E_value_;
};

}  // namespace wordmaps

#endif  // WORDMAPS_MATRIX_HPP_
