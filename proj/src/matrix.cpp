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

#include <algorithm>
#include <sstream>

#include "wordmaps/errors.hpp"

namespace wordmaps {

namespace {

void check_dim(int n) {
  if (n < 1 || n > simd::kMaxMatrixDim) {
    throw PreconditionError("matrix size " + std::to_string(n) + " outside 1..8");
  }
}

// Row echelon basis kept reduced in insertion order.
class EchelonBasis {
 public:
  EchelonBasis(const GaloisField& f, int n) : f_(&f), n_(n) {}

  /// Reduces v against the basis; returns true if v was outside the span,
  /// in which case v is added.
  bool insert(Vec v) {
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < n_; ++j) {
      if (v[static_cast<std::size_t>(j)] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    const std::uint8_t s = f_->inv(v[static_cast<std::size_t>(pivot)]);
    for (auto& x : v) x = f_->mul(x, s);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint8_t c = v[static_cast<std::size_t>(pivots_[k])];
      if (c == 0) continue;
      const std::uint8_t nc = f_->neg(c);
      for (int j = 0; j < n_; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        v[jj] = f_->add(v[jj], f_->mul(nc, rows_[k][jj]));
      }
    }
  }

  const GaloisField* f_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Vec vector_from_code(std::uint64_t code, int n, std::uint32_t q) {
  Vec v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(code % q);
    code /= q;
  }
  return v;
}

// Gaussian elimination on a copy; returns rank and (for full rank) det.
std::pair<int, std::uint8_t> eliminate(const GaloisField& f, const Matrix& m) {
  const int n = m.dim();
  Matrix a = m;
  std::uint8_t d = 1;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (int j = 0; j < n; ++j) {
        const std::uint8_t t = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, t);
      }
      d = f.neg(d);
    }
    const std::uint8_t pv = a.at(r, col);
    d = f.mul(d, pv);
    const std::uint8_t pinv = f.inv(pv);
    for (int i = r + 1; i < n; ++i) {
      const std::uint8_t c = a.at(i, col);
      if (c == 0) continue;
      const std::uint8_t factor = f.neg(f.mul(c, pinv));
      for (int j = col; j < n; ++j) a.set(i, j, f.add(a.at(i, j), f.mul(factor, a.at(r, j))));
    }
    ++r;
  }
  if (r < n) d = 0;
  return {r, d};
}

BigInt q_power(std::uint32_t q, int e) {
  BigInt v = 1;
  for (int i = 0; i < e; ++i) v *= q;
  return v;
}

}  // namespace

Matrix::Matrix(int n) : n_(n) { check_dim(n); }

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("multiplying matrices of different size");
  Matrix c(a.dim());
  simd::active_kernels().gf_matmul(f.tables(), a.data(), b.data(), c.data(), a.dim());
  return c;
}

Matrix mat_add(const GaloisField& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) c.set(i, j, f.add(a.at(i, j), b.at(i, j)));
  }
  return c;
}

Matrix mat_sub(const GaloisField& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) c.set(i, j, f.sub(a.at(i, j), b.at(i, j)));
  }
  return c;
}

std::uint8_t det(const GaloisField& f, const Matrix& m) { return eliminate(f, m).second; }

int rank(const GaloisField& f, const Matrix& m) { return eliminate(f, m).first; }

Matrix mat_inverse(const GaloisField& f, const Matrix& m) {
  const int n = m.dim();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw PreconditionError("matrix is singular");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::uint8_t t = a.at(col, j);
        a.set(col, j, a.at(piv, j));
        a.set(piv, j, t);
        t = inv.at(col, j);
        inv.set(col, j, inv.at(piv, j));
        inv.set(piv, j, t);
      }
    }
    const std::uint8_t s = f.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.set(col, j, f.mul(s, a.at(col, j)));
      inv.set(col, j, f.mul(s, inv.at(col, j)));
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      const std::uint8_t factor = f.neg(a.at(i, col));
      for (int j = 0; j < n; ++j) {
        a.set(i, j, f.add(a.at(i, j), f.mul(factor, a.at(col, j))));
        inv.set(i, j, f.add(inv.at(i, j), f.mul(factor, inv.at(col, j))));
      }
    }
  }
  return inv;
}

Matrix mat_pow(const GaloisField& f, const Matrix& m, const BigInt& e) {
  Matrix base = e < 0 ? mat_inverse(f, m) : m;
  const BigInt mag = e < 0 ? BigInt(-e) : e;
  Matrix result = Matrix::identity(m.dim());
  if (mag == 0) return result;
  const auto top = static_cast<long>(boost::multiprecision::msb(mag));
  for (long bit = top; bit >= 0; --bit) {
    result = mat_mul(f, result, result);
    if (boost::multiprecision::bit_test(mag, static_cast<unsigned>(bit))) {
      result = mat_mul(f, result, base);
    }
  }
  return result;
}

Matrix mat_commutator(const GaloisField& f, const Matrix& a, const Matrix& b) {
  return mat_mul(f, mat_mul(f, mat_inverse(f, a), mat_inverse(f, b)), mat_mul(f, a, b));
}

Vec row_times(const GaloisField& f, const Vec& v, const Matrix& m) {
  const int n = m.dim();
  Vec out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const std::uint8_t c = v[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      out[jj] = f.add(out[jj], f.mul(c, m.at(i, j)));
    }
  }
  return out;
}

int rank_of_rows(const GaloisField& f, std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(f, static_cast<int>(rows[0].size()));
  int r = 0;
  for (auto& v : rows) r += basis.insert(std::move(v)) ? 1 : 0;
  return r;
}

Vec unit_vector(int n, int i) {
  Vec v(static_cast<std::size_t>(n), 0);
  v.at(static_cast<std::size_t>(i - 1)) = 1;
  return v;
}

Matrix elementary(int n, int i, int j, std::uint8_t lambda) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw PreconditionError("elementary matrix needs distinct indices in 1..n");
  }
  Matrix m = Matrix::identity(n);
  m.set(i - 1, j - 1, lambda);
  return m;
}

Matrix diagonal(const std::vector<std::uint8_t>& entries) {
  Matrix m(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
  }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  const int na = a.dim();
  Matrix m(na + b.dim());
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) m.set(i, j, a.at(i, j));
  }
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) m.set(na + i, na + j, b.at(i, j));
  }
  return m;
}

Matrix jordan_block(int k) {
  Matrix m = Matrix::identity(k);
  for (int i = 0; i + 1 < k; ++i) m.set(i, i + 1, 1);
  return m;
}

Matrix companion(const GaloisField& f, const std::vector<std::uint8_t>& coefficients) {
  const int m = static_cast<int>(coefficients.size());
  Matrix c(m);
  for (int i = 0; i + 1 < m; ++i) c.set(i, i + 1, 1);
  for (int j = 0; j < m; ++j) c.set(m - 1, j, f.neg(coefficients[static_cast<std::size_t>(j)]));
  return c;
}

FactoredInt matrix_order(const GaloisField& f, const Matrix& m) {
  const SLExponents ex = exponent_multiple_sl(m.dim(), f.q());
  FactoredInt order = ex.E;
  const Matrix id = Matrix::identity(m.dim());
  if (mat_pow(f, m, order.value()) != id) throw PreconditionError("matrix is not invertible");
  for (const auto& [r, e] : ex.E.factors()) {
    for (unsigned i = 0; i < e; ++i) {
      const FactoredInt smaller = order.divided_by(FactoredInt::prime_power(r, 1));
      if (mat_pow(f, m, smaller.value()) != id) break;
      order = smaller;
    }
  }
  return order;
}

std::vector<std::uint8_t> primitive_polynomial(const GaloisField& f, int degree) {
  if (degree < 1 || degree > simd::kMaxMatrixDim) {
    throw PreconditionError("primitive polynomial degree outside 1..8");
  }
  const std::uint32_t q = f.q();
  const std::uint64_t target = checked_pow(q, static_cast<unsigned>(degree)) - 1;
  const FactoredInt target_f = FactoredInt::from_u64(target);
  const std::uint64_t count = checked_pow(q, static_cast<unsigned>(degree));
  const Matrix id = Matrix::identity(degree);
  for (std::uint64_t index = 0; index < count; ++index) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(degree));
    std::uint64_t x = index;
    for (int i = degree; i-- > 0;) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x % q);
      x /= q;
    }
    if (c[0] == 0) continue;
    const Matrix comp = companion(f, c);
    if (mat_pow(f, comp, target) != id) continue;
    bool primitive = true;
    for (const auto& [r, e] : target_f.factors()) {
      if (mat_pow(f, comp, target / r) == id) {
        primitive = false;
        break;
      }
    }
    if (primitive) return c;
  }
  throw InternalError("no primitive polynomial of degree " + std::to_string(degree));
}

std::string sl_value_name(SlValueKind k) {
  switch (k) {
    case SlValueKind::Identity:
      return "identity";
    case SlValueKind::Transvection:
      return "transvection";
    case SlValueKind::DoubleTransvection:
      return "double_transvection";
    case SlValueKind::Other:
      return "other";
  }
  return "other";
}

SlValueKind classify_sl_value(const GaloisField& f, const Matrix& m) {
  const Matrix d = mat_sub(f, m, Matrix::identity(m.dim()));
  if (d == Matrix(m.dim())) return SlValueKind::Identity;
  const Matrix d2 = mat_mul(f, d, d);
  if (d2 != Matrix(m.dim())) return SlValueKind::Other;
  switch (rank(f, d)) {
    case 1:
      return SlValueKind::Transvection;
    case 2:
      return SlValueKind::DoubleTransvection;
    default:
      return SlValueKind::Other;
  }
}

Matrix singer_torus_element(const GaloisField& f, int n) {
  if (n < 3) throw PreconditionError("torus element needs n >= 3");
  const Matrix c = companion(f, primitive_polynomial(f, n - 2));
  return block_diag(Matrix::identity(2), mat_pow(f, c, BigInt(f.q() - 1)));
}

SLExponents exponent_multiple_sl(int n, std::uint32_t q) {
  const auto [p, u] = prime_power_decomposition(q);
  if (p == 0 || n < 1) throw PreconditionError("exponent_multiple_sl needs n >= 1 and a prime power q");
  unsigned c = 0;
  std::uint64_t pc = 1;
  while (pc < static_cast<std::uint64_t>(n)) {
    pc *= p;
    ++c;
  }
  std::vector<FactoredInt> parts;
  for (int d = 1; d <= n; ++d) {
    parts.push_back(FactoredInt::from_u64(checked_pow(q, static_cast<unsigned>(d)) - 1));
  }
  SLExponents out;
  out.n = n;
  out.q = q;
  out.E = FactoredInt::prime_power(p, c) * lcm_factored(parts);
  return out;
}

BigInt gl_order(int n, std::uint32_t q) {
  BigInt order = 1;
  const BigInt qn = q_power(q, n);
  for (int d = 0; d < n; ++d) order *= qn - q_power(q, d);
  return order;
}

BigInt sl_order(int n, std::uint32_t q) { return gl_order(n, q) / (q - 1); }

Matrix random_gl(const GaloisField& f, int n, Rng& rng) {
  for (;;) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.set(i, j, static_cast<std::uint8_t>(uniform_below(rng, f.q())));
    }
    if (det(f, m) != 0) return m;
  }
}

Matrix random_sl(const GaloisField& f, int n, Rng& rng) {
  Matrix m = random_gl(f, n, rng);
  const std::uint8_t s = f.inv(det(f, m));
  for (int j = 0; j < n; ++j) m.set(0, j, f.mul(s, m.at(0, j)));
  return m;
}

Matrix random_sl(const GaloisField& f, int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_sl(f, n, rng);
}

std::uint64_t first_row_count(int n, std::uint32_t q) {
  return checked_pow(q, static_cast<unsigned>(n)) - 1;
}

void enumerate_matrices(const GaloisField& f, int n, bool gl, std::uint64_t first_begin,
                        std::uint64_t first_end, const std::function<void(const Matrix&)>& fn) {
  check_dim(n);
  const std::uint32_t q = f.q();
  const std::uint64_t vectors = first_row_count(n, q) + 1;
  first_end = std::min(first_end, vectors - 1);
  EchelonBasis basis(f, n);
  Matrix m(n);
  auto set_row = [&](int i, const Vec& v) {
    for (int j = 0; j < n; ++j) m.set(i, j, v[static_cast<std::size_t>(j)]);
  };

  auto last_row = [&] {
    std::vector<std::uint8_t> cofactor(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      set_row(n - 1, unit_vector(n, j + 1));
      cofactor[static_cast<std::size_t>(j)] = det(f, m);
    }
    for (std::uint64_t code = 1; code < vectors; ++code) {
      Vec v = vector_from_code(code, n, q);
      if (!gl) {
        const auto lead = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
        if (*lead != 1) continue;
      }
      std::uint8_t d = 0;
      for (int j = 0; j < n; ++j) {
        d = f.add(d, f.mul(v[static_cast<std::size_t>(j)], cofactor[static_cast<std::size_t>(j)]));
      }
      if (d == 0) continue;
      if (!gl) {
        const std::uint8_t s = f.inv(d);
        for (auto& x : v) x = f.mul(x, s);
      }
      set_row(n - 1, v);
      fn(m);
    }
  };

  // Rows 0..n-2 by depth-first search over independent vectors.
  std::function<void(int)> fill = [&](int row) {
    if (row == n - 1) {
      last_row();
      return;
    }
    const std::uint64_t lo = row == 0 ? first_begin + 1 : 1;
    const std::uint64_t hi = row == 0 ? first_end + 1 : vectors;
    for (std::uint64_t code = lo; code < hi; ++code) {
      Vec v = vector_from_code(code, n, q);
      if (!basis.insert(v)) continue;
      set_row(row, v);
      fill(row + 1);
      basis.pop();
    }
  };

  if (n == 1) {
    if (first_begin > 0 || first_end == 0) return;
    if (gl) {
      for (std::uint32_t a = 1; a < q; ++a) {
        m.set(0, 0, static_cast<std::uint8_t>(a));
        fn(m);
      }
    } else {
      m.set(0, 0, 1);
      fn(m);
    }
    return;
  }
  fill(0);
}

std::vector<Matrix> enumerate_sl(const GaloisField& f, int n) {
  std::vector<Matrix> out;
  enumerate_matrices(f, n, false, 0, first_row_count(n, f.q()),
                     [&](const Matrix& m) { out.push_back(m); });
  return out;
}

std::vector<Matrix> enumerate_gl(const GaloisField& f, int n) {
  std::vector<Matrix> out;
  enumerate_matrices(f, n, true, 0, first_row_count(n, f.q()),
                     [&](const Matrix& m) { out.push_back(m); });
  return out;
}

std::vector<MatrixClassRep> matrix_class_reps(const GaloisField& f, int n, bool gl) {
  const BigInt order = gl ? gl_order(n, f.q()) : sl_order(n, f.q());
  if (order > kMaxClassGroupOrder) {
    throw LimitExceeded("conjugacy classes need |G| <= " + std::to_string(kMaxClassGroupOrder));
  }
  std::vector<Matrix> all = gl ? enumerate_gl(f, n) : enumerate_sl(f, n);
  std::sort(all.begin(), all.end());

  std::vector<std::pair<Matrix, Matrix>> gens;  // (g, g^-1)
  auto add_gen = [&](const Matrix& g) { gens.emplace_back(g, mat_inverse(f, g)); };
  for (std::uint32_t k = 0; k < f.u(); ++k) {
    const std::uint8_t lambda = f.exp(k);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) add_gen(elementary(n, i, j, lambda));
      }
    }
  }
  if (gl && f.q() > 2) {
    std::vector<std::uint8_t> d(static_cast<std::size_t>(n), 1);
    d[0] = f.primitive_element();
    add_gen(diagonal(d));
  }

  auto index_of = [&](const Matrix& m) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), m) - all.begin());
  };
  std::vector<bool> seen(all.size(), false);
  std::vector<MatrixClassRep> reps;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Matrix& x = all[queue[head]];
      for (const auto& [g, ginv] : gens) {
        const std::size_t idx = index_of(mat_mul(f, mat_mul(f, ginv, x), g));
        if (!seen[idx]) {
          seen[idx] = true;
          queue.push_back(idx);
        }
      }
    }
    reps.push_back({all[start], queue.size()});
  }
  return reps;
}

std::string matrix_to_string(const Matrix& m) {
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m.at(i, j));
    }
  }
  return s;
}

Matrix parse_matrix(std::string_view text, const GaloisField& f) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    std::istringstream in(std::string(text.substr(start, end == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : end - start)));
    std::vector<int> row;
    std::string tok;
    while (in >> tok) {
      int v = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError(start, "matrix entries must be integers");
        v = v * 10 + (ch - '0');
        if (v >= static_cast<int>(f.q())) {
          throw ParseError(start, "matrix entry out of range for GF(" + std::to_string(f.q()) + ")");
        }
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  const int n = static_cast<int>(rows.size());
  if (n < 1 || n > simd::kMaxMatrixDim) throw ParseError(0, "matrix must have 1..8 rows");
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ParseError(0, "matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      m.set(i, j, static_cast<std::uint8_t>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
  }
  return m;
}

MatrixGroup::MatrixGroup(std::uint32_t q, int n, bool gl)
    : field_(q), n_(n), gl_(gl), E_(exponent_multiple_sl(n, q).E), E_value_(E_.value()) {
  check_dim(n);
}

Matrix MatrixGroup::multiply(const Matrix& a, const Matrix& b) const {
  return mat_mul(field_, a, b);
}

MatrixExponent MatrixGroup::prepare(const Exponent& e) const {
  BigInt r = e.value() % E_value_;
  if (r < 0) r += E_value_;
  MatrixExponent pe;
  if (r == 0) return pe;
  const auto top = static_cast<long>(boost::multiprecision::msb(r));
  for (long bit = top; bit >= 0; --bit) {
    pe.bits.push_back(boost::multiprecision::bit_test(r, static_cast<unsigned>(bit)));
  }
  return pe;
}

Matrix MatrixGroup::power(const Matrix& a, const MatrixExponent& e) const {
  Matrix result = identity();
  bool started = false;
  for (bool bit : e.bits) {
    if (started) result = multiply(result, result);
    if (bit) {
      result = started ? multiply(result, a) : a;
      started = true;
    }
  }
  return result;
}

Matrix MatrixGroup::random(Rng& rng) const {
  return gl_ ? random_gl(field_, n_, rng) : random_sl(field_, n_, rng);
}

}  // namespace wordmaps
