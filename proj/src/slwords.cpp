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

#include <algorithm>

#include "wordmaps/errors.hpp"
#include "wordmaps/evaluate.hpp"
#include "wordmaps/random.hpp"

namespace wordmaps {

namespace {

Word x(int i) { return Word::var(i); }

// (E / r^{v_r(E)}) * r^{alpha - 1}
FactoredInt gate_exponent(const FactoredInt& E, const PrimePower& ra) {
  return E.with_exponent(ra.prime, ra.exponent - 1);
}

// Smallest odd prime dividing q - 1 with its full power, else the full
// 2-part of q - 1 when that is at least 4.
PrimePower choose_rbar(std::uint32_t q) {
  const FactoredInt qm1 = FactoredInt::from_u64(q - 1);
  for (const auto& [r, e] : qm1.factors()) {
    if (r != 2) return {r, e};
  }
  const unsigned v2 = qm1.valuation(2);
  if (v2 >= 2) return {2, v2};
  throw InternalError("no prime power other than 2 divides q - 1 for q = " + std::to_string(q));
}

// Smallest prime power dividing q - 1 other than 3 (alpha = 1 unless r = 3).
PrimePower choose_n3_r(std::uint32_t q) {
  const FactoredInt qm1 = FactoredInt::from_u64(q - 1);
  for (const auto& [r, e] : qm1.factors()) {
    if (r != 3) return {r, 1};
    if (e >= 2) return {3, 2};
  }
  throw InternalError("no admissible prime power divides q - 1 for q = " + std::to_string(q));
}

// Zsigmondy prime power for q^2 - 1 used by n = 4: an odd Zsigmondy prime
// when one exists.
PrimePower choose_n4_r(std::uint32_t q) {
  const FactoredInt qp1 = FactoredInt::from_u64(q + 1);
  for (const auto& [r, e] : qp1.factors()) {
    if (r != 2) return {r, 1};
  }
  return zsigmondy_prime_power(q, 2);
}

// Zsigmondy prime power for q^m - 1 used by n > 4: the smallest primitive
// prime divisor (alpha = 1) when there is one.
PrimePower choose_nbig_r(std::uint32_t q, unsigned m) {
  const FactoredInt top = FactoredInt::from_u64(checked_pow(q, m) - 1);
  for (const auto& [r, e] : top.factors()) {
    bool primitive = true;
    for (unsigned i = 1; i < m && primitive; ++i) {
      if ((checked_pow(q, i) - 1) % r == 0) primitive = false;
    }
    if (primitive) return {r, 1};
  }
  return zsigmondy_prime_power(q, m);
}

std::string pp_string(const PrimePower& pp) {
  return std::to_string(pp.prime) + "^" + std::to_string(pp.exponent);
}

std::vector<std::vector<int>> jordan_types(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Matrix jordan_matrix(const std::vector<int>& blocks) {
  Matrix m = jordan_block(blocks[0]);
  for (std::size_t i = 1; i < blocks.size(); ++i) m = block_diag(m, jordan_block(blocks[i]));
  return m;
}

Matrix embed(const Matrix& top_left, int n) {
  if (top_left.dim() == n) return top_left;
  return block_diag(top_left, Matrix::identity(n - top_left.dim()));
}

WitnessSLTrace finish(WitnessSLTrace trace, const SLWordPlan& plan, const MatrixGroup& g) {
  trace.value = Evaluator<MatrixGroup>(plan.word, g)(trace.assignment);
  trace.value_class = classify_sl_value(g.field(), trace.value);
  if (trace.value_class != SlValueKind::Transvection) {
    throw InternalError("SL witness evaluates to " + sl_value_name(trace.value_class));
  }
  return trace;
}

WitnessSLTrace random_witness(const SLWordPlan& plan, const MatrixGroup& g, std::uint64_t seed,
                              std::uint64_t budget, WitnessSLTrace trace) {
  const GaloisField& f = g.field();
  const Evaluator<MatrixGroup> eval(plan.word, g);
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(plan.n) * 1000 + plan.q));
  trace.method = "random";
  std::uint64_t trials = 0;
  while (trials < budget) {
    const Matrix xm = g.random(rng);
    ++trials;
    if (!plan.gates_open(f, xm)) continue;
    const std::uint64_t stop = std::min(budget, trials + 1000);
    while (trials < stop) {
      std::vector<Matrix> a{xm, g.random(rng)};
      ++trials;
      if (classify_sl_value(f, eval(a)) == SlValueKind::Transvection) {
        trace.assignment = std::move(a);
        trace.trials += trials;
        return finish(std::move(trace), plan, g);
      }
    }
  }
  throw SearchExhausted("no SL witness within " + std::to_string(budget) + " trials");
}

// y with e_i y^{-1} = t_i (i = 1, 2, 3), completed by standard basis vectors
// and scaled to determinant 1.
std::optional<Matrix> build_y(const GaloisField& f, int n, const std::vector<Vec>& t) {
  std::vector<Vec> rows = t;
  for (int j = 1; j <= n && static_cast<int>(rows.size()) < n; ++j) {
    rows.push_back(unit_vector(n, j));
    if (rank_of_rows(f, rows) != static_cast<int>(rows.size())) rows.pop_back();
  }
  if (static_cast<int>(rows.size()) != n) return std::nullopt;
  Matrix yinv(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) yinv.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  const std::uint8_t d = det(f, yinv);
  const std::uint8_t s = f.inv(d);
  for (int j = 0; j < n; ++j) yinv.set(n - 1, j, f.mul(s, yinv.at(n - 1, j)));
  return mat_inverse(f, yinv);
}

std::optional<WitnessSLTrace> constructive_witness(const SLWordPlan& plan, const MatrixGroup& g,
                                                   const Matrix& x_prime, const std::string& method) {
  const GaloisField& f = g.field();
  const int n = plan.n;
  const Matrix x_dd = embed(elementary(2, 1, 2, 1), n);
  const Matrix xm = mat_mul(f, x_prime, x_dd);
  const Matrix a = mat_pow(f, xm, plan.A->value());
  const Matrix b = mat_pow(f, xm, plan.B->value());
  const Matrix id = Matrix::identity(n);
  if (a == id || classify_sl_value(f, b) != SlValueKind::Transvection) return std::nullopt;
  const Vec e1 = unit_vector(n, 1);
  const Vec e2 = unit_vector(n, 2);
  if (row_times(f, e1, a) != e1 || row_times(f, e2, a) != e2) return std::nullopt;
  const Matrix ainv = mat_inverse(f, a);
  const Evaluator<MatrixGroup> eval(plan.word, g);

  const std::uint64_t vectors = checked_pow(f.q(), static_cast<unsigned>(n - 2));
  for (std::uint64_t code = 1; code < vectors && code <= 256; ++code) {
    // t_1 runs over V = <e_3, ..., e_n>, starting at e_3.
    Vec t1(static_cast<std::size_t>(n), 0);
    std::uint64_t c = code;
    for (int j = 2; j < n; ++j) {
      t1[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(c % f.q());
      c /= f.q();
    }
    const Vec t2 = row_times(f, t1, ainv);
    const Vec t3 = row_times(f, t2, ainv);
    if (rank_of_rows(f, {t1, t2, t3}) != 3) continue;
    const auto y = build_y(f, n, {t1, t2, t3});
    if (!y) continue;
    const Matrix comm = mat_commutator(f, *y, a);
    const Vec i1 = row_times(f, e1, comm);
    const Vec i2 = row_times(f, e2, comm);
    if (i1 != e2 || i2[0] != 0 || i2[1] != 0) continue;
    std::vector<Matrix> assignment{xm, *y};
    if (classify_sl_value(f, eval(assignment)) != SlValueKind::Transvection) continue;
    WitnessSLTrace trace;
    trace.n = n;
    trace.q = plan.q;
    trace.method = method;
    trace.assignment = std::move(assignment);
    trace.x_prime = x_prime;
    trace.x_double_prime = x_dd;
    trace.a = a;
    trace.b = b;
    trace.t = {t1, t2, t3};
    trace.e1_image = i1;
    trace.e2_image = i2;
    return finish(std::move(trace), plan, g);
  }
  return std::nullopt;
}

}  // namespace

std::string sl_case_name(SlCase c) {
  switch (c) {
    case SlCase::N2:
      return "n2";
    case SlCase::N3General:
      return "n3_general";
    case SlCase::N3Q2Q4:
      return "n3_q2_q4";
    case SlCase::N4General:
      return "n4_general";
    case SlCase::N4Q3:
      return "n4_q3";
    case SlCase::N4Q2:
      return "n4_q2";
    case SlCase::NBig:
      return "n_big";
  }
  return "n_big";
}

std::vector<SlValueKind> SLWordPlan::image_spec() const {
  if (sl_case == SlCase::N4Q2) {
    return {SlValueKind::Identity, SlValueKind::Transvection, SlValueKind::DoubleTransvection};
  }
  return {SlValueKind::Identity, SlValueKind::Transvection};
}

bool SLWordPlan::gates_open(const GaloisField& f, const Matrix& xm) const {
  const Matrix id = Matrix::identity(xm.dim());
  for (const auto* e : {&A, &B, &Abar}) {
    if (e->has_value() && mat_pow(f, xm, (*e)->value()) == id) return false;
  }
  return true;
}

SLWordPlan sl_word_params(int n, std::uint32_t q) {
  const auto [p, u] = prime_power_decomposition(q);
  if (n < 2 || p == 0) {
    throw UnsupportedGroup("SL_n(q) words need n >= 2 and a prime power q");
  }
  SLWordPlan plan;
  plan.n = n;
  plan.q = q;
  plan.p = static_cast<std::uint32_t>(p);
  plan.u = u;
  plan.E = exponent_multiple_sl(n, q).E;
  const unsigned vp = plan.E.valuation(p);
  const FactoredInt outer = FactoredInt::from_u64(q - 1) * FactoredInt::from_u64(q * q - 1);

  auto two_variable = [&](PrimePower ra) {
    plan.r_alpha = ra;
    plan.A = gate_exponent(plan.E, ra);
    plan.B = plan.E.without(p);
    plan.outer = outer;
  };

  if (n == 2) {
    plan.sl_case = SlCase::N2;
    plan.A = FactoredInt();
    plan.B = plan.E.with_exponent(p, vp - 1);
    plan.exponent = FactoredInt::from_u64(q * q - 1);
  } else if (n == 3 && (q == 2 || q == 4)) {
    plan.sl_case = SlCase::N3Q2Q4;
    plan.exponent = plan.E.with_exponent(p, 1);
  } else if (n == 3) {
    plan.sl_case = SlCase::N3General;
    two_variable(choose_n3_r(q));
  } else if (n == 4 && q == 2) {
    plan.sl_case = SlCase::N4Q2;
    plan.exponent = FactoredInt::from_u64(2 * 3 * 5 * 7);
  } else if (n == 4 && q == 3) {
    plan.sl_case = SlCase::N4Q3;
    plan.exponent = plan.E.with_exponent(p, 1);
  } else if (n == 4) {
    plan.sl_case = SlCase::N4General;
    two_variable(choose_n4_r(q));
    plan.rbar_alpha = choose_rbar(q);
    plan.Abar = gate_exponent(plan.E, *plan.rbar_alpha);
  } else {
    plan.sl_case = SlCase::NBig;
    two_variable(choose_nbig_r(q, static_cast<unsigned>(n - 2)));
  }
  return plan;
}

SLWordPlan construct_word_sl(int n, std::uint32_t q) {
  SLWordPlan plan = sl_word_params(n, q);
  if (plan.single_variable()) {
    plan.inner = Word::power(x(1), Exponent(*plan.exponent));
    plan.word = plan.inner;
  } else {
    const Word xb = Word::power(x(1), Exponent(*plan.B));
    std::vector<Word> conj{x(2), Word::power(x(1), Exponent(*plan.A))};
    if (plan.Abar) conj.push_back(Word::power(x(1), Exponent(*plan.Abar)));
    Word h = Word::commutator(std::move(conj));
    // n = 3, 4: h = [y, x^A(, x^Abar)]^y.
    if (plan.sl_case == SlCase::N3General || plan.sl_case == SlCase::N4General) {
      h = Word::conjugate(h, x(2));
    }
    plan.inner = Word::commutator(xb, Word::conjugate(xb, h));
    plan.word = Word::power(plan.inner, Exponent(*plan.outer));
  }
  plan.arity = plan.word.arity();
  return plan;
}

nlohmann::json sl_plan_to_json(const SLWordPlan& plan) {
  nlohmann::json j;
  j["n"] = plan.n;
  j["q"] = plan.q;
  j["case"] = sl_case_name(plan.sl_case);
  j["E"] = plan.E.to_string();
  j["E_value"] = plan.E.value().str();
  auto opt = [](const std::optional<FactoredInt>& v) {
    return v ? nlohmann::json(v->value().str()) : nlohmann::json(nullptr);
  };
  j["r_alpha"] = plan.r_alpha ? nlohmann::json(pp_string(*plan.r_alpha)) : nlohmann::json(nullptr);
  j["rbar_alpha"] =
      plan.rbar_alpha ? nlohmann::json(pp_string(*plan.rbar_alpha)) : nlohmann::json(nullptr);
  j["A"] = opt(plan.A);
  j["B"] = opt(plan.B);
  j["Abar"] = opt(plan.Abar);
  j["outer"] = opt(plan.outer);
  j["exponent"] = opt(plan.exponent);
  j["word"] = print_word(plan.word);
  j["arity"] = plan.arity;
  auto spec = nlohmann::json::array();
  for (SlValueKind k : plan.image_spec()) spec.push_back(sl_value_name(k));
  j["image_spec"] = spec;
  return j;
}

WitnessSLTrace witness_sl(int n, std::uint32_t q, std::uint64_t seed, std::uint64_t budget) {
  const SLWordPlan plan = construct_word_sl(n, q);
  const MatrixGroup g(q, n);
  const GaloisField& f = g.field();

  if (plan.single_variable()) {
    const Evaluator<MatrixGroup> eval(plan.word, g);
    WitnessSLTrace trace;
    trace.n = n;
    trace.q = q;
    trace.method = "jordan";
    for (const auto& blocks : jordan_types(n)) {
      ++trace.trials;
      std::vector<Matrix> a{jordan_matrix(blocks)};
      if (classify_sl_value(f, eval(a)) == SlValueKind::Transvection) {
        trace.assignment = std::move(a);
        return finish(std::move(trace), plan, g);
      }
    }
    throw SearchExhausted("no unipotent witness for SL_" + std::to_string(n) + "(" +
                          std::to_string(q) + ")");
  }

  WitnessSLTrace base;
  base.n = n;
  base.q = q;
  if (n <= 4) return random_witness(plan, g, seed, budget, std::move(base));

  if (auto t = constructive_witness(plan, g, singer_torus_element(f, n), "torus")) return *t;
  const Matrix c = companion(f, primitive_polynomial(f, n - 2));
  Matrix cj = Matrix::identity(n - 2);
  for (std::uint32_t j = 1; j <= 2 * (q - 1); ++j) {
    cj = mat_mul(f, cj, c);
    const std::uint8_t dc = det(f, cj);
    for (std::uint32_t lambda = 1; lambda < q; ++lambda) {
      const auto l = static_cast<std::uint8_t>(lambda);
      if (f.mul(f.mul(l, l), dc) != 1) continue;
      const Matrix xp = block_diag(diagonal({l, l}), cj);
      if (auto t = constructive_witness(plan, g, xp, "scaled_torus")) return *t;
    }
  }
  return random_witness(plan, g, seed, budget, std::move(base));
}

nlohmann::json witness_sl_to_json(const WitnessSLTrace& trace) {
  nlohmann::json j;
  j["n"] = trace.n;
  j["q"] = trace.q;
  j["method"] = trace.method;
  auto assignment = nlohmann::json::array();
  for (const auto& m : trace.assignment) assignment.push_back(matrix_to_string(m));
  j["assignment"] = assignment;
  j["value"] = matrix_to_string(trace.value);
  j["value_class"] = sl_value_name(trace.value_class);
  j["trials"] = trace.trials;
  if (trace.x_prime) {
    j["x_prime"] = matrix_to_string(*trace.x_prime);
    j["x_double_prime"] = matrix_to_string(*trace.x_double_prime);
    j["a"] = matrix_to_string(*trace.a);
    j["b"] = matrix_to_string(*trace.b);
    j["t"] = trace.t;
    j["e1_image"] = *trace.e1_image;
    j["e2_image"] = *trace.e2_image;
  }
  return j;
}

}  // namespace wordmaps
