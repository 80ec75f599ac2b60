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

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "wordmaps/errors.hpp"
#include "wordmaps/evaluate.hpp"
#include "wordmaps/random.hpp"

namespace wordmaps {

namespace {

bool ladder_search(int t, std::uint64_t previous, std::vector<std::uint64_t>& primes,
                   int& remainder) {
  if (t >= 3 && t <= 5) {
    remainder = t;
    return true;
  }
  if (t < 8) return false;
  const auto lo = static_cast<std::uint64_t>(t / 2);  // p > t/2 <=> p > floor(t/2)
  const auto hi = static_cast<std::uint64_t>(t - 3);
  auto candidates = primes_in_interval(lo, hi);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const std::uint64_t p = *it;
    if (p <= 3 || p >= previous) continue;
    primes.push_back(p);
    if (ladder_search(t - static_cast<int>(p), p, primes, remainder)) return true;
    primes.pop_back();
  }
  return false;
}

Exponent exp_of(const FactoredInt& f) { return Exponent(f); }

Word x(int i) { return Word::var(i); }

FactoredInt without_power(const FactoredInt& M, std::uint64_t p) { return M.without(p); }

Word n13_w1(const FactoredInt& M) {
  const Word a = Word::power(x(1), exp_of(M.divided_by(FactoredInt::prime_power(5, 1))));
  const Word b = Word::power(x(1), exp_of(M.divided_by(FactoredInt::prime_power(7, 1))));
  return Word::commutator(Word::conjugate(a, Word::commutator(x(2), b)), a);
}

// Values of w1 have cycle type 1, 2+2, 3, 3+2+2, 3+3, 4+2, 5 or 7. Only
// 3+2+2 has both a 3-part and a 2-part, so when w1^280 and w1^315 are both
// nontrivial, w1^280 is a 3-cycle.
constexpr int kN13ThreePart = 280;  // 2^3 * 5 * 7
constexpr int kN13TwoPart = 315;    // 3^2 * 5 * 7

Word n13_w2(const Word& w1) {
  const Word c = Word::power(w1, kN13ThreePart);
  const Word d = Word::power(w1, kN13TwoPart);
  return Word::commutator(Word::conjugate(c, Word::commutator(x(3), d)), c);
}

// [(x1^{e0})^{[x2, x1^{e_1}, ..., x1^{e_k}]}, x1^{e0}]
Word general_w1(const FactoredInt& e0, const std::vector<FactoredInt>& inner) {
  const Word a0 = Word::power(x(1), exp_of(e0));
  std::vector<Word> args{x(2)};
  for (const auto& e : inner) args.push_back(Word::power(x(1), exp_of(e)));
  return Word::commutator(Word::conjugate(a0, Word::commutator(std::move(args))), a0);
}

Permutation random_of_type(const Permutation& rep, Rng& rng) {
  return rep.conjugate(random_perm(rep.degree(), rng));
}

Permutation eval_perm(const Word& w, const std::vector<Permutation>& assignment, std::size_t n) {
  const PermGroup g(n);
  return Evaluator<PermGroup>(w, g)(assignment);
}

// Omega ordered as a segment b_1 -> b_2 -> ... of v.
std::vector<int> segment_order(const Permutation& v, const std::vector<int>& omega) {
  const std::size_t n = v.degree();
  std::vector<bool> in(n + 1, false);
  for (int b : omega) in[static_cast<std::size_t>(b)] = true;
  const Permutation vinv = v.inverse();
  int start = 0;
  for (int b : omega) {
    if (!in[static_cast<std::size_t>(vinv.image(b))]) {
      start = b;
      break;
    }
  }
  if (start == 0) start = *std::min_element(omega.begin(), omega.end());
  std::vector<int> order;
  std::vector<bool> seen(n + 1, false);
  for (int b = start; in[static_cast<std::size_t>(b)] && !seen[static_cast<std::size_t>(b)];
       b = v.image(b)) {
    seen[static_cast<std::size_t>(b)] = true;
    order.push_back(b);
  }
  if (order.size() != omega.size()) throw InternalError("witness: Omega is not a segment");
  return order;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  return powmod(a % p, p - 2, p);
}

WitnessAltTrace finish(WitnessAltTrace trace, const AltWordPlan& plan, AltValueKind wanted) {
  trace.value = eval_perm(plan.word, trace.assignment, static_cast<std::size_t>(plan.n));
  trace.value_class = classify_alt_value(trace.value);
  if (trace.value_class.kind != wanted) {
    throw InternalError("witness for n = " + std::to_string(plan.n) + " evaluates to " +
                        trace.value_class.to_string());
  }
  return trace;
}

WitnessAltTrace search_two_variable(const AltWordPlan& plan, const Permutation& x1_type,
                                    bool sym, std::uint64_t seed, std::uint64_t budget) {
  const auto n = static_cast<std::size_t>(plan.n);
  const PermGroup g(n);
  const Evaluator<PermGroup> eval(plan.word, g);
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(plan.n)));
  WitnessAltTrace trace;
  trace.n = plan.n;
  trace.randomized = true;
  for (std::uint64_t trial = 1; trial <= budget; ++trial) {
    std::vector<Permutation> a{random_of_type(x1_type, rng),
                               sym ? random_perm(n, rng) : random_even_perm(n, rng)};
    if (classify_alt_value(eval(a)).kind == AltValueKind::ThreeCycle) {
      trace.assignment = std::move(a);
      trace.trials = trial;
      return finish(std::move(trace), plan, AltValueKind::ThreeCycle);
    }
  }
  throw SearchExhausted("no witness for n = " + std::to_string(plan.n) + " within " +
                        std::to_string(budget) + " trials");
}

WitnessAltTrace search_n13(const AltWordPlan& plan, std::uint64_t seed, std::uint64_t budget) {
  const std::size_t n = 13;
  const PermGroup g(n);
  const Word w1 = n13_w1(plan.M);
  const Evaluator<PermGroup> eval_c(Word::power(w1, kN13ThreePart), g);
  const Evaluator<PermGroup> eval_d(Word::power(w1, kN13TwoPart), g);
  const Evaluator<PermGroup> eval(plan.word, g);
  Rng rng(derive_seed(seed, 13));
  const Permutation type = Permutation::from_cycles(n, {{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12}});
  WitnessAltTrace trace;
  trace.n = 13;
  trace.randomized = true;
  std::uint64_t trial = 0;
  while (trial < budget) {
    std::vector<Permutation> a{random_of_type(type, rng), random_even_perm(n, rng),
                               Permutation::identity(n)};
    ++trial;
    if (eval_c(a).is_identity() || eval_d(a).is_identity()) continue;
    const std::uint64_t phase_end = std::min(budget, trial + 1000);
    while (trial < phase_end) {
      a[2] = random_even_perm(n, rng);
      ++trial;
      if (classify_alt_value(eval(a)).kind == AltValueKind::ThreeCycle) {
        trace.assignment = std::move(a);
        trace.trials = trial;
        return finish(std::move(trace), plan, AltValueKind::ThreeCycle);
      }
    }
  }
  throw SearchExhausted("no witness for n = 13 within " + std::to_string(budget) + " trials");
}

WitnessAltTrace construct_witness(const AltWordPlan& plan) {
  const int n = plan.n;
  const auto nn = static_cast<std::size_t>(n);
  const auto& primes = plan.ladder->primes;
  const std::size_t k = primes.size();
  WitnessAltTrace trace;
  trace.n = n;

  std::vector<int> all(nn);
  std::iota(all.begin(), all.end(), 1);
  const Permutation y_prime = Permutation::from_cycles(nn, {all});
  Permutation v = y_prime;
  Permutation v0 = y_prime;
  std::vector<int> omega = all;
  std::vector<Permutation> cycles;

  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<int> b = segment_order(v, omega);  // b[j] is b_{j+1}
    const std::size_t t = b.size();
    const auto p = static_cast<std::size_t>(primes[i]);
    std::vector<int> cycle;
    std::vector<int> next;
    if (i + 1 < k) {
      const std::size_t tp = t - p;
      for (std::size_t j = 0; j <= tp; ++j) cycle.push_back(b[2 * j]);
      for (std::size_t j = 2 * tp + 1; j < t; ++j) cycle.push_back(b[j]);
      for (std::size_t j = 1; j <= tp; ++j) next.push_back(b[2 * j - 1]);
    } else {
      cycle = {b[0], b[1]};
      for (std::size_t j = 3; j <= p; ++j) cycle.push_back(b[j]);
      next.push_back(b[2]);
      for (std::size_t j = p + 1; j < t; ++j) next.push_back(b[j]);
    }
    const Permutation a = Permutation::from_cycles(nn, {cycle});
    if (i == 0 && n % 2 == 0) {
      std::vector<int> outside;
      for (int pt : all) {
        if (a.image(pt) == pt) outside.push_back(pt);
      }
      trace.tau = Permutation::from_cycles(nn, {{outside[0], outside[1]}});
      v0 = y_prime * *trace.tau;
      v = v0;
    }
    v = v.inverse() * a.inverse() * v * a;
    trace.steps.push_back({primes[i], b, a, v});
    cycles.push_back(a);
    omega = std::move(next);
  }

  std::sort(omega.begin(), omega.end());
  trace.omega_k = omega;
  std::vector<int> leaving;
  for (int pt : omega) {
    if (!std::binary_search(omega.begin(), omega.end(), v.image(pt))) leaving.push_back(pt);
  }
  if (leaving.size() != 2) throw InternalError("witness: last step must move two points out");
  trace.alpha = leaving[0];
  trace.beta = leaving[1];
  trace.gamma = v.image(trace.alpha);
  trace.delta = v.image(trace.beta);
  for (int pt : omega) {
    if (pt != trace.alpha && pt != trace.beta) {
      trace.eta = pt;
      break;
    }
  }
  trace.a0 = Permutation::from_cycles(nn, {{trace.eta, trace.alpha, trace.beta}});

  Permutation x1 = trace.a0.pow(Exponent(static_cast<std::int64_t>(inverse_mod(plan.m0.mod(3), 3))));
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t p = primes[i];
    x1 = x1 * cycles[i].pow(Exponent(static_cast<std::int64_t>(inverse_mod(plan.m[i].mod(p), p))));
  }
  trace.assignment = {x1, v0};
  return finish(std::move(trace), plan, AltValueKind::ThreeCycle);
}

std::string factored_json(const FactoredInt& f) { return f.to_string(); }

}  // namespace

PrimeLadder prime_ladder(int n) {
  if (n <= 7 || n == 13) {
    throw PreconditionError("prime ladder needs n > 7 and n != 13 (got " + std::to_string(n) + ")");
  }
  PrimeLadder ladder;
  ladder.n = n;
  if (!ladder_search(n, UINT64_MAX, ladder.primes, ladder.remainder)) {
    throw SearchExhausted("no prime ladder for n = " + std::to_string(n));
  }
  return ladder;
}

bool ladder_valid(const PrimeLadder& ladder) {
  std::uint64_t used = 0;
  std::uint64_t previous = UINT64_MAX;
  for (std::uint64_t p : ladder.primes) {
    const std::uint64_t t = static_cast<std::uint64_t>(ladder.n) - used;
    if (p <= 3 || p >= previous || !is_prime_u64(p) || 2 * p <= t || p > t) return false;
    used += p;
    previous = p;
  }
  if (used > static_cast<std::uint64_t>(ladder.n)) return false;
  const auto rem = static_cast<std::uint64_t>(ladder.n) - used;
  return rem >= 3 && rem <= 5 && rem == static_cast<std::uint64_t>(ladder.remainder) &&
         !ladder.primes.empty();
}

std::string variant_name(AltVariant v) {
  switch (v) {
    case AltVariant::General:
      return "general";
    case AltVariant::N5:
      return "n5";
    case AltVariant::N7:
      return "n7";
    case AltVariant::N13:
      return "n13";
    case AltVariant::SymGeneral:
      return "sym_general";
    case AltVariant::Sym7:
      return "sym7";
    case AltVariant::PCycle:
      return "p_cycle";
  }
  return "general";
}

std::vector<std::string> AltWordPlan::image_spec() const {
  if (variant == AltVariant::PCycle) return {"identity", "p_cycle"};
  return {"identity", "three_cycle"};
}

// Fills m0, m, inner, word and arity from plan.n and plan.M.
static void assemble(AltWordPlan& plan) {
  const int n = plan.n;
  plan.m0 = without_power(plan.M, 3);
  if (n == 5) {
    plan.variant = AltVariant::N5;
    plan.inner = Word::power(x(1), 10);
    plan.word = plan.inner;
  } else if (n == 7) {
    plan.variant = AltVariant::N7;
    plan.m = {without_power(plan.M, 2)};
    plan.inner = general_w1(plan.m0, plan.m);
    plan.word = Word::power(plan.inner, 10);
  } else if (n == 13) {
    plan.variant = AltVariant::N13;
    plan.m = {plan.M.divided_by(FactoredInt::prime_power(5, 1)),
              plan.M.divided_by(FactoredInt::prime_power(7, 1))};
    plan.inner = n13_w2(n13_w1(plan.M));
    plan.word = Word::power(plan.inner, 10);
  } else {
    plan.variant = AltVariant::General;
    plan.ladder = prime_ladder(n);
    for (std::uint64_t p : plan.ladder->primes) plan.m.push_back(without_power(plan.M, p));
    plan.inner = general_w1(plan.m0, plan.m);
    plan.word = Word::power(plan.inner, 10);
  }
  plan.arity = plan.word.arity();
}

AltWordPlan construct_word_alt(int n) {
  if (n <= 4 || n == 6) {
    throw UnsupportedGroup("no 3-cycle word is constructed for Alt(" + std::to_string(n) + ")");
  }
  AltWordPlan plan;
  plan.n = n;
  plan.M = exponent_alt(n).M;
  assemble(plan);
  return plan;
}

AltWordPlan construct_word_sym(int n) {
  if (n <= 6) {
    throw UnsupportedGroup("no 3-cycle word is constructed for Sym(" + std::to_string(n) + ")");
  }
  AltWordPlan plan;
  plan.n = n;
  plan.symmetric = true;
  if (n != 7) {
    // Same shape as the Alt(n) word over the exponent of Sym(n); the two
    // exponents differ for n = 2^a and 2^a + 1.
    plan.M = exponent_sym(n).M;
    assemble(plan);
    plan.variant = AltVariant::SymGeneral;
    return plan;
  }
  plan.variant = AltVariant::Sym7;
  plan.M = exponent_alt(7).M;
  plan.m0 = without_power(plan.M, 3);
  plan.m = {plan.M.divided_by(FactoredInt::prime_power(2, 1))};
  plan.inner = general_w1(plan.m0, plan.m);
  plan.word = Word::power(plan.inner, 10);
  plan.arity = 2;
  return plan;
}

AltWordPlan construct_word_pcycle(int n, int p) {
  if (p <= 3 || p >= n || !is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("p-cycle word needs a prime 3 < p < n");
  }
  AltWordPlan plan = construct_word_alt(n);
  const Word w = plan.word;
  const Word z = x(plan.arity + 1);
  const int k = (p - 1) / 2;
  const FactoredInt exponent = exponent_alt(3 * k).M;
  if (exponent.valuation(static_cast<std::uint64_t>(p)) == 0) {
    throw InternalError("p does not divide the exponent of Alt(3(p-1)/2)");
  }
  plan.variant = AltVariant::PCycle;
  plan.p = p;
  plan.Np = exponent.divided_by(FactoredInt::prime_power(static_cast<std::uint64_t>(p), 1));
  plan.inner = w;
  const Word wk = Word::product({Word::power(Word::product({w, z}), k), Word::power(z, -k)});
  plan.word = Word::power(wk, exp_of(plan.Np));
  plan.arity = plan.word.arity();
  return plan;
}

nlohmann::json plan_to_json(const AltWordPlan& plan) {
  nlohmann::json j;
  j["n"] = plan.n;
  j["variant"] = variant_name(plan.variant);
  j["group"] = plan.symmetric ? "sym" : "alt";
  if (plan.ladder) {
    j["ladder"] = plan.ladder->primes;
    j["remainder"] = plan.ladder->remainder;
  } else {
    j["ladder"] = nullptr;
  }
  j["M"] = factored_json(plan.M);
  j["M_value"] = plan.M.value().str();
  j["m0"] = plan.m0.value().str();
  auto m = nlohmann::json::array();
  for (const auto& e : plan.m) m.push_back(e.value().str());
  j["m"] = m;
  if (plan.variant == AltVariant::PCycle) {
    j["p"] = plan.p;
    j["N_p"] = plan.Np.value().str();
  }
  j["word"] = print_word(plan.word);
  j["arity"] = plan.arity;
  j["image_spec"] = plan.image_spec();
  return j;
}

static WitnessAltTrace witness_for(const AltWordPlan& plan, std::uint64_t seed,
                                   std::uint64_t budget) {
  const auto nn = static_cast<std::size_t>(plan.n);
  switch (plan.n) {
    case 5: {
      WitnessAltTrace trace;
      trace.n = 5;
      trace.assignment = {Permutation::from_cycles(nn, {{1, 2, 3}})};
      return finish(std::move(trace), plan, AltValueKind::ThreeCycle);
    }
    case 7:
      return search_two_variable(plan, Permutation::from_cycles(nn, {{1, 2, 3}, {4, 5}, {6, 7}}),
                                 false, seed, budget);
    case 13:
      return search_n13(plan, seed, budget);
    default:
      return construct_witness(plan);
  }
}

WitnessAltTrace witness_alt(int n, std::uint64_t seed, std::uint64_t budget) {
  return witness_for(construct_word_alt(n), seed, budget);
}

WitnessAltTrace witness_sym(int n, std::uint64_t seed, std::uint64_t budget) {
  const AltWordPlan plan = construct_word_sym(n);
  if (n != 7) return witness_for(plan, seed, budget);
  return search_two_variable(plan, Permutation::from_cycles(7, {{1, 2, 3, 4}, {5, 6, 7}}), true,
                             seed, budget);
}

WitnessAltTrace witness_pcycle(int n, int p, std::uint64_t seed, std::uint64_t budget) {
  const AltWordPlan plan = construct_word_pcycle(n, p);
  WitnessAltTrace trace = witness_alt(n, seed, budget);
  const auto nn = static_cast<std::size_t>(n);
  const PermGroup g(nn);
  const Evaluator<PermGroup> eval(plan.word, g);
  Rng rng(derive_seed(seed, 0x70000 + static_cast<std::uint64_t>(p)));
  trace.assignment.resize(static_cast<std::size_t>(plan.arity - 1), Permutation::identity(nn));
  trace.assignment.push_back(Permutation::identity(nn));
  for (std::uint64_t trial = 1; trial <= budget; ++trial) {
    trace.assignment.back() = random_even_perm(nn, rng);
    const AltValueClass c = classify_alt_value(eval(trace.assignment));
    if (c.kind == AltValueKind::PCycle && c.p == p) {
      trace.randomized = true;
      trace.trials += trial;
      trace.value = eval(trace.assignment);
      trace.value_class = c;
      return trace;
    }
  }
  throw SearchExhausted("no p-cycle witness within " + std::to_string(budget) + " trials");
}

nlohmann::json witness_to_json(const WitnessAltTrace& trace) {
  nlohmann::json j;
  j["n"] = trace.n;
  auto assignment = nlohmann::json::array();
  for (const auto& a : trace.assignment) assignment.push_back(a.to_string());
  j["assignment"] = assignment;
  j["value"] = trace.value.to_string();
  j["value_class"] = trace.value_class.to_string();
  j["randomized"] = trace.randomized;
  if (trace.randomized) j["trials"] = trace.trials;
  if (!trace.steps.empty()) {
    auto steps = nlohmann::json::array();
    for (const auto& s : trace.steps) {
      steps.push_back({{"prime", s.prime}, {"omega", s.omega}, {"a", s.a.to_string()},
                       {"v", s.v.to_string()}});
    }
    j["steps"] = steps;
    j["tau"] = trace.tau ? nlohmann::json(trace.tau->to_string()) : nlohmann::json(nullptr);
    j["omega_k"] = trace.omega_k;
    j["a0"] = trace.a0.to_string();
    j["alpha"] = trace.alpha;
    j["beta"] = trace.beta;
    j["gamma"] = trace.gamma;
    j["delta"] = trace.delta;
    j["eta"] = trace.eta;
  }
  return j;
}

WidthCertificate width_certificate(int k) {
  if (k < 1) throw PreconditionError("width certificate needs k >= 1");
  WidthCertificate c;
  c.k = k;
  c.n = 2 * k + 3;
  std::vector<int> all(static_cast<std::size_t>(c.n));
  std::iota(all.begin(), all.end(), 1);
  c.element = Permutation::from_cycles(static_cast<std::size_t>(c.n), {all});
  const CycleType t = cycle_type(c.element);
  const int cycles = static_cast<int>(t.lengths.size()) + t.fixed_points;
  c.bound = (c.n - cycles + 1) / 2;
  return c;
}

int three_cycle_distance(const Permutation& target) {
  const int n = static_cast<int>(target.degree());
  if (n > 9) throw LimitExceeded("three_cycle_distance supports n <= 9");
  if (!target.is_even()) return -1;
  auto key = [n](const std::array<std::uint8_t, 16>& a) {
    std::uint64_t k = 0;
    for (int i = 0; i < n; ++i) k |= static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]) << (4 * i);
    return k;
  };
  std::array<std::uint8_t, 16> start{};
  std::array<std::uint8_t, 16> goal{};
  for (int i = 0; i < n; ++i) {
    start[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    goal[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(target[static_cast<std::size_t>(i)]);
  }
  const std::uint64_t goal_key = key(goal);
  std::vector<std::array<int, 3>> gens;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a < b && a < c && b != c) gens.push_back({a, b, c});
      }
    }
  }
  std::unordered_map<std::uint64_t, int> dist{{key(start), 0}};
  std::vector<std::array<std::uint8_t, 16>> frontier{start};
  if (key(start) == goal_key) return 0;
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<std::array<std::uint8_t, 16>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        // p followed by the 3-cycle (a b c).
        auto q = p;
        for (int i = 0; i < n; ++i) {
          auto& v = q[static_cast<std::size_t>(i)];
          if (v == g[0]) {
            v = static_cast<std::uint8_t>(g[1]);
          } else if (v == g[1]) {
            v = static_cast<std::uint8_t>(g[2]);
          } else if (v == g[2]) {
            v = static_cast<std::uint8_t>(g[0]);
          }
        }
        const std::uint64_t k = key(q);
        if (dist.emplace(k, d).second) {
          if (k == goal_key) return d;
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

}  // namespace wordmaps
