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


#ifndef WORDMAPS_ALTWORDS_HPP_
#define WORDMAPS_ALTWORDS_HPP_

// Words whose values on Alt(n) (and Sym(n)) are the identity and the
// 3-cycles, their p-cycle variants, and explicit assignments reaching a
// 3-cycle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordmaps/arith.hpp"
#include "wordmaps/perm.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// Primes p_1 > ... > p_k > 3 with p_i > (n - p_1 - ... - p_{i-1}) / 2 and
/// n - sum(p_i) in {3, 4, 5}.
struct PrimeLadder {
  int n = 0;
  std::vector<std::uint64_t> primes;
  int remainder = 0;
};

/// Greedy largest admissible prime at each step, backtracking on dead
/// ends. Requires n > 7, n != 13; throws SearchExhausted if no ladder exists.
PrimeLadder prime_ladder(int n);

/// True when the ladder satisfies every defining condition for its n.
bool ladder_valid(const PrimeLadder& ladder);

enum class AltVariant { General, N5, N7, N13, SymGeneral, Sym7, PCycle };

std::string variant_name(AltVariant v);

struct AltWordPlan {
  int n = 0;
  AltVariant variant = AltVariant::General;
  bool symmetric = false;  // ambient group Sym(n) instead of Alt(n)
  std::optional<PrimeLadder> ladder;
  FactoredInt M;
  FactoredInt m0;              // M / 3^{l_3}
  std::vector<FactoredInt> m;  // M / p_i^{l_{p_i}} along the ladder
  Word inner = Word::var(1);   // w_1 (w_2 for n = 13); the base word for p-cycles
  Word word = Word::var(1);
  int arity = 0;
  int p = 0;  // PCycle only
  FactoredInt Np;

  /// Class names the values may take: {"identity", "three_cycle"} or
  /// {"identity", "p_cycle"}.
  std::vector<std::string> image_spec() const;
};

/// n = 5, n >= 7. Throws UnsupportedGroup for n = 6 and n <= 4.
AltWordPlan construct_word_alt(int n);
/// n >= 7. Throws UnsupportedGroup for n <= 6.
AltWordPlan construct_word_sym(int n);
/// Prime 3 < p < n on top of construct_word_alt(n).
AltWordPlan construct_word_pcycle(int n, int p);

nlohmann::json plan_to_json(const AltWordPlan& plan);

struct WitnessStep {
  std::uint64_t prime = 0;
  std::vector<int> omega;  // Omega_{i-1} ordered along v_{i-1}
  Permutation a;
  Permutation v;  // v_i = [v_{i-1}, a_i]
};

struct WitnessAltTrace {
  int n = 0;
  std::vector<Permutation> assignment;
  bool randomized = false;
  std::uint64_t trials = 0;
  // Constructive path only.
  std::vector<WitnessStep> steps;
  std::optional<Permutation> tau;
  Permutation a0;
  int alpha = 0, beta = 0, gamma = 0, delta = 0, eta = 0;
  std::vector<int> omega_k;
  // Result.
  Permutation value;
  AltValueClass value_class;
};

inline constexpr std::uint64_t kDefaultWitnessBudget = 1'000'000;

/// Assignment on which construct_word_alt(n) evaluates to a 3-cycle.
/// Constructive for n >= 8, n != 13; seeded search for n = 7 and 13.
WitnessAltTrace witness_alt(int n, std::uint64_t seed = 0,
                            std::uint64_t budget = kDefaultWitnessBudget);
WitnessAltTrace witness_sym(int n, std::uint64_t seed = 0,
                            std::uint64_t budget = kDefaultWitnessBudget);
/// Extends witness_alt(n) by a searched value of the extra variable.
WitnessAltTrace witness_pcycle(int n, int p, std::uint64_t seed = 0,
                               std::uint64_t budget = kDefaultWitnessBudget);

nlohmann::json witness_to_json(const WitnessAltTrace& trace);

struct WidthCertificate {
  int k = 0;
  int n = 0;
  Permutation element;  // the n-cycle (1 2 ... n)
  int bound = 0;        // (n - 1) / 2 three-cycles are needed
};

/// n = 2k + 3; requires k >= 1.
WidthCertificate width_certificate(int k);

/// Fewest 3-cycles whose product is target, by breadth-first search over
/// Alt(n); n <= 9.
int three_cycle_distance(const Permutation& target);

}  // namespace wordmaps

#endif  // WORDMAPS_ALTWORDS_HPP_
