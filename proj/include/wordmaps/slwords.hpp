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


#ifndef WORDMAPS_SLWORDS_HPP_
#define WORDMAPS_SLWORDS_HPP_

// Words whose values on SL_n(q) are the identity and the transvections
// (plus double transvections for SL_4(2)), with explicit witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordmaps/arith.hpp"
#include "wordmaps/matrix.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

enum class SlCase { N2, N3General, N3Q2Q4, N4General, N4Q3, N4Q2, NBig };

std::string sl_case_name(SlCase c);

struct SLWordPlan {
  int n = 0;
  std::uint32_t q = 0, p = 0, u = 0;
  SlCase sl_case = SlCase::N2;
  FactoredInt E;
  // Two-variable cases (and A = 1, B = E/p for n = 2).
  std::optional<PrimePower> r_alpha;
  std::optional<PrimePower> rbar_alpha;
  std::optional<FactoredInt> A, B, Abar;
  std::optional<FactoredInt> outer;  // (q - 1)(q^2 - 1)
  // Single-variable cases: w = x1^exponent.
  std::optional<FactoredInt> exponent;
  Word inner = Word::var(1);  // w_1 or w_2 before the outer power
  Word word = Word::var(1);
  int arity = 0;

  bool single_variable() const { return exponent.has_value(); }
  std::vector<SlValueKind> image_spec() const;
  /// True when x passes every gate: x^A, x^B (and x^Abar) differ from I.
  bool gates_open(const GaloisField& f, const Matrix& x) const;
};

/// Case dispatch, exponents and Zsigmondy data; plan.word is left as x1.
SLWordPlan sl_word_params(int n, std::uint32_t q);
SLWordPlan construct_word_sl(int n, std::uint32_t q);

nlohmann::json sl_plan_to_json(const SLWordPlan& plan);

struct WitnessSLTrace {
  int n = 0;
  std::uint32_t q = 0;
  std::vector<Matrix> assignment;
  std::string method;  // "jordan", "torus", "scaled_torus", "random"
  std::uint64_t trials = 0;
  // Constructive two-variable path.
  std::optional<Matrix> x_prime, x_double_prime, a, b;
  std::vector<Vec> t;
  std::optional<Vec> e1_image, e2_image;
  // Result.
  Matrix value;
  SlValueKind value_class = SlValueKind::Other;
};

inline constexpr std::uint64_t kDefaultSlWitnessBudget = 1'000'000;

/// Assignment on which construct_word_sl(n, q) evaluates to a transvection.
WitnessSLTrace witness_sl(int n, std::uint32_t q, std::uint64_t seed = 0,
                          std::uint64_t budget = kDefaultSlWitnessBudget);

nlohmann::json witness_sl_to_json(const WitnessSLTrace& trace);

}  // namespace wordmaps

#endif  // WORDMAPS_SLWORDS_HPP_
