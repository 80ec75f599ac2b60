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


#ifndef WORDMAPS_HARNESS_HPP_
#define WORDMAPS_HARNESS_HPP_

// Image verification for word maps on Alt(n), Sym(n), SL_n(q) and GL_n(q).
//
// Work is cut into fixed chunks whose random streams derive from the master
// seed and the chunk index alone, and chunk results are merged in index
// order, so reports do not depend on the thread count.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordmaps/evaluate.hpp"
#include "wordmaps/random.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

enum class VerifyMode { ExhaustiveByClass, ExhaustiveFull, Sample };

/// "exhaustive-classes", "exhaustive", "sample".
std::string mode_name(VerifyMode m);
VerifyMode parse_mode(const std::string& s);

enum class ValueClass { Identity, ThreeCycle, PCycle, Transvection, DoubleTransvection, Other };
inline constexpr std::size_t kValueClassCount = 6;

/// JSON key: "identity", "three_cycle", "p_cycle", "transvection",
/// "double_transvection", "other".
std::string value_class_key(ValueClass c);

inline constexpr std::uint64_t kMaxExhaustiveEvaluations = 100'000'000;
inline constexpr std::uint64_t kMaxFullSingleVariable = 10'000'000;
inline constexpr std::size_t kMaxViolations = 100;

struct Violation {
  std::vector<std::string> assignment;
  std::string value;
  std::string value_class;
};

struct ReportWitness {
  std::vector<std::string> assignment;
  std::string value;
  std::string value_class;
  bool constructed = false;  // from a witness constructor rather than observed
};

struct VerifyReport {
  std::string kind;  // "alt", "sym", "sl", "gl"
  int n = 0;
  std::optional<std::uint32_t> q;
  std::optional<int> p;
  std::string word;
  VerifyMode mode = VerifyMode::Sample;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  std::array<std::uint64_t, kValueClassCount> classes{};
  std::vector<Violation> violations;  // first kMaxViolations in chunk order
  std::uint64_t violation_count = 0;
  std::optional<ReportWitness> witness;
  /// Distinct non-identity values per class, when tracking was requested.
  std::map<std::string, std::uint64_t> distinct;
  bool pass = false;
  double elapsed_ms = 0;

  std::uint64_t count(ValueClass c) const { return classes[static_cast<std::size_t>(c)]; }
  /// Adds the totals of a later chunk.
  void merge(const VerifyReport& later);
};

nlohmann::json report_to_json(const VerifyReport& r, bool include_elapsed = true);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Sample;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  bool gl = false;
  bool track_distinct = false;
  std::uint64_t witness_budget = 1'000'000;
};

VerifyReport verify_image_alt(int n, const VerifyOptions& opts);
VerifyReport verify_image_sym(int n, const VerifyOptions& opts);
VerifyReport verify_image_pcycle(int n, int p, const VerifyOptions& opts);
VerifyReport verify_image_sl(int n, std::uint32_t q, const VerifyOptions& opts);

struct EquivarianceResult {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  bool pass() const { return failures == 0; }
};

/// Checks w(x_1^h, ..., x_d^h) = w(x_1, ..., x_d)^h on random tuples and h.
/// eval maps an assignment to a group element; sample draws one element.
template <GroupContext G, class Eval, class Sample>
EquivarianceResult equivariance_check(const G& g, const Eval& eval, int arity,
                                      const Sample& sample, std::uint64_t trials,
                                      std::uint64_t seed) {
  Rng rng(seed);
  EquivarianceResult r;
  using E = typename G::element_type;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<E> a;
    for (int i = 0; i < arity; ++i) a.push_back(sample(rng));
    const E h = sample(rng);
    const E hinv = g.inverse(h);
    std::vector<E> conj;
    for (const E& e : a) conj.push_back(g.multiply(g.multiply(hinv, e), h));
    const E lhs = eval(std::span<const E>(conj));
    const E rhs = g.multiply(g.multiply(hinv, eval(std::span<const E>(a))), h);
    ++r.trials;
    if (!g.equal(lhs, rhs)) ++r.failures;
  }
  return r;
}

EquivarianceResult equivariance_selftest_alt(int n, const Word& w, std::uint64_t trials,
                                             std::uint64_t seed);
EquivarianceResult equivariance_selftest_sl(int n, std::uint32_t q, const Word& w,
                                            std::uint64_t trials, std::uint64_t seed);

/// Sampled check of the gate property behind the SL words: whenever x
/// passes the plan's gates (x^A, x^B, x^Abar != I), x^B is a transvection.
/// Single-variable plans check x^e != I => x^e in the image spec instead.
struct GateReport {
  int n = 0;
  std::uint32_t q = 0;
  std::uint64_t samples = 0;
  std::uint64_t gates_open = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::string> examples;  // first few offending x
  bool pass() const { return counterexamples == 0; }
};

GateReport transvection_gate_check(int n, std::uint32_t q, std::uint64_t samples,
                                   std::uint64_t seed);
nlohmann::json gate_report_to_json(const GateReport& r);

}  // namespace wordmaps

#endif  // WORDMAPS_HARNESS_HPP_
