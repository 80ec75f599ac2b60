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


#include "wordmaps/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "wordmaps/altwords.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/matrix.hpp"
#include "wordmaps/perm.hpp"
#include "wordmaps/slwords.hpp"

namespace wordmaps {

namespace {

constexpr std::uint64_t kSampleChunk = 1000;
constexpr std::uint64_t kTupleChunk = 4096;
constexpr std::size_t kMaxListedGroup = 2'000'000;

struct Classified {
  ValueClass cls;
  std::string name;
  bool allowed;
  bool target;
};

template <class G>
struct Job {
  using E = typename G::element_type;
  const G* group = nullptr;
  Word word = Word::var(1);
  int arity = 1;
  std::function<Classified(const E&)> classify;
  std::function<std::string(const E&)> show;
  std::function<E(Rng&)> sample;
  std::vector<E> all;
  std::vector<E> reps;
  // Streaming enumeration of the whole group for single-variable words.
  std::uint64_t stream_chunks = 0;
  std::function<void(std::uint64_t, const std::function<void(const E&)>&)> stream;
  std::function<std::optional<ReportWitness>()> make_witness;
};

template <class E>
struct ChunkResult {
  VerifyReport report;
  std::array<std::set<E>, kValueClassCount> distinct;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t checked_power(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

template <class G>
class Runner {
 public:
  using E = typename G::element_type;

  Runner(const Job<G>& job, const VerifyOptions& opts) : job_(job), opts_(opts) {}

  VerifyReport run() {
    const std::uint64_t chunks = plan_chunks();
    std::vector<ChunkResult<E>> results(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= chunks) return;
        try {
          results[i] = run_chunk(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(chunks);
          return;
        }
      }
    };
    unsigned threads = opts_.threads ? opts_.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    ChunkResult<E> total;
    for (auto& r : results) {
      total.report.merge(r.report);
      if (opts_.track_distinct) {
        for (std::size_t c = 0; c < kValueClassCount; ++c) total.distinct[c].merge(r.distinct[c]);
      }
    }
    VerifyReport out = std::move(total.report);
    if (opts_.track_distinct) {
      for (std::size_t c = 1; c < kValueClassCount; ++c) {
        if (!total.distinct[c].empty()) {
          out.distinct[value_class_key(static_cast<ValueClass>(c))] = total.distinct[c].size();
        }
      }
    }
    return out;
  }

 private:
  enum class Shape { Sample, Full, FullStream, ClassSingle, ClassTuples };

  std::uint64_t plan_chunks() {
    const int d = job_.arity;
    switch (opts_.mode) {
      case VerifyMode::Sample:
        shape_ = Shape::Sample;
        return (opts_.samples + kSampleChunk - 1) / kSampleChunk;
      case VerifyMode::ExhaustiveFull:
        if (d == 1 && job_.all.empty()) {
          shape_ = Shape::FullStream;
          return job_.stream_chunks;
        }
        shape_ = Shape::Full;
        total_ = checked_power(job_.all.size(), d);
        return (total_ + kTupleChunk - 1) / kTupleChunk;
      case VerifyMode::ExhaustiveByClass:
        if (d == 1) {
          shape_ = Shape::ClassSingle;
          return job_.reps.size();
        }
        shape_ = Shape::ClassTuples;
        rest_ = checked_power(job_.all.size(), d - 1);
        blocks_per_rep_ = (rest_ + kTupleChunk - 1) / kTupleChunk;
        return job_.reps.size() * blocks_per_rep_;
    }
    return 0;
  }

  void record(ChunkResult<E>& cr, std::span<const E> assignment, const E& value) const {
    VerifyReport& r = cr.report;
    const Classified c = job_.classify(value);
    ++r.evaluations;
    ++r.classes[static_cast<std::size_t>(c.cls)];
    if (!c.allowed) {
      ++r.violation_count;
      if (r.violations.size() < kMaxViolations) {
        Violation v;
        for (const E& e : assignment) v.assignment.push_back(job_.show(e));
        v.value = job_.show(value);
        v.value_class = c.name;
        r.violations.push_back(std::move(v));
      }
    }
    if (c.target && c.allowed && !r.witness) {
      ReportWitness w;
      for (const E& e : assignment) w.assignment.push_back(job_.show(e));
      w.value = job_.show(value);
      w.value_class = c.name;
      r.witness = std::move(w);
    }
    if (opts_.track_distinct && c.cls != ValueClass::Identity) {
      cr.distinct[static_cast<std::size_t>(c.cls)].insert(value);
    }
  }

  // Tuple number `index` in base |all|, first coordinate least significant.
  void decode(std::uint64_t index, std::vector<E>& tuple, std::size_t first) const {
    const std::uint64_t base = job_.all.size();
    for (std::size_t i = first; i < tuple.size(); ++i) {
      tuple[i] = job_.all[index % base];
      index /= base;
    }
  }

  ChunkResult<E> run_chunk(std::uint64_t chunk) const {
    ChunkResult<E> cr;
    const G& g = *job_.group;
    const auto d = static_cast<std::size_t>(job_.arity);
    std::vector<E> tuple(d, g.identity());
    switch (shape_) {
      case Shape::Sample: {
        const Evaluator<G> eval(job_.word, g);
        Rng rng(derive_seed(opts_.seed, chunk));
        const std::uint64_t begin = chunk * kSampleChunk;
        const std::uint64_t end = std::min(opts_.samples, begin + kSampleChunk);
        for (std::uint64_t s = begin; s < end; ++s) {
          for (auto& e : tuple) e = job_.sample(rng);
          record(cr, tuple, eval(tuple));
        }
        break;
      }
      case Shape::Full: {
        const Evaluator<G> eval(job_.word, g);
        const std::uint64_t begin = chunk * kTupleChunk;
        const std::uint64_t end = std::min(total_, begin + kTupleChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          decode(i, tuple, 0);
          record(cr, tuple, eval(tuple));
        }
        break;
      }
      case Shape::FullStream: {
        const Evaluator<G> eval(job_.word, g);
        job_.stream(chunk, [&](const E& e) {
          tuple[0] = e;
          record(cr, tuple, eval(tuple));
        });
        break;
      }
      case Shape::ClassSingle: {
        const Evaluator<G> eval(job_.word, g);
        tuple[0] = job_.reps[chunk];
        record(cr, tuple, eval(tuple));
        break;
      }
      case Shape::ClassTuples: {
        const std::uint64_t rep = chunk / blocks_per_rep_;
        const std::uint64_t block = chunk % blocks_per_rep_;
        tuple[0] = job_.reps[rep];
        const int bound[] = {1};
        const Evaluator<G> eval(job_.word, g, bound, std::span<const E>(&tuple[0], 1));
        const std::uint64_t begin = block * kTupleChunk;
        const std::uint64_t end = std::min(rest_, begin + kTupleChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          decode(i, tuple, 1);
          record(cr, tuple, eval(tuple));
        }
        break;
      }
    }
    return cr;
  }

  const Job<G>& job_;
  const VerifyOptions& opts_;
  Shape shape_ = Shape::Sample;
  std::uint64_t total_ = 0;
  std::uint64_t rest_ = 0;
  std::uint64_t blocks_per_rep_ = 1;
};

template <class G>
VerifyReport execute(const Job<G>& job, const VerifyOptions& opts, VerifyReport header) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r = Runner<G>(job, opts).run();
  r.kind = header.kind;
  r.n = header.n;
  r.q = header.q;
  r.p = header.p;
  r.word = print_word(job.word);
  r.mode = opts.mode;
  r.seed = opts.seed;
  if (!r.witness && job.make_witness) r.witness = job.make_witness();
  r.pass = r.violation_count == 0 && r.witness.has_value();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void check_exhaustive(VerifyMode mode, std::uint64_t group_order, std::uint64_t reps, int arity) {
  if (mode == VerifyMode::Sample) return;
  std::uint64_t evaluations;
  if (mode == VerifyMode::ExhaustiveByClass) {
    evaluations = checked_mul(reps, checked_power(group_order, arity - 1));
  } else {
    evaluations = checked_power(group_order, arity);
    if (arity == 1 && group_order > kMaxFullSingleVariable) {
      throw LimitExceeded("full enumeration needs |G| <= " + std::to_string(kMaxFullSingleVariable));
    }
  }
  if (evaluations > kMaxExhaustiveEvaluations) {
    throw LimitExceeded("exhaustive mode would need " +
                        (evaluations == UINT64_MAX ? std::string("more than 2^64")
                                                   : std::to_string(evaluations)) +
                        " evaluations (limit " + std::to_string(kMaxExhaustiveEvaluations) + ")");
  }
}

VerifyReport verify_perm(const AltWordPlan& plan, const VerifyOptions& opts,
                         std::function<std::optional<ReportWitness>()> make_witness) {
  const int n = plan.n;
  const auto nn = static_cast<std::size_t>(n);
  const bool sym = plan.symmetric;
  const PermGroup g(nn);
  Job<PermGroup> job;
  job.group = &g;
  job.word = plan.word;
  job.arity = plan.arity;
  const ValueClass target_cls =
      plan.variant == AltVariant::PCycle ? ValueClass::PCycle : ValueClass::ThreeCycle;
  const int target_p = plan.variant == AltVariant::PCycle ? plan.p : 3;
  job.classify = [target_cls, target_p](const Permutation& v) {
    const AltValueClass c = classify_alt_value(v);
    Classified out{ValueClass::Other, c.to_string(), false, false};
    switch (c.kind) {
      case AltValueKind::Identity:
        out.cls = ValueClass::Identity;
        out.allowed = true;
        break;
      case AltValueKind::ThreeCycle:
        out.cls = ValueClass::ThreeCycle;
        break;
      case AltValueKind::PCycle:
        out.cls = ValueClass::PCycle;
        break;
      case AltValueKind::Other:
        break;
    }
    if (out.cls == target_cls && c.p == target_p) out.allowed = out.target = true;
    return out;
  };
  job.show = [](const Permutation& v) { return v.to_string(); };
  job.sample = [nn, sym](Rng& rng) { return sym ? random_perm(nn, rng) : random_even_perm(nn, rng); };
  job.make_witness = std::move(make_witness);

  if (opts.mode != VerifyMode::Sample) {
    if (n > 10) throw LimitExceeded("exhaustive permutation modes support n <= 10");
    const std::uint64_t order = factorial(n) / (sym ? 1 : 2);
    if (opts.mode == VerifyMode::ExhaustiveByClass) {
      job.reps.clear();
      for (auto& cr : sym ? sym_class_reps(n) : alt_class_reps(n)) job.reps.push_back(cr.rep);
    }
    check_exhaustive(opts.mode, order, job.reps.size(), job.arity);
    if (opts.mode == VerifyMode::ExhaustiveFull || job.arity > 1) job.all = all_perms(n, !sym);
  }

  VerifyReport header;
  header.kind = sym ? "sym" : "alt";
  header.n = n;
  if (plan.variant == AltVariant::PCycle) header.p = plan.p;
  return execute(job, opts, header);
}

ReportWitness perm_witness(const WitnessAltTrace& t) {
  ReportWitness w;
  for (const auto& a : t.assignment) w.assignment.push_back(a.to_string());
  w.value = t.value.to_string();
  w.value_class = t.value_class.to_string();
  w.constructed = true;
  return w;
}

std::optional<ReportWitness> try_witness(const std::function<ReportWitness()>& f) {
  try {
    return f();
  } catch (const SearchExhausted&) {
    return std::nullopt;
  }
}

}  // namespace

std::string mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::ExhaustiveByClass:
      return "exhaustive-classes";
    case VerifyMode::ExhaustiveFull:
      return "exhaustive";
    case VerifyMode::Sample:
      return "sample";
  }
  return "sample";
}

VerifyMode parse_mode(const std::string& s) {
  if (s == "exhaustive-classes") return VerifyMode::ExhaustiveByClass;
  if (s == "exhaustive") return VerifyMode::ExhaustiveFull;
  if (s == "sample") return VerifyMode::Sample;
  throw PreconditionError("unknown mode '" + s + "' (expected exhaustive, exhaustive-classes or sample)");
}

std::string value_class_key(ValueClass c) {
  switch (c) {
    case ValueClass::Identity:
      return "identity";
    case ValueClass::ThreeCycle:
      return "three_cycle";
    case ValueClass::PCycle:
      return "p_cycle";
    case ValueClass::Transvection:
      return "transvection";
    case ValueClass::DoubleTransvection:
      return "double_transvection";
    case ValueClass::Other:
      return "other";
  }
  return "other";
}

void VerifyReport::merge(const VerifyReport& later) {
  evaluations += later.evaluations;
  for (std::size_t i = 0; i < kValueClassCount; ++i) classes[i] += later.classes[i];
  violation_count += later.violation_count;
  for (const auto& v : later.violations) {
    if (violations.size() >= kMaxViolations) break;
    violations.push_back(v);
  }
  if (!witness && later.witness) witness = later.witness;
  for (const auto& [k, v] : later.distinct) distinct[k] += v;
}

nlohmann::json report_to_json(const VerifyReport& r, bool include_elapsed) {
  nlohmann::json j;
  nlohmann::json group{{"kind", r.kind}, {"n", r.n}};
  if (r.q) group["q"] = *r.q;
  if (r.p) group["p"] = *r.p;
  j["group"] = group;
  j["word"] = r.word;
  j["mode"] = mode_name(r.mode);
  j["seed"] = r.seed;
  j["evaluations"] = r.evaluations;
  nlohmann::json classes;
  for (std::size_t i = 0; i < kValueClassCount; ++i) {
    classes[value_class_key(static_cast<ValueClass>(i))] = r.classes[i];
  }
  j["classes"] = classes;
  auto violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"assignment", v.assignment}, {"value", v.value}, {"value_class", v.value_class}});
  }
  j["violations"] = violations;
  j["violation_count"] = r.violation_count;
  if (r.witness) {
    j["witness"] = {{"assignment", r.witness->assignment},
                    {"value", r.witness->value},
                    {"value_class", r.witness->value_class},
                    {"constructed", r.witness->constructed}};
  } else {
    j["witness"] = nullptr;
  }
  if (!r.distinct.empty()) j["distinct"] = r.distinct;
  j["pass"] = r.pass;
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerifyReport verify_image_alt(int n, const VerifyOptions& opts) {
  const AltWordPlan plan = construct_word_alt(n);
  return verify_perm(plan, opts, [&] {
    return try_witness([&] { return perm_witness(witness_alt(n, opts.seed, opts.witness_budget)); });
  });
}

VerifyReport verify_image_sym(int n, const VerifyOptions& opts) {
  const AltWordPlan plan = construct_word_sym(n);
  return verify_perm(plan, opts, [&] {
    return try_witness([&] { return perm_witness(witness_sym(n, opts.seed, opts.witness_budget)); });
  });
}

VerifyReport verify_image_pcycle(int n, int p, const VerifyOptions& opts) {
  const AltWordPlan plan = construct_word_pcycle(n, p);
  return verify_perm(plan, opts, [&] {
    return try_witness(
        [&] { return perm_witness(witness_pcycle(n, p, opts.seed, opts.witness_budget)); });
  });
}

VerifyReport verify_image_sl(int n, std::uint32_t q, const VerifyOptions& opts) {
  if (opts.gl && (n == 3 || n == 4)) {
    throw PreconditionError("GL verification covers n other than 3 and 4");
  }
  const SLWordPlan plan = construct_word_sl(n, q);
  const MatrixGroup g(q, n, opts.gl);
  const GaloisField& f = g.field();
  const std::vector<SlValueKind> spec = plan.image_spec();

  Job<MatrixGroup> job;
  job.group = &g;
  job.word = plan.word;
  job.arity = plan.arity;
  job.classify = [&f, spec](const Matrix& v) {
    const SlValueKind k = classify_sl_value(f, v);
    Classified out{ValueClass::Other, sl_value_name(k), false, false};
    switch (k) {
      case SlValueKind::Identity:
        out.cls = ValueClass::Identity;
        break;
      case SlValueKind::Transvection:
        out.cls = ValueClass::Transvection;
        out.target = true;
        break;
      case SlValueKind::DoubleTransvection:
        out.cls = ValueClass::DoubleTransvection;
        break;
      case SlValueKind::Other:
        break;
    }
    out.allowed = std::find(spec.begin(), spec.end(), k) != spec.end();
    return out;
  };
  job.show = [](const Matrix& m) { return matrix_to_string(m); };
  job.sample = [&g](Rng& rng) { return g.random(rng); };
  job.make_witness = [&]() -> std::optional<ReportWitness> {
    return try_witness([&] {
      const WitnessSLTrace t = witness_sl(n, q, opts.seed, opts.witness_budget);
      ReportWitness w;
      for (const auto& m : t.assignment) w.assignment.push_back(matrix_to_string(m));
      w.value = matrix_to_string(t.value);
      w.value_class = sl_value_name(t.value_class);
      w.constructed = true;
      return w;
    });
  };

  if (opts.mode != VerifyMode::Sample) {
    const BigInt order_big = opts.gl ? gl_order(n, q) : sl_order(n, q);
    const std::uint64_t order =
        order_big > BigInt(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(order_big);
    if (opts.mode == VerifyMode::ExhaustiveByClass) {
      if (order > kMaxClassGroupOrder) {
        throw LimitExceeded("exhaustive-classes needs |G| <= " + std::to_string(kMaxClassGroupOrder));
      }
      for (auto& cr : matrix_class_reps(f, n, opts.gl)) job.reps.push_back(cr.rep);
    }
    check_exhaustive(opts.mode, order, job.reps.size(), job.arity);
    if (opts.mode == VerifyMode::ExhaustiveFull && job.arity == 1) {
      job.stream_chunks = first_row_count(n, q);
      job.stream = [&f, n, gl = opts.gl](std::uint64_t chunk,
                                         const std::function<void(const Matrix&)>& fn) {
        enumerate_matrices(f, n, gl, chunk, chunk + 1, fn);
      };
    } else if (job.arity > 1) {
      if (order > kMaxListedGroup) throw LimitExceeded("group too large to list");
      job.all = opts.gl ? enumerate_gl(f, n) : enumerate_sl(f, n);
    }
  }

  VerifyReport header;
  header.kind = opts.gl ? "gl" : "sl";
  header.n = n;
  header.q = q;
  return execute(job, opts, header);
}

EquivarianceResult equivariance_selftest_alt(int n, const Word& w, std::uint64_t trials,
                                             std::uint64_t seed) {
  const auto nn = static_cast<std::size_t>(n);
  const PermGroup g(nn);
  const Evaluator<PermGroup> eval(w, g);
  return equivariance_check(
      g, [&](std::span<const Permutation> a) { return eval(a); }, w.arity(),
      [nn](Rng& rng) { return random_even_perm(nn, rng); }, trials, seed);
}

EquivarianceResult equivariance_selftest_sl(int n, std::uint32_t q, const Word& w,
                                            std::uint64_t trials, std::uint64_t seed) {
  const MatrixGroup g(q, n);
  const Evaluator<MatrixGroup> eval(w, g);
  return equivariance_check(
      g, [&](std::span<const Matrix> a) { return eval(a); }, w.arity(),
      [&g](Rng& rng) { return g.random(rng); }, trials, seed);
}

GateReport transvection_gate_check(int n, std::uint32_t q, std::uint64_t samples,
                                   std::uint64_t seed) {
  const SLWordPlan plan = sl_word_params(n, q);
  const MatrixGroup g(q, n);
  const GaloisField& f = g.field();
  const std::vector<SlValueKind> spec = plan.image_spec();
  const Matrix id = Matrix::identity(n);
  GateReport r;
  r.n = n;
  r.q = q;
  Rng rng(derive_seed(seed, 0x6a7e));
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Matrix xm = g.random(rng);
    ++r.samples;
    bool bad = false;
    if (plan.B) {
      if (!plan.gates_open(f, xm)) continue;
      ++r.gates_open;
      bad = classify_sl_value(f, mat_pow(f, xm, plan.B->value())) != SlValueKind::Transvection;
    } else {
      const Matrix v = mat_pow(f, xm, plan.exponent->value());
      if (v == id) continue;
      ++r.gates_open;
      bad = std::find(spec.begin(), spec.end(), classify_sl_value(f, v)) == spec.end();
    }
    if (bad) {
      ++r.counterexamples;
      if (r.examples.size() < 5) r.examples.push_back(matrix_to_string(xm));
    }
  }
  return r;
}

nlohmann::json gate_report_to_json(const GateReport& r) {
  return {{"group", {{"kind", "sl"}, {"n", r.n}, {"q", r.q}}},
          {"samples", r.samples},
          {"gates_open", r.gates_open},
          {"counterexamples", r.counterexamples},
          {"examples", r.examples},
          {"pass", r.pass()}};
}

}  // namespace wordmaps
