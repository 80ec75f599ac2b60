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


#include "wordmaps/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmaps/altwords.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/harness.hpp"
#include "wordmaps/slwords.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kParseReduceLimit = 10'000;

struct Config {
  std::string group;
  int n = 0;
  std::uint32_t q = 0;
  int p = 0;
  int k = 0;
  std::string mode = "sample";
  std::uint64_t samples = 10'000;
  std::uint64_t budget = kDefaultWitnessBudget;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool gl = false;
  bool no_timing = false;
  std::string out;
  std::string format = "json";
  std::string word;
};

struct Output {
  json doc;
  std::string text;
  int code = kExitOk;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

Output construct(const Config& c) {
  Output o;
  if (c.group == "sl") {
    require(c.n >= 2 && c.q >= 2, "construct sl needs --n >= 2 and --q");
    const SLWordPlan plan = construct_word_sl(c.n, c.q);
    o.doc = sl_plan_to_json(plan);
    std::ostringstream t;
    t << print_word(plan.word) << "\n"
      << "group SL_" << plan.n << "(" << plan.q << "), case " << sl_case_name(plan.sl_case) << "\n"
      << "E = " << plan.E.to_string() << "\n";
    if (plan.exponent) t << "exponent = " << plan.exponent->to_string() << "\n";
    if (plan.A) t << "A = " << plan.A->to_string() << "\n";
    if (plan.B) t << "B = " << plan.B->to_string() << "\n";
    if (plan.Abar) t << "Abar = " << plan.Abar->to_string() << "\n";
    o.text = t.str();
    return o;
  }
  require(c.n > 0, "construct " + c.group + " needs --n");
  AltWordPlan plan = c.group == "alt"   ? construct_word_alt(c.n)
                     : c.group == "sym" ? construct_word_sym(c.n)
                                        : construct_word_pcycle(c.n, c.p);
  o.doc = plan_to_json(plan);
  std::ostringstream t;
  t << print_word(plan.word) << "\n"
    << "group " << (plan.symmetric ? "Sym(" : "Alt(") << plan.n << "), variant "
    << variant_name(plan.variant) << ", arity " << plan.arity << "\n"
    << "M = " << plan.M.to_string() << "\n";
  if (plan.ladder) {
    t << "ladder";
    for (auto p : plan.ladder->primes) t << " " << p;
    t << " + " << plan.ladder->remainder << "\n";
  }
  o.text = t.str();
  return o;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream t;
  t << r.kind << " n=" << r.n;
  if (r.q) t << " q=" << *r.q;
  if (r.p) t << " p=" << *r.p;
  t << " mode=" << mode_name(r.mode) << " seed=" << r.seed << "\n"
    << "word " << r.word << "\n"
    << "evaluations " << r.evaluations << "\n";
  for (std::size_t i = 0; i < kValueClassCount; ++i) {
    if (r.classes[i]) t << "  " << value_class_key(static_cast<ValueClass>(i)) << " " << r.classes[i] << "\n";
  }
  t << "violations " << r.violation_count << "\n";
  for (const auto& v : r.violations) {
    t << "  " << v.value_class << " " << v.value << " at";
    for (const auto& a : v.assignment) t << " [" << a << "]";
    t << "\n";
  }
  if (r.witness) {
    t << "witness " << r.witness->value_class << " " << r.witness->value
      << (r.witness->constructed ? " (constructed)" : " (observed)") << "\n";
  } else {
    t << "witness none\n";
  }
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  return t.str();
}

Output verify(const Config& c) {
  VerifyOptions opts;
  opts.mode = parse_mode(c.mode);
  opts.samples = c.samples;
  opts.seed = c.seed;
  opts.threads = c.threads;
  opts.gl = c.gl;
  opts.witness_budget = c.budget;
  require(c.n > 0, "verify needs --n");
  VerifyReport r;
  if (c.group == "alt") {
    r = verify_image_alt(c.n, opts);
  } else if (c.group == "sym") {
    r = verify_image_sym(c.n, opts);
  } else if (c.group == "pcycle") {
    r = verify_image_pcycle(c.n, c.p, opts);
  } else {
    require(c.q >= 2, "verify sl needs --q");
    r = verify_image_sl(c.n, c.q, opts);
  }
  Output o;
  o.doc = report_to_json(r, !c.no_timing);
  o.text = report_text(r);
  o.code = r.pass ? kExitOk : kExitFailure;
  return o;
}

Output witness(const Config& c) {
  Output o;
  require(c.n > 0, "witness needs --n");
  std::ostringstream t;
  if (c.group == "sl") {
    require(c.q >= 2, "witness sl needs --q");
    const WitnessSLTrace w = witness_sl(c.n, c.q, c.seed, c.budget);
    o.doc = witness_sl_to_json(w);
    t << "SL_" << w.n << "(" << w.q << ") " << sl_value_name(w.value_class) << " via " << w.method
      << " after " << w.trials << " trials\n";
    for (std::size_t i = 0; i < w.assignment.size(); ++i) {
      t << "x" << i + 1 << " = " << matrix_to_string(w.assignment[i]) << "\n";
    }
    t << "value = " << matrix_to_string(w.value) << "\n";
  } else {
    const WitnessAltTrace w = c.group == "alt"   ? witness_alt(c.n, c.seed, c.budget)
                              : c.group == "sym" ? witness_sym(c.n, c.seed, c.budget)
                                                 : witness_pcycle(c.n, c.p, c.seed, c.budget);
    o.doc = witness_to_json(w);
    t << (c.group == "sym" ? "Sym(" : "Alt(") << w.n << ") " << w.value_class.to_string()
      << (w.randomized ? " by search" : " by construction") << " after " << w.trials << " trials\n";
    for (std::size_t i = 0; i < w.assignment.size(); ++i) {
      t << "x" << i + 1 << " = " << w.assignment[i].to_string() << "\n";
    }
    t << "value = " << w.value.to_string() << "\n";
  }
  o.text = t.str();
  return o;
}

Output width(const Config& c) {
  require(c.k >= 1, "width needs --k >= 1");
  const WidthCertificate w = width_certificate(c.k);
  Output o;
  o.doc = {{"k", w.k}, {"n", w.n}, {"element", w.element.to_string()}, {"bound", w.bound}};
  std::ostringstream t;
  t << "k=" << w.k << " n=" << w.n << " bound=" << w.bound << "\n"
    << "the " << w.n << "-cycle " << w.element.to_string() << " needs " << w.bound
    << " three-cycles\n";
  o.text = t.str();
  return o;
}

Output parse(const Config& c) {
  const Word w = parse_word(c.word);
  Output o;
  o.doc = {{"input", c.word}, {"word", print_word(w)}, {"arity", w.arity()}, {"nodes", w.node_count()}};
  std::ostringstream t;
  t << print_word(w) << "\narity " << w.arity() << ", " << w.node_count() << " nodes\n";
  try {
    const auto syl = free_reduce(w, kParseReduceLimit);
    o.doc["reduced"] = print_syllables(syl);
    o.doc["syllables"] = syl.size();
    t << "reduced " << print_syllables(syl) << "\n";
  } catch (const LimitExceeded&) {
    o.doc["reduced"] = nullptr;
    t << "reduced form exceeds " << kParseReduceLimit << " syllables\n";
  }
  o.text = t.str();
  return o;
}

void add_group_flags(CLI::App* sub, Config& c, bool with_q) {
  sub->add_option("--n", c.n, "degree or matrix dimension")->required();
  if (with_q) sub->add_option("--q", c.q, "field size (sl)");
  sub->add_option("--p", c.p, "cycle length (pcycle)");
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Word maps with small images on alternating and special linear groups", "wordmaps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", c.out, "write output to FILE");
  app.add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", c.threads, "worker threads (0: all cores)");
  app.set_help_all_flag("--help-all", "print help for every subcommand and exit");

  auto* construct_cmd = app.add_subcommand("construct", "build a word and print its plan");
  construct_cmd->add_option("group", c.group)->required()->check(CLI::IsMember({"alt", "sym", "pcycle", "sl"}));
  add_group_flags(construct_cmd, c, true);

  auto* verify_cmd = app.add_subcommand("verify", "check the values of a word over a group");
  verify_cmd->add_option("group", c.group)->required()->check(CLI::IsMember({"alt", "sym", "pcycle", "sl"}));
  add_group_flags(verify_cmd, c, true);
  verify_cmd->add_option("--mode", c.mode, "exhaustive, exhaustive-classes or sample")
      ->check(CLI::IsMember({"exhaustive", "exhaustive-classes", "sample"}))
      ->capture_default_str();
  verify_cmd->add_option("--samples", c.samples, "tuples drawn in sample mode")->capture_default_str();
  verify_cmd->add_option("--budget", c.budget, "witness search trials")->capture_default_str();
  verify_cmd->add_flag("--gl", c.gl, "use GL_n(q) as the ambient group");
  verify_cmd->add_flag("--no-timing", c.no_timing, "omit elapsed_ms");

  auto* witness_cmd = app.add_subcommand("witness", "find an assignment with a target value");
  witness_cmd->add_option("group", c.group)->required()->check(CLI::IsMember({"alt", "sym", "pcycle", "sl"}));
  add_group_flags(witness_cmd, c, true);
  witness_cmd->add_option("--budget", c.budget, "search trials")->capture_default_str();

  auto* width_cmd = app.add_subcommand("width", "certificate that k values do not suffice");
  width_cmd->add_option("--k", c.k, "number of factors")->required();

  auto* parse_cmd = app.add_subcommand("parse", "parse and normalize a word");
  parse_cmd->add_option("word", c.word)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  Output o;
  try {
    if (construct_cmd->parsed()) {
      o = construct(c);
    } else if (verify_cmd->parsed()) {
      o = verify(c);
    } else if (witness_cmd->parsed()) {
      o = witness(c);
    } else if (width_cmd->parsed()) {
      o = width(c);
    } else {
      o = parse(c);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedGroup& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  const std::string body = c.format == "json" ? o.doc.dump(2) + "\n" : o.text;
  if (c.out.empty()) {
    out << body;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << c.out << "\n";
      return kExitUsage;
    }
    file << body;
  }
  return o.code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace wordmaps::cli
