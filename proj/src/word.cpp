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

#include "wordmaps/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <utility>

#include "wordmaps/errors.hpp"

namespace wordmaps {

// ---------------------------------------------------------------------------
// Exponent

Exponent::Exponent(std::int64_t value)
    : negative_(value < 0),
      magnitude_(value < 0 ? -BigInt(value) : BigInt(value)) {}

Exponent::Exponent(BigInt value) : negative_(value < 0), magnitude_(abs(value)) {}

Exponent::Exponent(FactoredInt magnitude, bool negative)
    : negative_(negative), factored_(std::move(magnitude)) {}

bool Exponent::is_zero() const { return !factored_ && magnitude_ == 0; }

BigInt Exponent::value() const {
  BigInt m = factored_ ? factored_->value() : magnitude_;
  return negative_ ? BigInt(-m) : m;
}

std::uint64_t Exponent::mod(std::uint64_t m) const {
  if (m == 0) throw PreconditionError("Exponent::mod: zero modulus");
  std::uint64_t r;
  if (factored_) {
    r = factored_->mod(m);
  } else {
    r = static_cast<std::uint64_t>(magnitude_ % m);
  }
  if (negative_ && r != 0) r = m - r;
  return r;
}

Exponent Exponent::negated() const {
  Exponent e = *this;
  if (!e.is_zero()) e.negative_ = !e.negative_;
  return e;
}

std::string Exponent::to_string() const { return value().str(); }

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.factored_ && b.factored_) {
    return a.negative_ == b.negative_ && *a.factored_ == *b.factored_;
  }
  return a.value() == b.value();
}

// ---------------------------------------------------------------------------
// Word construction

Word Word::var(int index) {
  if (index < 1) throw PreconditionError("variable index must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = WordKind::Var;
  node->var = index;
  node->arity = index;
  return Word(std::move(node));
}

namespace {

int max_arity(std::span<const Word> children) {
  int a = 0;
  for (const auto& c : children) a = std::max(a, c.arity());
  return a;
}

}  // namespace

Word Word::product(std::vector<Word> factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  if (factors.size() == 1) return std::move(factors.front());
  auto node = std::make_shared<Node>();
  node->kind = WordKind::Product;
  node->arity = max_arity(factors);
  node->children = std::move(factors);
  return Word(std::move(node));
}

Word Word::power(Word base, Exponent exponent) {
  auto node = std::make_shared<Node>();
  node->kind = WordKind::Power;
  node->arity = base.arity();
  node->children.push_back(std::move(base));
  node->exponent = std::move(exponent);
  return Word(std::move(node));
}

Word Word::conjugate(Word base, Word by) {
  auto node = std::make_shared<Node>();
  node->kind = WordKind::Conjugate;
  node->arity = std::max(base.arity(), by.arity());
  node->children.push_back(std::move(base));
  node->children.push_back(std::move(by));
  return Word(std::move(node));
}

Word Word::commutator(std::vector<Word> args) {
  if (args.size() < 2) throw PreconditionError("commutator needs at least two arguments");
  auto node = std::make_shared<Node>();
  node->kind = WordKind::Commutator;
  node->arity = max_arity(args);
  node->children = std::move(args);
  return Word(std::move(node));
}

Word Word::commutator(Word a, Word b) {
  std::vector<Word> args;
  args.push_back(std::move(a));
  args.push_back(std::move(b));
  return commutator(std::move(args));
}

std::size_t Word::node_count() const {
  std::size_t count = 0;
  std::vector<const Word*> stack{this};
  while (!stack.empty()) {
    const Word* w = stack.back();
    stack.pop_back();
    ++count;
    for (const auto& c : w->children()) stack.push_back(&c);
  }
  return count;
}

bool operator==(const Word& a, const Word& b) {
  std::vector<std::pair<const Word*, const Word*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->id() == y->id()) continue;
    if (x->kind() != y->kind()) return false;
    if (x->kind() == WordKind::Var && x->var_index() != y->var_index()) return false;
    if (x->kind() == WordKind::Power && !(x->exponent() == y->exponent())) return false;
    auto cx = x->children();
    auto cy = y->children();
    if (cx.size() != cy.size()) return false;
    for (std::size_t i = 0; i < cx.size(); ++i) stack.emplace_back(&cx[i], &cy[i]);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr int kMaxNesting = 10'000;
constexpr int kMaxVariableIndex = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  BigInt digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("malformed integer: expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Word word(int depth) {
    if (depth > kMaxNesting) fail("nesting too deep");
    std::vector<Word> factors;
    factors.push_back(term(depth));
    while (peek() == '*') {
      ++pos_;
      factors.push_back(term(depth));
    }
    return Word::product(std::move(factors));
  }

  Word term(int depth) {
    Word w = atom(depth);
    while (peek() == '^') {
      ++pos_;
      const char c = peek();
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        bool negative = false;
        if (c == '-') {
          negative = true;
          ++pos_;
        }
        BigInt value = digits();
        w = Word::power(std::move(w), Exponent(negative ? BigInt(-value) : value));
      } else {
        w = Word::conjugate(std::move(w), atom(depth));
      }
    }
    return w;
  }

  Word atom(int depth) {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      const std::size_t at = pos_;
      BigInt index = digits();
      if (index == 0) throw ParseError(at, "variable index 0");
      if (index > kMaxVariableIndex) throw ParseError(at, "variable index too large");
      return Word::var(index.convert_to<int>());
    }
    if (c == '(') {
      ++pos_;
      Word w = word(depth + 1);
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Word> args;
      args.push_back(word(depth + 1));
      expect(',');
      args.push_back(word(depth + 1));
      while (peek() == ',') {
        ++pos_;
        args.push_back(word(depth + 1));
      }
      expect(']');
      return Word::commutator(std::move(args));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_atom(const Word& w) {
  return w.kind() == WordKind::Var || w.kind() == WordKind::Commutator;
}

void print_into(const Word& w, std::string& out);

void print_atomic(const Word& w, std::string& out) {
  if (is_atom(w)) {
    print_into(w, out);
  } else {
    out += '(';
    print_into(w, out);
    out += ')';
  }
}

void print_into(const Word& w, std::string& out) {
  switch (w.kind()) {
    case WordKind::Var:
      out += 'x';
      out += std::to_string(w.var_index());
      break;
    case WordKind::Product: {
      bool first = true;
      for (const auto& f : w.children()) {
        if (!first) out += '*';
        first = false;
        if (f.kind() == WordKind::Product) {
          out += '(';
          print_into(f, out);
          out += ')';
        } else {
          print_into(f, out);
        }
      }
      break;
    }
    case WordKind::Power:
      print_atomic(w.base(), out);
      out += '^';
      out += w.exponent().to_string();
      break;
    case WordKind::Conjugate:
      print_atomic(w.base(), out);
      out += '^';
      print_atomic(w.conjugator(), out);
      break;
    case WordKind::Commutator: {
      out += '[';
      bool first = true;
      for (const auto& a : w.children()) {
        if (!first) out += ',';
        first = false;
        print_into(a, out);
      }
      out += ']';
      break;
    }
  }
}

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string print_word(const Word& w) {
  std::string out;
  print_into(w, out);
  return out;
}

// ---------------------------------------------------------------------------
// Free reduction

namespace {

using Letters = std::vector<Syllable>;

class Reducer {
 public:
  explicit Reducer(std::size_t limit) : limit_(limit) {}

  static void append(Letters& acc, const Syllable& s) {
    if (s.exponent == 0) return;
    if (!acc.empty() && acc.back().var == s.var) {
      acc.back().exponent += s.exponent;
      if (acc.back().exponent == 0) acc.pop_back();
    } else {
      acc.push_back(s);
    }
  }

  void append_all(Letters& acc, const Letters& tail) {
    for (const auto& s : tail) append(acc, s);
    check(acc.size());
  }

  static Letters inverse(const Letters& a) {
    Letters out(a.rbegin(), a.rend());
    for (auto& s : out) s.exponent = -s.exponent;
    return out;
  }

  Letters power(const Letters& a, const BigInt& e) {
    if (a.empty() || e == 0) return {};
    if (a.size() == 1) return {Syllable{a[0].var, a[0].exponent * e}};
    const Letters unit = e < 0 ? inverse(a) : a;
    const BigInt count = abs(e);
    if (count * unit.size() > limit_) {
      throw LimitExceeded("free_reduce: expansion exceeds " + std::to_string(limit_) +
                          " syllables");
    }
    Letters acc;
    for (BigInt i = 0; i < count; ++i) append_all(acc, unit);
    return acc;
  }

  Letters commutator(const Letters& a, const Letters& b) {
    Letters acc = inverse(a);
    append_all(acc, inverse(b));
    append_all(acc, a);
    append_all(acc, b);
    return acc;
  }

  // Post-order over distinct nodes; shared subtrees are reduced once.
  Letters reduce(const Word& root) {
    std::vector<std::pair<const Word*, bool>> stack{{&root, false}};
    while (!stack.empty()) {
      auto [w, expanded] = stack.back();
      stack.pop_back();
      if (memo_.count(w->id())) continue;
      if (!expanded) {
        stack.emplace_back(w, true);
        for (const auto& c : w->children()) stack.emplace_back(&c, false);
        continue;
      }
      memo_.emplace(w->id(), combine(*w));
    }
    return memo_.at(root.id());
  }

 private:
  void check(std::size_t n) const {
    if (n > limit_) {
      throw LimitExceeded("free_reduce: expansion exceeds " + std::to_string(limit_) +
                          " syllables");
    }
  }

  const Letters& of(const Word& w) const { return memo_.at(w.id()); }

  Letters combine(const Word& w) {
    switch (w.kind()) {
      case WordKind::Var:
        return {Syllable{w.var_index(), 1}};
      case WordKind::Product: {
        Letters acc;
        for (const auto& f : w.children()) append_all(acc, of(f));
        return acc;
      }
      case WordKind::Power:
        return power(of(w.base()), w.exponent().value());
      case WordKind::Conjugate: {
        Letters acc = inverse(of(w.conjugator()));
        append_all(acc, of(w.base()));
        append_all(acc, of(w.conjugator()));
        return acc;
      }
      case WordKind::Commutator: {
        auto args = w.children();
        Letters acc = of(args[0]);
        for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, of(args[i]));
        return acc;
      }
    }
    throw InternalError("free_reduce: unknown node kind");
  }

  std::size_t limit_;
  std::unordered_map<const void*, Letters> memo_;
};

}  // namespace

std::vector<Syllable> free_reduce(const Word& w, std::size_t max_syllables) {
  return Reducer(max_syllables).reduce(w);
}

std::string print_syllables(std::span<const Syllable> syllables) {
  if (syllables.empty()) return "1";
  std::string out;
  for (const auto& s : syllables) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(s.var);
    if (s.exponent != 1) out += '^' + s.exponent.str();
  }
  return out;
}

}  // namespace wordmaps
