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

#ifndef WORDMAPS_WORD_HPP_
#define WORDMAPS_WORD_HPP_

// Free-group words as immutable expression trees.
//
// Conventions used everywhere in this library:
//   conjugation  x^y   = y^-1 x y
//   commutator   [x,y] = x^-1 y^-1 x y
//   [a,b,c,...]        = [[[a,b],c],...]   (left-normed)
// Points and vectors are acted on from the right, so products read left to
// right: (xy) means "apply x, then y".

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/arith.hpp"

namespace wordmaps {

/// A signed integer exponent, kept factored when it was produced by a
/// constructor and as a plain big integer when it was parsed. Equality is by
/// value.
class Exponent {
 public:
  Exponent() = default;
  Exponent(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Exponent(BigInt value);
  explicit Exponent(FactoredInt magnitude, bool negative = false);

  bool negative() const { return negative_; }
  bool is_zero() const;
  bool is_factored() const { return factored_.has_value(); }
  const FactoredInt* factored() const { return factored_ ? &*factored_ : nullptr; }

  /// Signed value.
  BigInt value() const;
  /// Non-negative residue of value() modulo m (m >= 1).
  std::uint64_t mod(std::uint64_t m) const;
  Exponent negated() const;

  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b);

 private:
  bool negative_ = false;
  std::optional<FactoredInt> factored_;
  BigInt magnitude_ = 0;  // used when factored_ is empty
};

enum class WordKind { Var, Product, Power, Conjugate, Commutator };

class Word {
 public:
  /// x_index, index >= 1.
  static Word var(int index);
  /// Product of two or more factors; a single factor is returned unchanged.
  static Word product(std::vector<Word> factors);
  static Word power(Word base, Exponent exponent);
  /// base^by = by^-1 base by.
  static Word conjugate(Word base, Word by);
  /// Left-normed commutator of two or more arguments.
  static Word commutator(std::vector<Word> args);
  static Word commutator(Word a, Word b);

  WordKind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  std::span<const Word> children() const { return node_->children; }
  const Exponent& exponent() const { return node_->exponent; }

  // Convenience views.
  const Word& base() const { return node_->children.at(0); }
  const Word& conjugator() const { return node_->children.at(1); }

  /// Largest variable index used (d for a word in F_d).
  int arity() const { return node_->arity; }
  std::size_t node_count() const;
  /// Identity of the shared node; equal for copies of the same handle.
  const void* id() const { return node_.get(); }

  /// Structural equality (exponents compared by value).
  friend bool operator==(const Word& a, const Word& b);

 private:
  struct Node {
    WordKind kind;
    int var = 0;
    int arity = 0;
    std::vector<Word> children;
    Exponent exponent;
  };

  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the word grammar:
///   word     ::= term { "*" term }
///   term     ::= atom { "^" exponent }
///   atom     ::= var | "(" word ")" | "[" word "," word { "," word } "]"
///   exponent ::= ["-"] digits | atom
///   var      ::= "x" digits
/// An integer exponent is a power, an atom exponent is a conjugation, and
/// a^b^c groups as (a^b)^c. Whitespace is ignored.
Word parse_word(std::string_view text);

/// Grammar-conformant text; parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

/// One letter block x_var^exponent of a reduced word.
struct Syllable {
  int var;
  BigInt exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

inline constexpr std::size_t kDefaultReduceLimit = 50'000'000;

/// Freely reduced syllable sequence: no zero exponents and no two adjacent
/// syllables on the same variable. Powers of a single generator stay
/// symbolic, so huge exponents are fine; powers of longer words are
/// expanded, and LimitExceeded is thrown past max_syllables.
std::vector<Syllable> free_reduce(const Word& w,
                                  std::size_t max_syllables = kDefaultReduceLimit);

std::string print_syllables(std::span<const Syllable> syllables);

}  // namespace wordmaps

#endif  // WORDMAPS_WORD_HPP_
