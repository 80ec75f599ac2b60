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

#ifndef WORDMAPS_EVALUATE_HPP_
#define WORDMAPS_EVALUATE_HPP_

// Word evaluation over any group that satisfies GroupContext.
//
// A word is first compiled into a flat postfix program; evaluation then runs
// the program with an explicit value stack, so deep words never recurse.

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordmaps/errors.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// The abstract group contract. prepare() turns an exponent into whatever
/// form the group powers with fastest (residue tables for permutations,
/// bit strings for matrices); it is called once per compiled exponent.
template <class G>
concept GroupContext = requires(const G& g, const typename G::element_type& a,
                                const Exponent& e, const typename G::prepared_exponent& pe) {
  typename G::element_type;
  typename G::prepared_exponent;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::element_type>;
  { g.inverse(a) } -> std::convertible_to<typename G::element_type>;
  { g.equal(a, a) } -> std::convertible_to<bool>;
  { g.prepare(e) } -> std::convertible_to<typename G::prepared_exponent>;
  { g.power(a, pe) } -> std::convertible_to<typename G::element_type>;
};

enum class OpCode : std::uint8_t { PushVar, PushConst, Power, Multiply, Conjugate, Commutator };

struct Instruction {
  OpCode op;
  std::uint32_t arg;  // variable index, constant slot, exponent slot, or operand count
};


template <GroupContext G>
class Evaluator {
 public:
  using element_type = typename G::element_type;

  Evaluator(const Word& w, const G& group) : group_(&group), arity_(w.arity()) {
    compile(w, 0, {});
  }

  /// Specializes the word for fixed values of the variables whose indices
  /// are listed in `bound` (1-based); every subterm that only involves bound
  /// variables is evaluated once here and stored as a constant.
  Evaluator(const Word& w, const G& group, std::span<const int> bound,
            std::span<const element_type> bound_values)
      : group_(&group), arity_(w.arity()) {
    if (bound.size() != bound_values.size()) {
      throw PreconditionError("Evaluator: bound variables and values differ in length");
    }
    std::uint64_t mask = 0;
    std::vector<element_type> values(static_cast<std::size_t>(arity_), group.identity());
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (bound[i] < 1 || bound[i] > 64) throw PreconditionError("Evaluator: bad bound index");
      mask |= std::uint64_t{1} << (bound[i] - 1);
      if (bound[i] <= arity_) values[static_cast<std::size_t>(bound[i] - 1)] = bound_values[i];
    }
    compile(w, mask, values);
  }

  int arity() const { return arity_; }
  std::size_t program_size() const { return program_.size(); }

  /// w(assignment). Entries for bound variables are ignored.
  element_type operator()(std::span<const element_type> assignment) const {
    if (assignment.size() < static_cast<std::size_t>(arity_)) {
      throw PreconditionError("evaluate: assignment has " + std::to_string(assignment.size()) +
                              " elements, word needs " + std::to_string(arity_));
    }
    std::vector<element_type> stack;
    stack.reserve(max_depth_);
    const G& g = *group_;
    for (const Instruction& ins : program_) {
      switch (ins.op) {
        case OpCode::PushVar:
          stack.push_back(assignment[ins.arg]);
          break;
        case OpCode::PushConst:
          stack.push_back(constants_[ins.arg]);
          break;
        case OpCode::Power:
          stack.back() = g.power(stack.back(), exponents_[ins.arg]);
          break;
        case OpCode::Multiply: {
          const std::size_t first = stack.size() - ins.arg;
          element_type acc = std::move(stack[first]);
          for (std::size_t i = first + 1; i < stack.size(); ++i) acc = g.multiply(acc, stack[i]);
          stack.resize(first);
          stack.push_back(std::move(acc));
          break;
        }
        case OpCode::Conjugate: {
          element_type by = std::move(stack.back());
          stack.pop_back();
          stack.back() = g.multiply(g.multiply(g.inverse(by), stack.back()), by);
          break;
        }
        case OpCode::Commutator: {
          const std::size_t first = stack.size() - ins.arg;
          element_type acc = std::move(stack[first]);
          for (std::size_t i = first + 1; i < stack.size(); ++i) {
            const element_type& b = stack[i];
            acc = g.multiply(g.multiply(g.inverse(acc), g.inverse(b)), g.multiply(acc, b));
          }
          stack.resize(first);
          stack.push_back(std::move(acc));
          break;
        }
      }
    }
    return std::move(stack.back());
  }

 private:
  // Iterative post-order emission. Subterms whose mask lies inside `bound`
  // are folded into constants (only when `bound` is nonzero).
  void compile(const Word& root, std::uint64_t bound, const std::vector<element_type>& values) {
    std::unordered_map<const void*, std::uint64_t> masks;
    if (bound != 0) {
      std::vector<std::pair<const Word*, bool>> stack{{&root, false}};
      while (!stack.empty()) {
        auto [w, done] = stack.back();
        stack.pop_back();
        if (masks.count(w->id())) continue;
        if (!done) {
          stack.emplace_back(w, true);
          for (const auto& c : w->children()) stack.emplace_back(&c, false);
          continue;
        }
        std::uint64_t m = 0;
        if (w->kind() == WordKind::Var) {
          if (w->var_index() > 64) throw PreconditionError("Evaluator: more than 64 variables");
          m = std::uint64_t{1} << (w->var_index() - 1);
        }
        for (const auto& c : w->children()) m |= masks.at(c.id());
        masks.emplace(w->id(), m);
      }
    }

    std::vector<std::pair<const Word*, bool>> stack{{&root, false}};
    std::size_t depth = 0;
    while (!stack.empty()) {
      auto [w, expanded] = stack.back();
      stack.pop_back();
      if (!expanded && bound != 0 && (masks.at(w->id()) & ~bound) == 0) {
        Evaluator sub(*w, *group_);
        constants_.push_back(sub(values));
        emit({OpCode::PushConst, static_cast<std::uint32_t>(constants_.size() - 1)}, depth);
        continue;
      }
      if (!expanded) {
        if (w->kind() == WordKind::Var) {
          emit({OpCode::PushVar, static_cast<std::uint32_t>(w->var_index() - 1)}, depth);
          continue;
        }
        stack.emplace_back(w, true);
        auto children = w->children();
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.emplace_back(&*it, false);
        continue;
      }
      const auto n = static_cast<std::uint32_t>(w->children().size());
      switch (w->kind()) {
        case WordKind::Var:
          break;
        case WordKind::Product:
          emit({OpCode::Multiply, n}, depth);
          break;
        case WordKind::Power:
          exponents_.push_back(group_->prepare(w->exponent()));
          emit({OpCode::Power, static_cast<std::uint32_t>(exponents_.size() - 1)}, depth);
          break;
        case WordKind::Conjugate:
          emit({OpCode::Conjugate, 2}, depth);
          break;
        case WordKind::Commutator:
          emit({OpCode::Commutator, n}, depth);
          break;
      }
    }
  }

  void emit(Instruction ins, std::size_t& depth) {
    program_.push_back(ins);
    switch (ins.op) {
      case OpCode::PushVar:
      case OpCode::PushConst:
        ++depth;
        break;
      case OpCode::Power:
        break;
      case OpCode::Multiply:
      case OpCode::Conjugate:
      case OpCode::Commutator:
        depth -= ins.arg - 1;
        break;
    }
    max_depth_ = std::max(max_depth_, depth);
  }

  const G* group_;
  int arity_;
  std::vector<Instruction> program_;
  std::vector<typename G::prepared_exponent> exponents_;
  std::vector<element_type> constants_;
  std::size_t max_depth_ = 0;
};

/// One-shot evaluation of w on `assignment`.
template <GroupContext G>
typename G::element_type evaluate(const Word& w, std::span<const typename G::element_type> assignment,
                                  const G& group) {
  return Evaluator<G>(w, group)(assignment);
}

}  // namespace wordmaps

#endif  // WORDMAPS_EVALUATE_HPP_
