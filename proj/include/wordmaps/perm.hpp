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


#ifndef WORDMAPS_PERM_HPP_
#define WORDMAPS_PERM_HPP_

// Permutations of {1..n} acting on the right: point^(st) = (point^s)^t.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "wordmaps/arith.hpp"
#include "wordmaps/random.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

inline constexpr std::size_t kMaxPermDegree = 65535;

class Permutation {
 public:
  using Storage = boost::container::small_vector<std::uint16_t, 32>;

  Permutation() : images_(1, 0) {}

  static Permutation identity(std::size_t n);
  /// From 0-based images; throws PreconditionError unless a bijection.
  static Permutation from_images(std::span<const std::uint16_t> images);
  /// From 1-based cycles, e.g. {{1, 2, 3}, {4, 5}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size() - 1; }
  /// 1-based image of a 1-based point.
  int image(int point) const { return images_[static_cast<std::size_t>(point - 1)] + 1; }
  /// 0-based image of a 0-based point.
  std::uint16_t operator[](std::size_t i) const { return images_[i]; }
  /// Pointer to the degree() + 1 stored entries; the last one is padding.
  const std::uint16_t* data() const { return images_.data(); }

  /// Apply *this, then other.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(const Exponent& e) const;
  /// this^by = by^-1 * this * by.
  Permutation conjugate(const Permutation& by) const;

  bool is_identity() const;
  bool is_even() const;
  /// Moved points, 1-based ascending.
  std::vector<int> support() const;
  /// Nontrivial cycles, 1-based, each starting at its smallest point, in
  /// order of that point.
  std::vector<std::vector<int>> cycles() const;
  FactoredInt order() const;

  /// "(1 2 3)(4 5)"; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  explicit Permutation(Storage images) : images_(std::move(images)) {}
  friend class PermGroup;

  Storage images_;  // degree() + 1 entries, images_[degree()] == 0
};

/// Parses cycle notation on n points: "(1 2 3)(4 5)", "()" or "" for the
/// identity. Points are 1-based; cycles may overlap and are multiplied left
/// to right.
Permutation parse_permutation(std::string_view text, std::size_t n);

struct CycleType {
  std::vector<int> lengths;  // cycle lengths >= 2, descending
  int fixed_points = 0;
  bool even = true;

  int degree() const;
  /// "3+2+2" with fixed points omitted; "1" for the identity.
  std::string to_string() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

enum class AltValueKind { Identity, ThreeCycle, PCycle, Other };

struct AltValueClass {
  AltValueKind kind = AltValueKind::Identity;
  int p = 0;  // cycle length for ThreeCycle and PCycle
  CycleType type;

  /// "identity", "three_cycle", "p_cycle(5)", "other(2+2)".
  std::string to_string() const;
};

/// Single 3-cycle -> ThreeCycle; single cycle of any other prime length p ->
/// PCycle(p).
AltValueClass classify_alt_value(const Permutation& p);

struct ClassRep {
  Permutation rep;
  std::uint64_t size = 0;
};

inline constexpr int kMaxClassRepDegree = 20;

/// One representative per conjugacy class of Alt(n), with class sizes.
std::vector<ClassRep> alt_class_reps(int n);
std::vector<ClassRep> sym_class_reps(int n);

struct AltExponents {
  int n = 0;
  FactoredInt M;
  std::map<std::uint64_t, unsigned> l;  // prime -> l_p
};

AltExponents exponent_alt(int n);
AltExponents exponent_sym(int n);

/// n! as a 64-bit integer; throws LimitExceeded past 20.
std::uint64_t factorial(int n);

Permutation random_perm(std::size_t n, Rng& rng);
Permutation random_even_perm(std::size_t n, Rng& rng);
Permutation random_even_perm(std::size_t n, std::uint64_t seed);

/// Every element of Sym(n) (or Alt(n) when even_only) in lexicographic order
/// of images; n <= 10.
std::vector<Permutation> all_perms(int n, bool even_only);

/// Exponent reduced per cycle length: residue[m] = e mod m for m <= degree.
struct PermExponent {
  std::vector<std::uint32_t> residue;
};

/// Sym(n) as a GroupContext; products go through the active SIMD kernel.
class PermGroup {
 public:
  using element_type = Permutation;
  using prepared_exponent = PermExponent;

  explicit PermGroup(std::size_t n);

  std::size_t degree() const { return n_; }
  Permutation identity() const { return Permutation::identity(n_); }
  Permutation multiply(const Permutation& a, const Permutation& b) const { return a * b; }
  Permutation inverse(const Permutation& a) const { return a.inverse(); }
  bool equal(const Permutation& a, const Permutation& b) const { return a == b; }
  PermExponent prepare(const Exponent& e) const;
  Permutation power(const Permutation& a, const PermExponent& e) const;

 private:
  std::size_t n_;
};

}  // namespace wordmaps

#endif  // WORDMAPS_PERM_HPP_
