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


#include "wordmaps/perm.hpp"

#include <algorithm>
#include <numeric>

#include "wordmaps/errors.hpp"
#include "wordmaps/simd/kernels.hpp"

namespace wordmaps {

namespace {

using Storage = Permutation::Storage;

void check_degree(std::size_t n) {
  if (n > kMaxPermDegree) {
    throw PreconditionError("permutation degree " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxPermDegree));
  }
}

// Rotates every cycle of `images` by the residue the callback gives for its
// length.
template <class Residue>
Storage rotate_cycles(const Storage& images, std::size_t n, Residue residue) {
  Storage out(n + 1, 0);
  boost::container::small_vector<std::uint8_t, 64> seen(n, 0);
  boost::container::small_vector<std::uint16_t, 32> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    cycle.clear();
    std::size_t x = start;
    do {
      seen[x] = 1;
      cycle.push_back(static_cast<std::uint16_t>(x));
      x = images[x];
    } while (x != start);
    const std::size_t len = cycle.size();
    const std::size_t r = residue(len);
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t j = i + r;
      if (j >= len) j -= len;
      out[cycle[i]] = cycle[j];
    }
  }
  return out;
}

void integer_partitions(int remaining, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    integer_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

Permutation partition_rep(int n, const std::vector<int>& parts) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : parts) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    if (len > 1) cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(static_cast<std::size_t>(n), cycles);
}

// Order of the centralizer in Sym(n): prod over k of k^m_k * m_k!.
std::uint64_t centralizer_order(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  std::uint64_t z = 1;
  for (auto [k, m] : mult) z *= checked_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(m)) * factorial(m);
  return z;
}

std::vector<ClassRep> class_reps(int n, bool alt) {
  if (n < 1 || n > kMaxClassRepDegree) {
    throw LimitExceeded("class representatives need 1 <= n <= " +
                        std::to_string(kMaxClassRepDegree));
  }
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  integer_partitions(n, n, current, partitions);
  const std::uint64_t order = factorial(n);
  std::vector<ClassRep> reps;
  for (const auto& parts : partitions) {
    int even_parts = 0;
    for (int p : parts) even_parts += (p % 2 == 0);
    if (alt && even_parts % 2 != 0) continue;
    const std::uint64_t size = order / centralizer_order(parts);
    Permutation rep = partition_rep(n, parts);
    bool splits = false;
    if (alt && n > 1) {
      splits = std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; }) &&
               std::adjacent_find(parts.begin(), parts.end()) == parts.end();
    }
    if (splits) {
      const Permutation t = Permutation::from_cycles(static_cast<std::size_t>(n), {{1, 2}});
      reps.push_back({rep, size / 2});
      reps.push_back({rep.conjugate(t), size / 2});
    } else {
      reps.push_back({rep, size});
    }
  }
  return reps;
}

AltExponents exponents(int n, bool alt) {
  if (n < 2) throw PreconditionError("group exponent needs n >= 2");
  AltExponents out;
  out.n = n;
  FactoredInt::Map m;
  for (std::uint64_t p : primes_in_interval(1, static_cast<std::uint64_t>(n))) {
    unsigned l = 0;
    std::uint64_t pa = p;
    const std::uint64_t slack = (alt && p == 2) ? 2 : 0;
    while (pa + slack <= static_cast<std::uint64_t>(n)) {
      ++l;
      pa *= p;
    }
    if (l > 0) {
      out.l[p] = l;
      m[p] = l;
    }
  }
  out.M = FactoredInt::from_map(std::move(m));
  return out;
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  check_degree(n);
  Storage s(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(s));
}

Permutation Permutation::from_images(std::span<const std::uint16_t> images) {
  const std::size_t n = images.size();
  check_degree(n);
  std::vector<bool> hit(n, false);
  for (std::uint16_t v : images) {
    if (v >= n || hit[v]) throw PreconditionError("images do not form a permutation");
    hit[v] = true;
  }
  Storage s(images.begin(), images.end());
  s.push_back(0);
  return Permutation(std::move(s));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  for (const auto& c : cycles) {
    if (c.empty()) continue;
    Storage step(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) step[i] = static_cast<std::uint16_t>(i);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 1 || static_cast<std::size_t>(a) > n) {
        throw PreconditionError("cycle point " + std::to_string(a) + " outside 1.." +
                                std::to_string(n));
      }
      if (used[static_cast<std::size_t>(a - 1)]) {
        throw PreconditionError("point " + std::to_string(a) + " repeated in a cycle");
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      step[static_cast<std::size_t>(a - 1)] = static_cast<std::uint16_t>(c[(i + 1) % c.size()] - 1);
    }
    result = result * Permutation(std::move(step));
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& other) const {
  const std::size_t n = degree();
  if (other.degree() != n) throw PreconditionError("multiplying permutations of different degree");
  Storage out(n + 1, 0);
  simd::active_kernels().compose(images_.data(), other.images_.data(), out.data(), n);
  out[n] = 0;
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  const std::size_t n = degree();
  Storage out(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) out[images_[i]] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::pow(const Exponent& e) const {
  std::map<std::size_t, std::size_t> cache;
  return Permutation(rotate_cycles(images_, degree(), [&](std::size_t len) {
    auto it = cache.find(len);
    if (it == cache.end()) it = cache.emplace(len, e.mod(len)).first;
    return it->second;
  }));
}

Permutation Permutation::conjugate(const Permutation& by) const {
  return by.inverse() * *this * by;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const { return cycle_type(*this).even; }

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) s.push_back(static_cast<int>(i + 1));
  }
  return s;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const std::size_t n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> c;
    std::size_t x = start;
    do {
      seen[x] = true;
      c.push_back(static_cast<int>(x + 1));
      x = images_[x];
    } while (x != start);
    out.push_back(std::move(c));
  }
  return out;
}

FactoredInt Permutation::order() const {
  std::vector<FactoredInt> lengths;
  std::vector<bool> seen_len(degree() + 1, false);
  for (const auto& c : cycles()) {
    if (!seen_len[c.size()]) {
      seen_len[c.size()] = true;
      lengths.push_back(FactoredInt::from_u64(c.size()));
    }
  }
  return lcm_factored(lengths);
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(i, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw ParseError(i, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError(i, "expected a point number");
      std::uint64_t v = 0;
      const std::size_t begin = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > n) throw ParseError(begin, "point exceeds degree " + std::to_string(n));
        ++i;
      }
      if (v == 0) throw ParseError(begin, "points are numbered from 1");
      if (std::find(cycle.begin(), cycle.end(), static_cast<int>(v)) != cycle.end()) {
        throw ParseError(begin, "point repeated within a cycle");
      }
      cycle.push_back(static_cast<int>(v));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(n, cycles);
}

int CycleType::degree() const {
  return std::accumulate(lengths.begin(), lengths.end(), fixed_points);
}

std::string CycleType::to_string() const {
  if (lengths.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(lengths[i]);
  }
  return s;
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  int moved = 0;
  int transpositions = 0;
  for (const auto& c : p.cycles()) {
    t.lengths.push_back(static_cast<int>(c.size()));
    moved += static_cast<int>(c.size());
    transpositions += static_cast<int>(c.size()) - 1;
  }
  std::sort(t.lengths.rbegin(), t.lengths.rend());
  t.fixed_points = static_cast<int>(p.degree()) - moved;
  t.even = transpositions % 2 == 0;
  return t;
}

std::string AltValueClass::to_string() const {
  switch (kind) {
    case AltValueKind::Identity:
      return "identity";
    case AltValueKind::ThreeCycle:
      return "three_cycle";
    case AltValueKind::PCycle:
      return "p_cycle(" + std::to_string(p) + ")";
    case AltValueKind::Other:
      return "other(" + type.to_string() + ")";
  }
  return "other";
}

AltValueClass classify_alt_value(const Permutation& perm) {
  AltValueClass c;
  c.type = cycle_type(perm);
  if (c.type.lengths.empty()) {
    c.kind = AltValueKind::Identity;
  } else if (c.type.lengths.size() == 1 && c.type.lengths[0] == 3) {
    c.kind = AltValueKind::ThreeCycle;
    c.p = 3;
  } else if (c.type.lengths.size() == 1 &&
             is_prime_u64(static_cast<std::uint64_t>(c.type.lengths[0]))) {
    c.kind = AltValueKind::PCycle;
    c.p = c.type.lengths[0];
  } else {
    c.kind = AltValueKind::Other;
  }
  return c;
}

std::vector<ClassRep> alt_class_reps(int n) { return class_reps(n, true); }
std::vector<ClassRep> sym_class_reps(int n) { return class_reps(n, false); }

AltExponents exponent_alt(int n) { return exponents(n, true); }
AltExponents exponent_sym(int n) { return exponents(n, false); }

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw LimitExceeded("factorial defined here for 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation random_perm(std::size_t n, Rng& rng) {
  std::vector<std::uint16_t> images(n);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(images[i - 1], images[uniform_below(rng, i)]);
  }
  return Permutation::from_images(images);
}

Permutation random_even_perm(std::size_t n, Rng& rng) {
  if (n < 3) throw PreconditionError("random_even_perm needs n >= 3");
  Permutation p = random_perm(n, rng);
  if (!p.is_even()) p = p * Permutation::from_cycles(n, {{1, 2}});
  return p;
}

Permutation random_even_perm(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_even_perm(n, rng);
}

std::vector<Permutation> all_perms(int n, bool even_only) {
  if (n < 1 || n > 10) throw LimitExceeded("all_perms supports 1 <= n <= 10");
  std::vector<std::uint16_t> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  std::vector<Permutation> out;
  out.reserve(factorial(n) / (even_only ? 2 : 1));
  do {
    Permutation p = Permutation::from_images(images);
    if (!even_only || p.is_even()) out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

PermGroup::PermGroup(std::size_t n) : n_(n) { check_degree(n); }

PermExponent PermGroup::prepare(const Exponent& e) const {
  PermExponent pe;
  pe.residue.resize(n_ + 1, 0);
  for (std::size_t m = 1; m <= n_; ++m) pe.residue[m] = static_cast<std::uint32_t>(e.mod(m));
  return pe;
}

Permutation PermGroup::power(const Permutation& a, const PermExponent& e) const {
  return Permutation(
      rotate_cycles(a.images_, a.degree(), [&](std::size_t len) { return e.residue[len]; }));
}

}  // namespace wordmaps
