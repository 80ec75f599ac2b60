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

#ifndef WORDMAPS_ARITH_HPP_
#define WORDMAPS_ARITH_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wordmaps {

using BigInt = boost::multiprecision::cpp_int;

/// Sieve of Eratosthenes over [0, bound].
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  bool is_prime(std::uint64_t v) const;
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint64_t bound_;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> primes_;
};

inline constexpr std::uint64_t kDefaultSieveBound = 10'000'000;

/// Process-wide sieve up to kDefaultSieveBound, built on first use.
const PrimeSieve& default_sieve();

/// Primes p with lo < p <= hi, ascending. Throws LimitExceeded when hi is
/// beyond the sieve bound.
std::vector<std::uint64_t> primes_in_interval(std::uint64_t lo, std::uint64_t hi);
std::vector<std::uint64_t> primes_in_interval(const PrimeSieve& sieve, std::uint64_t lo,
                                              std::uint64_t hi);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t v);

/// (a * b) mod m and a^e mod m without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Checked integer power; throws LimitExceeded on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// A positive integer kept as its prime factorization. The empty map is 1.
class FactoredInt {
 public:
  using Map = std::map<std::uint64_t, unsigned>;

  FactoredInt() = default;

  /// Factors v (v >= 1) by trial division over the sieve and Pollard rho.
  static FactoredInt from_u64(std::uint64_t v);
  static FactoredInt prime_power(std::uint64_t p, unsigned exponent);
  /// Builds from a map that is trusted to hold distinct primes.
  static FactoredInt from_map(Map factors);

  const Map& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned valuation(std::uint64_t p) const;

  BigInt value() const;
  /// value() mod m; m >= 1.
  std::uint64_t mod(std::uint64_t m) const;
  /// value() if it fits in 64 bits.
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  FactoredInt& operator*=(const FactoredInt& other);
  friend FactoredInt operator*(FactoredInt a, const FactoredInt& b) { return a *= b; }

  bool divides(const FactoredInt& other) const;
  /// this / divisor; throws PreconditionError unless divisor divides this.
  FactoredInt divided_by(const FactoredInt& divisor) const;
  /// Drops the whole p-part.
  FactoredInt without(std::uint64_t p) const;
  /// Sets the exponent of p (0 removes it). p must be prime.
  FactoredInt with_exponent(std::uint64_t p, unsigned exponent) const;

  /// "2^2*3*5*7"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

 private:
  Map factors_;
};

/// Per-prime maximum of exponents; lcm of nothing is 1.
FactoredInt lcm_factored(std::span<const FactoredInt> values);

/// Prime power r^alpha dividing q^n - 1 but no q^i - 1 with 1 <= i < n.
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Smallest r, then smallest alpha, among the prime powers above. Requires
/// q, n >= 2 and q^n < 2^64.
PrimePower zsigmondy_prime_power(std::uint64_t q, unsigned n);

/// Writes q = p^u for a prime p; returns {0, 0} when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q);

}  // namespace wordmaps

#endif  // WORDMAPS_ARITH_HPP_
