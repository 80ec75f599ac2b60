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

#include "wordmaps/arith.hpp"

#include <algorithm>
#include <numeric>

#include "wordmaps/errors.hpp"

namespace wordmaps {

PrimeSieve::PrimeSieve(std::uint64_t bound) : bound_(bound), composite_(bound + 1, false) {
  composite_[0] = true;
  if (bound >= 1) composite_[1] = true;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite_[i]) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite_[j] = true;
  }
}

bool PrimeSieve::is_prime(std::uint64_t v) const {
  if (v > bound_) throw LimitExceeded("value " + std::to_string(v) + " beyond sieve bound");
  return !composite_[v];
}

const PrimeSieve& default_sieve() {
  static const PrimeSieve sieve(kDefaultSieveBound);
  return sieve;
}

std::vector<std::uint64_t> primes_in_interval(const PrimeSieve& sieve, std::uint64_t lo,
                                              std::uint64_t hi) {
  if (lo > hi) throw PreconditionError("primes_in_interval: lo > hi");
  if (hi > sieve.bound()) {
    throw LimitExceeded("primes_in_interval: hi = " + std::to_string(hi) +
                        " exceeds sieve bound " + std::to_string(sieve.bound()));
  }
  const auto& ps = sieve.primes();
  auto first = std::upper_bound(ps.begin(), ps.end(), lo);
  auto last = std::upper_bound(ps.begin(), ps.end(), hi);
  return {first, last};
}

std::vector<std::uint64_t> primes_in_interval(std::uint64_t lo, std::uint64_t hi) {
  return primes_in_interval(default_sieve(), lo, hi);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw LimitExceeded(std::to_string(base) + "^" + std::to_string(exponent) +
                          " overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (v % p == 0) return v == p;
  }
  std::uint64_t d = v - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Brent's variant; the seed sequence is fixed so factorizations are reproducible.
std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, FactoredInt::Map& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

FactoredInt FactoredInt::from_u64(std::uint64_t v) {
  if (v == 0) throw PreconditionError("FactoredInt: zero has no factorization");
  FactoredInt result;
  // Trial division by small sieved primes, then rho for whatever is left.
  const auto& ps = default_sieve().primes();
  for (std::uint32_t p : ps) {
    if (static_cast<std::uint64_t>(p) * p > v || p > 100'000) break;
    while (v % p == 0) {
      ++result.factors_[p];
      v /= p;
    }
  }
  factor_into(v, result.factors_);
  return result;
}

FactoredInt FactoredInt::prime_power(std::uint64_t p, unsigned exponent) {
  FactoredInt result;
  if (exponent > 0) result.factors_[p] = exponent;
  return result;
}

FactoredInt FactoredInt::from_map(Map factors) {
  FactoredInt result;
  for (const auto& [p, e] : factors) {
    if (e > 0) result.factors_[p] = e;
  }
  return result;
}

unsigned FactoredInt::valuation(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

BigInt FactoredInt::value() const {
  BigInt result = 1;
  for (const auto& [p, e] : factors_) result *= boost::multiprecision::pow(BigInt(p), e);
  return result;
}

std::uint64_t FactoredInt::mod(std::uint64_t m) const {
  if (m == 0) throw PreconditionError("FactoredInt::mod: zero modulus");
  std::uint64_t result = 1 % m;
  for (const auto& [p, e] : factors_) result = mulmod(result, powmod(p, e, m), m);
  return result;
}

bool FactoredInt::fits_u64() const { return value() <= BigInt(UINT64_MAX); }

std::uint64_t FactoredInt::to_u64() const {
  if (!fits_u64()) throw LimitExceeded("FactoredInt " + to_string() + " exceeds 64 bits");
  return value().convert_to<std::uint64_t>();
}

FactoredInt& FactoredInt::operator*=(const FactoredInt& other) {
  for (const auto& [p, e] : other.factors_) factors_[p] += e;
  return *this;
}

bool FactoredInt::divides(const FactoredInt& other) const {
  for (const auto& [p, e] : factors_) {
    if (other.valuation(p) < e) return false;
  }
  return true;
}

FactoredInt FactoredInt::divided_by(const FactoredInt& divisor) const {
  if (!divisor.divides(*this)) {
    throw PreconditionError(divisor.to_string() + " does not divide " + to_string());
  }
  FactoredInt result = *this;
  for (const auto& [p, e] : divisor.factors_) {
    auto it = result.factors_.find(p);
    it->second -= e;
    if (it->second == 0) result.factors_.erase(it);
  }
  return result;
}

FactoredInt FactoredInt::without(std::uint64_t p) const {
  FactoredInt result = *this;
  result.factors_.erase(p);
  return result;
}

FactoredInt FactoredInt::with_exponent(std::uint64_t p, unsigned exponent) const {
  FactoredInt result = *this;
  if (exponent == 0) {
    result.factors_.erase(p);
  } else {
    result.factors_[p] = exponent;
  }
  return result;
}

std::string FactoredInt::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

FactoredInt lcm_factored(std::span<const FactoredInt> values) {
  FactoredInt::Map merged;
  for (const auto& v : values) {
    for (const auto& [p, e] : v.factors()) merged[p] = std::max(merged[p], e);
  }
  return FactoredInt::from_map(std::move(merged));
}

std::uint64_t PrimePower::value() const { return checked_pow(prime, exponent); }

PrimePower zsigmondy_prime_power(std::uint64_t q, unsigned n) {
  if (q < 2 || n < 2) throw PreconditionError("zsigmondy_prime_power: need q, n >= 2");
  const std::uint64_t target = checked_pow(q, n) - 1;
  const FactoredInt f = FactoredInt::from_u64(target);
  for (const auto& [r, e] : f.factors()) {
    // Largest power of r dividing some earlier q^i - 1.
    unsigned earlier = 0;
    std::uint64_t qi = 1;
    for (unsigned i = 1; i < n; ++i) {
      qi *= q;
      std::uint64_t v = qi - 1;
      unsigned val = 0;
      while (v % r == 0) {
        v /= r;
        ++val;
      }
      earlier = std::max(earlier, val);
    }
    if (earlier < e) return PrimePower{r, earlier + 1};
  }
  throw InternalError("no Zsigmondy prime power for q=" + std::to_string(q) +
                      ", n=" + std::to_string(n));
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {0, 0};
  const FactoredInt f = FactoredInt::from_u64(q);
  if (f.factors().size() != 1) return {0, 0};
  return *f.factors().begin();
}

}  // namespace wordmaps
