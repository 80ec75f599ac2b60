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

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "oracles.hpp"
#include "wordmaps/errors.hpp"

namespace wordmaps {
namespace {

using oracle::trial_factor;

TEST(Sieve, AgreesWithTrialDivision) {
  PrimeSieve sieve(5000);
  for (std::uint64_t v = 0; v <= 5000; ++v) {
    const bool prime = v >= 2 && trial_factor(v) == std::map<std::uint64_t, unsigned>{{v, 1}};
    EXPECT_EQ(sieve.is_prime(v), prime) << v;
    EXPECT_EQ(is_prime_u64(v), prime) << v;
  }
}

TEST(Sieve, PrimesInIntervalIsHalfOpenOnTheLeft) {
  EXPECT_EQ(primes_in_interval(7, 19), (std::vector<std::uint64_t>{11, 13, 17, 19}));
  EXPECT_TRUE(primes_in_interval(24, 28).empty());
  EXPECT_THROW(primes_in_interval(1, kDefaultSieveBound + 1), LimitExceeded);
}

TEST(MillerRabin, LargeKnownValues) {
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_FALSE(is_prime_u64(18446744073709551557ULL - 2));
  EXPECT_TRUE(is_prime_u64(1000000007ULL));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ModArith, MatchesWideMultiplication) {
  const std::uint64_t m = 18446744073709551557ULL;
  const std::uint64_t a = 0xfedcba9876543210ULL % m, b = 0x0123456789abcdefULL;
  const auto wide = static_cast<unsigned __int128>(a) * b % m;
  EXPECT_EQ(mulmod(a, b, m), static_cast<std::uint64_t>(wide));
  EXPECT_EQ(powmod(3, 0, 7), 1u);
  EXPECT_EQ(powmod(3, 6, 7), 1u);
  EXPECT_EQ(powmod(2, 10, 1000), 24u);
}

TEST(CheckedPow, ThrowsOnOverflow) {
  EXPECT_EQ(checked_pow(3, 40), 12157665459056928801ULL);
  EXPECT_THROW(checked_pow(3, 41), LimitExceeded);
  EXPECT_EQ(checked_pow(0, 0), 1u);
}

TEST(FactoredInt, FactorsAgreeWithTrialDivision) {
  for (std::uint64_t v = 1; v < 20000; ++v) {
    EXPECT_EQ(FactoredInt::from_u64(v).factors(), trial_factor(v)) << v;
  }
  const std::uint64_t big = 4294967291ULL * 4294967279ULL;
  const FactoredInt f = FactoredInt::from_u64(big);
  EXPECT_EQ(f.factors(), (FactoredInt::Map{{4294967279ULL, 1}, {4294967291ULL, 1}}));
  EXPECT_EQ(f.to_u64(), big);
}

TEST(FactoredInt, Arithmetic) {
  const FactoredInt a = FactoredInt::from_u64(360), b = FactoredInt::from_u64(84);
  EXPECT_EQ((a * b).to_u64(), 360u * 84u);
  EXPECT_TRUE(FactoredInt::from_u64(12).divides(a));
  EXPECT_FALSE(FactoredInt::from_u64(7).divides(a));
  EXPECT_EQ(a.divided_by(FactoredInt::from_u64(8)).to_u64(), 45u);
  EXPECT_THROW(a.divided_by(FactoredInt::from_u64(7)), PreconditionError);
  EXPECT_EQ(a.without(2).to_u64(), 45u);
  EXPECT_EQ(a.with_exponent(5, 0).to_u64(), 72u);
  EXPECT_EQ(a.with_exponent(7, 2).to_u64(), 360u * 49u);
  EXPECT_EQ(a.valuation(3), 2u);
  EXPECT_EQ(a.mod(7), 360u % 7);
  EXPECT_EQ(a.to_string(), "2^3*3^2*5");
  EXPECT_EQ(FactoredInt().to_string(), "1");
  EXPECT_TRUE(FactoredInt().is_one());
  std::vector<FactoredInt> xs{a, b, FactoredInt::from_u64(49)};
  EXPECT_EQ(lcm_factored(xs).to_u64(), 360u * 7u * 7u);
  EXPECT_TRUE(lcm_factored({}).is_one());
}

TEST(FactoredInt, ValueBeyondSixtyFourBits) {
  const FactoredInt f = FactoredInt::prime_power(2, 100);
  EXPECT_FALSE(f.fits_u64());
  EXPECT_EQ(f.value(), BigInt(1) << 100);
  EXPECT_EQ(f.mod(1000), static_cast<std::uint64_t>((BigInt(1) << 100) % 1000));
}

TEST(Zsigmondy, AgreesWithBruteForce) {
  for (std::uint64_t q = 2; q <= 9; ++q) {
    for (unsigned n = 2; n <= 12; ++n) {
      const auto expected = oracle::zsigmondy(q, n);
      if (expected) {
        EXPECT_EQ(zsigmondy_prime_power(q, n), *expected) << "q=" << q << " n=" << n;
      } else {
        EXPECT_THROW(zsigmondy_prime_power(q, n), Error) << "q=" << q << " n=" << n;
      }
    }
  }
}

TEST(Zsigmondy, KnownCases) {
  EXPECT_EQ(zsigmondy_prime_power(2, 6), (PrimePower{3, 2}));
  EXPECT_EQ(zsigmondy_prime_power(5, 2), (PrimePower{2, 3}));
  EXPECT_EQ(zsigmondy_prime_power(4, 3), (PrimePower{3, 2}));
  EXPECT_EQ(zsigmondy_prime_power(2, 5), (PrimePower{31, 1}));
  EXPECT_EQ((PrimePower{3, 2}).value(), 9u);
}

TEST(PrimePowerDecomposition, Cases) {
  EXPECT_EQ(prime_power_decomposition(16), (std::pair<std::uint64_t, unsigned>{2, 4}));
  EXPECT_EQ(prime_power_decomposition(9), (std::pair<std::uint64_t, unsigned>{3, 2}));
  EXPECT_EQ(prime_power_decomposition(13), (std::pair<std::uint64_t, unsigned>{13, 1}));
  EXPECT_EQ(prime_power_decomposition(12), (std::pair<std::uint64_t, unsigned>{0, 0}));
  EXPECT_EQ(prime_power_decomposition(1), (std::pair<std::uint64_t, unsigned>{0, 0}));
}

}  // namespace
}  // namespace wordmaps
