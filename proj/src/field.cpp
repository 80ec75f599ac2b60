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


#include "wordmaps/field.hpp"

#include "wordmaps/arith.hpp"
#include "wordmaps/errors.hpp"

namespace wordmaps {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trailing zeros trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomials of the given degree, lower coefficients enumerated in
// lexicographic order with the constant term most significant.
Poly monic_from_index(std::uint64_t index, unsigned degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  for (unsigned i = degree; i-- > 0;) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return f;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (poly_mod(f, monic_from_index(i, d, p), p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t u) {
  Poly a(u, 0);
  for (std::uint32_t i = 0; i < u; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return a;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  const auto [p, u] = prime_power_decomposition(q);
  if (p == 0 || q > kMaxFieldOrder) {
    throw UnsupportedGroup("field order " + std::to_string(q) +
                           " is not a prime power in 2..16");
  }
  p_ = static_cast<std::uint32_t>(p);
  u_ = u;

  const std::uint64_t candidates = checked_pow(p_, u_);
  for (std::uint64_t i = 0; i < candidates; ++i) {
    Poly f = monic_from_index(i, u_, p_);
    if (irreducible(f, p_)) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) throw InternalError("no irreducible modulus found");

  auto& t = tables_;
  t.q = static_cast<std::uint8_t>(q_);
  t.p = static_cast<std::uint8_t>(p_);
  t.add_mode = p_ == 2 ? simd::AddMode::Xor
                       : (u_ == 1 ? simd::AddMode::ModPrime : simd::AddMode::TwoDigit);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly pa = decode(a, p_, u_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly pb = decode(b, p_, u_);
      Poly sum(u_, 0);
      for (std::uint32_t i = 0; i < u_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
      Poly prod(2 * u_, 0);
      for (std::uint32_t i = 0; i < u_; ++i) {
        for (std::uint32_t j = 0; j < u_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      }
      t.add[16 * a + b] = static_cast<std::uint8_t>(encode(sum, p_));
      t.mul[16 * a + b] = static_cast<std::uint8_t>(encode(poly_mod(prod, modulus_, p_), p_));
      if (t.add[16 * a + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
    }
    t.low_digit[a] = static_cast<std::uint8_t>(a % p_);
    t.high_digit[a] = static_cast<std::uint8_t>(a / p_ % p_);
  }
  for (std::uint32_t d = 0; d < p_ && d < 16; ++d) t.times_p[d] = static_cast<std::uint8_t>(d * p_);

  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = t.mul[16 * x + g];
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      primitive_ = static_cast<std::uint8_t>(g);
      break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    t.exp[k] = static_cast<std::uint8_t>(x);
    t.log[x] = static_cast<std::uint8_t>(k);
    x = t.mul[16 * x + primitive_];
  }
}

std::uint8_t GaloisField::inv(std::uint8_t a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return tables_.exp[(q_ - 1 - tables_.log[a]) % (q_ - 1)];
}

std::uint8_t GaloisField::pow(std::uint8_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return tables_.exp[(tables_.log[a] * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint8_t GaloisField::from_int(std::int64_t k) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return static_cast<std::uint8_t>(((k % pp) + pp) % pp);
}

}  // namespace wordmaps
