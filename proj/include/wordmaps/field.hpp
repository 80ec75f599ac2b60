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


#ifndef WORDMAPS_FIELD_HPP_
#define WORDMAPS_FIELD_HPP_

// GF(q) for prime powers q <= 16. An element is coded as the integer whose
// base-p digits are its polynomial coefficients (low degree first), so in
// GF(4) the codes 0, 1, 2, 3 stand for 0, 1, x, x + 1.

#include <cstdint>
#include <string>
#include <vector>

#include "wordmaps/simd/kernels.hpp"

namespace wordmaps {

inline constexpr std::uint32_t kMaxFieldOrder = 16;

class GaloisField {
 public:
  /// Throws UnsupportedGroup unless q is a prime power with 2 <= q <= 16.
  explicit GaloisField(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t u() const { return u_; }
  /// Monic modulus, coefficients low degree first (size u + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Generator of the multiplicative group (smallest code of order q - 1).
  std::uint8_t primitive_element() const { return primitive_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return tables_.add[16 * a + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return tables_.mul[16 * a + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
  /// Throws PreconditionError for 0.
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }
  std::uint8_t pow(std::uint8_t a, std::uint64_t e) const;
  /// Image of an integer in the prime field.
  std::uint8_t from_int(std::int64_t k) const;
  /// primitive_element()^k.
  std::uint8_t exp(std::uint64_t k) const { return tables_.exp[k % (q_ - 1)]; }
  /// Discrete log base primitive_element(); a != 0.
  std::uint32_t log(std::uint8_t a) const { return tables_.log[a]; }

  const simd::GfTables& tables() const { return tables_; }

 private:
  std::uint32_t q_, p_, u_;
  std::vector<std::uint32_t> modulus_;
  std::uint8_t primitive_ = 1;
  std::uint8_t neg_[16] = {};
  simd::GfTables tables_;
};

}  // namespace wordmaps

#endif  // WORDMAPS_FIELD_HPP_
