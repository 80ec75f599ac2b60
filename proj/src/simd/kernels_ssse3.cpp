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

// SSSE3 kernels: pshufb-based 16-bit permutation composition for degree
// <= 16 and table-driven GF(q) matrix multiplication, two rows per register.

#include <tmmintrin.h>

#include <cstring>

#include "wordmaps/simd/kernels.hpp"

namespace wordmaps::simd {

namespace {

// table[idx] for 8 lanes of 16 bits; idx lanes must be < 8.
inline __m128i shuffle_u16(__m128i table, __m128i idx) {
  const __m128i ctrl =
      _mm_add_epi16(_mm_mullo_epi16(idx, _mm_set1_epi16(514)), _mm_set1_epi16(256));
  return _mm_shuffle_epi8(table, ctrl);
}

void compose_ssse3(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                   std::size_t n) {
  if (n > 16) {
    for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
    return;
  }
  alignas(16) std::uint16_t ab[16] = {};
  alignas(16) std::uint16_t bb[16] = {};
  alignas(16) std::uint16_t ob[16];
  std::memcpy(ab, a, n * sizeof(std::uint16_t));
  std::memcpy(bb, b, n * sizeof(std::uint16_t));
  const __m128i b_lo = _mm_load_si128(reinterpret_cast<const __m128i*>(bb));
  const __m128i b_hi = _mm_load_si128(reinterpret_cast<const __m128i*>(bb + 8));
  const std::size_t halves = n > 8 ? 2 : 1;
  for (std::size_t h = 0; h < halves; ++h) {
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(ab + 8 * h));
    __m128i r;
    if (n <= 8) {
      r = shuffle_u16(b_lo, idx);
    } else {
      const __m128i upper = _mm_cmpgt_epi16(idx, _mm_set1_epi16(7));
      const __m128i local = _mm_and_si128(idx, _mm_set1_epi16(7));
      const __m128i from_lo = shuffle_u16(b_lo, local);
      const __m128i from_hi = shuffle_u16(b_hi, local);
      r = _mm_or_si128(_mm_andnot_si128(upper, from_lo), _mm_and_si128(upper, from_hi));
    }
    _mm_store_si128(reinterpret_cast<__m128i*>(ob + 8 * h), r);
  }
  std::memcpy(out, ob, n * sizeof(std::uint16_t));
}

struct GfVec {
  __m128i log, exp, low_digit, high_digit, times_p, q_minus_1, p;
  AddMode mode;

  explicit GfVec(const GfTables& t)
      : log(_mm_load_si128(reinterpret_cast<const __m128i*>(t.log))),
        exp(_mm_load_si128(reinterpret_cast<const __m128i*>(t.exp))),
        low_digit(_mm_load_si128(reinterpret_cast<const __m128i*>(t.low_digit))),
        high_digit(_mm_load_si128(reinterpret_cast<const __m128i*>(t.high_digit))),
        times_p(_mm_load_si128(reinterpret_cast<const __m128i*>(t.times_p))),
        q_minus_1(_mm_set1_epi8(static_cast<char>(t.q - 1))),
        p(_mm_set1_epi8(static_cast<char>(t.p))),
        mode(t.add_mode) {}

  __m128i mul(__m128i a, __m128i b) const {
    __m128i s = _mm_add_epi8(_mm_shuffle_epi8(log, a), _mm_shuffle_epi8(log, b));
    s = _mm_min_epu8(s, _mm_sub_epi8(s, q_minus_1));
    const __m128i r = _mm_shuffle_epi8(exp, s);
    const __m128i zero = _mm_setzero_si128();
    const __m128i either_zero = _mm_or_si128(_mm_cmpeq_epi8(a, zero), _mm_cmpeq_epi8(b, zero));
    return _mm_andnot_si128(either_zero, r);
  }

  __m128i mod_add(__m128i a, __m128i b) const {
    const __m128i s = _mm_add_epi8(a, b);
    return _mm_min_epu8(s, _mm_sub_epi8(s, p));
  }

  __m128i add(__m128i a, __m128i b) const {
    switch (mode) {
      case AddMode::Xor:
        return _mm_xor_si128(a, b);
      case AddMode::ModPrime:
        return mod_add(a, b);
      case AddMode::TwoDigit: {
        const __m128i lo = mod_add(_mm_shuffle_epi8(low_digit, a), _mm_shuffle_epi8(low_digit, b));
        const __m128i hi =
            mod_add(_mm_shuffle_epi8(high_digit, a), _mm_shuffle_epi8(high_digit, b));
        return _mm_add_epi8(lo, _mm_shuffle_epi8(times_p, hi));
      }
    }
    return a;
  }
};

void gf_matmul_ssse3(const GfTables& t, const std::uint8_t* a, const std::uint8_t* b,
                     std::uint8_t* c, int n) {
  const GfVec v(t);
  const int regs = (n + 1) / 2;
  __m128i rows[4];
  __m128i acc[4];
  for (int r = 0; r < 4; ++r) {
    rows[r] = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + 16 * r));
    acc[r] = _mm_setzero_si128();
  }
  for (int k = 0; k < n; ++k) {
    std::int64_t row_k;
    std::memcpy(&row_k, b + k * kMatrixStride, sizeof(row_k));
    const __m128i bk = _mm_set1_epi64x(row_k);
    const __m128i ctrl = _mm_add_epi8(
        _mm_set1_epi8(static_cast<char>(k)),
        _mm_setr_epi8(0, 0, 0, 0, 0, 0, 0, 0, 8, 8, 8, 8, 8, 8, 8, 8));
    for (int r = 0; r < regs; ++r) {
      const __m128i column = _mm_shuffle_epi8(rows[r], ctrl);
      acc[r] = v.add(acc[r], v.mul(column, bk));
    }
  }
  for (int r = 0; r < 4; ++r) _mm_storeu_si128(reinterpret_cast<__m128i*>(c + 16 * r), acc[r]);
}

}  // namespace

const Kernels& ssse3_kernels() {
  static const Kernels k{Isa::Ssse3, "ssse3", compose_ssse3, gf_matmul_ssse3};
  return k;
}

}  // namespace wordmaps::simd
