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

// AVX2 kernels: gather-based permutation composition for any degree (the
// pshufb path for degree <= 16) and GF(q) matrix multiplication with four
// rows per register.

#include <immintrin.h>

#include <cstring>

#include "wordmaps/simd/kernels.hpp"

namespace wordmaps::simd {

namespace {

inline __m128i shuffle_u16(__m128i table, __m128i idx) {
  const __m128i ctrl =
      _mm_add_epi16(_mm_mullo_epi16(idx, _mm_set1_epi16(514)), _mm_set1_epi16(256));
  return _mm_shuffle_epi8(table, ctrl);
}

void compose_small(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                   std::size_t n) {
  alignas(32) std::uint16_t ab[16] = {};
  alignas(32) std::uint16_t bb[16] = {};
  alignas(32) std::uint16_t ob[16];
  std::memcpy(ab, a, n * sizeof(std::uint16_t));
  std::memcpy(bb, b, n * sizeof(std::uint16_t));
  const __m128i b_lo = _mm_load_si128(reinterpret_cast<const __m128i*>(bb));
  const __m128i b_hi = _mm_load_si128(reinterpret_cast<const __m128i*>(bb + 8));
  for (std::size_t h = 0; h < 2; ++h) {
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(ab + 8 * h));
    const __m128i upper = _mm_cmpgt_epi16(idx, _mm_set1_epi16(7));
    const __m128i local = _mm_and_si128(idx, _mm_set1_epi16(7));
    const __m128i r = _mm_blendv_epi8(shuffle_u16(b_lo, local), shuffle_u16(b_hi, local), upper);
    _mm_store_si128(reinterpret_cast<__m128i*>(ob + 8 * h), r);
  }
  std::memcpy(out, ob, n * sizeof(std::uint16_t));
}

void compose_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                  std::size_t n) {
  if (n <= 16) {
    compose_small(a, b, out, n);
    return;
  }
  // 32-bit gathers at b + 2*idx read b[idx] in the low half; the caller
  // guarantees b[n] is readable.
  const int* base = reinterpret_cast<const int*>(b);
  const __m256i low16 = _mm256_set1_epi32(0xFFFF);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i idx =
        _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    const __m256i g = _mm256_and_si256(_mm256_i32gather_epi32(base, idx, 2), low16);
    const __m128i packed =
        _mm_packus_epi32(_mm256_castsi256_si128(g), _mm256_extracti128_si256(g, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), packed);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

struct GfVec {
  __m256i log, exp, low_digit, high_digit, times_p, q_minus_1, p;
  AddMode mode;

  static __m256i broadcast(const std::uint8_t* table) {
    return _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(table)));
  }

  explicit GfVec(const GfTables& t)
      : log(broadcast(t.log)),
        exp(broadcast(t.exp)),
        low_digit(broadcast(t.low_digit)),
        high_digit(broadcast(t.high_digit)),
        times_p(broadcast(t.times_p)),
        q_minus_1(_mm256_set1_epi8(static_cast<char>(t.q - 1))),
        p(_mm256_set1_epi8(static_cast<char>(t.p))),
        mode(t.add_mode) {}

  __m256i mul(__m256i a, __m256i b) const {
    __m256i s = _mm256_add_epi8(_mm256_shuffle_epi8(log, a), _mm256_shuffle_epi8(log, b));
    s = _mm256_min_epu8(s, _mm256_sub_epi8(s, q_minus_1));
    const __m256i r = _mm256_shuffle_epi8(exp, s);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i either_zero =
        _mm256_or_si256(_mm256_cmpeq_epi8(a, zero), _mm256_cmpeq_epi8(b, zero));
    return _mm256_andnot_si256(either_zero, r);
  }

  __m256i mod_add(__m256i a, __m256i b) const {
    const __m256i s = _mm256_add_epi8(a, b);
    return _mm256_min_epu8(s, _mm256_sub_epi8(s, p));
  }

  __m256i add(__m256i a, __m256i b) const {
    switch (mode) {
      case AddMode::Xor:
        return _mm256_xor_si256(a, b);
      case AddMode::ModPrime:
        return mod_add(a, b);
      case AddMode::TwoDigit: {
        const __m256i lo =
            mod_add(_mm256_shuffle_epi8(low_digit, a), _mm256_shuffle_epi8(low_digit, b));
        const __m256i hi =
            mod_add(_mm256_shuffle_epi8(high_digit, a), _mm256_shuffle_epi8(high_digit, b));
        return _mm256_add_epi8(lo, _mm256_shuffle_epi8(times_p, hi));
      }
    }
    return a;
  }
};

void gf_matmul_avx2(const GfTables& t, const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* c, int n) {
  const GfVec v(t);
  const __m256i top = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i bottom = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 32));
  __m256i acc_top = _mm256_setzero_si256();
  __m256i acc_bottom = _mm256_setzero_si256();
  const __m256i row_slot = _mm256_setr_epi8(0, 0, 0, 0, 0, 0, 0, 0, 8, 8, 8, 8, 8, 8, 8, 8,
                                            0, 0, 0, 0, 0, 0, 0, 0, 8, 8, 8, 8, 8, 8, 8, 8);
  for (int k = 0; k < n; ++k) {
    long long row_k;
    std::memcpy(&row_k, b + k * kMatrixStride, sizeof(row_k));
    const __m256i bk = _mm256_set1_epi64x(row_k);
    const __m256i ctrl = _mm256_add_epi8(_mm256_set1_epi8(static_cast<char>(k)), row_slot);
    acc_top = v.add(acc_top, v.mul(_mm256_shuffle_epi8(top, ctrl), bk));
    if (n > 4) acc_bottom = v.add(acc_bottom, v.mul(_mm256_shuffle_epi8(bottom, ctrl), bk));
  }
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(c), acc_top);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + 32), acc_bottom);
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{Isa::Avx2, "avx2", compose_avx2, gf_matmul_avx2};
  return k;
}

}  // namespace wordmaps::simd
