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

// Scalar reference kernels. These define the expected results for every
// vector variant.

#include "wordmaps/simd/kernels.hpp"

namespace wordmaps::simd {

namespace {

void compose_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

void gf_matmul_scalar(const GfTables& t, const std::uint8_t* a, const std::uint8_t* b,
                      std::uint8_t* c, int n) {
  for (int i = 0; i < kMaxMatrixDim * kMatrixStride; ++i) c[i] = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint8_t acc = 0;
      for (int k = 0; k < n; ++k) {
        const std::uint8_t prod = t.mul[16 * a[i * kMatrixStride + k] + b[k * kMatrixStride + j]];
        acc = t.add[16 * acc + prod];
      }
      c[i * kMatrixStride + j] = acc;
    }
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::Scalar, "scalar", compose_scalar, gf_matmul_scalar};
  return k;
}

}  // namespace wordmaps::simd
