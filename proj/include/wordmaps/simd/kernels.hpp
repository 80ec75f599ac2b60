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

#ifndef WORDMAPS_SIMD_KERNELS_HPP_
#define WORDMAPS_SIMD_KERNELS_HPP_

// Inner-loop kernels with a scalar reference and vector variants.
//
// Every variant computes bit-identical results; the active one is chosen at
// startup from the CPU features (overridable with WORDMAPS_ISA=scalar|ssse3|avx2
// or set_active_isa) and the equivalence tests compare each variant against
// the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wordmaps::simd {

enum class Isa { Scalar, Ssse3, Avx2 };

/// How field addition is done on packed element codes.
enum class AddMode : std::uint8_t {
  Xor,       // characteristic 2: codes are bit vectors
  ModPrime,  // prime field: (a + b) mod p
  TwoDigit,  // GF(p^2), p odd: two base-p digits added separately
};

/// Lookup tables for GF(q), q <= 16, shared by all matrix kernels. Element
/// codes are integers 0..q-1 whose base-p digits are polynomial coefficients.
struct alignas(16) GfTables {
  std::uint8_t log[16] = {};        // log[a] for a != 0 w.r.t. a primitive element
  std::uint8_t exp[16] = {};        // exp[i] for i < q-1
  std::uint8_t low_digit[16] = {};  // TwoDigit only
  std::uint8_t high_digit[16] = {};
  std::uint8_t times_p[16] = {};    // d * p, TwoDigit only
  std::uint8_t add[256] = {};       // add[16 * a + b]
  std::uint8_t mul[256] = {};       // mul[16 * a + b]
  std::uint8_t q = 0;
  std::uint8_t p = 0;
  AddMode add_mode = AddMode::Xor;
};

/// Matrices handed to kernels are 8x8 row-major with stride 8; only the
/// leading n x n block is meaningful and the rest must be zero.
inline constexpr int kMatrixStride = 8;
inline constexpr int kMaxMatrixDim = 8;

struct Kernels {
  Isa isa;
  std::string_view name;
  /// out[i] = b[a[i]] for i < n (0-based images): "apply a, then b".
  /// b must have n + 1 readable entries; out may not alias a or b.
  void (*compose)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                  std::size_t n);
  /// c = a * b over the field described by t; n <= 8. c may not alias a or b.
  void (*gf_matmul)(const GfTables& t, const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* c, int n);
};

bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();
std::string_view isa_name(Isa isa);
/// Parses "scalar" / "ssse3" / "avx2"; throws PreconditionError otherwise.
Isa parse_isa(std::string_view name);

/// Kernel table for one ISA; throws UnsupportedGroup-style error if the CPU
/// lacks it.
const Kernels& kernels(Isa isa);
const Kernels& active_kernels();
void set_active_isa(Isa isa);

// Per-ISA tables, defined in their own translation units.
const Kernels& scalar_kernels();
#if defined(WORDMAPS_HAVE_X86_KERNELS)
const Kernels& ssse3_kernels();
const Kernels& avx2_kernels();
#endif

}  // namespace wordmaps::simd

#endif  // WORDMAPS_SIMD_KERNELS_HPP_
