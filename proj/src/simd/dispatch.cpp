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

#include <atomic>
#include <cstdlib>
#include <string>

#include "wordmaps/errors.hpp"
#include "wordmaps/simd/kernels.hpp"

namespace wordmaps::simd {

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
#if defined(WORDMAPS_HAVE_X86_KERNELS)
    case Isa::Ssse3:
      return __builtin_cpu_supports("ssse3");
    case Isa::Avx2:
      return __builtin_cpu_supports("avx2");
#else
    default:
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Ssse3, Isa::Avx2}) {
    if (isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Ssse3:
      return "ssse3";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "ssse3") return Isa::Ssse3;
  if (name == "avx2") return Isa::Avx2;
  throw PreconditionError("unknown ISA '" + std::string(name) + "'");
}

const Kernels& kernels(Isa isa) {
  if (!isa_supported(isa)) {
    throw PreconditionError("ISA " + std::string(isa_name(isa)) + " not supported on this CPU");
  }
  switch (isa) {
    case Isa::Scalar:
      return scalar_kernels();
#if defined(WORDMAPS_HAVE_X86_KERNELS)
    case Isa::Ssse3:
      return ssse3_kernels();
    case Isa::Avx2:
      return avx2_kernels();
#else
    default:
      break;
#endif
  }
  return scalar_kernels();
}

namespace {

const Kernels* initial_kernels() {
  if (const char* env = std::getenv("WORDMAPS_ISA")) return &kernels(parse_isa(env));
  const auto isas = supported_isas();
  return &kernels(isas.back());
}

std::atomic<const Kernels*>& active_slot() {
  static std::atomic<const Kernels*> slot{initial_kernels()};
  return slot;
}

}  // namespace

const Kernels& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active_slot().store(&kernels(isa), std::memory_order_release); }

}  // namespace wordmaps::simd
