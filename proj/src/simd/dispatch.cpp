// Copyright 2026 The cdu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string>

#include "cdu/error.hpp"
#include "cdu/simd/kernels.hpp"

namespace cdu::simd {

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(CDU_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const Kernels& kernels(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(Errc::UnsupportedParameters, std::string(isa_name(isa)) + " kernels unavailable");
  }
#if defined(CDU_HAVE_AVX2)
  if (isa == Isa::Avx2) return detail::kAvx2;
#endif
  return detail::kScalar;
}

const Kernels& active() {
  static const Kernels& chosen = [] () -> const Kernels& {
    const char* env = std::getenv("CDU_ISA");
    if (env != nullptr && std::string_view(env) == "scalar") return detail::kScalar;
    if (isa_available(Isa::Avx2)) return kernels(Isa::Avx2);
    return detail::kScalar;
  }();
  return chosen;
}

}  // namespace cdu::simd
