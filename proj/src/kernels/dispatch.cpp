// Copyright 2026 The dgqw Authors
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

#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace dgqw::kernels {

const KernelSet *avx2_kernels() {
#if defined(DGQW_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &avx2_kernels_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet &select(const char *request) {
    if (request != nullptr && std::string_view(request) == "scalar") {
        return scalar_kernels();
    }
    if (const KernelSet *simd = avx2_kernels()) {
        return *simd;
    }
    return scalar_kernels();
}

const KernelSet &active() {
    static const KernelSet &chosen = select(std::getenv("DGQW_KERNELS"));
    return chosen;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace dgqw::kernels
