// Copyright 2026 The analogsim authors
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
#include <string_view>

#include "analogsim/errors.hpp"
#include "analogsim/kernels.hpp"

namespace analogsim::kern {

bool avx2_supported() {
#if defined(ANALOGSIM_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Kernels& select() {
    if (const char* env = std::getenv("ANALOGSIM_KERNELS")) {
        const std::string_view want(env);
        if (want == "scalar") return scalar_kernels();
        if (want == "avx2") {
#ifdef ANALOGSIM_HAVE_AVX2_TU
            if (avx2_supported()) return avx2_kernels();
#endif
            throw ConfigError("ANALOGSIM_KERNELS=avx2 but AVX2 is unavailable");
        }
        throw ConfigError("ANALOGSIM_KERNELS must be 'scalar' or 'avx2', got '" +
                          std::string(want) + "'");
    }
#ifdef ANALOGSIM_HAVE_AVX2_TU
    if (avx2_supported()) return avx2_kernels();
#endif
    return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
    static const Kernels& chosen = select();
    return chosen;
}

}  // namespace analogsim::kern
