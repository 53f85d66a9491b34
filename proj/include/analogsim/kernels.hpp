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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace analogsim::kern {

using cplx = std::complex<double>;

// Hot statevector loops, runtime-dispatched. Every entry has a scalar
// reference implementation; the AVX2 table overrides the data-parallel ones
// and shares the scalar code elsewhere. All functions act in place on an
// interleaved array of `size` complex amplitudes (size = 2^N).
//
// Masks follow the register convention: bit q of x_mask/z_mask addresses
// qubit q of the amplitude index. For a Pauli string S = i^k X^x Z^z
// (k = number of Y factors):
//
//   S|b> = i^k * (-1)^popcount(z & b) * |b ^ x>
//
// and the rotation is exp(i*theta*S) = cos(theta)*Id + i*sin(theta)*S.
struct Kernels {
    const char* name;

    // 2x2 matrix (row-major m[4], need not be unitary) on `target`.
    void (*apply_matrix2)(cplx* amps, std::size_t size, int target,
                          const cplx* m);

    // 4x4 matrix (row-major m[16]) on qubits (q0, q1); sub-index bit 0 = q0,
    // bit 1 = q1.
    void (*apply_matrix4)(cplx* amps, std::size_t size, int q0, int q1,
                          const cplx* m);

    // Exact Pauli string action including the i^k phase.
    void (*apply_pauli)(cplx* amps, std::size_t size, std::uint64_t x_mask,
                        std::uint64_t z_mask);

    // exp(i*theta*S) with cos_t = cos(theta), sin_t = sin(theta).
    void (*apply_pauli_rotation)(cplx* amps, std::size_t size,
                                 std::uint64_t x_mask, std::uint64_t z_mask,
                                 double cos_t, double sin_t);

    // <psi|S|psi> without normalization; imaginary part is rounding noise
    // for Hermitian S and is reported for the caller to check.
    cplx (*pauli_expectation)(const cplx* amps, std::size_t size,
                              std::uint64_t x_mask, std::uint64_t z_mask);

    double (*norm_squared)(const cplx* amps, std::size_t size);

    void (*rescale)(cplx* amps, std::size_t size, double factor);
};

const Kernels& scalar_kernels();

// Defined only when the AVX2 TU is built; callers must check
// avx2_supported() first.
#ifdef ANALOGSIM_HAVE_AVX2_TU
const Kernels& avx2_kernels();
#endif

bool avx2_supported();

// Best supported table; ANALOGSIM_KERNELS={scalar,avx2} overrides (read
// once, at first use).
const Kernels& active_kernels();

}  // namespace analogsim::kern
