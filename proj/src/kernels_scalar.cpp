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

#include <bit>

#include "analogsim/kernels.hpp"

namespace analogsim::kern {

namespace {

inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

// i^k for k = 0..3.
inline cplx i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void apply_matrix2_impl(cplx* amps, std::size_t size, int target,
                        const cplx* m) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; ++j) {
            const std::size_t i0 = base + j;
            const std::size_t i1 = i0 + stride;
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = m[0] * a0 + m[1] * a1;
            amps[i1] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_matrix4_impl(cplx* amps, std::size_t size, int q0, int q1,
                        const cplx* m) {
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t lo = b0 < b1 ? b0 : b1;
    const std::size_t hi = b0 < b1 ? b1 : b0;
    for (std::size_t i = 0; i < size / 4; ++i) {
        // Spread i over the index bits not occupied by q0/q1.
        std::size_t idx = i;
        idx = (idx & (lo - 1)) | ((idx & ~(lo - 1)) << 1);
        idx = (idx & (hi - 1)) | ((idx & ~(hi - 1)) << 1);
        const std::size_t i00 = idx;
        const std::size_t i01 = idx | b0;
        const std::size_t i10 = idx | b1;
        const std::size_t i11 = idx | b0 | b1;
        const cplx a0 = amps[i00], a1 = amps[i01], a2 = amps[i10],
                   a3 = amps[i11];
        amps[i00] = m[0] * a0 + m[1] * a1 + m[2] * a2 + m[3] * a3;
        amps[i01] = m[4] * a0 + m[5] * a1 + m[6] * a2 + m[7] * a3;
        amps[i10] = m[8] * a0 + m[9] * a1 + m[10] * a2 + m[11] * a3;
        amps[i11] = m[12] * a0 + m[13] * a1 + m[14] * a2 + m[15] * a3;
    }
}

void apply_pauli_impl(cplx* amps, std::size_t size, std::uint64_t x,
                      std::uint64_t z) {
    if (x == 0) {
        // Pure Z string: real diagonal signs.
        for (std::size_t b = 0; b < size; ++b) {
            if (parity64(z & b)) amps[b] = -amps[b];
        }
        return;
    }
    const cplx phase_k = i_power(std::popcount(x & z));
    const int pivot = 63 - std::countl_zero(x);
    const std::size_t pstr = std::size_t{1} << pivot;
    for (std::size_t base = 0; base < size; base += 2 * pstr) {
        for (std::size_t j = 0; j < pstr; ++j) {
            const std::size_t b = base + j;
            const std::size_t p = b ^ x;
            const cplx phi_b = parity64(z & b) ? -phase_k : phase_k;
            const cplx phi_p = parity64(z & p) ? -phase_k : phase_k;
            const cplx tmp = amps[b];
            amps[b] = phi_p * amps[p];
            amps[p] = phi_b * tmp;
        }
    }
}

void apply_pauli_rotation_impl(cplx* amps, std::size_t size, std::uint64_t x,
                               std::uint64_t z, double cos_t, double sin_t) {
    if (x == 0) {
        const cplx f_plus(cos_t, sin_t);
        const cplx f_minus(cos_t, -sin_t);
        for (std::size_t b = 0; b < size; ++b) {
            amps[b] *= parity64(z & b) ? f_minus : f_plus;
        }
        return;
    }
    const int k = std::popcount(x & z);
    const cplx w = cplx(0.0, sin_t) * i_power(k);  // i*sin(theta)*i^k
    const cplx wk = (k & 1) ? -w : w;              // extra (-1)^parity(z&x)
    const int pivot = 63 - std::countl_zero(x);
    const std::size_t pstr = std::size_t{1} << pivot;
    for (std::size_t base = 0; base < size; base += 2 * pstr) {
        for (std::size_t j = 0; j < pstr; ++j) {
            const std::size_t b = base + j;
            const std::size_t p = b ^ x;
            const cplx ab = amps[b];
            const cplx ap = amps[p];
            if (parity64(z & b)) {
                amps[b] = cos_t * ab - wk * ap;
                amps[p] = cos_t * ap - w * ab;
            } else {
                amps[b] = cos_t * ab + wk * ap;
                amps[p] = cos_t * ap + w * ab;
            }
        }
    }
}

cplx pauli_expectation_impl(const cplx* amps, std::size_t size,
                            std::uint64_t x, std::uint64_t z) {
    if (x == 0) {
        double acc = 0.0;
        for (std::size_t b = 0; b < size; ++b) {
            const double p = std::norm(amps[b]);
            acc += parity64(z & b) ? -p : p;
        }
        return {acc, 0.0};
    }
    const cplx phase_k = i_power(std::popcount(x & z));
    const int pivot = 63 - std::countl_zero(x);
    const std::size_t pstr = std::size_t{1} << pivot;
    cplx acc(0.0, 0.0);
    for (std::size_t base = 0; base < size; base += 2 * pstr) {
        for (std::size_t j = 0; j < pstr; ++j) {
            const std::size_t b = base + j;
            const std::size_t p = b ^ x;
            const cplx phi_b = parity64(z & b) ? -phase_k : phase_k;
            const cplx phi_p = parity64(z & p) ? -phase_k : phase_k;
            acc += std::conj(amps[b]) * phi_p * amps[p];
            acc += std::conj(amps[p]) * phi_b * amps[b];
        }
    }
    return acc;
}

double norm_squared_impl(const cplx* amps, std::size_t size) {
    double acc = 0.0;
    for (std::size_t b = 0; b < size; ++b) acc += std::norm(amps[b]);
    return acc;
}

void rescale_impl(cplx* amps, std::size_t size, double factor) {
    for (std::size_t b = 0; b < size; ++b) amps[b] *= factor;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {
        "scalar",
        &apply_matrix2_impl,
        &apply_matrix4_impl,
        &apply_pauli_impl,
        &apply_pauli_rotation_impl,
        &pauli_expectation_impl,
        &norm_squared_impl,
        &rescale_impl,
    };
    return k;
}

}  // namespace analogsim::kern
