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

// AVX2/FMA variants of the data-parallel kernels. This TU is the only one
// built with -mavx2 -mfma; the dispatch layer routes here only after a
// cpuid check. One __m256d holds two interleaved complex doubles.

#include <immintrin.h>

#include <bit>

#include "analogsim/kernels.hpp"

namespace analogsim::kern {

namespace {

inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

inline cplx i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// (v0*w, v1*w) for packed complexes v and a constant w given as broadcast
// real/imag registers.
inline __m256d cmul_const(__m256d v, __m256d wr, __m256d wi) {
    const __m256d vs = _mm256_permute_pd(v, 0x5);  // swap re/im per complex
    return _mm256_fmaddsub_pd(v, wr, _mm256_mul_pd(vs, wi));
}

// Lanewise conj(u)*v.
inline __m256d cmul_conj_packed(__m256d u, __m256d v) {
    const __m256d ur = _mm256_movedup_pd(u);
    const __m256d ui = _mm256_permute_pd(u, 0xF);
    const __m256d vs = _mm256_permute_pd(v, 0x5);
    return _mm256_fmsubadd_pd(ur, v, _mm256_mul_pd(ui, vs));
}

// Swap the two complexes of a register.
inline __m256d swap_halves(__m256d v) {
    return _mm256_permute2f128_pd(v, v, 0x01);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_pd(s, _mm_unpackhi_pd(s, s)));
}

inline cplx hsum_cplx(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

// Per-lane-signed broadcast tables for a complex constant: entry
// [s0 | s1 << 1] carries (-1)^s0 * w in the low complex and (-1)^s1 * w in
// the high complex.
struct SignedConst {
    __m256d re[4];
    __m256d im[4];

    explicit SignedConst(cplx w) {
        const double r = w.real(), i = w.imag();
        for (int m = 0; m < 4; ++m) {
            const double r0 = (m & 1) ? -r : r;
            const double i0 = (m & 1) ? -i : i;
            const double r1 = (m & 2) ? -r : r;
            const double i1 = (m & 2) ? -i : i;
            re[m] = _mm256_set_pd(r1, r1, r0, r0);
            im[m] = _mm256_set_pd(i1, i1, i0, i0);
        }
    }
};

void apply_matrix2_avx2(cplx* amps, std::size_t size, int target,
                        const cplx* m) {
    if (size < 4) {
        scalar_kernels().apply_matrix2(amps, size, target, m);
        return;
    }
    double* d = reinterpret_cast<double*>(amps);
    const __m256d m00r = _mm256_set1_pd(m[0].real()),
                  m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()),
                  m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()),
                  m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()),
                  m11i = _mm256_set1_pd(m[3].imag());
    const std::size_t stride = std::size_t{1} << target;
    if (stride >= 2) {
        for (std::size_t base = 0; base < size; base += 2 * stride) {
            for (std::size_t j = 0; j < stride; j += 2) {
                double* plo = d + 2 * (base + j);
                double* phi = plo + 2 * stride;
                const __m256d lo = _mm256_loadu_pd(plo);
                const __m256d hi = _mm256_loadu_pd(phi);
                const __m256d nlo = _mm256_add_pd(cmul_const(lo, m00r, m00i),
                                                  cmul_const(hi, m01r, m01i));
                const __m256d nhi = _mm256_add_pd(cmul_const(lo, m10r, m10i),
                                                  cmul_const(hi, m11r, m11i));
                _mm256_storeu_pd(plo, nlo);
                _mm256_storeu_pd(phi, nhi);
            }
        }
        return;
    }
    // target 0: deinterleave two adjacent pairs.
    for (std::size_t b = 0; b < size; b += 4) {
        double* p = d + 2 * b;
        const __m256d v0 = _mm256_loadu_pd(p);
        const __m256d v1 = _mm256_loadu_pd(p + 4);
        const __m256d lo = _mm256_permute2f128_pd(v0, v1, 0x20);
        const __m256d hi = _mm256_permute2f128_pd(v0, v1, 0x31);
        const __m256d nlo = _mm256_add_pd(cmul_const(lo, m00r, m00i),
                                          cmul_const(hi, m01r, m01i));
        const __m256d nhi = _mm256_add_pd(cmul_const(lo, m10r, m10i),
                                          cmul_const(hi, m11r, m11i));
        _mm256_storeu_pd(p, _mm256_permute2f128_pd(nlo, nhi, 0x20));
        _mm256_storeu_pd(p + 4, _mm256_permute2f128_pd(nlo, nhi, 0x31));
    }
}

void apply_pauli_rotation_avx2(cplx* amps, std::size_t size, std::uint64_t x,
                               std::uint64_t z, double cos_t, double sin_t) {
    if (size < 4 || x == 1) {
        // Tiny states and the lone pivot-0 case (X/Y on qubit 0 only) stay on
        // the reference path.
        scalar_kernels().apply_pauli_rotation(amps, size, x, z, cos_t, sin_t);
        return;
    }
    double* d = reinterpret_cast<double*>(amps);
    if (x == 0) {
        // Diagonal: multiply by exp(+/- i*theta) selected by parity(z & b).
        const SignedConst f(cplx(0.0, sin_t));
        const __m256d cr = _mm256_set1_pd(cos_t);
        for (std::size_t b = 0; b < size; b += 2) {
            const int m = parity64(z & b) | (parity64(z & (b + 1)) << 1);
            const __m256d v = _mm256_loadu_pd(d + 2 * b);
            _mm256_storeu_pd(d + 2 * b, cmul_const(v, cr, f.im[m]));
        }
        return;
    }
    const int k = std::popcount(x & z);
    const cplx w = cplx(0.0, sin_t) * i_power(k);
    const cplx wk = (k & 1) ? -w : w;
    const SignedConst tw(w);
    const SignedConst twk(wk);
    const __m256d cr = _mm256_set1_pd(cos_t);
    const int pivot = 63 - std::countl_zero(x);
    const std::size_t pstr = std::size_t{1} << pivot;
    const std::uint64_t xlow = x & (pstr - 1);
    const bool crossed = (xlow & 1) != 0;
    for (std::size_t base = 0; base < size; base += 2 * pstr) {
        double* dlo = d + 2 * base;
        double* dhi = d + 2 * (base + pstr);
        for (std::size_t j = 0; j < pstr; j += 2) {
            const std::size_t b = base + j;
            const int m = (z != 0)
                              ? (parity64(z & b) | (parity64(z & (b + 1)) << 1))
                              : 0;
            const std::size_t hoff = (j ^ xlow) & ~std::size_t{1};
            const __m256d lo = _mm256_loadu_pd(dlo + 2 * j);
            __m256d hi = _mm256_loadu_pd(dhi + 2 * hoff);
            if (crossed) hi = swap_halves(hi);
            __m256d nlo = _mm256_fmadd_pd(lo, cr, cmul_const(hi, twk.re[m], twk.im[m]));
            __m256d nhi = _mm256_fmadd_pd(hi, cr, cmul_const(lo, tw.re[m], tw.im[m]));
            if (crossed) nhi = swap_halves(nhi);
            _mm256_storeu_pd(dlo + 2 * j, nlo);
            _mm256_storeu_pd(dhi + 2 * hoff, nhi);
        }
    }
}

cplx pauli_expectation_avx2(const cplx* amps, std::size_t size,
                            std::uint64_t x, std::uint64_t z) {
    if (size < 4 || x == 1) {
        return scalar_kernels().pauli_expectation(amps, size, x, z);
    }
    const double* d = reinterpret_cast<const double*>(amps);
    if (x == 0) {
        __m256d acc = _mm256_setzero_pd();
        const __m256d signs[4] = {
            _mm256_set_pd(1, 1, 1, 1),
            _mm256_set_pd(1, 1, -1, -1),
            _mm256_set_pd(-1, -1, 1, 1),
            _mm256_set_pd(-1, -1, -1, -1),
        };
        for (std::size_t b = 0; b < size; b += 2) {
            const int m = parity64(z & b) | (parity64(z & (b + 1)) << 1);
            const __m256d v = _mm256_loadu_pd(d + 2 * b);
            acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), signs[m], acc);
        }
        return {hsum(acc), 0.0};
    }
    const int k = std::popcount(x & z);
    const int kappa = k & 1;
    const __m256d signs[4] = {
        _mm256_set_pd(1, 1, 1, 1),
        _mm256_set_pd(1, 1, -1, -1),
        _mm256_set_pd(-1, -1, 1, 1),
        _mm256_set_pd(-1, -1, -1, -1),
    };
    const int pivot = 63 - std::countl_zero(x);
    const std::size_t pstr = std::size_t{1} << pivot;
    const std::uint64_t xlow = x & (pstr - 1);
    const bool crossed = (xlow & 1) != 0;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t base = 0; base < size; base += 2 * pstr) {
        const double* dlo = d + 2 * base;
        const double* dhi = d + 2 * (base + pstr);
        for (std::size_t j = 0; j < pstr; j += 2) {
            const std::size_t b = base + j;
            const int m = (z != 0)
                              ? (parity64(z & b) | (parity64(z & (b + 1)) << 1))
                              : 0;
            const std::size_t hoff = (j ^ xlow) & ~std::size_t{1};
            const __m256d lo = _mm256_loadu_pd(dlo + 2 * j);
            __m256d hi = _mm256_loadu_pd(dhi + 2 * hoff);
            if (crossed) hi = swap_halves(hi);
            // (-1)^kappa * conj(lo)*hi + conj(hi)*lo, then the shared
            // per-pair sign; the i^k phase is applied once at the end.
            __m256d u = cmul_conj_packed(lo, hi);
            const __m256d v = cmul_conj_packed(hi, lo);
            if (kappa) u = _mm256_sub_pd(v, u);
            else u = _mm256_add_pd(v, u);
            acc = _mm256_fmadd_pd(u, signs[m], acc);
        }
    }
    return i_power(k) * hsum_cplx(acc);
}

double norm_squared_avx2(const cplx* amps, std::size_t size) {
    if (size < 4) return scalar_kernels().norm_squared(amps, size);
    const double* d = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t b = 0; b < size; b += 2) {
        const __m256d v = _mm256_loadu_pd(d + 2 * b);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    return hsum(acc);
}

void rescale_avx2(cplx* amps, std::size_t size, double factor) {
    if (size < 4) {
        scalar_kernels().rescale(amps, size, factor);
        return;
    }
    double* d = reinterpret_cast<double*>(amps);
    const __m256d f = _mm256_set1_pd(factor);
    for (std::size_t b = 0; b < size; b += 2) {
        _mm256_storeu_pd(d + 2 * b, _mm256_mul_pd(_mm256_loadu_pd(d + 2 * b), f));
    }
}

// Cold paths shared with the reference table.
void apply_matrix4_fwd(cplx* amps, std::size_t size, int q0, int q1,
                       const cplx* m) {
    scalar_kernels().apply_matrix4(amps, size, q0, q1, m);
}

void apply_pauli_fwd(cplx* amps, std::size_t size, std::uint64_t x,
                     std::uint64_t z) {
    scalar_kernels().apply_pauli(amps, size, x, z);
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k = {
        "avx2",
        &apply_matrix2_avx2,
        &apply_matrix4_fwd,
        &apply_pauli_fwd,
        &apply_pauli_rotation_avx2,
        &pauli_expectation_avx2,
        &norm_squared_avx2,
        &rescale_avx2,
    };
    return k;
}

}  // namespace analogsim::kern
