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

// Brute-force oracles for the unit and acceptance suites. Everything here
// recomputes results with dense matrix arithmetic, independent of the
// strided kernel paths it is used to check.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "analogsim/channel.hpp"
#include "analogsim/pauli.hpp"
#include "analogsim/rng.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat to_eigen(const std::vector<cplx>& m, int dim) {
    Mat out(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            out(r, c) = m[static_cast<std::size_t>(r * dim + c)];
        }
    }
    return out;
}

inline Mat pauli_dense(const analogsim::PauliString& s) {
    return to_eigen(analogsim::pauli_matrix(s), 1 << s.num_qubits());
}

// Dense N-qubit embedding of a k-qubit operator on `qubits` (sub-index
// bit i = qubits[i]).
inline Mat embed(const Mat& op, const std::vector<int>& qubits, int n) {
    const long dim = 1L << n;
    const int k = static_cast<int>(qubits.size());
    Mat out = Mat::Zero(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            // r and c must agree outside the addressed qubits.
            long mask = 0;
            for (int q : qubits) mask |= 1L << q;
            if ((r & ~mask) != (c & ~mask)) continue;
            int sr = 0, sc = 0;
            for (int i = 0; i < k; ++i) {
                if ((r >> qubits[i]) & 1) sr |= 1 << i;
                if ((c >> qubits[i]) & 1) sc |= 1 << i;
            }
            out(r, c) = op(sr, sc);
        }
    }
    return out;
}

inline Vec to_vec(std::span<const cplx> amps) {
    Vec v(static_cast<long>(amps.size()));
    for (long i = 0; i < v.size(); ++i) v(i) = amps[static_cast<std::size_t>(i)];
    return v;
}

inline double max_abs_diff(const Vec& a, std::span<const cplx> b) {
    double worst = 0.0;
    for (long i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a(i) - b[static_cast<std::size_t>(i)]));
    }
    return worst;
}

// Random normalized state with a plain std::mt19937_64 stream.
inline std::vector<cplx> random_state(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = cplx(nd(gen), nd(gen));
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return amps;
}

// Random probability map over S_M (identity share `p_identity`).
inline analogsim::PauliProbabilities random_pauli_probs(int m, double p_identity,
                                                        std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    const auto strings = analogsim::enumerate_strings(m);
    std::vector<double> w;
    double total = 0.0;
    for (std::size_t i = 1; i < strings.size(); ++i) {
        w.push_back(ud(gen));
        total += w.back();
    }
    analogsim::PauliProbabilities probs;
    probs[strings[0]] = p_identity;
    for (std::size_t i = 1; i < strings.size(); ++i) {
        probs[strings[i]] = (1.0 - p_identity) * w[i - 1] / total;
    }
    return probs;
}

// Pauli-transfer matrix R[i][j] = (1/2^M) tr[P_i N(P_j)] of a channel given
// by weighted Kraus operators.
inline Mat transfer_matrix(const std::vector<analogsim::KrausOp>& kraus, int m) {
    const auto strings = analogsim::enumerate_strings(m);
    const long nb = static_cast<long>(strings.size());
    const int dim = 1 << m;
    std::vector<Mat> basis;
    basis.reserve(strings.size());
    for (const auto& s : strings) basis.push_back(pauli_dense(s));
    Mat r = Mat::Zero(nb, nb);
    for (long j = 0; j < nb; ++j) {
        Mat image = Mat::Zero(dim, dim);
        for (const auto& k : kraus) {
            const Mat km = to_eigen(k.matrix, dim);
            image += k.weight * km * basis[static_cast<std::size_t>(j)] *
                     km.adjoint();
        }
        for (long i = 0; i < nb; ++i) {
            r(i, j) = (basis[static_cast<std::size_t>(i)] * image).trace() /
                      static_cast<double>(dim);
        }
    }
    return r;
}

// Transfer matrix of a single-string channel (1-q) rho + q S rho S.
inline Mat single_string_transfer(const analogsim::PauliString& s, double q) {
    std::vector<analogsim::KrausOp> kraus;
    const int dim = 1 << s.num_qubits();
    std::vector<cplx> id(static_cast<std::size_t>(dim) * dim, cplx(0, 0));
    for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i) * dim + i] = 1.0;
    kraus.push_back({1.0 - q, id, dim});
    kraus.push_back({q, analogsim::pauli_matrix(s), dim});
    return transfer_matrix(kraus, s.num_qubits());
}

}  // namespace oracle
