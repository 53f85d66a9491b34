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

#include <vector>

#include "analogsim/circuits.hpp"

namespace analogsim {

// Dense density-matrix evolution for small N: the ground truth the
// trajectory samplers are validated against. Plain scalar loops on purpose,
// independent of the statevector kernel path.
class DensityMatrix {
  public:
    static constexpr int kMaxQubits = 12;

    explicit DensityMatrix(int num_qubits);  // |0...0><0...0|
    static DensityMatrix from_state(const StateVector& psi);
    static DensityMatrix computational_basis(int num_qubits, std::uint64_t bits);
    static DensityMatrix plus_state(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }

    cplx at(std::size_t r, std::size_t c) const { return m_[r * dim() + c]; }
    cplx& at(std::size_t r, std::size_t c) { return m_[r * dim() + c]; }
    const std::vector<cplx>& entries() const { return m_; }

    // rho <- U rho U^dag for a 2x2 or 4x4 matrix on `qubits`.
    void apply_unitary(std::span<const cplx> matrix, std::span<const int> qubits);

    // rho <- sum_q w_q M_q rho M_q^dag using the channel's Kraus operators
    // on its support qubits.
    void apply_channel(const NoiseChannel& channel);

    double expectation(const Observable& obs) const;

    double trace_real() const;
    double hermiticity_error() const;  // max |rho - rho^dag| entry
    double min_eigenvalue() const;

  private:
    // rho <- M rho and rho <- rho M^dag restricted to `qubits`.
    void left_apply(std::span<const cplx> matrix, std::span<const int> qubits);
    void right_apply_dagger(std::span<const cplx> matrix,
                            std::span<const int> qubits);

    int num_qubits_;
    std::vector<cplx> m_;
};

// Exact expectation series of a noisy circuit: one row per record point,
// one column per observable. strip_noise drops every attached channel
// (the noiseless reference).
std::vector<std::vector<double>> evolve_circuit_dm(const NoisyCircuit& circuit,
                                                   bool strip_noise = false);

}  // namespace analogsim
