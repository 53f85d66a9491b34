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
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "analogsim/kernels.hpp"
#include "analogsim/pauli.hpp"

namespace analogsim {

using cplx = std::complex<double>;

// A weighted sum of Pauli strings, or a diagonal projector onto a total-Z
// sector. The projector value is the eigenvalue of sum_j Z_j, i.e.
// N - 2*popcount(bits).
class Observable {
  public:
    enum class Kind { pauli_sum, diagonal_projector };

    struct Term {
        double coeff;
        PauliString pauli;        // local string
        std::vector<int> qubits;  // support, one entry per local qubit
    };

    static Observable pauli_sum(std::string name, std::vector<Term> terms);
    static Observable diagonal_projector(std::string name, int sector);

    // (1/N) sum_j X_j
    static Observable sx_average(int num_qubits);
    // (1/N) sum_j (-1)^j Z_j with qubit 0 taking the + sign.
    static Observable staggered_z(int num_qubits);
    static Observable single(std::string name, double coeff,
                             const PauliString& pauli, std::vector<int> qubits);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::vector<Term>& terms() const { return terms_; }
    int sector() const { return sector_; }
    int max_qubit() const { return max_qubit_; }

  private:
    Kind kind_ = Kind::pauli_sum;
    std::string name_;
    std::vector<Term> terms_;
    int sector_ = 0;
    int max_qubit_ = -1;
};

// Dense 2^N complex amplitudes. Operations mutate in place; nothing here
// renormalizes silently, so non-unitary operators leave the norm free to
// drift (the amplitude-damping analog trajectories rely on this).
class StateVector {
  public:
    explicit StateVector(int num_qubits);  // |0...0>
    static StateVector computational_basis(int num_qubits, std::uint64_t bits);
    static StateVector plus_state(int num_qubits);

    // Default 26 qubits; ANALOGSIM_MAX_QUBITS overrides.
    static int max_qubits();

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }

    // Dense 2x2 (1 qubit) or 4x4 (2 qubits) matrix, row-major; need not be
    // unitary. For two qubits, sub-index bit 0 = qubits[0].
    void apply_matrix(std::span<const cplx> matrix, std::span<const int> qubits);

    // S action and exp(i*theta*S) for a local string on `qubits`.
    void apply_pauli(const PauliString& s, std::span<const int> qubits);
    void apply_pauli_rotation(const PauliString& s, std::span<const int> qubits,
                              double theta);

    void apply_hadamard(int qubit);

    double norm_squared() const;
    void rescale(double factor);

    // Sum of |amplitude|^2 over basis states with `qubit` set; not
    // normalized by the state norm.
    double qubit_one_weight(int qubit) const;

    // <psi|O|psi> without dividing by <psi|psi>.
    double expectation(const Observable& obs) const;

    // |amplitude|^2 of one bitstring (bit q of `bits` = qubit q). Requires
    // norm within 1e-9 of 1.
    double bitstring_probability(std::uint64_t bits) const;
    std::vector<std::pair<std::uint64_t, double>> top_k_probabilities(int k) const;
    std::vector<double> probabilities() const;

    // Von Neumann entropy (natural log) across the cut after the first
    // `cut` qubits, from the squared singular values of the 2^cut x
    // 2^(N-cut) amplitude matrix.
    double bipartite_entropy(int cut) const;

  private:
    void check_qubits(std::span<const int> qubits) const;

    int num_qubits_;
    std::vector<cplx> amps_;
    const kern::Kernels* k_;
};

}  // namespace analogsim
