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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "analogsim/pauli.hpp"

namespace analogsim {

using cplx = std::complex<double>;

// Probability map over Pauli strings; sparse, absent string = probability 0.
struct PauliChannelSpec {
    int num_qubits = 1;
    PauliProbabilities probs;  // should sum to 1 including the identity entry

    bool operator==(const PauliChannelSpec&) const = default;
};

struct DepolarizingSpec {
    int num_qubits = 1;
    double epsilon = 0.0;  // p_S = eps/4^M for S != I

    bool operator==(const DepolarizingSpec&) const = default;
};

// Over-rotation exp(i*alpha*axis) applied with probability q. One biased
// rotation only; a symmetric pair would reduce to a Pauli channel.
struct CoherentSpec {
    PauliString axis = PauliString::from_text("X");
    double alpha = 0.0;
    double q = 0.0;

    bool operator==(const CoherentSpec&) const = default;
};

struct AmplitudeDampingSpec {
    double gamma = 0.0;

    bool operator==(const AmplitudeDampingSpec&) const = default;
};

struct NoiseChannel {
    std::variant<PauliChannelSpec, DepolarizingSpec, CoherentSpec,
                 AmplitudeDampingSpec>
        spec;
    std::vector<int> support;  // circuit qubit indices

    int num_qubits() const;

    bool operator==(const NoiseChannel&) const = default;

    static NoiseChannel pauli(PauliProbabilities probs, std::vector<int> support);
    static NoiseChannel depolarizing(double epsilon, std::vector<int> support);
    static NoiseChannel coherent(PauliString axis, double alpha, double q,
                                 std::vector<int> support);
    static NoiseChannel amplitude_damping(double gamma, std::vector<int> support);
};

// Full probability map over S_M for pauli/depolarizing variants; the
// depolarizing identity weight is accumulated with compensated summation so
// the map sums to 1 exactly.
PauliProbabilities expand_to_pauli(const NoiseChannel& channel);

struct KrausOp {
    double weight;              // sum_q w_q M_q^dag M_q = Id
    std::vector<cplx> matrix;   // row-major, dim x dim
    int dim;
};

std::vector<KrausOp> kraus_operators(const NoiseChannel& channel);

// First violated constraint with its residual, or nullopt when valid.
std::optional<std::string> validate(const NoiseChannel& channel);

// Dense matrix of a Pauli string on its own M qubits (row-major, 2^M x 2^M).
std::vector<cplx> pauli_matrix(const PauliString& s);

}  // namespace analogsim
