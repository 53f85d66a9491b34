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

#include "analogsim/pauli.hpp"

namespace analogsim {

// A multi-string Pauli channel rewritten as a commuting composition of
// single-string channels N_{q_S, S}. Always returned when computable, even
// with some q_S < 0; all_physical flags whether every q_S sits in [0, 1/2).
struct FactorizedChannel {
    int num_qubits = 1;
    PauliProbabilities factors;  // q_S for every S != I, zeros kept
    PauliProbabilities source;   // the p_S it was derived from
    bool all_physical = true;
};

// Pauli fidelities lambda_S = 1 - 2 * sum_{S' in a(S)} p_{S'} for every
// S in S_M: the eigenvalue of the channel on basis element S.
PauliProbabilities pauli_fidelities(const PauliProbabilities& p);

// q_S = 1/2 - 1/2 * (prod_{a(S)} lambda / prod_{c(S)} lambda)^(2/4^M).
// Products run in log space. Throws SingularChannelError when any
// lambda_S <= 0 (the root is undefined; channel too noisy to factorize).
FactorizedChannel factorize(const PauliProbabilities& p);

// max over S of | lambda_S(p) - prod_{S' in a(S)} (1 - 2 q_{S'}) |.
// Strings absent from `factors` count as q = 0.
double verify_factorization(const PauliProbabilities& p,
                            const PauliProbabilities& factors);

}  // namespace analogsim
