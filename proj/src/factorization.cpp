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

#include "analogsim/factorization.hpp"

#include <cmath>

namespace analogsim {

namespace {

int width_of(const PauliProbabilities& p) {
    if (p.empty()) throw ConfigError("empty Pauli probability map");
    return p.begin()->first.num_qubits();
}

}  // namespace

PauliProbabilities pauli_fidelities(const PauliProbabilities& p) {
    const int m = width_of(p);
    PauliProbabilities lambdas;
    for (const PauliString& s : enumerate_strings(m)) {
        double anti_weight = 0.0;
        for (const auto& [t, pt] : p) {
            if (!t.commutes_with(s)) anti_weight += pt;
        }
        lambdas[s] = 1.0 - 2.0 * anti_weight;
    }
    return lambdas;
}

FactorizedChannel factorize(const PauliProbabilities& p) {
    const int m = width_of(p);
    const PauliProbabilities lambdas = pauli_fidelities(p);
    for (const auto& [s, lam] : lambdas) {
        if (lam <= 0.0) {
            throw SingularChannelError(
                "factorize: fidelity of " + s.text() + " is " +
                std::to_string(lam) +
                "; the 2/4^M root is undefined (channel too noisy)");
        }
    }
    // log lambda per string; the a(S)/c(S) products over 4^M/2 factors each
    // become sums, avoiding underflow.
    PauliProbabilities log_lambda;
    for (const auto& [s, lam] : lambdas) log_lambda[s] = std::log(lam);

    FactorizedChannel out;
    out.num_qubits = m;
    out.source = p;
    const double exponent = 2.0 / std::pow(4.0, m);
    for (const PauliString& s : enumerate_strings(m)) {
        if (s.is_identity()) continue;
        double log_anti = 0.0, log_comm = 0.0;
        for (const auto& [t, ll] : log_lambda) {
            if (t.commutes_with(s))
                log_comm += ll;
            else
                log_anti += ll;
        }
        const double q = 0.5 - 0.5 * std::exp(exponent * (log_anti - log_comm));
        out.factors[s] = q;
        if (q < 0.0 || q >= 0.5) out.all_physical = false;
    }
    return out;
}

double verify_factorization(const PauliProbabilities& p,
                            const PauliProbabilities& factors) {
    const int m = width_of(p);
    const PauliProbabilities lambdas = pauli_fidelities(p);
    double worst = 0.0;
    for (const PauliString& s : enumerate_strings(m)) {
        double prod = 1.0;
        for (const auto& [t, q] : factors) {
            if (!t.commutes_with(s)) prod *= 1.0 - 2.0 * q;
        }
        worst = std::max(worst, std::abs(lambdas.at(s) - prod));
    }
    return worst;
}

}  // namespace analogsim
