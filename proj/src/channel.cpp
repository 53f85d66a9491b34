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

#include "analogsim/channel.hpp"

#include <bit>
#include <cmath>

namespace analogsim {

namespace {

// S|b> = i^k (-1)^popcount(z & b) |b ^ x>.
cplx i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

std::vector<cplx> pauli_matrix(const PauliString& s) {
    const std::size_t dim = std::size_t{1} << s.num_qubits();
    std::vector<cplx> m(dim * dim, cplx(0.0, 0.0));
    const cplx phase_k = i_power(s.y_count());
    for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t target = b ^ s.x_bits();
        const int sign = std::popcount(s.z_bits() & b) & 1;
        m[target * dim + b] = sign ? -phase_k : phase_k;
    }
    return m;
}

int NoiseChannel::num_qubits() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PauliChannelSpec>) return s.num_qubits;
            if constexpr (std::is_same_v<T, DepolarizingSpec>) return s.num_qubits;
            if constexpr (std::is_same_v<T, CoherentSpec>) return s.axis.num_qubits();
            if constexpr (std::is_same_v<T, AmplitudeDampingSpec>) return 1;
        },
        spec);
}

NoiseChannel NoiseChannel::pauli(PauliProbabilities probs,
                                 std::vector<int> support) {
    if (probs.empty()) throw ConfigError("pauli channel: empty probability map");
    const int m = probs.begin()->first.num_qubits();
    for (const auto& [s, p] : probs) {
        if (s.num_qubits() != m) {
            throw DimensionError("pauli channel: mixed string widths");
        }
        (void)p;
    }
    if (static_cast<int>(support.size()) != m) {
        throw DimensionError("pauli channel: support size does not match strings");
    }
    return {PauliChannelSpec{m, std::move(probs)}, std::move(support)};
}

NoiseChannel NoiseChannel::depolarizing(double epsilon,
                                        std::vector<int> support) {
    if (support.empty()) throw ConfigError("depolarizing: empty support");
    return {DepolarizingSpec{static_cast<int>(support.size()), epsilon},
            std::move(support)};
}

NoiseChannel NoiseChannel::coherent(PauliString axis, double alpha, double q,
                                    std::vector<int> support) {
    if (static_cast<int>(support.size()) != axis.num_qubits()) {
        throw DimensionError("coherent: support size does not match axis");
    }
    return {CoherentSpec{axis, alpha, q}, std::move(support)};
}

NoiseChannel NoiseChannel::amplitude_damping(double gamma,
                                             std::vector<int> support) {
    if (support.size() != 1) {
        throw DimensionError("amplitude_damping: single-qubit channel");
    }
    return {AmplitudeDampingSpec{gamma}, std::move(support)};
}

PauliProbabilities expand_to_pauli(const NoiseChannel& channel) {
    if (const auto* pc = std::get_if<PauliChannelSpec>(&channel.spec)) {
        return pc->probs;
    }
    if (const auto* dp = std::get_if<DepolarizingSpec>(&channel.spec)) {
        const int m = dp->num_qubits;
        const double dim4 = std::pow(4.0, m);
        const double p_each = dp->epsilon / dim4;
        PauliProbabilities out;
        // Kahan accumulation of the non-identity weight keeps the total at
        // exactly 1.
        double sum = 0.0, comp = 0.0;
        for (const PauliString& s : enumerate_strings(m)) {
            if (s.is_identity()) continue;
            out[s] = p_each;
            const double y = p_each - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        out[PauliString::identity(m)] = 1.0 - sum;
        return out;
    }
    throw ConfigError("expand_to_pauli: channel is not a Pauli channel");
}

std::vector<KrausOp> kraus_operators(const NoiseChannel& channel) {
    if (auto diag = validate(channel)) {
        throw ConfigError("kraus_operators: " + *diag);
    }
    std::vector<KrausOp> out;
    if (std::holds_alternative<PauliChannelSpec>(channel.spec) ||
        std::holds_alternative<DepolarizingSpec>(channel.spec)) {
        for (const auto& [s, p] : expand_to_pauli(channel)) {
            if (p == 0.0) continue;
            out.push_back({p, pauli_matrix(s), 1 << s.num_qubits()});
        }
        return out;
    }
    if (const auto* co = std::get_if<CoherentSpec>(&channel.spec)) {
        const int dim = 1 << co->axis.num_qubits();
        std::vector<cplx> id(static_cast<std::size_t>(dim) * dim, cplx(0, 0));
        for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i) * dim + i] = 1.0;
        // exp(i*alpha*S) = cos(alpha) Id + i sin(alpha) S.
        std::vector<cplx> rot = pauli_matrix(co->axis);
        const cplx c(std::cos(co->alpha), 0.0);
        const cplx is(0.0, std::sin(co->alpha));
        for (std::size_t i = 0; i < rot.size(); ++i) {
            rot[i] = c * id[i] + is * rot[i];
        }
        out.push_back({1.0 - co->q, id, dim});
        out.push_back({co->q, std::move(rot), dim});
        return out;
    }
    const auto& ad = std::get<AmplitudeDampingSpec>(channel.spec);
    const double g = ad.gamma;
    out.push_back({1.0, {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(std::sqrt(1.0 - g), 0)}, 2});
    out.push_back({1.0, {cplx(0, 0), cplx(std::sqrt(g), 0), cplx(0, 0), cplx(0, 0)}, 2});
    return out;
}

std::optional<std::string> validate(const NoiseChannel& channel) {
    const int m = channel.num_qubits();
    if (static_cast<int>(channel.support.size()) != m) {
        return "support lists " + std::to_string(channel.support.size()) +
               " qubits for a " + std::to_string(m) + "-qubit channel";
    }
    for (std::size_t i = 0; i < channel.support.size(); ++i) {
        for (std::size_t j = i + 1; j < channel.support.size(); ++j) {
            if (channel.support[i] == channel.support[j]) {
                return "duplicate support qubit " +
                       std::to_string(channel.support[i]);
            }
        }
    }
    if (const auto* pc = std::get_if<PauliChannelSpec>(&channel.spec)) {
        double sum = 0.0, comp = 0.0;
        for (const auto& [s, p] : pc->probs) {
            if (p < 0.0 || p > 1.0) {
                return "probability of " + s.text() + " out of [0,1]: " +
                       std::to_string(p);
            }
            const double y = p - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            return "probability sum deviates from 1 by " +
                   std::to_string(sum - 1.0);
        }
        return std::nullopt;
    }
    if (const auto* dp = std::get_if<DepolarizingSpec>(&channel.spec)) {
        if (dp->epsilon < 0.0 || dp->epsilon > 1.0) {
            return "epsilon out of [0,1]: " + std::to_string(dp->epsilon);
        }
        if (dp->num_qubits < 1 || dp->num_qubits > 8) {
            return "depolarizing num_qubits out of [1,8]";
        }
        return std::nullopt;
    }
    if (const auto* co = std::get_if<CoherentSpec>(&channel.spec)) {
        if (co->q < 0.0 || co->q > 1.0) {
            return "q out of [0,1]: " + std::to_string(co->q);
        }
        if (co->axis.is_identity()) {
            return "coherent axis must be a non-identity Pauli string";
        }
        return std::nullopt;
    }
    const auto& ad = std::get<AmplitudeDampingSpec>(channel.spec);
    if (ad.gamma < 0.0 || ad.gamma > 1.0) {
        return "gamma out of range [0,1]: " + std::to_string(ad.gamma);
    }
    return std::nullopt;
}

}  // namespace analogsim
