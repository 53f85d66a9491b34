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

#include <optional>
#include <variant>
#include <vector>

#include "analogsim/angles.hpp"
#include "analogsim/channel.hpp"
#include "analogsim/factorization.hpp"
#include "analogsim/rng.hpp"
#include "analogsim/statevector.hpp"

namespace analogsim {

enum class SamplerMethod { digital, analog_factorized, analog_random_rotation };

const char* sampler_method_name(SamplerMethod m);
SamplerMethod parse_sampler_method(std::string_view name);

struct SamplerConfig {
    SamplerMethod method = SamplerMethod::digital;
    AngleKind angle_kind = AngleKind::gaussian;
    // Analog amplitude damping defaults to theta = +/-1 (minimal fourth
    // moment); this switches to a standard normal.
    bool damping_gaussian_theta = false;
};

// One primitive insertion of a drawn noise operator.
struct NoiseAction {
    enum class Kind { pauli_flip, pauli_rotation, matrix_op };
    Kind kind = Kind::pauli_flip;
    PauliString pauli;          // flip / rotation axis, local to the support
    double angle = 0.0;         // rotation
    std::array<cplx, 4> matrix{};  // matrix_op, 2x2 on support[0]
    bool renormalize = false;   // digital amplitude damping
};

// A drawn realization of a channel: the ordered actions composing W for one
// gate's noise insertion. Reused across draws; capacity sticks, so the hot
// loop stays allocation-free after warmup.
struct NoiseEvent {
    std::vector<int> support;
    std::vector<NoiseAction> actions;

    void clear() {
        support.clear();
        actions.clear();
    }
};

// Gaussian parameters implementing the coherent over-rotation channel
// (probability q of exp(i*alpha*axis)) as a shifted-Gaussian rotation.
struct CoherentParams {
    double mu;
    double sigma2;
};
CoherentParams coherent_gaussian_params(double alpha, double q);

// Per-channel precomputation: factorized q_S maps, solved angle scales and
// cumulative tables are built once here, not per trajectory.
class ChannelSampler {
  public:
    ChannelSampler(const NoiseChannel& channel, const SamplerConfig& config);

    // Draws one event. `state` is consulted only by the digital
    // amplitude-damping variant (state-dependent Kraus probabilities);
    // passing nullptr there is a contract error.
    void draw(Rng& rng, const StateVector* state, NoiseEvent& out) const;

    bool needs_state() const;

    // Diagnostics for the analog_factorized method; nullptr otherwise.
    const FactorizedChannel* factorization() const {
        return factorization_ ? &*factorization_ : nullptr;
    }
    double factorization_residual() const { return residual_; }

  private:
    struct DigitalPauli {
        std::vector<double> cum;  // over non-identity strings
        std::vector<PauliString> strings;
    };
    struct AnalogFactorized {
        std::vector<std::pair<PauliString, AngleDistribution>> rotations;
    };
    struct AnalogRandomRotation {
        std::vector<double> cum;  // p'_S, sums to 1
        std::vector<PauliString> strings;
        std::optional<AngleDistribution> dist;  // empty when q = 0
    };
    struct CoherentDigital {
        PauliString axis;
        double alpha;
        double q;
    };
    struct CoherentAnalog {
        PauliString axis;
        AngleDistribution dist;
    };
    struct DampingAnalog {
        double gamma;
        bool gaussian_theta;
    };
    struct DampingDigital {
        double gamma;
    };

    std::variant<DigitalPauli, AnalogFactorized, AnalogRandomRotation,
                 CoherentDigital, CoherentAnalog, DampingAnalog, DampingDigital>
        impl_;
    std::vector<int> support_;
    std::optional<FactorizedChannel> factorization_;
    double residual_ = -1.0;
};

void apply_event(StateVector& state, const NoiseEvent& event);

// Operator-norm distance of the event's composed operator from identity,
// on the event's support (at most 2 qubits).
double max_identity_deviation(const NoiseEvent& event);

}  // namespace analogsim
