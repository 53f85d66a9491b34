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

#include "analogsim/samplers.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace analogsim {

namespace {

const char* kMethodNames[] = {"digital", "analog", "analog-random-rotation"};

}  // namespace

const char* sampler_method_name(SamplerMethod m) {
    return kMethodNames[static_cast<int>(m)];
}

SamplerMethod parse_sampler_method(std::string_view name) {
    if (name == "digital") return SamplerMethod::digital;
    if (name == "analog" || name == "analog-factorized") {
        return SamplerMethod::analog_factorized;
    }
    if (name == "analog-random-rotation") {
        return SamplerMethod::analog_random_rotation;
    }
    throw ConfigError("unknown sampler '" + std::string(name) +
                      "' (expected digital, analog or analog-random-rotation)");
}

CoherentParams coherent_gaussian_params(double alpha, double q) {
    const double s = std::sin(alpha);
    const double arg = 1.0 - 4.0 * q * (1.0 - q) * s * s;
    if (arg <= 0.0) {
        throw OutOfDomainError(
            "coherent channel: 4q(1-q)sin^2(alpha) >= 1; no Gaussian "
            "representation");
    }
    CoherentParams p;
    p.mu = 0.5 * std::atan2(q * std::sin(2.0 * alpha),
                            1.0 - 2.0 * q * s * s);
    p.sigma2 = -0.25 * std::log(arg);
    return p;
}

ChannelSampler::ChannelSampler(const NoiseChannel& channel,
                               const SamplerConfig& config)
    : support_(channel.support) {
    if (auto diag = validate(channel)) {
        throw ConfigError("channel rejected: " + *diag);
    }
    const bool analog = config.method != SamplerMethod::digital;

    if (std::holds_alternative<PauliChannelSpec>(channel.spec) ||
        std::holds_alternative<DepolarizingSpec>(channel.spec)) {
        const PauliProbabilities probs = expand_to_pauli(channel);
        if (config.method == SamplerMethod::digital) {
            DigitalPauli d;
            double acc = 0.0;
            for (const auto& [s, p] : probs) {
                if (s.is_identity() || p == 0.0) continue;
                acc += p;
                d.cum.push_back(acc);
                d.strings.push_back(s);
            }
            impl_ = std::move(d);
            return;
        }
        if (config.method == SamplerMethod::analog_factorized) {
            FactorizedChannel fc = factorize(probs);
            if (!fc.all_physical) {
                std::string offenders;
                for (const auto& [s, q] : fc.factors) {
                    if (q < 0.0 || q >= 0.5) {
                        offenders += " q_" + s.text() + "=" + std::to_string(q);
                    }
                }
                throw NonPhysicalError(
                    "analog_factorized: channel does not factorize into "
                    "physical single-string channels:" + offenders +
                    "; use the analog-random-rotation sampler instead");
            }
            AnalogFactorized a;
            for (const auto& [s, q] : fc.factors) {
                if (q == 0.0) continue;  // no-op rotations are dropped
                a.rotations.emplace_back(
                    s, AngleDistribution::solve(config.angle_kind, q));
            }
            residual_ = verify_factorization(probs, fc.factors);
            factorization_ = std::move(fc);
            impl_ = std::move(a);
            return;
        }
        // analog_random_rotation
        AnalogRandomRotation a;
        double q_total = 0.0;
        for (const auto& [s, p] : probs) {
            if (!s.is_identity()) q_total += p;
        }
        if (q_total >= 0.5) {
            throw OutOfDomainError(
                "analog_random_rotation: total error weight " +
                std::to_string(q_total) + " >= 1/2 has no angle solution");
        }
        if (q_total > 0.0) {
            double acc = 0.0;
            for (const auto& [s, p] : probs) {
                if (s.is_identity() || p == 0.0) continue;
                acc += p / q_total;
                a.cum.push_back(acc);
                a.strings.push_back(s);
            }
            a.cum.back() = 1.0;
            a.dist = AngleDistribution::solve(config.angle_kind, q_total);
        }
        impl_ = std::move(a);
        return;
    }

    if (const auto* co = std::get_if<CoherentSpec>(&channel.spec)) {
        if (!analog) {
            impl_ = CoherentDigital{co->axis, co->alpha, co->q};
        } else {
            const CoherentParams p = coherent_gaussian_params(co->alpha, co->q);
            impl_ = CoherentAnalog{
                co->axis,
                AngleDistribution::gaussian_with_mean(p.mu, std::sqrt(p.sigma2))};
        }
        return;
    }

    const auto& ad = std::get<AmplitudeDampingSpec>(channel.spec);
    if (analog) {
        impl_ = DampingAnalog{ad.gamma, config.damping_gaussian_theta};
    } else {
        impl_ = DampingDigital{ad.gamma};
    }
}

bool ChannelSampler::needs_state() const {
    return std::holds_alternative<DampingDigital>(impl_);
}

void ChannelSampler::draw(Rng& rng, const StateVector* state,
                          NoiseEvent& out) const {
    out.clear();
    out.support = support_;

    if (const auto* d = std::get_if<DigitalPauli>(&impl_)) {
        if (d->cum.empty()) return;
        const double u = rng.uniform01();
        if (u >= d->cum.back()) return;  // identity
        const std::size_t i = static_cast<std::size_t>(
            std::upper_bound(d->cum.begin(), d->cum.end(), u) - d->cum.begin());
        NoiseAction a;
        a.kind = NoiseAction::Kind::pauli_flip;
        a.pauli = d->strings[i];
        out.actions.push_back(std::move(a));
        return;
    }

    if (const auto* f = std::get_if<AnalogFactorized>(&impl_)) {
        for (const auto& [s, dist] : f->rotations) {
            NoiseAction a;
            a.kind = NoiseAction::Kind::pauli_rotation;
            a.pauli = s;
            a.angle = dist.sample(rng);
            out.actions.push_back(std::move(a));
        }
        return;
    }

    if (const auto* r = std::get_if<AnalogRandomRotation>(&impl_)) {
        if (!r->dist) return;  // q = 0
        const double u = rng.uniform01();
        const std::size_t i = static_cast<std::size_t>(
            std::upper_bound(r->cum.begin(), r->cum.end(), u) - r->cum.begin());
        NoiseAction a;
        a.kind = NoiseAction::Kind::pauli_rotation;
        a.pauli = r->strings[std::min(i, r->strings.size() - 1)];
        a.angle = r->dist->sample(rng);
        out.actions.push_back(std::move(a));
        return;
    }

    if (const auto* cd = std::get_if<CoherentDigital>(&impl_)) {
        if (rng.uniform01() >= cd->q) return;
        NoiseAction a;
        a.kind = NoiseAction::Kind::pauli_rotation;
        a.pauli = cd->axis;
        a.angle = cd->alpha;
        out.actions.push_back(std::move(a));
        return;
    }

    if (const auto* ca = std::get_if<CoherentAnalog>(&impl_)) {
        NoiseAction a;
        a.kind = NoiseAction::Kind::pauli_rotation;
        a.pauli = ca->axis;
        a.angle = ca->dist.sample(rng);
        out.actions.push_back(std::move(a));
        return;
    }

    if (const auto* da = std::get_if<DampingAnalog>(&impl_)) {
        if (da->gamma == 0.0) return;
        const double theta =
            da->gaussian_theta ? rng.normal()
                               : (rng.uniform01() < 0.5 ? -1.0 : 1.0);
        // K1 exp(i theta K2) = K1 + i theta K2 exactly (K2^2 = 0, K1 K2 = K2).
        const double root = std::sqrt(da->gamma);
        NoiseAction a;
        a.kind = NoiseAction::Kind::matrix_op;
        a.matrix = {cplx(1.0, 0.0), cplx(0.0, theta * root), cplx(0.0, 0.0),
                    cplx(std::sqrt(1.0 - da->gamma), 0.0)};
        a.renormalize = false;
        out.actions.push_back(std::move(a));
        return;
    }

    const auto& dd = std::get<DampingDigital>(impl_);
    if (dd.gamma == 0.0) return;
    if (state == nullptr) {
        throw ContractViolation(
            "digital amplitude damping needs the current state for its Kraus "
            "probabilities");
    }
    const double p2 = dd.gamma * state->qubit_one_weight(support_[0]);
    NoiseAction a;
    a.kind = NoiseAction::Kind::matrix_op;
    a.renormalize = true;
    if (rng.uniform01() < p2) {
        a.matrix = {cplx(0.0, 0.0), cplx(std::sqrt(dd.gamma), 0.0),
                    cplx(0.0, 0.0), cplx(0.0, 0.0)};
    } else {
        a.matrix = {cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0),
                    cplx(std::sqrt(1.0 - dd.gamma), 0.0)};
    }
    out.actions.push_back(std::move(a));
}

void apply_event(StateVector& state, const NoiseEvent& event) {
    for (const NoiseAction& a : event.actions) {
        switch (a.kind) {
            case NoiseAction::Kind::pauli_flip:
                state.apply_pauli(a.pauli, event.support);
                break;
            case NoiseAction::Kind::pauli_rotation:
                state.apply_pauli_rotation(a.pauli, event.support, a.angle);
                break;
            case NoiseAction::Kind::matrix_op: {
                const int q[1] = {event.support[0]};
                state.apply_matrix(std::span<const cplx>(a.matrix.data(), 4),
                                   std::span<const int>(q, 1));
                if (a.renormalize) {
                    const double n2 = state.norm_squared();
                    if (n2 <= 0.0) {
                        throw Error("apply_event: state annihilated");
                    }
                    state.rescale(1.0 / std::sqrt(n2));
                }
                break;
            }
        }
    }
}

double max_identity_deviation(const NoiseEvent& event) {
    if (event.actions.empty()) return 0.0;
    const int m = static_cast<int>(event.support.size());
    if (m < 1 || m > 2) {
        throw CapacityError(
            "max_identity_deviation: events are composed on supports of at "
            "most 2 qubits");
    }
    const int dim = 1 << m;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(dim, dim);
    for (const NoiseAction& a : event.actions) {
        Eigen::MatrixXcd op(dim, dim);
        switch (a.kind) {
            case NoiseAction::Kind::pauli_flip: {
                const auto pm = pauli_matrix(a.pauli);
                for (int r = 0; r < dim; ++r) {
                    for (int c = 0; c < dim; ++c) {
                        op(r, c) = pm[static_cast<std::size_t>(r * dim + c)];
                    }
                }
                break;
            }
            case NoiseAction::Kind::pauli_rotation: {
                const auto pm = pauli_matrix(a.pauli);
                const cplx cc(std::cos(a.angle), 0.0);
                const cplx is(0.0, std::sin(a.angle));
                for (int r = 0; r < dim; ++r) {
                    for (int c = 0; c < dim; ++c) {
                        op(r, c) = is * pm[static_cast<std::size_t>(r * dim + c)];
                        if (r == c) op(r, c) += cc;
                    }
                }
                break;
            }
            case NoiseAction::Kind::matrix_op: {
                if (m != 1) {
                    throw DimensionError(
                        "max_identity_deviation: matrix_op on multi-qubit "
                        "support");
                }
                for (int r = 0; r < 2; ++r) {
                    for (int c = 0; c < 2; ++c) {
                        op(r, c) = a.matrix[static_cast<std::size_t>(r * 2 + c)];
                    }
                }
                break;
            }
        }
        w = op * w;
    }
    w -= Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w);
    return svd.singularValues().maxCoeff();
}

}  // namespace analogsim
