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

#include "analogsim/density_matrix.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>

namespace analogsim {

namespace {

cplx i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// Bit values of the addressed qubits within a full index.
std::vector<std::size_t> subspace_strides(std::span<const int> qubits) {
    std::vector<std::size_t> bits;
    for (int q : qubits) bits.push_back(std::size_t{1} << q);
    return bits;
}

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("DensityMatrix: num_qubits must be in [1, " +
                            std::to_string(kMaxQubits) + "], got " +
                            std::to_string(num_qubits));
    }
    m_.assign(dim() * dim(), cplx(0.0, 0.0));
    m_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
    DensityMatrix rho(psi.num_qubits());
    const auto amps = psi.amplitudes();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            rho.at(r, c) = amps[r] * std::conj(amps[c]);
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::computational_basis(int num_qubits,
                                                 std::uint64_t bits) {
    DensityMatrix rho(num_qubits);
    rho.m_[0] = 0.0;
    rho.at(bits, bits) = 1.0;
    return rho;
}

DensityMatrix DensityMatrix::plus_state(int num_qubits) {
    DensityMatrix rho(num_qubits);
    const double v = std::pow(2.0, -num_qubits);
    std::fill(rho.m_.begin(), rho.m_.end(), cplx(v, 0.0));
    return rho;
}

void DensityMatrix::left_apply(std::span<const cplx> matrix,
                               std::span<const int> qubits) {
    const std::size_t d = dim();
    const auto bits = subspace_strides(qubits);
    const std::size_t sub = std::size_t{1} << qubits.size();
    std::uint64_t qmask = 0;
    for (auto b : bits) qmask |= b;
    std::vector<cplx> scratch(sub);
    for (std::size_t base = 0; base < d; ++base) {
        if (base & qmask) continue;
        for (std::size_t col = 0; col < d; ++col) {
            for (std::size_t s = 0; s < sub; ++s) {
                std::size_t row = base;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    if ((s >> i) & 1) row |= bits[i];
                }
                scratch[s] = m_[row * d + col];
            }
            for (std::size_t s = 0; s < sub; ++s) {
                cplx acc(0.0, 0.0);
                for (std::size_t t = 0; t < sub; ++t) {
                    acc += matrix[s * sub + t] * scratch[t];
                }
                std::size_t row = base;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    if ((s >> i) & 1) row |= bits[i];
                }
                m_[row * d + col] = acc;
            }
        }
    }
}

void DensityMatrix::right_apply_dagger(std::span<const cplx> matrix,
                                       std::span<const int> qubits) {
    const std::size_t d = dim();
    const auto bits = subspace_strides(qubits);
    const std::size_t sub = std::size_t{1} << qubits.size();
    std::uint64_t qmask = 0;
    for (auto b : bits) qmask |= b;
    std::vector<cplx> scratch(sub);
    for (std::size_t base = 0; base < d; ++base) {
        if (base & qmask) continue;
        for (std::size_t row = 0; row < d; ++row) {
            for (std::size_t s = 0; s < sub; ++s) {
                std::size_t col = base;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    if ((s >> i) & 1) col |= bits[i];
                }
                scratch[s] = m_[row * d + col];
            }
            // (rho M^dag)[., c] = sum_t rho[., t] conj(M[c][t])
            for (std::size_t s = 0; s < sub; ++s) {
                cplx acc(0.0, 0.0);
                for (std::size_t t = 0; t < sub; ++t) {
                    acc += scratch[t] * std::conj(matrix[s * sub + t]);
                }
                std::size_t col = base;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    if ((s >> i) & 1) col |= bits[i];
                }
                m_[row * d + col] = acc;
            }
        }
    }
}

void DensityMatrix::apply_unitary(std::span<const cplx> matrix,
                                  std::span<const int> qubits) {
    if (!((matrix.size() == 4 && qubits.size() == 1) ||
          (matrix.size() == 16 && qubits.size() == 2))) {
        throw DimensionError("apply_unitary: matrix/qubit size mismatch");
    }
    for (int q : qubits) {
        if (q < 0 || q >= num_qubits_) {
            throw DimensionError("apply_unitary: qubit out of range");
        }
    }
    left_apply(matrix, qubits);
    right_apply_dagger(matrix, qubits);
}

void DensityMatrix::apply_channel(const NoiseChannel& channel) {
    for (int q : channel.support) {
        if (q < 0 || q >= num_qubits_) {
            throw DimensionError("apply_channel: support qubit out of range");
        }
    }
    const auto kraus = kraus_operators(channel);
    std::vector<cplx> out(m_.size(), cplx(0.0, 0.0));
    std::vector<cplx> saved = m_;
    for (const KrausOp& k : kraus) {
        if (k.weight == 0.0) continue;
        m_ = saved;
        left_apply(k.matrix, channel.support);
        right_apply_dagger(k.matrix, channel.support);
        for (std::size_t i = 0; i < m_.size(); ++i) out[i] += k.weight * m_[i];
    }
    m_ = std::move(out);
}

double DensityMatrix::expectation(const Observable& obs) const {
    const std::size_t d = dim();
    if (obs.kind() == Observable::Kind::diagonal_projector) {
        const int diff = num_qubits_ - obs.sector();
        if (diff < 0 || diff % 2 != 0) return 0.0;
        const int ones = diff / 2;
        double acc = 0.0;
        for (std::size_t b = 0; b < d; ++b) {
            if (std::popcount(b) == ones) acc += m_[b * d + b].real();
        }
        return acc;
    }
    // tr[rho S] = sum_b phi(b) rho[b][b^x] for S|b> = phi(b)|b^x>.
    cplx acc(0.0, 0.0);
    for (const Observable::Term& t : obs.terms()) {
        std::uint64_t x, z;
        expand_masks(t.pauli, t.qubits, x, z);
        const cplx phase_k = i_power(std::popcount(x & z));
        cplx term(0.0, 0.0);
        for (std::size_t b = 0; b < d; ++b) {
            const cplx phi =
                (std::popcount(z & b) & 1) ? -phase_k : phase_k;
            term += phi * m_[b * d + (b ^ x)];
        }
        acc += t.coeff * term;
    }
    if (std::abs(acc.imag()) > 1e-9 * std::max(1.0, std::abs(acc.real()))) {
        throw Error("DensityMatrix::expectation: non-real value " +
                    std::to_string(acc.imag()));
    }
    return acc.real();
}

double DensityMatrix::trace_real() const {
    double tr = 0.0;
    for (std::size_t b = 0; b < dim(); ++b) tr += m_[b * dim() + b].real();
    return tr;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            worst = std::max(worst,
                             std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd rho(static_cast<long>(dim()), static_cast<long>(dim()));
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c < dim(); ++c) {
            rho(static_cast<long>(r), static_cast<long>(c)) = at(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::vector<std::vector<double>> evolve_circuit_dm(const NoisyCircuit& circuit,
                                                   bool strip_noise) {
    if (circuit.num_qubits > DensityMatrix::kMaxQubits) {
        throw CapacityError("evolve_circuit_dm: N exceeds the density-matrix cap");
    }
    DensityMatrix rho =
        circuit.initial_plus
            ? DensityMatrix::plus_state(circuit.num_qubits)
            : DensityMatrix::computational_basis(circuit.num_qubits,
                                                 circuit.initial_bits);
    const auto record = [&](std::vector<std::vector<double>>& out) {
        std::vector<double> row;
        row.reserve(circuit.observables.size());
        for (const Observable& obs : circuit.observables) {
            row.push_back(rho.expectation(obs));
        }
        out.push_back(std::move(row));
    };

    std::vector<std::vector<double>> out;
    std::size_t next_record = 0;
    const auto maybe_record = [&](std::size_t applied) {
        while (next_record < circuit.record_points.size() &&
               circuit.record_points[next_record] == applied) {
            record(out);
            ++next_record;
        }
    };
    maybe_record(0);
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        const CircuitOp& op = circuit.ops[i];
        const int arity = gate_arity(op.gate.kind);
        const auto m = gate_matrix(op.gate);
        rho.apply_unitary(m, std::span<const int>(op.gate.qubits.data(),
                                                  static_cast<std::size_t>(arity)));
        if (op.noise && !strip_noise) rho.apply_channel(*op.noise);
        maybe_record(i + 1);
    }
    return out;
}

}  // namespace analogsim
