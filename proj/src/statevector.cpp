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

#include "analogsim/statevector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace analogsim {

// ---------------------------------------------------------------------------
// Observable
// ---------------------------------------------------------------------------

Observable Observable::pauli_sum(std::string name, std::vector<Term> terms) {
    Observable o;
    o.kind_ = Kind::pauli_sum;
    o.name_ = std::move(name);
    o.terms_ = std::move(terms);
    for (const Term& t : o.terms_) {
        if (static_cast<int>(t.qubits.size()) != t.pauli.num_qubits()) {
            throw DimensionError("Observable: term support does not match string");
        }
        for (int q : t.qubits) o.max_qubit_ = std::max(o.max_qubit_, q);
    }
    return o;
}

Observable Observable::diagonal_projector(std::string name, int sector) {
    Observable o;
    o.kind_ = Kind::diagonal_projector;
    o.name_ = std::move(name);
    o.sector_ = sector;
    return o;
}

Observable Observable::sx_average(int num_qubits) {
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(num_qubits));
    const double c = 1.0 / num_qubits;
    for (int q = 0; q < num_qubits; ++q) {
        terms.push_back({c, PauliString::from_text("X"), {q}});
    }
    return pauli_sum("sx", std::move(terms));
}

Observable Observable::staggered_z(int num_qubits) {
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) {
        const double c = ((q % 2 == 0) ? 1.0 : -1.0) / num_qubits;
        terms.push_back({c, PauliString::from_text("Z"), {q}});
    }
    return pauli_sum("sz_pi", std::move(terms));
}

Observable Observable::single(std::string name, double coeff,
                              const PauliString& pauli,
                              std::vector<int> qubits) {
    return pauli_sum(std::move(name), {{coeff, pauli, std::move(qubits)}});
}

// ---------------------------------------------------------------------------
// StateVector
// ---------------------------------------------------------------------------

int StateVector::max_qubits() {
    static const int cap = [] {
        if (const char* env = std::getenv("ANALOGSIM_MAX_QUBITS")) {
            const int v = std::atoi(env);
            if (v >= 1 && v <= 34) return v;
        }
        return 26;
    }();
    return cap;
}

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits), k_(&kern::active_kernels()) {
    if (num_qubits < 1 || num_qubits > max_qubits()) {
        throw CapacityError("StateVector: num_qubits must be in [1, " +
                            std::to_string(max_qubits()) + "], got " +
                            std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, cplx(0.0, 0.0));
    amps_[0] = cplx(1.0, 0.0);
}

StateVector StateVector::computational_basis(int num_qubits,
                                             std::uint64_t bits) {
    StateVector s(num_qubits);
    if (num_qubits < 64 && (bits >> num_qubits) != 0) {
        throw DimensionError("computational_basis: bits beyond qubit range");
    }
    s.amps_[0] = cplx(0.0, 0.0);
    s.amps_[bits] = cplx(1.0, 0.0);
    return s;
}

StateVector StateVector::plus_state(int num_qubits) {
    StateVector s(num_qubits);
    const double a = std::pow(2.0, -0.5 * num_qubits);
    std::fill(s.amps_.begin(), s.amps_.end(), cplx(a, 0.0));
    return s;
}

void StateVector::check_qubits(std::span<const int> qubits) const {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= num_qubits_) {
            throw DimensionError("qubit index " + std::to_string(qubits[i]) +
                                 " out of range for " +
                                 std::to_string(num_qubits_) + " qubits");
        }
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw DimensionError("duplicate qubit index " +
                                     std::to_string(qubits[i]));
            }
        }
    }
}

void StateVector::apply_matrix(std::span<const cplx> matrix,
                               std::span<const int> qubits) {
    check_qubits(qubits);
    if (matrix.size() == 4 && qubits.size() == 1) {
        k_->apply_matrix2(amps_.data(), amps_.size(), qubits[0], matrix.data());
    } else if (matrix.size() == 16 && qubits.size() == 2) {
        k_->apply_matrix4(amps_.data(), amps_.size(), qubits[0], qubits[1],
                          matrix.data());
    } else {
        throw DimensionError("apply_matrix: matrix size " +
                             std::to_string(matrix.size()) +
                             " does not match qubit count " +
                             std::to_string(qubits.size()));
    }
}

void StateVector::apply_pauli(const PauliString& s,
                              std::span<const int> qubits) {
    check_qubits(qubits);
    std::uint64_t x, z;
    expand_masks(s, qubits, x, z);
    k_->apply_pauli(amps_.data(), amps_.size(), x, z);
}

void StateVector::apply_pauli_rotation(const PauliString& s,
                                       std::span<const int> qubits,
                                       double theta) {
    check_qubits(qubits);
    std::uint64_t x, z;
    expand_masks(s, qubits, x, z);
    k_->apply_pauli_rotation(amps_.data(), amps_.size(), x, z, std::cos(theta),
                             std::sin(theta));
}

void StateVector::apply_hadamard(int qubit) {
    static const double r = 0.70710678118654752440;
    const cplx m[4] = {{r, 0}, {r, 0}, {r, 0}, {-r, 0}};
    const int q[1] = {qubit};
    apply_matrix(std::span<const cplx>(m, 4), std::span<const int>(q, 1));
}

double StateVector::norm_squared() const {
    return k_->norm_squared(amps_.data(), amps_.size());
}

void StateVector::rescale(double factor) {
    k_->rescale(amps_.data(), amps_.size(), factor);
}

double StateVector::qubit_one_weight(int qubit) const {
    const int q[1] = {qubit};
    check_qubits(std::span<const int>(q, 1));
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        if (b & bit) acc += std::norm(amps_[b]);
    }
    return acc;
}

double StateVector::expectation(const Observable& obs) const {
    if (obs.kind() == Observable::Kind::diagonal_projector) {
        // Eigenvalue of sum_j Z_j is N - 2*popcount(b).
        const int diff = num_qubits_ - obs.sector();
        if (diff < 0 || diff % 2 != 0 || obs.sector() < -num_qubits_) return 0.0;
        const int ones = diff / 2;
        double acc = 0.0;
        for (std::size_t b = 0; b < amps_.size(); ++b) {
            if (std::popcount(b) == ones) acc += std::norm(amps_[b]);
        }
        return acc;
    }
    if (obs.max_qubit() >= num_qubits_) {
        throw DimensionError("expectation: observable acts on qubit " +
                             std::to_string(obs.max_qubit()) + " but state has " +
                             std::to_string(num_qubits_));
    }
    cplx acc(0.0, 0.0);
    for (const Observable::Term& t : obs.terms()) {
        std::uint64_t x, z;
        expand_masks(t.pauli, t.qubits, x, z);
        acc += t.coeff * k_->pauli_expectation(amps_.data(), amps_.size(), x, z);
    }
    if (std::abs(acc.imag()) >= 1e-10 * std::max(1.0, std::abs(acc.real()))) {
        throw Error("expectation: Hermitian sum produced imaginary part " +
                    std::to_string(acc.imag()));
    }
    return acc.real();
}

double StateVector::bitstring_probability(std::uint64_t bits) const {
    if (num_qubits_ < 64 && (bits >> num_qubits_) != 0) {
        throw DimensionError("bitstring_probability: bits beyond qubit range");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-9) {
        throw ContractViolation(
            "bitstring_probability: state is not normalized");
    }
    return std::norm(amps_[bits]);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t b = 0; b < amps_.size(); ++b) p[b] = std::norm(amps_[b]);
    return p;
}

std::vector<std::pair<std::uint64_t, double>> StateVector::top_k_probabilities(
    int k) const {
    if (std::abs(norm_squared() - 1.0) > 1e-9) {
        throw ContractViolation("top_k_probabilities: state is not normalized");
    }
    std::vector<std::pair<std::uint64_t, double>> all;
    all.reserve(amps_.size());
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        all.emplace_back(b, std::norm(amps_[b]));
    }
    const std::size_t keep =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), all.size());
    const auto by_prob = [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;  // tie-break on bitstring value
    };
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep),
                      all.end(), by_prob);
    all.resize(keep);
    return all;
}

double StateVector::bipartite_entropy(int cut) const {
    if (cut < 1 || cut >= num_qubits_) {
        throw DimensionError("bipartite_entropy: cut must be in [1, N-1]");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-9) {
        throw ContractViolation("bipartite_entropy: state is not normalized");
    }
    const std::size_t dk = std::size_t{1} << cut;
    const std::size_t dc = amps_.size() >> cut;
    // Gram matrix of the 2^cut x 2^(N-cut) amplitude matrix; its eigenvalues
    // are the squared singular values.
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<long>(dk),
                                                  static_cast<long>(dk));
    for (std::size_t c = 0; c < dc; ++c) {
        const cplx* col = amps_.data() + (c << cut);
        for (std::size_t r = 0; r < dk; ++r) {
            for (std::size_t r2 = 0; r2 <= r; ++r2) {
                rho(static_cast<long>(r), static_cast<long>(r2)) +=
                    col[r] * std::conj(col[r2]);
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        rho, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()[i];
        if (lam > 1e-15) entropy -= lam * std::log(lam);
    }
    return entropy;
}

}  // namespace analogsim
