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

#include <doctest.h>

#include <cmath>

#include "analogsim/density_matrix.hpp"
#include "oracle_helpers.hpp"

using namespace analogsim;

TEST_SUITE("density_matrix") {

TEST_CASE("unitary conjugation") {
    DensityMatrix rho(1);
    const cplx id[4] = {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
    const std::vector<int> q0{0};
    rho.apply_unitary(std::span<const cplx>(id, 4), q0);
    CHECK(std::abs(rho.at(0, 0) - cplx(1, 0)) < 1e-15);

    const cplx x[4] = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    rho.apply_unitary(std::span<const cplx>(x, 4), q0);
    CHECK(std::abs(rho.at(1, 1) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(rho.at(0, 0)) < 1e-15);

    // Random 3-qubit rotations preserve trace and hermiticity.
    DensityMatrix r3 = DensityMatrix::plus_state(3);
    for (int i = 0; i < 5; ++i) {
        const Gate g = Gate::two(GateKind::rxx, i % 3, (i + 1) % 3, 0.3 + i);
        const auto m = gate_matrix(g);
        const std::vector<int> qq{g.qubits[0], g.qubits[1]};
        r3.apply_unitary(m, qq);
    }
    CHECK(std::abs(r3.trace_real() - 1.0) < 1e-13);
    CHECK(r3.hermiticity_error() < 1e-13);
    CHECK(r3.min_eigenvalue() > -1e-10);
}

TEST_CASE("channel application") {
    DensityMatrix one = DensityMatrix::computational_basis(1, 1);
    one.apply_channel(NoiseChannel::amplitude_damping(1.0, {0}));
    CHECK(std::abs(one.at(0, 0) - cplx(1, 0)) < 1e-14);
    CHECK(std::abs(one.at(1, 1)) < 1e-14);

    const double q = 0.23;
    PauliProbabilities probs;
    probs[PauliString::identity(1)] = 1.0 - q;
    probs[PauliString::from_text("X")] = q;
    DensityMatrix zero(1);
    zero.apply_channel(NoiseChannel::pauli(probs, {0}));
    CHECK(std::abs(zero.at(0, 0) - cplx(1.0 - q, 0)) < 1e-14);
    CHECK(std::abs(zero.at(1, 1) - cplx(q, 0)) < 1e-14);

    DensityMatrix dm2 = DensityMatrix::plus_state(2);
    dm2.apply_channel(NoiseChannel::depolarizing(0.0, {0, 1}));
    CHECK(std::abs(dm2.at(0, 3) - cplx(0.25, 0)) < 1e-14);

    dm2.apply_channel(NoiseChannel::depolarizing(0.037, {0, 1}));
    CHECK(std::abs(dm2.trace_real() - 1.0) < 1e-12);
    CHECK(dm2.hermiticity_error() < 1e-12);
}

TEST_CASE("noiseless circuit evolution matches the statevector engine") {
    const auto circuit = build_xy_chain(4, 0.1, 3, std::nullopt);
    const auto dm_series = evolve_circuit_dm(circuit);

    // Statevector route.
    StateVector st = circuit.initial_state();
    std::vector<std::vector<double>> sv_series;
    std::size_t next = 0;
    const auto record = [&](std::size_t applied) {
        while (next < circuit.record_points.size() &&
               circuit.record_points[next] == applied) {
            std::vector<double> row;
            for (const auto& obs : circuit.observables) {
                row.push_back(st.expectation(obs));
            }
            sv_series.push_back(row);
            ++next;
        }
    };
    record(0);
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        apply_gate(st, circuit.ops[i].gate);
        record(i + 1);
    }

    REQUIRE(dm_series.size() == sv_series.size());
    for (std::size_t r = 0; r < dm_series.size(); ++r) {
        for (std::size_t c = 0; c < dm_series[r].size(); ++c) {
            CHECK(std::abs(dm_series[r][c] - sv_series[r][c]) < 1e-10);
        }
    }
}

TEST_CASE("toy model closed form: <Z> = (1-2q)^n") {
    const double q = 0.01;
    const int n = 50;
    const auto circuit = build_toy_model(q, n);
    const auto series = evolve_circuit_dm(circuit);
    REQUIRE(series.size() == 1);
    const double expected = std::pow(1.0 - 2.0 * q, n);
    CHECK(expected == doctest::Approx(0.36417).epsilon(1e-4));
    CHECK(series[0][0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("capacity cap") {
    CHECK_THROWS_AS(DensityMatrix(13), CapacityError);
}

}  // TEST_SUITE
