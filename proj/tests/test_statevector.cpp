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

#include <algorithm>
#include <cmath>

#include "analogsim/statevector.hpp"
#include "oracle_helpers.hpp"

using namespace analogsim;

namespace {

const std::vector<int> kQ0{0};

StateVector bell_pair() {
    StateVector s(2);
    s.apply_hadamard(0);
    // CX via ZZ-free route: |00>+|10> -> |00>+|11> with a controlled flip.
    // Use the dense matrix directly; the engine hosts arbitrary 4x4 gates.
    const cplx cx[16] = {{1, 0}, {0, 0}, {0, 0}, {0, 0},  //
                         {0, 0}, {0, 0}, {0, 0}, {1, 0},  //
                         {0, 0}, {0, 0}, {1, 0}, {0, 0},  //
                         {0, 0}, {1, 0}, {0, 0}, {0, 0}};
    const std::vector<int> q{0, 1};
    s.apply_matrix(std::span<const cplx>(cx, 16), q);
    return s;
}

}  // namespace

TEST_SUITE("statevector") {

TEST_CASE("pauli rotation basics") {
    StateVector s(1);
    s.apply_pauli_rotation(PauliString::from_text("X"), kQ0, 0.0);
    CHECK(std::abs(s.amplitudes()[0] - cplx(1, 0)) < 1e-15);

    const double alpha = 0.813;
    s.apply_pauli_rotation(PauliString::from_text("X"), kQ0, alpha);
    CHECK(std::abs(s.amplitudes()[0] - cplx(std::cos(alpha), 0)) < 1e-14);
    CHECK(std::abs(s.amplitudes()[1] - cplx(0, std::sin(alpha))) < 1e-14);

    StateVector zz(2);
    const std::vector<int> q01{0, 1};
    zz.apply_pauli_rotation(PauliString::from_text("ZZ"), q01, alpha);
    // |00> is a +1 eigenstate: global phase only, probabilities unchanged.
    CHECK(std::abs(zz.amplitudes()[0] -
                   cplx(std::cos(alpha), std::sin(alpha))) < 1e-14);
    CHECK(zz.bitstring_probability(0) == doctest::Approx(1.0));
}

TEST_CASE("rotation composition and unitarity") {
    const auto amps = oracle::random_state(4, 11);
    for (const char* text : {"XIZY", "ZZII", "XXXX", "IYIZ"}) {
        StateVector a(4), b(4);
        std::copy(amps.begin(), amps.end(), a.amplitudes().begin());
        std::copy(amps.begin(), amps.end(), b.amplitudes().begin());
        const std::vector<int> q{0, 1, 2, 3};
        const PauliString s = PauliString::from_text(text);
        a.apply_pauli_rotation(s, q, 0.4);
        a.apply_pauli_rotation(s, q, 0.35);
        b.apply_pauli_rotation(s, q, 0.75);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst,
                             std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
        }
        CHECK(worst < 1e-12);
        CHECK(a.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("apply_matrix hosts non-unitary operators") {
    StateVector s = StateVector::computational_basis(1, 1);
    const double gamma = 0.36;
    const cplx k1[4] = {{1, 0}, {0, 0}, {0, 0}, {std::sqrt(1 - gamma), 0}};
    s.apply_matrix(std::span<const cplx>(k1, 4), kQ0);
    CHECK(std::abs(s.amplitudes()[1] - cplx(std::sqrt(1 - gamma), 0)) < 1e-15);
    CHECK(s.norm_squared() == doctest::Approx(1.0 - gamma));

    StateVector t(2);
    t.apply_pauli(PauliString::from_text("X"), kQ0);
    CHECK(std::abs(t.amplitudes()[1] - cplx(1, 0)) < 1e-15);  // |10>
}

TEST_CASE("expectation values") {
    CHECK(StateVector(4).expectation(Observable::sx_average(4)) ==
          doctest::Approx(0.0));
    CHECK(StateVector::plus_state(4).expectation(Observable::sx_average(4)) ==
          doctest::Approx(1.0));

    // |0001>: qubit 3 down; staggered signs (+,-,+,-)/4.
    const StateVector s = StateVector::computational_basis(4, 1ULL << 3);
    CHECK(s.expectation(Observable::staggered_z(4)) == doctest::Approx(0.5));

    CHECK_THROWS_AS(StateVector(2).expectation(Observable::sx_average(4)),
                    DimensionError);
}

TEST_CASE("bitstring probabilities and top-k") {
    CHECK(StateVector(2).bitstring_probability(0) == doctest::Approx(1.0));
    StateVector plus(1);
    plus.apply_hadamard(0);
    CHECK(plus.bitstring_probability(0) == doctest::Approx(0.5));

    const auto top = bell_pair().top_k_probabilities(2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].first == 0);
    CHECK(top[0].second == doctest::Approx(0.5));
    CHECK(top[1].first == 3);
    CHECK(top[1].second == doctest::Approx(0.5));

    StateVector unnorm(1);
    unnorm.rescale(0.9);
    CHECK_THROWS_AS(unnorm.bitstring_probability(0), ContractViolation);
}

TEST_CASE("bipartite entropy") {
    CHECK(StateVector::plus_state(4).bipartite_entropy(2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bell_pair().bipartite_entropy(1) == doctest::Approx(std::log(2.0)));

    // GHZ on 4 qubits.
    StateVector ghz(4);
    ghz.amplitudes()[0] = cplx(std::sqrt(0.5), 0);
    ghz.amplitudes()[15] = cplx(std::sqrt(0.5), 0);
    CHECK(ghz.bipartite_entropy(2) == doctest::Approx(std::log(2.0)));

    CHECK_THROWS_AS(ghz.bipartite_entropy(0), DimensionError);
    CHECK_THROWS_AS(ghz.bipartite_entropy(4), DimensionError);
}

TEST_CASE("entropy is invariant under local unitaries") {
    StateVector s(4);
    std::mt19937_64 gen(5);
    const auto angle = [&] {
        return 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
    };
    // Entangle, then rotate locally on both sides of the cut.
    const std::vector<int> q12{1, 2};
    s.apply_hadamard(1);
    s.apply_pauli_rotation(PauliString::from_text("XY"), q12, 0.7);
    const double before = s.bipartite_entropy(2);
    for (int q = 0; q < 4; ++q) {
        const std::vector<int> qs{q};
        s.apply_pauli_rotation(PauliString::from_text("X"), qs, angle());
        s.apply_pauli_rotation(PauliString::from_text("Z"), qs, angle());
    }
    CHECK(std::abs(s.bipartite_entropy(2) - before) < 1e-9);
}

TEST_CASE("random circuit agrees with dense oracle at N=4") {
    const int n = 4;
    StateVector s(n);
    oracle::Vec v = oracle::to_vec(s.amplitudes());
    std::mt19937_64 gen(321);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int step = 0; step < 20; ++step) {
        const int q0 = static_cast<int>(gen() % n);
        int q1 = static_cast<int>(gen() % n);
        if (q1 == q0) q1 = (q1 + 1) % n;
        const double theta = nd(gen);
        const char* axes[] = {"XZ", "YY", "ZX", "XX", "ZZ"};
        const PauliString p = PauliString::from_text(axes[step % 5]);
        const std::vector<int> q{q0, q1};
        s.apply_pauli_rotation(p, q, theta);
        const oracle::Mat sp = oracle::embed(oracle::pauli_dense(p), q, n);
        v = (std::cos(theta) * oracle::Mat::Identity(16, 16) +
             cplx(0, 1) * std::sin(theta) * sp) *
            v;
    }
    CHECK(oracle::max_abs_diff(v, s.amplitudes()) < 1e-12);
}

TEST_CASE("capacity and index errors") {
    CHECK_THROWS_AS(StateVector(0), CapacityError);
    CHECK_THROWS_AS(StateVector(StateVector::max_qubits() + 1), CapacityError);
    StateVector s(2);
    const std::vector<int> bad{2};
    CHECK_THROWS_AS(
        s.apply_pauli_rotation(PauliString::from_text("X"), bad, 0.1),
        DimensionError);
}

}  // TEST_SUITE
