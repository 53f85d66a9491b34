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
#include <set>

#include "analogsim/density_matrix.hpp"
#include "analogsim/json_io.hpp"
#include "oracle_helpers.hpp"

using namespace analogsim;

namespace {

// Noiseless statevector series for comparison with the dense oracle.
std::vector<std::vector<double>> statevector_series(const NoisyCircuit& c) {
    StateVector st = c.initial_state();
    std::vector<std::vector<double>> out;
    std::size_t next = 0;
    const auto record = [&](std::size_t applied) {
        while (next < c.record_points.size() &&
               c.record_points[next] == applied) {
            std::vector<double> row;
            for (const auto& obs : c.observables) row.push_back(st.expectation(obs));
            if (c.record_entropy) row.push_back(st.bipartite_entropy(c.entropy_cut));
            out.push_back(row);
            ++next;
        }
    };
    record(0);
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
        apply_gate(st, c.ops[i].gate);
        record(i + 1);
    }
    return out;
}

NoiseChannel depol2(double eps) { return NoiseChannel::depolarizing(eps, {0, 1}); }

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("random 3-regular graphs") {
    const Graph k4 = random_3_regular_graph(4, 1);
    CHECK(k4.edges.size() == 6);  // K4 is the only 3-regular graph on 4 vertices

    const Graph g = random_3_regular_graph(20, 12345);
    CHECK(g.edges.size() == 30);
    std::vector<int> degree(20, 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : g.edges) {
        CHECK(a < b);
        CHECK(seen.emplace(a, b).second);
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    for (int d : degree) CHECK(d == 3);

    const Graph same = random_3_regular_graph(20, 12345);
    CHECK(same.edges == g.edges);
    const Graph other = random_3_regular_graph(20, 999);
    CHECK(other.edges != g.edges);

    CHECK_THROWS_AS(random_3_regular_graph(5, 1), ConfigError);
}

TEST_CASE("2D Ising builder") {
    const auto c0 = build_ising_2d(2, 2, 1.0, 0.1, 0, depol2(0.001));
    StateVector st = c0.initial_state();
    CHECK(st.expectation(c0.observables[0]) == doctest::Approx(1.0));

    const int steps = 5;
    const auto c = build_ising_2d(3, 3, 1.0, 0.1, steps, depol2(0.001));
    // 3x3 periodic: 9 horizontal + 9 vertical edges.
    CHECK(c.channel_count() == 18u * steps);
    CHECK(c.record_points.size() == static_cast<std::size_t>(steps) + 1);

    // Channel support matches its gate's qubits.
    for (const auto& op : c.ops) {
        if (!op.noise) continue;
        REQUIRE(op.noise->support.size() == 2);
        CHECK(op.noise->support[0] == op.gate.qubits[0]);
        CHECK(op.noise->support[1] == op.gate.qubits[1]);
    }

    // Builders are pure functions.
    const auto c2 = build_ising_2d(3, 3, 1.0, 0.1, steps, depol2(0.001));
    CHECK(circuit_to_json(c) == circuit_to_json(c2));

    CHECK_THROWS_AS(build_ising_2d(0, 2, 1.0, 0.1, 1, std::nullopt), ConfigError);
}

TEST_CASE("noiseless builders match the dense oracle on small instances") {
    const auto cases = std::vector<NoisyCircuit>{
        build_ising_2d(2, 2, 1.0, 0.1, 4, std::nullopt),
        build_ising_2d(2, 3, 1.0, 0.1, 3, std::nullopt),
        build_xy_chain(4, 0.1, 4, std::nullopt),
        build_tilted_ising(6, 0.9045, 0.8090, 0.3, 4, std::nullopt),
    };
    for (const auto& c : cases) {
        const auto expect = evolve_circuit_dm(c, /*strip_noise=*/true);
        const auto got = statevector_series(c);
        REQUIRE(got.size() == expect.size());
        for (std::size_t r = 0; r < expect.size(); ++r) {
            for (std::size_t k = 0; k < expect[r].size(); ++k) {
                CHECK(std::abs(got[r][k] - expect[r][k]) < 1e-9);
            }
        }
    }
}

TEST_CASE("XY chain: initial observables and symmetry conservation") {
    const auto c = build_xy_chain(8, 0.1, 6, std::nullopt);
    const auto series = statevector_series(c);
    // Step 0: staggered magnetization 1/2, projector 1.
    CHECK(series[0][0] == doctest::Approx(0.5));
    CHECK(series[0][1] == doctest::Approx(1.0));
    // Noiseless XY evolution conserves the sum-Z sector.
    for (const auto& row : series) {
        CHECK(row[1] == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(build_xy_chain(6, 0.1, 1, std::nullopt), ConfigError);
}

TEST_CASE("tilted-field Ising starts with zero entropy") {
    const auto c = build_tilted_ising(6, 0.9045, 0.8090, 0.3, 3, std::nullopt);
    CHECK(c.record_entropy);
    CHECK(c.entropy_cut == 3);
    const auto series = statevector_series(c);
    CHECK(series[0][0] == doctest::Approx(0.0).epsilon(1e-12));
    // Entropy grows once the chain entangles.
    CHECK(series.back()[0] > 0.01);
    // Noise attaches only after the two-qubit layer: (N-1) per step.
    const auto noisy = build_tilted_ising(6, 0.9045, 0.8090, 0.3, 3, depol2(0.003));
    CHECK(noisy.channel_count() == 5u * 3u);
}

TEST_CASE("maxcut floquet builder") {
    Graph c4;
    c4.num_vertices = 4;
    c4.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};

    // dt = 0: the state stays |+...+>, distribution uniform.
    const auto flat = build_maxcut_floquet(c4, 10, 0.0, std::nullopt);
    StateVector st = flat.initial_state();
    for (const auto& op : flat.ops) apply_gate(st, op.gate);
    for (double p : st.probabilities()) CHECK(p == doctest::Approx(1.0 / 16.0));

    // Slow noiseless sweep concentrates on the two alternating cut states.
    const auto sweep = build_maxcut_floquet(c4, 60, 0.25, std::nullopt);
    StateVector fin = sweep.initial_state();
    for (const auto& op : sweep.ops) apply_gate(fin, op.gate);
    const auto top = fin.top_k_probabilities(2);
    const std::set<std::uint64_t> states{top[0].first, top[1].first};
    CHECK(states == std::set<std::uint64_t>{5, 10});
    CHECK(top[0].second > 0.45);

    CHECK(sweep.record_distribution);
    const auto noisy = build_maxcut_floquet(c4, 7, 0.25, depol2(0.001));
    CHECK(noisy.channel_count() == 4u * 7u);
}

TEST_CASE("toy model builder") {
    const auto c = build_toy_model(0.01, 50);
    CHECK(c.num_qubits == 1);
    CHECK(c.ops.size() == 50);
    CHECK(c.channel_count() == 50);
    // Noiseless rz gates leave |0> at <Z> = 1.
    const auto series = statevector_series(c);
    REQUIRE(series.size() == 1);
    CHECK(series[0][0] == doctest::Approx(1.0));
}

TEST_CASE("circuit json round trip") {
    const auto c = build_xy_chain(4, 0.1, 2, depol2(0.002));
    const json j = circuit_to_json(c);
    const NoisyCircuit back = circuit_from_json(j);
    CHECK(circuit_to_json(back) == j);

    // Spot checks on the schema.
    CHECK(j["num_qubits"] == 4);
    CHECK(j["initial"] == "0001");
    CHECK(j["ops"][0]["gate"] == "rxx");
    CHECK(j["ops"][0]["noise"]["type"] == "depolarizing");
}

}  // TEST_SUITE
