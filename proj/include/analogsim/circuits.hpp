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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "analogsim/channel.hpp"
#include "analogsim/statevector.hpp"

namespace analogsim {

// Gate set: Pauli rotations exp(i*angle*P) plus Hadamard. "rx" with angle t
// is exp(i*t*X) on one qubit, "rzz" is exp(i*t*ZZ) on two, etc.
enum class GateKind { rx, rz, rzz, rxx, ryy, h };

const char* gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
int gate_arity(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<int, 2> qubits{0, 0};
    double angle = 0.0;

    static Gate one(GateKind kind, int q, double angle = 0.0) {
        return {kind, {q, 0}, angle};
    }
    static Gate two(GateKind kind, int q0, int q1, double angle) {
        return {kind, {q0, q1}, angle};
    }
};

struct CircuitOp {
    Gate gate;
    std::optional<NoiseChannel> noise;  // support must equal the gate qubits
};

struct NoisyCircuit {
    int num_qubits = 1;
    bool initial_plus = false;
    std::uint64_t initial_bits = 0;
    std::vector<CircuitOp> ops;
    // Counts of applied ops at which observables are evaluated; 0 records the
    // initial state.
    std::vector<std::size_t> record_points;
    std::vector<Observable> observables;
    bool record_entropy = false;
    int entropy_cut = 0;
    bool record_distribution = false;  // final Z-basis probabilities

    StateVector initial_state() const;
    std::size_t channel_count() const;
};

void apply_gate(StateVector& state, const Gate& gate);

// Dense matrix of a gate on its own qubits (2x2 or 4x4 row-major).
std::vector<cplx> gate_matrix(const Gate& gate);

// Re-targets a channel template onto specific circuit qubits.
NoiseChannel retarget_channel(const NoiseChannel& tmpl, std::vector<int> qubits);

struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // normalized (lo, hi), sorted
};

// Pairing model with rejection of loops and multi-edges; deterministic per
// seed. N must be even and >= 4.
Graph random_3_regular_graph(int num_vertices, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Benchmark builders. All are pure functions of their arguments.
// ---------------------------------------------------------------------------

// Periodic 2D Ising: per step, rzz(dt) on every lattice edge (noise after
// each), then rx(h*dt) on every site. Initial |+...+>, observable
// (1/N) sum X_j, record after every step.
NoisyCircuit build_ising_2d(int lx, int ly, double h, double dt, int steps,
                            const std::optional<NoiseChannel>& noise);

// Periodic XY chain quench: initial |0001 0001 ...>, per step rxx(-tau) on
// every bond then ryy(-tau), noise after each two-qubit gate. Observables:
// staggered magnetization and the projector onto sum_j Z_j = N/2.
NoisyCircuit build_xy_chain(int num_qubits, double tau, int steps,
                            const std::optional<NoiseChannel>& noise);

// Floquet adiabatic Max-Cut sweep: for s = 1/T..1, rx(dt*(1-s)) on all
// sites then rzz(dt*s) per edge with noise after each. Records the final
// bitstring distribution.
NoisyCircuit build_maxcut_floquet(const Graph& graph, int T, double dt,
                                  const std::optional<NoiseChannel>& noise);

// Open-chain tilted-field Ising: per step rzz(dt) on bonds (noise after
// each), rx(hx*dt), rz(hz*dt) layers. Initial |0...0>, records half-cut
// entropy per step.
NoisyCircuit build_tilted_ising(int num_qubits, double hx, double hz,
                                double dt, int steps,
                                const std::optional<NoiseChannel>& noise);

// Single qubit, n rz(pi/2) gates each followed by an X-error channel of
// probability q; observable Z, recorded at the end.
NoisyCircuit build_toy_model(double q, int n);

}  // namespace analogsim
