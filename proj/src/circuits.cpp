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

#include "analogsim/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "analogsim/rng.hpp"

namespace analogsim {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

const char* kGateNames[] = {"rx", "rz", "rzz", "rxx", "ryy", "h"};

PauliString rotation_axis(GateKind kind) {
    switch (kind) {
        case GateKind::rx: return PauliString::from_text("X");
        case GateKind::rz: return PauliString::from_text("Z");
        case GateKind::rzz: return PauliString::from_text("ZZ");
        case GateKind::rxx: return PauliString::from_text("XX");
        case GateKind::ryy: return PauliString::from_text("YY");
        case GateKind::h: throw Error("rotation_axis: h is not a rotation");
    }
    throw Error("rotation_axis: unreachable");
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
    return kGateNames[static_cast<int>(kind)];
}

GateKind parse_gate_kind(std::string_view name) {
    for (int i = 0; i < 6; ++i) {
        if (name == kGateNames[i]) return static_cast<GateKind>(i);
    }
    throw ConfigError("unknown gate '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::rzz:
        case GateKind::rxx:
        case GateKind::ryy:
            return 2;
        default:
            return 1;
    }
}

StateVector NoisyCircuit::initial_state() const {
    return initial_plus ? StateVector::plus_state(num_qubits)
                        : StateVector::computational_basis(num_qubits,
                                                           initial_bits);
}

std::size_t NoisyCircuit::channel_count() const {
    std::size_t n = 0;
    for (const CircuitOp& op : ops) n += op.noise.has_value() ? 1 : 0;
    return n;
}

void apply_gate(StateVector& state, const Gate& gate) {
    if (gate.kind == GateKind::h) {
        state.apply_hadamard(gate.qubits[0]);
        return;
    }
    const int arity = gate_arity(gate.kind);
    state.apply_pauli_rotation(
        rotation_axis(gate.kind),
        std::span<const int>(gate.qubits.data(), static_cast<std::size_t>(arity)),
        gate.angle);
}

std::vector<cplx> gate_matrix(const Gate& gate) {
    if (gate.kind == GateKind::h) {
        const double r = std::sqrt(0.5);
        return {cplx(r, 0), cplx(r, 0), cplx(r, 0), cplx(-r, 0)};
    }
    // cos(t) Id + i sin(t) P
    std::vector<cplx> m = pauli_matrix(rotation_axis(gate.kind));
    const std::size_t dim = gate_arity(gate.kind) == 1 ? 2 : 4;
    const cplx c(std::cos(gate.angle), 0.0);
    const cplx is(0.0, std::sin(gate.angle));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) {
            m[r * dim + col] *= is;
            if (r == col) m[r * dim + col] += c;
        }
    }
    return m;
}

NoiseChannel retarget_channel(const NoiseChannel& tmpl,
                              std::vector<int> qubits) {
    if (static_cast<int>(qubits.size()) != tmpl.num_qubits()) {
        throw DimensionError("retarget_channel: template acts on " +
                             std::to_string(tmpl.num_qubits()) +
                             " qubits, gate has " +
                             std::to_string(qubits.size()));
    }
    NoiseChannel out = tmpl;
    out.support = std::move(qubits);
    return out;
}

Graph random_3_regular_graph(int num_vertices, std::uint64_t seed) {
    if (num_vertices < 4 || num_vertices % 2 != 0) {
        throw ConfigError("random_3_regular_graph: need even N >= 4, got " +
                          std::to_string(num_vertices));
    }
    Rng rng(splitmix64(seed));
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(3 * num_vertices));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        stubs.clear();
        for (int v = 0; v < num_vertices; ++v) {
            stubs.push_back(v);
            stubs.push_back(v);
            stubs.push_back(v);
        }
        for (std::size_t i = stubs.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(
                rng.uniform01() * static_cast<double>(i));
            std::swap(stubs[i - 1], stubs[j]);
        }
        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            const int a = std::min(stubs[i], stubs[i + 1]);
            const int b = std::max(stubs[i], stubs[i + 1]);
            if (a == b || !edges.emplace(a, b).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Graph g;
        g.num_vertices = num_vertices;
        g.edges.assign(edges.begin(), edges.end());
        return g;
    }
    throw Error("random_3_regular_graph: pairing model failed to converge");
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace {

void check_capacity(int n) {
    if (n < 1 || n > StateVector::max_qubits()) {
        throw CapacityError("circuit needs " + std::to_string(n) +
                            " qubits; cap is " +
                            std::to_string(StateVector::max_qubits()));
    }
}

void push_two_qubit(NoisyCircuit& c, GateKind kind, int a, int b, double angle,
                    const std::optional<NoiseChannel>& noise) {
    CircuitOp op{Gate::two(kind, a, b, angle), std::nullopt};
    if (noise) op.noise = retarget_channel(*noise, {a, b});
    c.ops.push_back(std::move(op));
}

// Periodic square-lattice edges, row-major horizontal then vertical; when a
// dimension has length 2 the wrap-around duplicates are dropped.
std::vector<std::pair<int, int>> lattice_edges(int lx, int ly) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    const auto site = [lx](int x, int y) { return x + lx * y; };
    const auto add = [&](int a, int b) {
        if (a == b) return;  // length-1 dimension
        const auto e = std::minmax(a, b);
        if (seen.emplace(e.first, e.second).second) {
            edges.emplace_back(a, b);
        }
    };
    for (int y = 0; y < ly; ++y) {
        for (int x = 0; x < lx; ++x) add(site(x, y), site((x + 1) % lx, y));
    }
    for (int y = 0; y < ly; ++y) {
        for (int x = 0; x < lx; ++x) add(site(x, y), site(x, (y + 1) % ly));
    }
    return edges;
}

}  // namespace

NoisyCircuit build_ising_2d(int lx, int ly, double h, double dt, int steps,
                            const std::optional<NoiseChannel>& noise) {
    if (lx < 1 || ly < 1) throw ConfigError("build_ising_2d: bad lattice dims");
    const int n = lx * ly;
    check_capacity(n);
    NoisyCircuit c;
    c.num_qubits = n;
    c.initial_plus = true;
    c.observables.push_back(Observable::sx_average(n));
    c.record_points.push_back(0);
    const auto edges = lattice_edges(lx, ly);
    for (int step = 0; step < steps; ++step) {
        for (const auto& [a, b] : edges) {
            push_two_qubit(c, GateKind::rzz, a, b, dt, noise);
        }
        for (int q = 0; q < n; ++q) {
            c.ops.push_back({Gate::one(GateKind::rx, q, h * dt), std::nullopt});
        }
        c.record_points.push_back(c.ops.size());
    }
    return c;
}

NoisyCircuit build_xy_chain(int num_qubits, double tau, int steps,
                            const std::optional<NoiseChannel>& noise) {
    if (num_qubits % 4 != 0 || num_qubits < 4) {
        throw ConfigError(
            "build_xy_chain: N must be a positive multiple of 4 for the "
            "|0001...> pattern, got " +
            std::to_string(num_qubits));
    }
    check_capacity(num_qubits);
    NoisyCircuit c;
    c.num_qubits = num_qubits;
    for (int q = 3; q < num_qubits; q += 4) c.initial_bits |= 1ULL << q;
    c.observables.push_back(Observable::staggered_z(num_qubits));
    c.observables.push_back(
        Observable::diagonal_projector("projector", num_qubits / 2));
    c.record_points.push_back(0);
    for (int step = 0; step < steps; ++step) {
        // Per bond, XX then YY: the same-bond rotations commute, so each
        // bond factor equals exp(-i tau (XX+YY)) and conserves sum-Z
        // exactly; layering all XX before all YY would not.
        for (int q = 0; q < num_qubits; ++q) {
            push_two_qubit(c, GateKind::rxx, q, (q + 1) % num_qubits, -tau,
                           noise);
            push_two_qubit(c, GateKind::ryy, q, (q + 1) % num_qubits, -tau,
                           noise);
        }
        c.record_points.push_back(c.ops.size());
    }
    return c;
}

NoisyCircuit build_maxcut_floquet(const Graph& graph, int T, double dt,
                                  const std::optional<NoiseChannel>& noise) {
    if (T < 1) throw ConfigError("build_maxcut_floquet: T must be >= 1");
    check_capacity(graph.num_vertices);
    NoisyCircuit c;
    c.num_qubits = graph.num_vertices;
    c.initial_plus = true;
    c.record_distribution = true;
    for (int k = 1; k <= T; ++k) {
        const double s = static_cast<double>(k) / T;
        for (int q = 0; q < graph.num_vertices; ++q) {
            c.ops.push_back(
                {Gate::one(GateKind::rx, q, dt * (1.0 - s)), std::nullopt});
        }
        for (const auto& [a, b] : graph.edges) {
            // -dt*s: the sweep must track the ground state of +sum(ZZ),
            // whose minima are the max-cut strings; the +dt*s sign lands on
            // the ferromagnetic (minimum-cut) pair instead.
            push_two_qubit(c, GateKind::rzz, a, b, -dt * s, noise);
        }
    }
    c.record_points.push_back(c.ops.size());
    return c;
}

NoisyCircuit build_tilted_ising(int num_qubits, double hx, double hz,
                                double dt, int steps,
                                const std::optional<NoiseChannel>& noise) {
    if (num_qubits < 2) throw ConfigError("build_tilted_ising: need N >= 2");
    check_capacity(num_qubits);
    NoisyCircuit c;
    c.num_qubits = num_qubits;
    c.record_entropy = true;
    c.entropy_cut = num_qubits / 2;
    c.record_points.push_back(0);
    for (int step = 0; step < steps; ++step) {
        for (int q = 0; q + 1 < num_qubits; ++q) {
            push_two_qubit(c, GateKind::rzz, q, q + 1, dt, noise);
        }
        for (int q = 0; q < num_qubits; ++q) {
            c.ops.push_back({Gate::one(GateKind::rx, q, hx * dt), std::nullopt});
        }
        for (int q = 0; q < num_qubits; ++q) {
            c.ops.push_back({Gate::one(GateKind::rz, q, hz * dt), std::nullopt});
        }
        c.record_points.push_back(c.ops.size());
    }
    return c;
}

NoisyCircuit build_toy_model(double q, int n) {
    if (q < 0.0 || q > 1.0) throw ConfigError("build_toy_model: q out of [0,1]");
    if (n < 1) throw ConfigError("build_toy_model: need n >= 1 gates");
    NoisyCircuit c;
    c.num_qubits = 1;
    c.observables.push_back(
        Observable::single("z0", 1.0, PauliString::from_text("Z"), {0}));
    PauliProbabilities probs;
    probs[PauliString::identity(1)] = 1.0 - q;
    probs[PauliString::from_text("X")] = q;
    const NoiseChannel channel = NoiseChannel::pauli(std::move(probs), {0});
    for (int i = 0; i < n; ++i) {
        c.ops.push_back({Gate::one(GateKind::rz, 0, 0.5 * kPi), channel});
    }
    c.record_points.push_back(c.ops.size());
    return c;
}

}  // namespace analogsim
