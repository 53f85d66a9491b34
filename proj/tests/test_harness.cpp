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
#include "analogsim/harness.hpp"
#include "oracle_helpers.hpp"

using namespace analogsim;

namespace {

SamplerConfig cfg(SamplerMethod m, AngleKind k = AngleKind::gaussian) {
    SamplerConfig c;
    c.method = m;
    c.angle_kind = k;
    return c;
}

// Fixed 2-qubit circuit with depolarizing noise after each two-qubit gate.
NoisyCircuit small_noisy_circuit(double eps) {
    NoisyCircuit c;
    c.num_qubits = 2;
    const NoiseChannel noise = NoiseChannel::depolarizing(eps, {0, 1});
    const Gate gates[] = {
        Gate::one(GateKind::rx, 0, 0.4),  Gate::two(GateKind::rzz, 0, 1, 0.7),
        Gate::one(GateKind::rz, 1, 0.3),  Gate::two(GateKind::rxx, 0, 1, -0.5),
        Gate::one(GateKind::rx, 1, 0.9),  Gate::two(GateKind::ryy, 0, 1, 0.2),
    };
    for (const Gate& g : gates) {
        CircuitOp op{g, std::nullopt};
        if (gate_arity(g.kind) == 2) {
            op.noise = retarget_channel(noise, {g.qubits[0], g.qubits[1]});
        }
        c.ops.push_back(op);
    }
    c.observables.push_back(
        Observable::single("z0", 1.0, PauliString::from_text("Z"), {0}));
    c.observables.push_back(
        Observable::single("x1", 1.0, PauliString::from_text("X"), {1}));
    c.record_points = {c.ops.size()};
    return c;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("noiseless trajectories are identical across indices") {
    const auto circuit = build_ising_2d(2, 2, 1.0, 0.1, 3, std::nullopt);
    const CompiledCircuit compiled(circuit, cfg(SamplerMethod::digital));
    const auto s0 = compiled.run_trajectory(7, 0);
    for (std::uint64_t i = 1; i < 5; ++i) {
        CHECK(compiled.run_trajectory(7, i) == s0);
    }
}

TEST_CASE("toy model trajectories") {
    const auto circuit = build_toy_model(0.05, 20);

    const CompiledCircuit digital(circuit, cfg(SamplerMethod::digital));
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto series = digital.run_trajectory(11, i);
        REQUIRE(series.size() == 1);
        CHECK(std::abs(std::abs(series[0]) - 1.0) < 1e-12);
    }

    // Analog discrete: the recorded value is cos(2*alpha) with alpha the
    // alternating-sign sum of the drawn angles (Z gates flip the rotation
    // direction). Replays the identical angle stream to predict it.
    const CompiledCircuit analog(
        circuit, cfg(SamplerMethod::analog_factorized, AngleKind::discrete));
    const AngleDistribution dist =
        AngleDistribution::solve(AngleKind::discrete, 0.05);
    const int n = 20;
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng(derive_seed(11, analog.stream_salt(), i));
        double alpha = 0.0;
        for (int k = 0; k < n; ++k) {
            const double theta = dist.sample(rng);
            alpha += ((n - 1 - k) % 2 == 0 ? 1.0 : -1.0) * theta;
        }
        const auto series = analog.run_trajectory(11, i);
        CHECK(series[0] == doctest::Approx(std::cos(2.0 * alpha)).epsilon(1e-10));
    }
}

TEST_CASE("estimate stopping rule") {
    const auto noiseless = build_ising_2d(2, 2, 1.0, 0.1, 2, std::nullopt);
    const CompiledCircuit compiled(noiseless, cfg(SamplerMethod::digital));
    const auto rep = estimate(compiled, 3, 0.01, 100000);
    CHECK(rep.trajectories_run == 16);
    CHECK(rep.stop_reason == "target_sem_met");
    CHECK(rep.max_sem() == 0.0);

    // Analog needs strictly fewer trajectories than digital on the toy
    // model at equal target SEM.
    const auto toy = build_toy_model(0.01, 50);
    const double target = 0.05;
    const auto dig = estimate(CompiledCircuit(toy, cfg(SamplerMethod::digital)),
                              5, target, 100000);
    const auto ana = estimate(
        CompiledCircuit(toy, cfg(SamplerMethod::analog_factorized)), 5, target,
        100000);
    CHECK(dig.stop_reason == "target_sem_met");
    CHECK(ana.stop_reason == "target_sem_met");
    CHECK(ana.trajectories_run < dig.trajectories_run);

    // Both land within 3 SEM of the closed form.
    const double expected = std::pow(0.98, 50);
    for (const auto& rep2 : {dig, ana}) {
        const SeriesStats st = rep2.stats(0, 0);
        CHECK(std::abs(st.mean - expected) <= 3.0 * st.sem);
    }

    const auto capped = estimate(
        CompiledCircuit(toy, cfg(SamplerMethod::digital)), 5, 1e-9, 64);
    CHECK(capped.trajectories_run == 64);
    CHECK(capped.stop_reason == "max_trajectories");
}

TEST_CASE("toy model closed forms and empirical variance") {
    const auto s0 = toy_model_stats(0.0, 50, AngleKind::gaussian);
    CHECK(s0.mean == doctest::Approx(1.0));
    CHECK(s0.variance == doctest::Approx(0.0));

    // Discrete uses E[sin^4] = q^2.
    const double q = 0.01;
    const int n = 50;
    const auto sd = toy_model_stats(q, n, AngleKind::discrete);
    const double e4 = q * q;
    const double vd = 0.5 + 0.5 * std::pow(1.0 - 8 * q + 8 * e4, n) -
                      std::pow(1.0 - 2 * q, 2 * n);
    CHECK(sd.variance == doctest::Approx(vd).epsilon(1e-12));

    const auto toy = build_toy_model(q, n);
    for (AngleKind kind : {AngleKind::gaussian, AngleKind::discrete}) {
        const auto stats = toy_model_stats(q, n, kind);
        const auto rep = run_fixed(
            CompiledCircuit(toy, cfg(SamplerMethod::analog_factorized, kind)),
            99, 30000);
        const SeriesStats st = rep.stats(0, 0);
        CHECK(std::abs(st.mean - stats.mean) <= 3.0 * st.sem);
        std::vector<double> vals(rep.trajectories_run);
        for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = rep.value(i, 0, 0);
        const double se = bootstrap_variance_se(vals, 200, 4242);
        CHECK(std::abs(st.variance - stats.variance) <= 3.0 * se);
    }
}

TEST_CASE("variance ratio") {
    const auto noiseless = build_ising_2d(2, 2, 1.0, 0.1, 2, std::nullopt);
    const auto flat = variance_ratio(
        noiseless, cfg(SamplerMethod::analog_factorized), 21, 64);
    for (double r : flat.ratio) CHECK(r == doctest::Approx(1.0));

    // Toy model: ratio of the closed-form variances within 20% at 1e4
    // trajectories with discrete angles.
    const auto toy = build_toy_model(0.01, 50);
    const auto res = variance_ratio(
        toy, cfg(SamplerMethod::analog_factorized, AngleKind::discrete), 22,
        10000);
    const double expected = toy_model_digital_variance(0.01, 50) /
                            toy_model_stats(0.01, 50, AngleKind::discrete).variance;
    CHECK(res.ratio.back() == doctest::Approx(expected).epsilon(0.2));
}

TEST_CASE("ensemble means agree with the exact oracle across samplers") {
    const auto circuit = small_noisy_circuit(0.02);
    const auto exact = evolve_circuit_dm(circuit);
    REQUIRE(exact.size() == 1);
    for (const auto& config :
         {cfg(SamplerMethod::digital), cfg(SamplerMethod::analog_factorized),
          cfg(SamplerMethod::analog_factorized, AngleKind::discrete),
          cfg(SamplerMethod::analog_random_rotation)}) {
        const auto rep =
            run_fixed(CompiledCircuit(circuit, config), 1234, 10000);
        for (std::size_t s = 0; s < rep.n_series(); ++s) {
            const SeriesStats st = rep.stats(0, s);
            CHECK(std::abs(st.mean - exact[0][s]) <=
                  5.0 * std::max(st.sem, 1e-6));
        }
    }
}

TEST_CASE("reproducibility and worker independence") {
    const auto circuit = small_noisy_circuit(0.05);
    const CompiledCircuit compiled(circuit, cfg(SamplerMethod::analog_factorized));
    const auto a = run_fixed(compiled, 42, 500, /*workers=*/1);
    const auto b = run_fixed(compiled, 42, 500, /*workers=*/3);
    CHECK(a.values == b.values);

    const auto ea = estimate(compiled, 42, 0.02, 10000, /*workers=*/1);
    const auto eb = estimate(compiled, 42, 0.02, 10000, /*workers=*/4);
    CHECK(ea.trajectories_run == eb.trajectories_run);
    CHECK(ea.values == eb.values);
}

TEST_CASE("kl divergence on top-k states") {
    const std::vector<double> p{0.5, 0.25, 0.125, 0.125};
    CHECK(kl_topk(p, p, 4) == doctest::Approx(0.0));
    CHECK(kl_topk(p, p, 2) == doctest::Approx(0.0));

    // Disjoint support: flooring keeps the value finite (and large).
    const std::vector<double> a{0.99, 0.01, 0.0, 0.0};
    const std::vector<double> b{0.0, 0.5, 0.5, 0.0};
    const double kl = kl_topk(a, b, 2);
    CHECK(std::isfinite(kl));
    CHECK(kl > 10.0);

    CHECK_THROWS_AS(kl_topk(a, std::vector<double>{1.0}, 1), DimensionError);
}

TEST_CASE("entropy ensemble") {
    const auto noiseless = build_tilted_ising(4, 0.9045, 0.8090, 0.3, 3, std::nullopt);
    const auto ens = entropy_ensemble(noiseless, cfg(SamplerMethod::digital), 9, 20);
    REQUIRE(ens.mean.size() == 4);
    CHECK(ens.mean[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ens.variance[0] == doctest::Approx(0.0));
    for (double v : ens.variance) CHECK(v == doctest::Approx(0.0).epsilon(1e-20));

    const auto noisy = build_tilted_ising(
        4, 0.9045, 0.8090, 0.3, 3, NoiseChannel::depolarizing(0.05, {0, 1}));
    const auto noisy_ens =
        entropy_ensemble(noisy, cfg(SamplerMethod::digital), 9, 50);
    CHECK(noisy_ens.variance.back() > 0.0);
}

TEST_CASE("ensemble distribution averages trajectories") {
    Graph c4;
    c4.num_vertices = 4;
    c4.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const auto sweep =
        build_maxcut_floquet(c4, 12, 0.25, NoiseChannel::depolarizing(0.01, {0, 1}));
    const CompiledCircuit compiled(sweep, cfg(SamplerMethod::analog_factorized));
    const auto mean = ensemble_distribution(compiled, 5, 40);
    double total = 0.0;
    for (double p : mean) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

}  // TEST_SUITE
