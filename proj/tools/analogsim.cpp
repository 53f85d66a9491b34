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

// Batch front-end: builds benchmark circuits, factorizes channels, runs
// trajectory ensembles and writes CSV/JSON artifacts. Exit codes: 0 ok,
// 2 config error, 3 capacity error, 4 non-physical factorization.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "analogsim/density_matrix.hpp"
#include "analogsim/harness.hpp"
#include "analogsim/json_io.hpp"

namespace {

using namespace analogsim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitNonPhysical = 4;

struct BenchmarkParams {
    std::string benchmark;
    int lx = 4, ly = 4;
    double h = 1.0;
    double dt = 0.1;
    int steps = 30;
    int n = 16;
    double tau = 0.1;
    int t_sweeps = 40;
    double hx = 0.9045, hz = 0.8090;
    double toy_q = 0.01;
    std::uint64_t graph_seed = 1;
    double noise_epsilon = -1.0;  // <0: benchmark default
    std::string noise_json;
    std::string circuit_file;
};

struct RunParams {
    std::string sampler = "digital";
    std::string angle_dist = "gaussian";
    std::uint64_t seed = 1;
    double target_sem = 0.0;
    long n_traj = 0;
    long max_traj = 1000000;
    std::string backend = "statevector";
    bool exact = false;
    std::string out;
    bool no_raw = false;
    int workers = 0;
};

void add_benchmark_flags(CLI::App* cmd, BenchmarkParams& p) {
    cmd->add_option("--benchmark", p.benchmark,
                    "ising2d|xy_chain|maxcut|tilted_ising|toy_model");
    cmd->add_option("--circuit", p.circuit_file, "circuit JSON file");
    cmd->add_option("--lx", p.lx);
    cmd->add_option("--ly", p.ly);
    cmd->add_option("--h", p.h);
    cmd->add_option("--dt", p.dt);
    cmd->add_option("--steps", p.steps);
    cmd->add_option("--n", p.n, "qubits (xy_chain/maxcut/tilted) or toy gate count");
    cmd->add_option("--tau", p.tau);
    cmd->add_option("--t", p.t_sweeps, "Floquet sweep count T");
    cmd->add_option("--hx", p.hx);
    cmd->add_option("--hz", p.hz);
    cmd->add_option("--q", p.toy_q, "toy-model error probability");
    cmd->add_option("--graph-seed", p.graph_seed);
    cmd->add_option("--noise-epsilon", p.noise_epsilon,
                    "two-qubit depolarizing amplitude (benchmark default if unset)");
    cmd->add_option("--noise-json", p.noise_json,
                    "channel template JSON (overrides --noise-epsilon)");
}

void add_run_flags(CLI::App* cmd, RunParams& p) {
    cmd->add_option("--sampler", p.sampler,
                    "digital|analog|analog-random-rotation");
    cmd->add_option("--angle-dist", p.angle_dist,
                    "gaussian|discrete|uniform|exponential|cauchy|semicircular|"
                    "raised-cosine");
    cmd->add_option("--seed", p.seed, "master seed");
    cmd->add_option("--target-sem", p.target_sem);
    cmd->add_option("--n-traj", p.n_traj);
    cmd->add_option("--max-traj", p.max_traj);
    cmd->add_option("--backend", p.backend, "statevector|exact_dm");
    cmd->add_flag("--exact", p.exact, "shorthand for --backend exact_dm");
    cmd->add_option("--out", p.out, "output file prefix");
    cmd->add_flag("--no-raw", p.no_raw, "skip the raw per-trajectory CSV");
    cmd->add_option("--workers", p.workers, "worker threads (0 = auto)");
}

std::optional<NoiseChannel> benchmark_noise(const BenchmarkParams& p,
                                            double default_eps, int arity) {
    if (!p.noise_json.empty()) {
        std::ifstream in(p.noise_json);
        if (!in) throw ConfigError("cannot open " + p.noise_json);
        return channel_from_json(json::parse(in));
    }
    const double eps = p.noise_epsilon >= 0.0 ? p.noise_epsilon : default_eps;
    if (eps == 0.0) return std::nullopt;
    std::vector<int> support(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) support[static_cast<std::size_t>(i)] = i;
    return NoiseChannel::depolarizing(eps, support);
}

NoisyCircuit build_from_params(const BenchmarkParams& p) {
    if (!p.circuit_file.empty()) {
        std::ifstream in(p.circuit_file);
        if (!in) throw ConfigError("cannot open " + p.circuit_file);
        return circuit_from_json(json::parse(in));
    }
    if (p.benchmark == "ising2d") {
        return build_ising_2d(p.lx, p.ly, p.h, p.dt, p.steps,
                              benchmark_noise(p, 0.001, 2));
    }
    if (p.benchmark == "xy_chain") {
        return build_xy_chain(p.n, p.tau, p.steps, benchmark_noise(p, 0.002, 2));
    }
    if (p.benchmark == "maxcut") {
        const Graph g = random_3_regular_graph(p.n, p.graph_seed);
        return build_maxcut_floquet(g, p.t_sweeps, p.dt,
                                    benchmark_noise(p, 0.001, 2));
    }
    if (p.benchmark == "tilted_ising") {
        return build_tilted_ising(p.n, p.hx, p.hz, p.dt, p.steps,
                                  benchmark_noise(p, 0.003, 2));
    }
    if (p.benchmark == "toy_model") {
        return build_toy_model(p.toy_q, p.n);
    }
    throw ConfigError(p.benchmark.empty()
                          ? "need --benchmark or --circuit"
                          : "unknown benchmark '" + p.benchmark + "'");
}

json params_json(const BenchmarkParams& b, const RunParams& r) {
    json j;
    j["benchmark"] = b.benchmark.empty() ? b.circuit_file : b.benchmark;
    if (b.benchmark == "ising2d") {
        j["lx"] = b.lx;
        j["ly"] = b.ly;
        j["h"] = b.h;
    }
    if (b.benchmark == "ising2d" || b.benchmark == "maxcut" ||
        b.benchmark == "tilted_ising") {
        j["dt"] = b.dt;
    }
    if (b.benchmark == "xy_chain") j["tau"] = b.tau;
    if (b.benchmark == "xy_chain" || b.benchmark == "ising2d" ||
        b.benchmark == "tilted_ising") {
        j["steps"] = b.steps;
    }
    if (b.benchmark == "maxcut") {
        j["T"] = b.t_sweeps;
        j["graph_seed"] = b.graph_seed;
    }
    if (b.benchmark == "tilted_ising") {
        j["hx"] = b.hx;
        j["hz"] = b.hz;
    }
    if (b.benchmark == "toy_model") j["q"] = b.toy_q;
    if (b.noise_epsilon >= 0.0) j["noise_epsilon"] = b.noise_epsilon;
    if (!b.noise_json.empty()) j["noise_json"] = b.noise_json;
    j["sampler"] = r.sampler;
    j["angle_dist"] = r.angle_dist;
    j["master_seed"] = r.seed;
    j["backend"] = r.exact ? "exact_dm" : r.backend;
    if (r.target_sem > 0.0) j["target_sem"] = r.target_sem;
    if (r.n_traj > 0) j["n_trajectories"] = r.n_traj;
    j["max_trajectories"] = r.max_traj;
    return j;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << body;
}

SamplerConfig sampler_config(const RunParams& r) {
    SamplerConfig c;
    c.method = parse_sampler_method(r.sampler);
    c.angle_kind = parse_angle_kind(r.angle_dist);
    return c;
}

json factorization_diagnostics(const CompiledCircuit& compiled) {
    json diags = json::array();
    for (const ChannelSampler& s : compiled.samplers()) {
        if (const FactorizedChannel* fc = s.factorization()) {
            diags.push_back(
                factorization_to_json(*fc, s.factorization_residual()));
        }
    }
    return diags;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_build(const BenchmarkParams& b, const std::string& out) {
    const NoisyCircuit circuit = build_from_params(b);
    const std::string body = circuit_to_json(circuit).dump(2) + "\n";
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
    return kExitOk;
}

int cmd_factorize(const std::string& channel_kind, int qubits, double epsilon,
                  const std::string& channel_json, const std::string& out) {
    NoiseChannel channel = [&] {
        if (!channel_json.empty()) {
            std::ifstream in(channel_json);
            if (!in) throw ConfigError("cannot open " + channel_json);
            return channel_from_json(json::parse(in));
        }
        if (channel_kind == "depol") {
            std::vector<int> support(static_cast<std::size_t>(qubits));
            for (int i = 0; i < qubits; ++i) support[static_cast<std::size_t>(i)] = i;
            return NoiseChannel::depolarizing(epsilon, support);
        }
        throw ConfigError("factorize: need --channel depol or --channel-json");
    }();
    if (auto diag = validate(channel)) throw ConfigError(*diag);
    const PauliProbabilities probs = expand_to_pauli(channel);
    const FactorizedChannel fc = factorize(probs);
    const double residual = verify_factorization(probs, fc.factors);
    json j = factorization_to_json(fc, residual);
    j["channel"] = channel_to_json(channel);
    // Gaussian scale implementing each factor, for convenience.
    json sigma2 = json::object();
    for (const auto& [s, q] : fc.factors) {
        if (q > 0.0 && q < 0.5) {
            const double scale = solve_scale(AngleKind::gaussian, q);
            sigma2[s.text()] = scale * scale;
        }
    }
    j["gaussian_sigma2"] = std::move(sigma2);
    const std::string body = j.dump(2) + "\n";
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
    return kExitOk;
}

int cmd_simulate(const BenchmarkParams& b, const RunParams& r) {
    if ((r.target_sem > 0.0) == (r.n_traj > 0)) {
        throw ConfigError("set exactly one of --target-sem and --n-traj");
    }
    const NoisyCircuit circuit = build_from_params(b);
    json summary;
    summary["config"] = params_json(b, r);
    std::string raw_csv, summary_csv;

    if (r.exact || r.backend == "exact_dm") {
        if (circuit.num_qubits > DensityMatrix::kMaxQubits) {
            throw CapacityError("exact_dm backend caps at N = " +
                                std::to_string(DensityMatrix::kMaxQubits));
        }
        const auto series = evolve_circuit_dm(circuit);
        json rows = json::array();
        std::ostringstream csv;
        csv.precision(17);
        csv << "record_point,observable_name,value\n";
        for (std::size_t rp = 0; rp < series.size(); ++rp) {
            for (std::size_t s = 0; s < series[rp].size(); ++s) {
                rows.push_back({{"record_point", circuit.record_points[rp]},
                                {"observable", circuit.observables[s].name()},
                                {"value", series[rp][s]}});
                csv << circuit.record_points[rp] << ','
                    << circuit.observables[s].name() << ',' << series[rp][s]
                    << '\n';
            }
        }
        summary["exact_series"] = std::move(rows);
        summary_csv = csv.str();
    } else {
        if (r.backend != "statevector") {
            throw ConfigError("unknown backend '" + r.backend + "'");
        }
        const CompiledCircuit compiled(circuit, sampler_config(r));
        const json diags = factorization_diagnostics(compiled);
        if (!diags.empty()) {
            summary["factorization"] = diags;
            std::cerr << "factorization diagnostics: " << diags.dump() << "\n";
        }
        TrajectoryReport rep =
            r.n_traj > 0
                ? run_fixed(compiled, r.seed,
                            static_cast<std::size_t>(r.n_traj), r.workers)
                : estimate(compiled, r.seed, r.target_sem,
                           static_cast<std::size_t>(r.max_traj), r.workers);
        const json rj = report_to_json(rep);
        for (const auto& [k, v] : rj.items()) summary[k] = v;
        raw_csv = r.no_raw ? "" : report_raw_csv(rep);
        summary_csv = report_summary_csv(rep);

        if (circuit.record_distribution) {
            const auto dist = ensemble_distribution(
                compiled, r.seed, rep.trajectories_run, r.workers);
            std::vector<std::pair<std::uint64_t, double>> ranked;
            ranked.reserve(dist.size());
            for (std::size_t bset = 0; bset < dist.size(); ++bset) {
                ranked.emplace_back(bset, dist[bset]);
            }
            std::sort(ranked.begin(), ranked.end(), [](auto& a, auto& bb) {
                if (a.second != bb.second) return a.second > bb.second;
                return a.first < bb.first;
            });
            std::ostringstream dcsv;
            dcsv.precision(17);
            dcsv << "bitstring,probability\n";
            const std::size_t keep = std::min<std::size_t>(1024, ranked.size());
            for (std::size_t i = 0; i < keep; ++i) {
                dcsv << ranked[i].first << ',' << ranked[i].second << '\n';
            }
            summary["distribution_csv_rows"] = keep;
            if (!r.out.empty()) {
                write_file(r.out + "_distribution.csv", dcsv.str());
            }
        }
    }

    const std::string body = summary.dump(2) + "\n";
    if (r.out.empty()) {
        std::cout << body;
    } else {
        write_file(r.out + "_summary.json", body);
        write_file(r.out + "_summary.csv", summary_csv);
        if (!raw_csv.empty()) write_file(r.out + "_raw.csv", raw_csv);
    }
    return kExitOk;
}

int cmd_compare(const BenchmarkParams& b, const RunParams& r) {
    if (r.n_traj <= 1) throw ConfigError("compare: need --n-traj >= 2");
    const NoisyCircuit circuit = build_from_params(b);
    if (circuit.observables.empty()) {
        throw ConfigError("compare: circuit records no scalar observables");
    }
    SamplerConfig analog = sampler_config(r);
    if (analog.method == SamplerMethod::digital) {
        analog.method = SamplerMethod::analog_factorized;
    }
    const VarianceRatioResult res =
        variance_ratio(circuit, analog, r.seed,
                       static_cast<std::size_t>(r.n_traj), r.workers);

    std::ostringstream csv;
    csv.precision(17);
    csv << "record_point,observable_name,var_digital,var_analog,ratio\n";
    json rows = json::array();
    for (std::size_t rp = 0; rp < res.digital.n_records(); ++rp) {
        for (std::size_t s = 0; s < res.digital.n_series(); ++s) {
            const double vd = res.digital.stats(rp, s).variance;
            const double va = res.analog.stats(rp, s).variance;
            const double ratio = res.ratio[rp * res.digital.n_series() + s];
            csv << res.digital.record_points[rp] << ','
                << res.digital.series_names[s] << ',' << vd << ',' << va << ','
                << ratio << '\n';
            rows.push_back({{"record_point", res.digital.record_points[rp]},
                            {"observable", res.digital.series_names[s]},
                            {"var_digital", vd},
                            {"var_analog", va},
                            {"ratio", ratio}});
        }
    }
    json summary;
    summary["config"] = params_json(b, r);
    summary["ratios"] = std::move(rows);
    const std::string body = summary.dump(2) + "\n";
    if (r.out.empty()) {
        std::cout << body;
    } else {
        write_file(r.out + "_summary.json", body);
        write_file(r.out + "_ratio.csv", csv.str());
    }
    return kExitOk;
}

int cmd_sample_dist(const std::string& angle_dist, double q, long n_samples,
                    std::uint64_t seed, const std::string& out) {
    const AngleKind kind = parse_angle_kind(angle_dist);
    const ClosedFormReport report = closed_form_report(kind, q);
    const AngleDistribution dist = AngleDistribution::solve(kind, q);
    Rng rng(splitmix64(seed));
    std::ostringstream csv;
    csv.precision(17);
    csv << "index,theta\n";
    double s2 = 0.0, s4 = 0.0;
    for (long i = 0; i < n_samples; ++i) {
        const double theta = dist.sample(rng);
        csv << i << ',' << theta << '\n';
        const double st = std::sin(theta);
        s2 += st * st;
        s4 += st * st * st * st;
    }
    json j;
    j["kind"] = angle_kind_name(kind);
    j["q"] = q;
    j["n_samples"] = n_samples;
    j["master_seed"] = seed;
    j["closed_form"] = closed_form_report_to_json(report);
    j["quadrature"] = {{"e_sin2", dist.e_sin2()}, {"e_sin4", dist.e_sin4()}};
    if (n_samples > 0) {
        j["empirical"] = {{"e_sin2", s2 / static_cast<double>(n_samples)},
                          {"e_sin4", s4 / static_cast<double>(n_samples)}};
    }
    const std::string body = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << body;
    } else {
        write_file(out + "_moments.json", body);
        write_file(out + "_samples.csv", csv.str());
    }
    return kExitOk;
}

void apply_config_file(const std::string& path, BenchmarkParams& b,
                       RunParams& r) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    b.benchmark = j.value("benchmark", b.benchmark);
    b.lx = j.value("lx", b.lx);
    b.ly = j.value("ly", b.ly);
    b.h = j.value("h", b.h);
    b.dt = j.value("dt", b.dt);
    b.steps = j.value("steps", b.steps);
    b.n = j.value("n", b.n);
    b.tau = j.value("tau", b.tau);
    b.t_sweeps = j.value("T", b.t_sweeps);
    b.hx = j.value("hx", b.hx);
    b.hz = j.value("hz", b.hz);
    b.toy_q = j.value("q", b.toy_q);
    b.graph_seed = j.value("graph_seed", b.graph_seed);
    b.noise_epsilon = j.value("noise_epsilon", b.noise_epsilon);
    b.circuit_file = j.value("circuit", b.circuit_file);
    r.sampler = j.value("sampler", r.sampler);
    r.angle_dist = j.value("angle_dist", r.angle_dist);
    r.seed = j.value("master_seed", r.seed);
    r.target_sem = j.value("target_sem", r.target_sem);
    r.n_traj = j.value("n_trajectories", r.n_traj);
    r.max_traj = j.value("max_trajectories", r.max_traj);
    r.backend = j.value("backend", r.backend);
    r.out = j.value("out", r.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noisy quantum circuit trajectory simulator"};
    app.require_subcommand(1);
    // --h is the Ising field flag; keep help on --help only.
    app.set_help_flag("--help", "print help");

    BenchmarkParams bench;
    RunParams run;
    std::string config_path, out_path;

    auto* build = app.add_subcommand("build", "emit a benchmark circuit as JSON");
    build->set_help_flag("--help", "print help");
    add_benchmark_flags(build, bench);
    build->add_option("--out", out_path, "output file (stdout if unset)");

    std::string channel_kind = "depol", channel_json;
    int qubits = 1;
    double epsilon = 0.0;
    auto* fact = app.add_subcommand("factorize",
                                    "factorize a Pauli channel into q_S factors");
    fact->set_help_flag("--help", "print help");
    fact->add_option("--channel", channel_kind, "depol");
    fact->add_option("--qubits", qubits);
    fact->add_option("--epsilon", epsilon);
    fact->add_option("--channel-json", channel_json, "channel spec JSON file");
    fact->add_option("--out", out_path, "output file (stdout if unset)");

    auto* sim = app.add_subcommand("simulate", "run a trajectory ensemble");
    sim->set_help_flag("--help", "print help");
    add_benchmark_flags(sim, bench);
    add_run_flags(sim, run);
    sim->add_option("--config", config_path, "JSON config file");

    auto* cmp = app.add_subcommand(
        "compare", "digital vs analog variance ratio on one circuit");
    cmp->set_help_flag("--help", "print help");
    add_benchmark_flags(cmp, bench);
    add_run_flags(cmp, run);
    cmp->add_option("--config", config_path, "JSON config file");

    std::string sd_kind = "gaussian";
    double sd_q = 0.01;
    long sd_n = 10000;
    std::uint64_t sd_seed = 1;
    auto* sd = app.add_subcommand("sample-dist",
                                  "draw angles and report moment checks");
    sd->set_help_flag("--help", "print help");
    sd->add_option("--angle-dist", sd_kind);
    sd->add_option("--q", sd_q);
    sd->add_option("--n-samples", sd_n);
    sd->add_option("--seed", sd_seed);
    sd->add_option("--out", out_path, "output prefix (stdout if unset)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) apply_config_file(config_path, bench, run);
        if (build->parsed()) return cmd_build(bench, out_path);
        if (fact->parsed()) {
            return cmd_factorize(channel_kind, qubits, epsilon, channel_json,
                                 out_path);
        }
        if (sim->parsed()) return cmd_simulate(bench, run);
        if (cmp->parsed()) return cmd_compare(bench, run);
        if (sd->parsed()) {
            return cmd_sample_dist(sd_kind, sd_q, sd_n, sd_seed, out_path);
        }
    } catch (const NonPhysicalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const SingularChannelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const OutOfDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitConfig;
}
