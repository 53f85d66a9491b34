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

#include "analogsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace analogsim {

namespace {

double kahan_sum(const double* data, std::size_t n, std::size_t stride) {
    double acc = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = data[i * stride] - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

double kahan_sum_sq_dev(const double* data, std::size_t n, std::size_t stride,
                        double mean) {
    double acc = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = data[i * stride] - mean;
        const double y = d * d - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

// Streaming mean/variance per cell for the stopping rule.
struct Welford {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v) {
        ++n;
        const double d = v - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (v - mean);
    }
    double sem() const {
        if (n < 2) return std::numeric_limits<double>::infinity();
        const double var = m2 / static_cast<double>(n - 1);
        return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
};

}  // namespace

int default_workers() {
    if (const char* env = std::getenv("ANALOGSIM_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t begin, std::size_t end, int workers,
                  const std::function<void(std::size_t)>& fn) {
    if (workers <= 0) workers = default_workers();
    const std::size_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (nthreads <= 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next(begin);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= end) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(body);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// CompiledCircuit
// ---------------------------------------------------------------------------

CompiledCircuit::CompiledCircuit(const NoisyCircuit& circuit,
                                 const SamplerConfig& config)
    : circuit_(&circuit), config_(config) {
    std::vector<const NoiseChannel*> seen;
    op_sampler_.reserve(circuit.ops.size());
    for (const CircuitOp& op : circuit.ops) {
        if (!op.noise) {
            op_sampler_.push_back(-1);
            continue;
        }
        int found = -1;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (*seen[i] == *op.noise) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) {
            found = static_cast<int>(samplers_.size());
            samplers_.emplace_back(*op.noise, config);
            seen.push_back(&*op.noise);
        }
        op_sampler_.push_back(found);
    }
    for (const Observable& obs : circuit.observables) {
        series_names_.push_back(obs.name());
    }
    if (circuit.record_entropy) series_names_.push_back("entropy");
}

std::uint64_t CompiledCircuit::stream_salt() const {
    return 0x5au + 131u * static_cast<std::uint64_t>(config_.method) +
           17u * static_cast<std::uint64_t>(config_.angle_kind);
}

StateVector CompiledCircuit::run_state(
    Rng& rng,
    const std::function<void(const StateVector&)>& on_record) const {
    StateVector state = circuit_->initial_state();
    NoiseEvent event;
    std::size_t next_record = 0;
    const auto maybe_record = [&](std::size_t applied) {
        while (next_record < circuit_->record_points.size() &&
               circuit_->record_points[next_record] == applied) {
            on_record(state);
            ++next_record;
        }
    };
    maybe_record(0);
    for (std::size_t i = 0; i < circuit_->ops.size(); ++i) {
        apply_gate(state, circuit_->ops[i].gate);
        const int s = op_sampler_[i];
        if (s >= 0) {
            samplers_[static_cast<std::size_t>(s)].draw(rng, &state, event);
            apply_event(state, event);
        }
        maybe_record(i + 1);
    }
    return state;
}

std::vector<double> CompiledCircuit::run_trajectory(std::uint64_t master_seed,
                                                    std::uint64_t index) const {
    Rng rng(derive_seed(master_seed, stream_salt(), index));
    std::vector<double> series;
    series.reserve(circuit_->record_points.size() * num_series());
    run_state(rng, [&](const StateVector& st) {
        for (const Observable& obs : circuit_->observables) {
            series.push_back(st.expectation(obs));
        }
        if (circuit_->record_entropy) {
            series.push_back(st.bipartite_entropy(circuit_->entropy_cut));
        }
    });
    return series;
}

std::vector<double> CompiledCircuit::run_final_distribution(
    std::uint64_t master_seed, std::uint64_t index) const {
    Rng rng(derive_seed(master_seed, stream_salt(), index));
    const StateVector final_state = run_state(rng, [](const StateVector&) {});
    return final_state.probabilities();
}

// ---------------------------------------------------------------------------
// Reports and estimation
// ---------------------------------------------------------------------------

SeriesStats TrajectoryReport::stats(std::size_t record,
                                    std::size_t series) const {
    SeriesStats s;
    const std::size_t n = trajectories_run;
    if (n == 0) return s;
    const double* base = values.data() + record * n_series() + series;
    const std::size_t stride = cells();
    s.mean = kahan_sum(base, n, stride) / static_cast<double>(n);
    if (n >= 2) {
        s.variance =
            kahan_sum_sq_dev(base, n, stride, s.mean) / static_cast<double>(n - 1);
        s.variance = std::max(s.variance, 0.0);
        s.sem = std::sqrt(s.variance / static_cast<double>(n));
    }
    return s;
}

double TrajectoryReport::max_sem() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < n_records(); ++r) {
        for (std::size_t s = 0; s < n_series(); ++s) {
            worst = std::max(worst, stats(r, s).sem);
        }
    }
    return worst;
}

namespace {

TrajectoryReport make_report(const CompiledCircuit& compiled,
                             std::uint64_t master_seed) {
    TrajectoryReport rep;
    rep.series_names = compiled.series_names();
    rep.record_points = compiled.circuit().record_points;
    rep.master_seed = master_seed;
    rep.method = sampler_method_name(compiled.config().method);
    return rep;
}

void run_block(const CompiledCircuit& compiled, std::uint64_t master_seed,
               std::size_t begin, std::size_t end, int workers,
               std::vector<double>& values, std::size_t cells) {
    values.resize(end * cells);
    parallel_for(begin, end, workers, [&](std::size_t i) {
        const std::vector<double> series =
            compiled.run_trajectory(master_seed, i);
        std::copy(series.begin(), series.end(), values.begin() + i * cells);
    });
}

}  // namespace

TrajectoryReport run_fixed(const CompiledCircuit& compiled,
                           std::uint64_t master_seed,
                           std::size_t n_trajectories, int workers) {
    TrajectoryReport rep = make_report(compiled, master_seed);
    run_block(compiled, master_seed, 0, n_trajectories, workers, rep.values,
              rep.cells());
    rep.trajectories_run = n_trajectories;
    rep.stop_reason = "max_trajectories";
    return rep;
}

TrajectoryReport estimate(const CompiledCircuit& compiled,
                          std::uint64_t master_seed, double target_sem,
                          std::size_t max_trajectories, int workers) {
    if (target_sem <= 0.0) {
        throw ConfigError("estimate: target_sem must be positive");
    }
    TrajectoryReport rep = make_report(compiled, master_seed);
    const std::size_t cells = rep.cells();
    std::vector<Welford> acc(cells);
    constexpr std::size_t kBatch = 32;  // fixed; stop decisions are taken per
                                        // index so worker count cannot matter
    std::size_t done = 0;
    while (done < max_trajectories) {
        const std::size_t next = std::min(done + kBatch, max_trajectories);
        run_block(compiled, master_seed, done, next, workers, rep.values, cells);
        for (std::size_t i = done; i < next; ++i) {
            for (std::size_t c = 0; c < cells; ++c) {
                acc[c].add(rep.values[i * cells + c]);
            }
            const std::size_t n = i + 1;
            if (n >= 16) {
                double worst = 0.0;
                for (const Welford& w : acc) worst = std::max(worst, w.sem());
                if (worst <= target_sem) {
                    rep.trajectories_run = n;
                    rep.stop_reason = "target_sem_met";
                    rep.values.resize(n * cells);
                    return rep;
                }
            }
        }
        done = next;
    }
    rep.trajectories_run = max_trajectories;
    rep.stop_reason = "max_trajectories";
    rep.values.resize(max_trajectories * cells);
    return rep;
}

VarianceRatioResult variance_ratio(const NoisyCircuit& circuit,
                                   const SamplerConfig& analog_config,
                                   std::uint64_t master_seed,
                                   std::size_t n_trajectories, int workers) {
    if (n_trajectories < 2) {
        throw ConfigError("variance_ratio: need at least 2 trajectories");
    }
    SamplerConfig digital_config = analog_config;
    digital_config.method = SamplerMethod::digital;
    SamplerConfig analog = analog_config;
    if (analog.method == SamplerMethod::digital) {
        analog.method = SamplerMethod::analog_factorized;
    }
    const CompiledCircuit cd(circuit, digital_config);
    const CompiledCircuit ca(circuit, analog);
    VarianceRatioResult out;
    out.digital = run_fixed(cd, master_seed, n_trajectories, workers);
    out.analog = run_fixed(ca, master_seed, n_trajectories, workers);
    out.ratio.resize(out.digital.cells());
    for (std::size_t r = 0; r < out.digital.n_records(); ++r) {
        for (std::size_t s = 0; s < out.digital.n_series(); ++s) {
            const double vd = out.digital.stats(r, s).variance;
            const double va = out.analog.stats(r, s).variance;
            const std::size_t c = r * out.digital.n_series() + s;
            out.ratio[c] = (vd == 0.0 && va == 0.0) ? 1.0 : vd / va;
        }
    }
    return out;
}

ToyModelStats toy_model_stats(double q, int n, AngleKind kind) {
    if (q < 0.0 || q >= 0.5) {
        throw OutOfDomainError("toy_model_stats: q must be in [0, 1/2)");
    }
    ToyModelStats out;
    out.mean = std::pow(1.0 - 2.0 * q, n);
    const double e4 = AngleDistribution::solve(kind, q).e_sin4();
    out.variance = std::max(0.5 + 0.5 * std::pow(1.0 - 8.0 * q + 8.0 * e4, n) -
                                std::pow(1.0 - 2.0 * q, 2 * n),
                            0.0);
    return out;
}

double toy_model_digital_variance(double q, int n) {
    return 1.0 - std::pow(1.0 - 2.0 * q, 2 * n);
}

double kl_topk(const std::vector<double>& p_exact,
               const std::vector<double>& p_single, int k) {
    if (p_exact.size() != p_single.size()) {
        throw DimensionError("kl_topk: distributions differ in size");
    }
    std::vector<std::size_t> order(p_exact.size());
    std::iota(order.begin(), order.end(), 0);
    const std::size_t keep = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(k, 1)), order.size());
    std::partial_sort(order.begin(),
                      order.begin() + static_cast<std::ptrdiff_t>(keep),
                      order.end(), [&](std::size_t a, std::size_t b) {
                          if (p_exact[a] != p_exact[b]) {
                              return p_exact[a] > p_exact[b];
                          }
                          return a < b;
                      });
    double ze = 0.0, zs = 0.0;
    for (std::size_t i = 0; i < keep; ++i) {
        ze += p_exact[order[i]];
        zs += std::max(p_single[order[i]], 1e-12);
    }
    if (ze <= 0.0) return 0.0;
    double kl = 0.0;
    for (std::size_t i = 0; i < keep; ++i) {
        const double pe = p_exact[order[i]] / ze;
        if (pe <= 0.0) continue;
        const double ps = std::max(p_single[order[i]], 1e-12) / zs;
        kl += pe * std::log(pe / ps);
    }
    return kl;
}

std::vector<double> ensemble_distribution(const CompiledCircuit& compiled,
                                          std::uint64_t master_seed,
                                          std::size_t n_trajectories,
                                          int workers) {
    const std::size_t dim = std::size_t{1} << compiled.circuit().num_qubits;
    // Deterministic result: per-trajectory vectors are summed in index order.
    std::vector<std::vector<double>> per_traj(n_trajectories);
    parallel_for(0, n_trajectories, workers, [&](std::size_t i) {
        per_traj[i] = compiled.run_final_distribution(master_seed, i);
    });
    std::vector<double> mean(dim, 0.0), comp(dim, 0.0);
    for (std::size_t i = 0; i < n_trajectories; ++i) {
        for (std::size_t b = 0; b < dim; ++b) {
            const double y = per_traj[i][b] - comp[b];
            const double t = mean[b] + y;
            comp[b] = (t - mean[b]) - y;
            mean[b] = t;
        }
    }
    for (double& v : mean) v /= static_cast<double>(n_trajectories);
    return mean;
}

EntropyEnsemble entropy_ensemble(const NoisyCircuit& circuit,
                                 const SamplerConfig& config,
                                 std::uint64_t master_seed,
                                 std::size_t n_trajectories, int workers) {
    if (!circuit.record_entropy) {
        throw ConfigError("entropy_ensemble: circuit does not record entropy");
    }
    const CompiledCircuit compiled(circuit, config);
    const TrajectoryReport rep =
        run_fixed(compiled, master_seed, n_trajectories, workers);
    const std::size_t entropy_col = rep.n_series() - 1;
    EntropyEnsemble out;
    out.record_points = rep.record_points;
    for (std::size_t r = 0; r < rep.n_records(); ++r) {
        const SeriesStats s = rep.stats(r, entropy_col);
        out.mean.push_back(s.mean);
        out.variance.push_back(s.variance);
    }
    return out;
}

double bootstrap_variance_se(const std::vector<double>& values,
                             int n_resamples, std::uint64_t seed) {
    if (values.size() < 2 || n_resamples < 2) return 0.0;
    Rng rng(splitmix64(seed));
    const std::size_t n = values.size();
    std::vector<double> vars;
    vars.reserve(static_cast<std::size_t>(n_resamples));
    std::vector<double> sample(n);
    for (int b = 0; b < n_resamples; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = static_cast<std::size_t>(
                rng.uniform01() * static_cast<double>(n));
            sample[i] = values[std::min(j, n - 1)];
        }
        const double mean = kahan_sum(sample.data(), n, 1) /
                            static_cast<double>(n);
        vars.push_back(kahan_sum_sq_dev(sample.data(), n, 1, mean) /
                       static_cast<double>(n - 1));
    }
    const double vmean = kahan_sum(vars.data(), vars.size(), 1) /
                         static_cast<double>(vars.size());
    const double vvar = kahan_sum_sq_dev(vars.data(), vars.size(), 1, vmean) /
                        static_cast<double>(vars.size() - 1);
    return std::sqrt(std::max(vvar, 0.0));
}

}  // namespace analogsim
