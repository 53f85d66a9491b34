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

#include <functional>
#include <string>
#include <vector>

#include "analogsim/circuits.hpp"
#include "analogsim/samplers.hpp"

namespace analogsim {

// Worker-pool size: ANALOGSIM_WORKERS, else available parallelism.
int default_workers();

// Runs fn(i) for i in [begin, end) on up to `workers` threads. Results must
// not depend on scheduling; the first thrown exception is rethrown.
void parallel_for(std::size_t begin, std::size_t end, int workers,
                  const std::function<void(std::size_t)>& fn);

// A circuit lowered for one sampler configuration: channel factorizations,
// angle scales and cumulative tables are resolved once per distinct
// (channel, support) pair, never per trajectory.
class CompiledCircuit {
  public:
    CompiledCircuit(const NoisyCircuit& circuit, const SamplerConfig& config);

    // Observable series for trajectory `index`, record-major then series;
    // the half-cut entropy is appended as the last series when recorded.
    std::vector<double> run_trajectory(std::uint64_t master_seed,
                                       std::uint64_t index) const;

    // Final Z-basis probability vector of one trajectory.
    std::vector<double> run_final_distribution(std::uint64_t master_seed,
                                               std::uint64_t index) const;

    const NoisyCircuit& circuit() const { return *circuit_; }
    const SamplerConfig& config() const { return config_; }
    std::size_t num_series() const { return series_names_.size(); }
    const std::vector<std::string>& series_names() const { return series_names_; }

    // Distinct compiled samplers, for factorization diagnostics.
    const std::vector<ChannelSampler>& samplers() const { return samplers_; }

    // Seed-stream salt: distinct per sampler method so ensembles compared
    // against each other never share trajectories.
    std::uint64_t stream_salt() const;

  private:
    StateVector run_state(Rng& rng,
                          const std::function<void(const StateVector&)>&
                              on_record) const;

    const NoisyCircuit* circuit_;
    SamplerConfig config_;
    std::vector<int> op_sampler_;  // per op: index into samplers_, or -1
    std::vector<ChannelSampler> samplers_;
    std::vector<std::string> series_names_;
};

struct SeriesStats {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double sem = 0.0;       // sqrt(variance / n)
};

struct TrajectoryReport {
    std::vector<std::string> series_names;
    std::vector<std::size_t> record_points;
    std::size_t trajectories_run = 0;
    std::string stop_reason;  // "target_sem_met" or "max_trajectories"
    std::uint64_t master_seed = 0;
    std::string method;

    // values[traj * cells + record_idx * n_series + series_idx]
    std::vector<double> values;

    std::size_t n_series() const { return series_names.size(); }
    std::size_t n_records() const { return record_points.size(); }
    std::size_t cells() const { return n_records() * n_series(); }
    double value(std::size_t traj, std::size_t record, std::size_t series) const {
        return values[traj * cells() + record * n_series() + series];
    }

    // Two-pass compensated mean/variance over trajectories.
    SeriesStats stats(std::size_t record, std::size_t series) const;
    double max_sem() const;
};

// Fixed-size ensemble.
TrajectoryReport run_fixed(const CompiledCircuit& compiled,
                           std::uint64_t master_seed,
                           std::size_t n_trajectories, int workers = 0);

// Adds trajectories in index order until the max-over-record-points SEM
// falls to target_sem or the cap is reached; at least 16 trajectories are
// run before any stop decision.
TrajectoryReport estimate(const CompiledCircuit& compiled,
                          std::uint64_t master_seed, double target_sem,
                          std::size_t max_trajectories, int workers = 0);

struct VarianceRatioResult {
    TrajectoryReport digital;
    TrajectoryReport analog;
    // Per cell (record-major, then series); 0/0 reads as 1.
    std::vector<double> ratio;
};

// Digital vs analog sample-variance ratio on the same circuit, disjoint
// seed streams, n trajectories each.
VarianceRatioResult variance_ratio(const NoisyCircuit& circuit,
                                   const SamplerConfig& analog_config,
                                   std::uint64_t master_seed,
                                   std::size_t n_trajectories, int workers = 0);

// Closed-form single-qubit toy model: mean (1-2q)^n and the trajectory
// variance 1/2 + (1/2)(1 - 8q + 8 E[sin^4])^n - (1-2q)^(2n) with the
// distribution's quadrature fourth moment.
struct ToyModelStats {
    double mean;
    double variance;
};
ToyModelStats toy_model_stats(double q, int n, AngleKind kind);

// Variance of digital toy-model trajectories (values are +/-1).
double toy_model_digital_variance(double q, int n);

// KL divergence restricted to the k most likely states of p_exact, both
// restrictions renormalized; p_single floored at 1e-12 first.
double kl_topk(const std::vector<double>& p_exact,
               const std::vector<double>& p_single, int k);

// Mean final-distribution over an ensemble.
std::vector<double> ensemble_distribution(const CompiledCircuit& compiled,
                                          std::uint64_t master_seed,
                                          std::size_t n_trajectories,
                                          int workers = 0);

struct EntropyEnsemble {
    std::vector<std::size_t> record_points;
    std::vector<double> mean;
    std::vector<double> variance;
};
EntropyEnsemble entropy_ensemble(const NoisyCircuit& circuit,
                                 const SamplerConfig& config,
                                 std::uint64_t master_seed,
                                 std::size_t n_trajectories, int workers = 0);

// Standard error of the unbiased sample variance by bootstrap resampling.
double bootstrap_variance_se(const std::vector<double>& values,
                             int n_resamples, std::uint64_t seed);

}  // namespace analogsim
