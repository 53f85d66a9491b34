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

#include <string>
#include <string_view>
#include <utility>

#include "analogsim/errors.hpp"
#include "analogsim/rng.hpp"

namespace analogsim {

enum class AngleKind {
    gaussian,
    discrete,
    uniform,
    exponential,
    cauchy,
    semicircular,
    raised_cosine,
};

inline constexpr int kNumAngleKinds = 7;
const char* angle_kind_name(AngleKind kind);
AngleKind parse_angle_kind(std::string_view name);

// A symmetric angle density f(theta) scaled so that E[sin^2 theta] equals a
// target q; the optional mean is used only by the coherent-noise shifted
// Gaussian. Construction verifies the constraint by quadrature to 1e-9.
class AngleDistribution {
  public:
    static AngleDistribution solve(AngleKind kind, double q);
    static AngleDistribution gaussian_with_mean(double mu, double sigma);

    AngleKind kind() const { return kind_; }
    double scale() const { return scale_; }
    double mean() const { return mean_; }

    double sample(Rng& rng) const;

    // Quadrature moments, cached: E[sin^2], E[sin^4], E[cos*sin].
    double e_sin2() const;
    double e_sin4() const;
    double cross_moment() const;

  private:
    AngleDistribution(AngleKind kind, double scale, double mean);

    AngleKind kind_;
    double scale_;
    double mean_;
    mutable double e_sin2_ = -1.0;
    mutable double e_sin4_ = -1.0;
    mutable double cross_ = -2.0;
};

// Scale parameter satisfying E[sin^2 theta] = q for q in [0, 1/2); closed
// forms where they verify, bisection on the quadrature constraint
// otherwise.
double solve_scale(AngleKind kind, double q);

// (E[sin^2 theta], E[sin^4 theta]) by quadrature.
std::pair<double, double> second_moment_check(const AngleDistribution& dist);

// Audit of the printed closed forms against the integral constraint.
struct ClosedFormReport {
    AngleKind kind;
    bool has_printed_form = false;
    double printed_scale = 0.0;
    bool printed_ok = false;       // |E[sin^2] - q| <= 1e-9 at printed scale
    double adopted_scale = 0.0;
    double adopted_residual = 0.0; // |E[sin^2] - q| at adopted scale
    std::string note;
};

ClosedFormReport closed_form_report(AngleKind kind, double q);

}  // namespace analogsim
