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

#include "analogsim/angles.hpp"

using namespace analogsim;

namespace {

const AngleKind kAllKinds[] = {
    AngleKind::gaussian,    AngleKind::discrete,     AngleKind::uniform,
    AngleKind::exponential, AngleKind::cauchy,       AngleKind::semicircular,
    AngleKind::raised_cosine,
};

}  // namespace

TEST_SUITE("angles") {

TEST_CASE("solve_scale closed-form anchors") {
    CHECK(solve_scale(AngleKind::gaussian, 0.0) == 0.0);
    const double sigma = solve_scale(AngleKind::gaussian, 0.001);
    CHECK(sigma * sigma == doctest::Approx(-0.5 * std::log(0.998)).epsilon(1e-12));
    CHECK(sigma * sigma == doctest::Approx(1.0010e-3).epsilon(1e-4));

    CHECK(solve_scale(AngleKind::discrete, 0.25) ==
          doctest::Approx(std::asin(std::sqrt(0.25))).epsilon(1e-15));
    CHECK(solve_scale(AngleKind::discrete, 0.25) ==
          doctest::Approx(3.14159265358979324 / 6.0));

    // Gaussian and Cauchy share the -log(1-2q)/2 expression in their own
    // parameterizations.
    for (double q : {0.01, 0.1, 0.3}) {
        const double l = -0.5 * std::log(1.0 - 2.0 * q);
        CHECK(solve_scale(AngleKind::gaussian, q) ==
              doctest::Approx(std::sqrt(l)).epsilon(1e-12));
        CHECK(solve_scale(AngleKind::cauchy, q) == doctest::Approx(l).epsilon(1e-12));
    }

    CHECK_THROWS_AS(solve_scale(AngleKind::gaussian, 0.5), OutOfDomainError);
    CHECK_THROWS_AS(solve_scale(AngleKind::discrete, -0.01), OutOfDomainError);
}

TEST_CASE("constraint grid: every kind hits E[sin^2] = q to 1e-9") {
    for (AngleKind kind : kAllKinds) {
        for (double q : {1e-4, 1e-3, 1e-2, 0.1, 0.2}) {
            const AngleDistribution d = AngleDistribution::solve(kind, q);
            CHECK(std::abs(d.e_sin2() - q) <= 1e-9);
        }
    }
}

TEST_CASE("fourth moment bound: E[sin^4] >= q^2, tight only for discrete") {
    for (AngleKind kind : kAllKinds) {
        for (double q : {1e-3, 1e-2, 0.1}) {
            const AngleDistribution d = AngleDistribution::solve(kind, q);
            const auto [e2, e4] = second_moment_check(d);
            CHECK(e4 >= q * q - 1e-12);
            if (kind == AngleKind::discrete) {
                CHECK(e4 == doctest::Approx(q * q).epsilon(1e-9));
            } else {
                CHECK(e4 > q * q + 1e-8 * q * q);
            }
            (void)e2;
        }
    }
}

TEST_CASE("symmetry: E[cos sin] vanishes") {
    for (AngleKind kind : kAllKinds) {
        const AngleDistribution d = AngleDistribution::solve(kind, 0.05);
        CHECK(std::abs(d.cross_moment()) < 1e-10);
    }
}

TEST_CASE("second_moment_check anchors") {
    const AngleDistribution d0 = AngleDistribution::solve(AngleKind::uniform, 0.0);
    const auto [z2, z4] = second_moment_check(d0);
    CHECK(z2 == 0.0);
    CHECK(z4 == 0.0);

    const AngleDistribution g = AngleDistribution::solve(AngleKind::gaussian, 0.01);
    CHECK(std::abs(g.e_sin2() - 0.01) <= 1e-9);

    const AngleDistribution disc =
        AngleDistribution::solve(AngleKind::discrete, 0.04);
    CHECK(disc.e_sin4() == doctest::Approx(0.0016).epsilon(1e-12));
}

TEST_CASE("printed closed forms: exponential fails, root-finding adopted") {
    const double q = 0.05;
    const ClosedFormReport r = closed_form_report(AngleKind::exponential, q);
    CHECK(r.has_printed_form);
    CHECK_FALSE(r.printed_ok);
    CHECK(r.adopted_residual <= 1e-9);
    // The constraint inverts to sqrt(q/(2-4q)) for the Laplace density.
    CHECK(r.adopted_scale ==
          doctest::Approx(std::sqrt(q / (2.0 - 4.0 * q))).epsilon(1e-9));

    const ClosedFormReport rc = closed_form_report(AngleKind::raised_cosine, q);
    CHECK(rc.has_printed_form);
    CHECK_FALSE(rc.printed_ok);
    CHECK(rc.adopted_residual <= 1e-9);

    for (AngleKind ok_kind : {AngleKind::gaussian, AngleKind::discrete,
                              AngleKind::cauchy}) {
        CHECK(closed_form_report(ok_kind, q).printed_ok);
    }
}

TEST_CASE("sampling laws") {
    Rng rng(123);

    const AngleDistribution disc =
        AngleDistribution::solve(AngleKind::discrete, 0.09);
    const double a = disc.scale();
    int plus = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double t = disc.sample(rng);
        CHECK((t == a || t == -a));
        if (t > 0) ++plus;
    }
    const double dev = std::abs(plus - n / 2.0) / std::sqrt(n * 0.25);
    CHECK(dev < 3.5);

    const AngleDistribution uni = AngleDistribution::solve(AngleKind::uniform, 0.1);
    for (int i = 0; i < 1000; ++i) {
        CHECK(std::abs(uni.sample(rng)) <= uni.scale());
    }

    const AngleDistribution gauss =
        AngleDistribution::solve(AngleKind::gaussian, 0.02);
    double mean = 0.0, s2 = 0.0;
    const int m = 1000000;
    for (int i = 0; i < m; ++i) {
        const double t = gauss.sample(rng);
        mean += t;
        const double st = std::sin(t);
        s2 += st * st;
    }
    mean /= m;
    s2 /= m;
    CHECK(std::abs(mean) < 3.0 * gauss.scale() / std::sqrt(double(m)));
    // E[sin^2] has variance below E[sin^4] <= scale-ish; 3 generous SEs.
    CHECK(std::abs(s2 - 0.02) < 3.0 * std::sqrt(0.02 / double(m)) * 2.0);
}

TEST_CASE("coherent shifted gaussian reproduces the moment identities") {
    const double mu = 0.21, sigma = 0.17;
    const AngleDistribution d = AngleDistribution::gaussian_with_mean(mu, sigma);
    const double e2s = std::exp(-2.0 * sigma * sigma);
    CHECK(d.e_sin2() ==
          doctest::Approx(0.5 - 0.5 * e2s * std::cos(2 * mu)).epsilon(1e-10));
    CHECK(d.cross_moment() ==
          doctest::Approx(0.5 * e2s * std::sin(2 * mu)).epsilon(1e-10));
}

}  // TEST_SUITE
