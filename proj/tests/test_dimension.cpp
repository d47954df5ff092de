// SPDX-License-Identifier: Apache-2.0
//
// harqmimo: antenna dimensioning and outage analysis for MIMO-HARQ links
// Copyright (C) 2026 The harqmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "oracles.hpp"

#include "harqmimo/dimension.hpp"
#include "harqmimo/errors.hpp"
#include "harqmimo/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace harqmimo;

namespace {

AntennaQuery query(Regime regime, int fixed, double k, double snr, HarqConfig harq, double theta) {
    AntennaQuery q;
    q.regime = regime;
    q.fixed_antennas = fixed;
    q.k = k;
    q.snr = snr;
    q.harq = harq;
    q.constraint = {theta};
    return q;
}

HarqConfig quasi(double rate) { return HarqConfig::make(Fading::QuasiStatic, 1, 1, rate); }

constexpr double kGamma = 0.57721566490153286061;

} // namespace

TEST(CeilCount, ClearsRoundingNoise) {
    EXPECT_EQ(ceil_count(3.0), 3);
    EXPECT_EQ(ceil_count(3.0 * (1.0 + 1e-14)), 3);
    EXPECT_EQ(ceil_count(3.000001), 4);
    EXPECT_EQ(ceil_count(4.11), 5);
}

TEST(SmallestSatisfying, FindsThresholdAndBounds) {
    for (int target : {1, 2, 3, 17, 1000, 999'999, 1'000'000}) {
        int calls = 0;
        EXPECT_EQ(smallest_satisfying([&](int n) { ++calls; return n >= target; }), target);
        EXPECT_LT(calls, 64);
    }
    try {
        smallest_satisfying([](int) { return false; }, 1000);
        FAIL() << "expected SearchBoundError";
    } catch (const SearchBoundError& e) {
        EXPECT_EQ(e.bound(), 1000);
    }
}

TEST(ClosedForm, Case1Example) {
    const auto q = query(Regime::Case1, 1, 1.0, db_to_linear(5.0), quasi(3.0), 1e-3);
    const AntennaRequirement r = min_antennas_closed(q);
    // q sqrt(phi)/2 e^{-R/2} and the W value, from the oracles.
    const double qi = oracle::inv_q(1e-3);
    const double arg = qi * std::sqrt(db_to_linear(5.0)) / 2.0 * std::exp(-1.5);
    EXPECT_NEAR(arg, 0.6131, 1e-4);
    const double w = oracle::lambert_w(arg);
    EXPECT_NEAR(w, 0.408, 1e-3);
    EXPECT_NEAR(r.raw_value, qi * qi / (4.0 * w * w), 1e-9);
    EXPECT_NEAR(r.raw_value, 14.34, 0.02);
    EXPECT_EQ(r.n_r_hat, 15);
    EXPECT_EQ(r.n_t_hat, 1);
    EXPECT_EQ(r.method, SolveMethod::ClosedForm);
}

TEST(ClosedForm, Case3VanishingQuantile) {
    const auto q = query(Regime::Case3, 1, 1.0, 0.1, HarqConfig::make(Fading::SlowFading, 2, 1, 2.0), 0.5);
    const AntennaRequirement r = min_antennas_closed(q);
    EXPECT_NEAR(r.raw_value, 10.0, 1e-12);
    EXPECT_EQ(r.n_r_hat, 10);
    EXPECT_EQ(r.n_t_hat, 10);
}

TEST(ClosedForm, Case4Example) {
    const auto q = query(Regime::Case4, 1, 2.0, 31.623, quasi(8.0), 1e-3);
    const AntennaRequirement r = min_antennas_closed(q);
    const double qi = oracle::inv_q(1e-3);
    const double ref = (8.0 + qi * std::sqrt(std::log(2.0))) / (std::log(31.623) - kGamma - 1.0 + std::log(2.0));
    EXPECT_NEAR(r.raw_value, ref, 1e-9);
    EXPECT_NEAR(r.raw_value, 4.11, 0.01);
    EXPECT_EQ(r.n_r_hat, 5);
    EXPECT_EQ(r.n_t_hat, 10);
}

TEST(ClosedForm, Case4SmallRatioBranch) {
    const double k = 0.5;
    const auto q = query(Regime::Case4, 1, k, 100.0, quasi(4.0), 1e-2);
    const double qi = oracle::inv_q(1e-2);
    const double ref = (4.0 + qi * std::sqrt(-std::log(1.0 - k))) /
                       (k * (std::log(100.0) - kGamma - 1.0 - std::log(k) + (k - 1.0) / k * std::log(1.0 - k)));
    EXPECT_NEAR(min_antennas_closed(q).raw_value, ref, 1e-9);
}

TEST(ClosedForm, Errors) {
    EXPECT_THROW(min_antennas_closed(query(Regime::Case4, 1, 1.0, 31.623, quasi(8.0), 1e-3)), DomainError);
    // N_r ln(1 + phi) = ln 2 < R / M = 1.
    EXPECT_THROW(min_antennas_closed(query(Regime::Case2, 1, 1.0, 1.0, quasi(1.0), 1e-3)), InfeasibleError);
    EXPECT_THROW(min_antennas_closed(query(Regime::Case4, 1, 2.0, 1.0, quasi(1.0), 1e-3)), InfeasibleError);
    EXPECT_THROW(min_antennas_closed(query(Regime::Case1, 1, 1.0, 1.0, quasi(1.0), 0.6)), std::invalid_argument);
    EXPECT_THROW(min_antennas_closed(query(Regime::Case1, 1, 1.0, 1.0, quasi(1.0), 0.0)), std::invalid_argument);
}

TEST(ClosedForm, Case1ZeroQuantileLimit) {
    const auto q = query(Regime::Case1, 2, 1.0, 2.0, quasi(3.0), 0.5);
    const AntennaRequirement r = min_antennas_closed(q);
    // Under ln(1 + u) ~ ln u the mean meets R/M: N_t ln(N_r phi / N_t) = R.
    EXPECT_NEAR(2.0 * std::log(r.raw_value * 2.0 / 2.0), 3.0, 1e-12);
}

TEST(ClosedForm, FadingSubstitutionSlowEqualsFastWithSingleRealization) {
    for (Regime regime : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4}) {
        for (int m : {1, 2, 3}) {
            const double snr = regime == Regime::Case3 ? 0.3 : 31.623;
            const auto slow = query(regime, 2, 2.0, snr, HarqConfig::make(Fading::SlowFading, m, 1, 2.0), 1e-3);
            auto fast = slow;
            fast.harq = HarqConfig::make(Fading::FastFading, m, 1, 2.0);
            EXPECT_EQ(min_antennas_closed(slow).raw_value, min_antennas_closed(fast).raw_value);
            EXPECT_EQ(min_antennas_search(slow).n_r_hat, min_antennas_search(fast).n_r_hat);
            EXPECT_EQ(min_antennas_search(slow).n_t_hat, min_antennas_search(fast).n_t_hat);
            EXPECT_EQ(min_antennas_numeric(slow).raw_value, min_antennas_numeric(fast).raw_value);
        }
    }
    const auto slow = HarqConfig::make(Fading::SlowFading, 2, 1, 1.0);
    const auto fast = HarqConfig::make(Fading::FastFading, 2, 1, 1.0);
    EXPECT_EQ(min_antennas_k1(slow, 100.0, {1e-3}).raw_value, min_antennas_k1(fast, 100.0, {1e-3}).raw_value);
    EXPECT_EQ(min_antennas_highsnr(2, slow, 1000.0, {1e-3}).simplified.raw_value,
              min_antennas_highsnr(2, fast, 1000.0, {1e-3}).simplified.raw_value);
}

TEST(HighSnr, ExampleAndExactScaling) {
    const HighSnrRequirement r = min_antennas_highsnr(1, quasi(1.0), 100.0, {1e-3});
    const double qi = oracle::inv_q(1e-3);
    EXPECT_NEAR(r.simplified.raw_value, qi * qi / std::pow(std::log(100.0), 2), 1e-12);
    EXPECT_NEAR(r.simplified.raw_value, 0.45, 0.005);
    EXPECT_EQ(r.simplified.n_r_hat, 1);
    EXPECT_EQ(r.simplified.method, SolveMethod::HighSnrApprox);

    for (int m : {1, 2, 4}) {
        for (int t : {1, 2, 8}) {
            const auto base = min_antennas_highsnr(3, HarqConfig::make(Fading::FastFading, m, t, 1.0), 1e4, {1e-4});
            const auto twice = min_antennas_highsnr(3, HarqConfig::make(Fading::FastFading, 2 * m, t, 1.0), 1e4, {1e-4});
            EXPECT_EQ(twice.simplified.raw_value, base.simplified.raw_value / 2.0);
        }
    }
}

TEST(HighSnr, QuantileSquaredScaling) {
    const double a = min_antennas_highsnr(2, quasi(1.0), 1e5, {1e-2}).simplified.raw_value;
    const double b = min_antennas_highsnr(2, quasi(1.0), 1e5, {1e-5}).simplified.raw_value;
    EXPECT_NEAR(b / a, std::pow(oracle::inv_q(1e-5) / oracle::inv_q(1e-2), 2), 1e-12);
}

TEST(HighSnr, ExpandedFormTracksClosedFormAtHighSnr) {
    for (double theta : {1e-2, 1e-3, 1e-4})
        for (double db : {30.0, 40.0, 50.0})
            for (double rate : {1.0, 2.0, 4.0})
                for (int nt : {1, 2, 4}) {
                    const double snr = db_to_linear(db);
                    const auto h = min_antennas_highsnr(nt, quasi(rate), snr, {theta});
                    const double closed = min_antennas_closed(query(Regime::Case1, nt, 1, snr, quasi(rate), theta)).raw_value;
                    ASSERT_TRUE(h.expanded_raw.has_value());
                    const double ratio = *h.expanded_raw / closed;
                    EXPECT_GE(ratio, 0.5);
                    EXPECT_LE(ratio, 2.0);
                }
}

TEST(HighSnr, SimplifiedFormApproachesClosedFormSlowly) {
    // The simplified form drops the iterated logarithm; its ratio to the
    // closed form rises towards 1 as the SNR grows.
    double prev = 0.0;
    for (double db : {30.0, 60.0, 100.0, 200.0, 400.0}) {
        const double snr = db_to_linear(db);
        const double simple = min_antennas_highsnr(1, quasi(1.0), snr, {1e-3}).simplified.raw_value;
        const double closed = min_antennas_closed(query(Regime::Case1, 1, 1, snr, quasi(1.0), 1e-3)).raw_value;
        const double ratio = simple / closed;
        EXPECT_GT(ratio, prev);
        EXPECT_LT(ratio, 1.0);
        prev = ratio;
    }
    EXPECT_GT(prev, 0.8);
}

TEST(SquareArrays, RootOfSquareArrayEquation) {
    const AntennaRequirement r = min_antennas_k1(quasi(8.0), 31.623, {1e-3});
    const double qi = oracle::inv_q(1e-3);
    const double slope = std::log(31.623) - kGamma - 1.0;
    EXPECT_NEAR(slope, 1.8767, 1e-4);
    EXPECT_LT(std::fabs(r.raw_value * slope - 8.0 - qi * std::sqrt(std::log(r.raw_value - 1.0) + 1.0)), 1e-9);
    EXPECT_NEAR(r.raw_value, 7.0, 0.1);
    EXPECT_EQ(r.n_r_hat, 8);
    EXPECT_EQ(r.n_t_hat, 8);
}

TEST(SquareArrays, VanishingQuantileIsLinear) {
    const AntennaRequirement r = min_antennas_k1(quasi(8.0), 31.623, {0.5});
    EXPECT_NEAR(r.raw_value, 8.0 / (std::log(31.623) - kGamma - 1.0), 1e-9);
}

TEST(SquareArrays, DecreasingInSnr) {
    // Strictly decreasing until the root reaches the 1 + 1/e floor.
    const double floor = 1.0 + std::exp(-1.0);
    double prev = std::numeric_limits<double>::infinity();
    for (double db = 10.0; db <= 40.0; db += 2.5) {
        const double raw = min_antennas_k1(quasi(6.0), db_to_linear(db), {1e-3}).raw_value;
        if (prev > floor) {
            EXPECT_LT(raw, prev) << db;
        } else {
            EXPECT_EQ(raw, floor) << db;
        }
        EXPECT_GE(raw, floor);
        prev = raw;
    }
    EXPECT_GT(min_antennas_k1(quasi(6.0), db_to_linear(10.0), {1e-3}).raw_value, floor);
    EXPECT_THROW(min_antennas_k1(quasi(6.0), 2.0, {1e-3}), NoRootError);
}

TEST(Search, Case1ExampleAndMinimality) {
    const auto q = query(Regime::Case1, 1, 1.0, db_to_linear(5.0), quasi(3.0), 1e-3);
    const AntennaRequirement r = min_antennas_search(q);
    EXPECT_EQ(r.n_r_hat, 15);
    EXPECT_EQ(r.method, SolveMethod::IntegerSearch);
    EXPECT_EQ(r.n_r_hat, min_antennas_closed(q).n_r_hat);
}

TEST(Search, MinimalityBothSidesOnGrid) {
    for (Regime regime : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4})
        for (double theta : {1e-2, 1e-4})
            for (double rate : {0.5, 2.0, 5.0}) {
                const double snr = regime == Regime::Case3 ? 0.5 : (regime == Regime::Case4 ? 31.623 : 3.1623);
                const auto q = query(regime, 2, 2.0, snr, HarqConfig::make(Fading::SlowFading, 2, 1, rate), theta);
                AntennaRequirement r;
                try {
                    r = min_antennas_search(q);
                } catch (const SearchBoundError&) {
                    continue;  // Case 2 beyond its mean-rate limit
                }
                const int n = regime == Regime::Case2 ? r.n_t_hat : r.n_r_hat;
                EXPECT_LE(outage_approx(gaussian_moments(q.geometry_for(n)), q.harq), theta);
                if (n > 1) EXPECT_GT(outage_approx(gaussian_moments(q.geometry_for(n - 1)), q.harq), theta);
            }
}

TEST(Search, VanishingQuantileCase3) {
    const auto q = query(Regime::Case3, 1, 1.0, 0.1, quasi(2.0), 0.5);
    EXPECT_EQ(min_antennas_search(q).n_r_hat, 20);
}

TEST(Search, BoundExceeded) {
    const auto q = query(Regime::Case2, 1, 1.0, 1.0, quasi(1.0), 1e-3);
    EXPECT_THROW(min_antennas_search(q), SearchBoundError);
}

TEST(Numeric, Case3MatchesClosedForm) {
    for (double k : {0.5, 1.0, 2.0}) {
        const auto q = query(Regime::Case3, 1, k, 0.3, quasi(3.0), 1e-3);
        EXPECT_NEAR(min_antennas_numeric(q).raw_value, min_antennas_closed(q).raw_value, 1e-8);
    }
}

TEST(Numeric, Case4RootSolvesMomentEquation) {
    const auto q = query(Regime::Case4, 1, 2.0, 31.623, quasi(8.0), 1e-3);
    const AntennaRequirement r = min_antennas_numeric(q);
    const GaussianMoments g = case4_moments_continuous(2.0 * r.raw_value, r.raw_value, 31.623);
    EXPECT_NEAR((g.mu - 8.0) / std::sqrt(g.sigma2), oracle::inv_q(1e-3), 1e-8);
    EXPECT_EQ(r.method, SolveMethod::NumericRoot);
    EXPECT_LE(std::abs(r.n_r_hat - min_antennas_search(q).n_r_hat), 1);
}

TEST(SupportedRate, VanishingQuantileAndRoundTrip) {
    // mu = 10 with sigma = 0.1: Case 3 with N_r = 100, phi = 0.1, N_t = 100.
    const SystemGeometry g{100, 100, 0.1, Regime::Case3, 1.0};
    EXPECT_NEAR(supported_rate(g, quasi(0.0), {0.5}), 10.0, 1e-12);

    for (Fading f : {Fading::QuasiStatic, Fading::SlowFading, Fading::FastFading})
        for (double theta : {1e-2, 1e-3, 1e-4}) {
            const SystemGeometry geom{64, 2, 10.0, Regime::Case2, 32.0};
            HarqConfig h = HarqConfig::make(f, 2, 2, 0.0);
            h.rate = supported_rate(geom, h, {theta});
            EXPECT_NEAR(outage_approx(gaussian_moments(geom), h), theta, 1e-10 * theta);
        }
}

TEST(SupportedRate, IdealAmplifierDominates) {
    const PaProfile real{0.65, 0.5, 1000.0};
    const PaProfile ideal{1.0, 0.0, std::numeric_limits<double>::infinity()};
    const SystemGeometry g{64, 2, 1.0, Regime::Case2, 32.0};
    const HarqConfig h = HarqConfig::make(Fading::FastFading, 2, 2, 0.0);
    for (double db = -10.0; db <= 31.0; db += 1.0) {
        const double cons = db_to_linear(db);
        const double a = supported_rate(g, h, {1e-4}, {ideal, cons});
        const double b = supported_rate(g, h, {1e-4}, {real, cons});
        EXPECT_GE(a, b);
    }
    EXPECT_THROW(supported_rate(g, h, {1e-4}, {real, db_to_linear(35.0)}), InfeasibleError);
}

TEST(PowerAllocation, GridHasBudgetAtIndexTwenty) {
    const auto grid = power_grid(2.0);
    ASSERT_EQ(grid.size(), 31u);
    EXPECT_EQ(grid[20], 2.0);
    EXPECT_NEAR(grid[0], 0.02, 1e-15);
    EXPECT_NEAR(grid[30], 20.0, 1e-13);
}

TEST(PowerAllocation, SingleRoundMatchesSearch) {
    for (double rate : {0.2, 0.4, 0.6}) {
        const auto q = query(Regime::Case2, 1, 1.0, 1.0, HarqConfig::make(Fading::SlowFading, 1, 1, rate), 1e-3);
        EXPECT_EQ(min_antennas_power_alloc(q, 1.0).requirement.n_t_hat, min_antennas_search(q).n_t_hat);
    }
}

TEST(PowerAllocation, NeverWorseThanUniform) {
    for (double rate : {0.3, 0.6, 0.9, 1.2}) {
        const auto q = query(Regime::Case2, 1, 1.0, 1.0, HarqConfig::make(Fading::SlowFading, 2, 1, rate), 1e-3);
        const PowerAllocResult adaptive = min_antennas_power_alloc(q, 1.0);
        const int uniform = min_antennas_search(q).n_t_hat;
        EXPECT_LE(adaptive.requirement.n_t_hat, uniform);
        EXPECT_LE(adaptive.average_power, 1.0 * (1.0 + 1e-12));
        EXPECT_LE(adaptive.outage, 1e-3);
        // The returned schedule reproduces its reported outage and power.
        const SystemGeometry g = q.geometry_for(adaptive.requirement.n_t_hat);
        EXPECT_NEAR(outage_power_alloc(g, q.harq, adaptive.schedule), adaptive.outage, 1e-15);
        EXPECT_NEAR(average_power(g, q.harq, adaptive.schedule), adaptive.average_power, 1e-14);
    }
}

TEST(PowerAllocation, RejectsQuasiStatic) {
    const auto q = query(Regime::Case2, 1, 1.0, 1.0, HarqConfig::make(Fading::QuasiStatic, 2, 1, 0.5), 1e-3);
    EXPECT_THROW(min_antennas_power_alloc(q, 1.0), std::invalid_argument);
}

TEST(SolveMethod, Names) {
    EXPECT_EQ(to_string(SolveMethod::ClosedForm), "closed");
    EXPECT_EQ(to_string(SolveMethod::MonteCarloSearch), "mc");
}
