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

#include "harqmimo/model.hpp"

#include "harqmimo/errors.hpp"
#include "harqmimo/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace harqmimo {

std::string_view to_string(Regime regime) {
    switch (regime) {
    case Regime::Case1: return "case1";
    case Regime::Case2: return "case2";
    case Regime::Case3: return "case3";
    case Regime::Case4: return "case4";
    }
    return "unknown";
}

std::string_view to_string(Fading fading) {
    switch (fading) {
    case Fading::QuasiStatic: return "quasi";
    case Fading::SlowFading: return "slow";
    case Fading::FastFading: return "fast";
    }
    return "unknown";
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void SystemGeometry::validate() const {
    if (n_t < 1 || n_r < 1) throw std::invalid_argument("antenna counts must be at least 1");
    if (!(snr > 0.0) || !std::isfinite(snr)) throw std::invalid_argument("snr must be positive and finite");
    if (regime == Regime::Case3 || regime == Regime::Case4) {
        if (!(k > 0.0)) throw std::invalid_argument("antenna ratio k must be positive");
        if (std::fabs(n_t - k * n_r) >= 1.0) {
            throw std::invalid_argument("n_t = " + std::to_string(n_t) + " is inconsistent with k * n_r = " +
                                        std::to_string(k * n_r));
        }
    }
}

SystemGeometry SystemGeometry::with_snr(double new_snr) const {
    SystemGeometry g = *this;
    g.snr = new_snr;
    return g;
}

HarqConfig HarqConfig::make(Fading fading, int m, int t, double rate) {
    HarqConfig h{fading, m, fading == Fading::FastFading ? t : 1, rate};
    h.validate();
    return h;
}

void HarqConfig::validate() const {
    if (m < 1) throw std::invalid_argument("number of rounds m must be at least 1");
    if (t < 1) throw std::invalid_argument("realizations per round t must be at least 1");
    if (!(rate >= 0.0) || !std::isfinite(rate)) throw std::invalid_argument("rate must be non-negative and finite");
}

int HarqConfig::multiplicity() const {
    switch (fading) {
    case Fading::QuasiStatic: return 1;
    case Fading::SlowFading: return m;
    case Fading::FastFading: return m * t;
    }
    return 1;
}

double GaussianMoments::sigma() const { return std::sqrt(sigma2); }

void PaProfile::validate() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("PA efficiency must lie in [0, 1]");
    if (!(theta_pa >= 0.0 && theta_pa < 1.0)) throw std::invalid_argument("PA class parameter must lie in [0, 1)");
    if (!(phi_max > 0.0)) throw std::invalid_argument("PA maximum output power must be positive");
}

void PowerSchedule::validate(int rounds) const {
    if (static_cast<int>(powers.size()) != rounds) {
        throw ScheduleMismatchError("power schedule has " + std::to_string(powers.size()) + " entries, expected " +
                                    std::to_string(rounds));
    }
    for (double p : powers) {
        if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("schedule powers must be positive");
    }
}

namespace {

GaussianMoments case4_moments_exact(int n_t, int n_r, double snr) {
    const int n_min = std::min(n_t, n_r);
    const int n_max = std::max(n_t, n_r);
    const double gamma = specfun::Constants::euler_gamma;

    // Sums run from the smallest term up.
    double harmonic = 0.0;
    for (int i = n_max - n_min; i >= 1; --i) harmonic += 1.0 / i;
    double ratio_sum = 0.0;
    for (int i = n_min - 1; i >= 1; --i) ratio_sum += static_cast<double>(i) / (n_max - i);
    double var_sum = 0.0;
    for (int i = n_min - 1; i >= 1; --i) {
        const double d = n_max - n_min + i;
        var_sum += i / (d * d);
    }
    double inv_sq = 0.0;
    for (int i = n_max - 1; i >= 1; --i) inv_sq += 1.0 / (static_cast<double>(i) * i);

    GaussianMoments out;
    out.mu = n_min * std::log(snr / n_t) + n_min * (harmonic - gamma) + ratio_sum;
    out.sigma2 = var_sum + n_min * (std::numbers::pi * std::numbers::pi / 6.0 - inv_sq);
    return out;
}

} // namespace

GaussianMoments case4_moments_continuous(double n_t, double n_r, double snr) {
    using specfun::digamma;
    using specfun::trigamma;
    const double n_min = std::min(n_t, n_r);
    const double n_max = std::max(n_t, n_r);
    const double d = n_max - n_min;
    const double gamma = specfun::Constants::euler_gamma;

    const double harmonic = digamma(d + 1.0) + gamma;
    const double ratio_sum = n_max * (digamma(n_max) - digamma(d + 1.0)) - (n_min - 1.0);
    const double inv_sum = digamma(d + n_min) - digamma(d + 1.0);
    const double inv_sq_sum = trigamma(d + 1.0) - trigamma(d + n_min);

    GaussianMoments out;
    out.mu = n_min * std::log(snr / n_t) + n_min * (harmonic - gamma) + ratio_sum;
    out.sigma2 = (inv_sum - d * inv_sq_sum) + n_min * trigamma(n_max);
    return out;
}

GaussianMoments gaussian_moments(const SystemGeometry& geom) {
    geom.validate();
    const double nt = geom.n_t;
    const double nr = geom.n_r;
    const double phi = geom.snr;
    switch (geom.regime) {
    case Regime::Case1:
        return {nt * std::log1p(nr * phi / nt), nt / nr};
    case Regime::Case2: {
        const double g = phi / (1.0 + phi);
        return {nr * std::log1p(phi), nr * g * g / nt};
    }
    case Regime::Case3:
        return {nr * phi, nr / nt * phi * phi};
    case Regime::Case4:
        return case4_moments_exact(geom.n_t, geom.n_r, phi);
    }
    throw std::invalid_argument("unknown regime");
}

double pa_output(const PaProfile& pa, double phi_cons) {
    pa.validate();
    if (!(phi_cons > 0.0)) throw std::invalid_argument("consumed power must be positive");
    const double base = pa.epsilon * phi_cons / std::pow(pa.phi_max, pa.theta_pa);
    const double phi = std::pow(base, 1.0 / (1.0 - pa.theta_pa));
    if (phi > pa.phi_max) {
        throw InfeasibleError("PA output " + std::to_string(phi) + " exceeds the maximum output power " +
                              std::to_string(pa.phi_max));
    }
    return phi;
}

GaussianMoments gaussian_moments_pa(const SystemGeometry& geom, const PaProfile& pa, double phi_cons) {
    return gaussian_moments(geom.with_snr(pa_output(pa, phi_cons)));
}

double outage_approx(const GaussianMoments& moments, const HarqConfig& harq) {
    harq.validate();
    const double c = harq.multiplicity();
    return specfun::q_func(std::sqrt(c) * (moments.mu - harq.threshold()) / moments.sigma());
}

namespace {

struct RoundMoments {
    std::vector<double> mu;
    std::vector<double> sigma2;
};

RoundMoments per_round(const SystemGeometry& geom, const HarqConfig& harq, const PowerSchedule& sched) {
    harq.validate();
    if (harq.fading == Fading::QuasiStatic) {
        throw std::invalid_argument("power allocation is defined for slow or fast fading only");
    }
    sched.validate(harq.m);
    RoundMoments out;
    for (double p : sched.powers) {
        const GaussianMoments g = gaussian_moments(geom.with_snr(p));
        out.mu.push_back(g.mu);
        out.sigma2.push_back(g.sigma2);
    }
    return out;
}

// Q((mean_m - R/m) / sd_m) for the first m rounds.
double partial_outage(const RoundMoments& r, int m, int t, double rate) {
    double mu = 0.0;
    double var = 0.0;
    for (int n = 0; n < m; ++n) {
        mu += r.mu[n];
        var += r.sigma2[n];
    }
    mu /= m;
    var /= static_cast<double>(t) * m * m;
    return specfun::q_func((mu - rate / m) / std::sqrt(var));
}

} // namespace

double outage_power_alloc(const SystemGeometry& geom, const HarqConfig& harq, const PowerSchedule& sched) {
    const RoundMoments r = per_round(geom, harq, sched);
    return partial_outage(r, harq.m, harq.realizations_per_round(), harq.rate);
}

double average_power(const SystemGeometry& geom, const HarqConfig& harq, const PowerSchedule& sched) {
    const RoundMoments r = per_round(geom, harq, sched);
    double num = sched.powers[0];
    double den = 1.0;
    for (int m = 1; m < harq.m; ++m) {
        const double q = partial_outage(r, m, harq.realizations_per_round(), harq.rate);
        num += sched.powers[m] * q;
        den += q;
    }
    return num / den;
}

} // namespace harqmimo
