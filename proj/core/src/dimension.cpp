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

#include "harqmimo/dimension.hpp"

#include "harqmimo/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace harqmimo {

void OutageConstraint::validate() const {
    if (!(theta > 0.0 && theta <= 0.5)) throw std::invalid_argument("outage target theta must lie in (0, 0.5]");
}

std::string_view to_string(SolveMethod method) {
    switch (method) {
    case SolveMethod::ClosedForm: return "closed";
    case SolveMethod::HighSnrApprox: return "highsnr";
    case SolveMethod::NumericRoot: return "numeric";
    case SolveMethod::IntegerSearch: return "search";
    case SolveMethod::MonteCarloSearch: return "mc";
    }
    return "unknown";
}

int ceil_count(double raw) {
    if (!std::isfinite(raw)) throw std::invalid_argument("antenna count is not finite");
    const double nearest = std::round(raw);
    if (std::fabs(raw - nearest) <= 1e-12 * std::max(1.0, std::fabs(raw))) return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(raw));
}

void AntennaQuery::validate() const {
    harq.validate();
    constraint.validate();
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    if ((regime == Regime::Case1 || regime == Regime::Case2) && fixed_antennas < 1) {
        throw std::invalid_argument("fixed antenna count must be at least 1");
    }
    if ((regime == Regime::Case3 || regime == Regime::Case4) && !(k > 0.0)) {
        throw std::invalid_argument("antenna ratio k must be positive");
    }
}

SystemGeometry AntennaQuery::geometry_for(int n) const {
    SystemGeometry g;
    g.regime = regime;
    g.snr = snr;
    g.k = k;
    switch (regime) {
    case Regime::Case1:
        g.n_t = fixed_antennas;
        g.n_r = n;
        break;
    case Regime::Case2:
        g.n_t = n;
        g.n_r = fixed_antennas;
        break;
    case Regime::Case3:
    case Regime::Case4:
        g.n_r = n;
        g.n_t = std::max(1, ceil_count(k * n));
        break;
    }
    return g;
}

AntennaRequirement AntennaQuery::requirement_for(int n, double raw, SolveMethod method) const {
    const SystemGeometry g = geometry_for(n);
    return {g.n_t, g.n_r, raw, method};
}

namespace {

double scaled_q_inverse(const HarqConfig& harq, const OutageConstraint& constraint) {
    return specfun::inv_q(constraint.theta) / std::sqrt(static_cast<double>(harq.multiplicity()));
}

int count_from_raw(double raw) { return std::max(1, ceil_count(raw)); }

} // namespace

AntennaRequirement min_antennas_closed(const AntennaQuery& query) {
    query.validate();
    const HarqConfig& harq = query.harq;
    const double q = scaled_q_inverse(harq, query.constraint);
    const double phi = query.snr;
    const double m = harq.m;
    const double rate = harq.rate;
    const double gamma = specfun::Constants::euler_gamma;

    double raw = 0.0;
    switch (query.regime) {
    case Regime::Case1: {
        const double nt = query.fixed_antennas;
        if (q == 0.0) {
            raw = nt * std::exp(rate / (m * nt)) / phi;
        } else {
            const double w = specfun::lambert_w(q * std::sqrt(phi) / (2.0 * nt) * std::exp(-rate / (2.0 * m * nt)));
            raw = q * q / (4.0 * nt * w * w);
        }
        break;
    }
    case Regime::Case2: {
        const double nr = query.fixed_antennas;
        const double margin = nr * std::log1p(phi) - rate / m;
        if (margin <= 0.0) {
            throw InfeasibleError("Case 2 infeasible: N_r ln(1 + snr) must exceed R/M; adding transmit antennas "
                                  "cannot raise the mean mutual information");
        }
        const double base = phi * std::sqrt(nr) * q / ((1.0 + phi) * margin);
        raw = base * base;
        break;
    }
    case Regime::Case3:
        raw = rate / (m * phi) + q / std::sqrt(query.k);
        break;
    case Regime::Case4: {
        const double k = query.k;
        if (k == 1.0) throw DomainError("Case 4 closed form is undefined for k = 1; use min_antennas_k1");
        double spread = 0.0;
        double slope = 0.0;
        if (k > 1.0) {
            spread = std::log(k / (k - 1.0));
            slope = std::log(phi) - gamma - 1.0 + (k - 1.0) * spread;
        } else {
            spread = -std::log1p(-k);
            slope = k * (std::log(phi) - gamma - 1.0 - std::log(k) + ((k - 1.0) / k) * std::log1p(-k));
        }
        if (slope <= 0.0) throw InfeasibleError("Case 4 closed form needs a higher SNR for this antenna ratio");
        raw = (rate / m + q * std::sqrt(spread)) / slope;
        break;
    }
    }
    return query.requirement_for(count_from_raw(raw), raw, SolveMethod::ClosedForm);
}

HighSnrRequirement min_antennas_highsnr(int n_t, const HarqConfig& harq, double snr,
                                        const OutageConstraint& constraint) {
    harq.validate();
    constraint.validate();
    if (n_t < 1) throw std::invalid_argument("n_t must be at least 1");
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");

    const double c = harq.multiplicity();
    const double q_inv = specfun::inv_q(constraint.theta);
    const double ln_phi = std::log(snr);
    const double raw = q_inv * q_inv / (c * n_t * ln_phi * ln_phi);

    HighSnrRequirement out;
    out.simplified = {n_t, count_from_raw(raw), raw, SolveMethod::HighSnrApprox};

    const double q = q_inv / std::sqrt(c);
    if (q > 0.0) {
        const double level = std::log(q * std::sqrt(snr) / (2.0 * n_t)) - harq.rate / (2.0 * harq.m * n_t);
        if (level > 0.0) {
            const double w = level - std::log(level);
            if (w > 0.0) out.expanded_raw = q * q / (4.0 * n_t * w * w);
        }
    }
    return out;
}

AntennaRequirement min_antennas_k1(const HarqConfig& harq, double snr, const OutageConstraint& constraint) {
    harq.validate();
    constraint.validate();
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");

    const double slope = std::log(snr) - specfun::Constants::euler_gamma - 1.0;
    const double q = scaled_q_inverse(harq, constraint);
    const double target = harq.threshold();
    auto residual = [&](double n) { return n * slope - target - q * std::sqrt(std::log(n - 1.0) + 1.0); };

    // The square root is real from N = 1 + 1/e on.
    double lo = 1.0 + std::exp(-1.0);
    double hi = static_cast<double>(kSearchUpperBound);
    double f_lo = residual(lo);
    const double f_hi = residual(hi);
    if (f_hi < 0.0) throw NoRootError("K = 1 equation has no root below 1e6 antennas");
    if (f_lo >= 0.0) {
        const int n = count_from_raw(lo);
        return {n, n, lo, SolveMethod::NumericRoot};
    }
    double root = hi;
    for (int i = 0; i < 400; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = residual(mid);
        root = mid;
        if (std::fabs(f_mid) <= 1e-9 && hi - lo < 1e-9) break;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * hi) {
            root = 0.5 * (lo + hi);
            break;
        }
    }
    const int n = count_from_raw(root);
    return {n, n, root, SolveMethod::NumericRoot};
}

namespace {

GaussianMoments continuous_moments(Regime regime, double n_t, double n_r, double phi) {
    switch (regime) {
    case Regime::Case1:
        return {n_t * std::log1p(n_r * phi / n_t), n_t / n_r};
    case Regime::Case2: {
        const double g = phi / (1.0 + phi);
        return {n_r * std::log1p(phi), n_r * g * g / n_t};
    }
    case Regime::Case3:
        return {n_r * phi, n_r / n_t * phi * phi};
    case Regime::Case4:
        return case4_moments_continuous(n_t, n_r, phi);
    }
    throw std::invalid_argument("unknown regime");
}

} // namespace

AntennaRequirement min_antennas_numeric(const AntennaQuery& query) {
    query.validate();
    const HarqConfig& harq = query.harq;
    const double c = harq.multiplicity();
    const double q = specfun::inv_q(query.constraint.theta);
    const double target = harq.threshold();

    auto dims = [&](double n) -> std::pair<double, double> {
        switch (query.regime) {
        case Regime::Case1: return {static_cast<double>(query.fixed_antennas), n};
        case Regime::Case2: return {n, static_cast<double>(query.fixed_antennas)};
        default: return {query.k * n, n};
        }
    };
    auto margin = [&](double n) {
        const auto [nt, nr] = dims(n);
        const GaussianMoments g = continuous_moments(query.regime, nt, nr, query.snr);
        return std::sqrt(c) * (g.mu - target) / g.sigma() - q;
    };

    double lo = 1.0;
    if (query.regime == Regime::Case3 || query.regime == Regime::Case4) lo = std::max(1.0, 1.0 / query.k);
    if (margin(lo) >= 0.0) return query.requirement_for(count_from_raw(lo), lo, SolveMethod::NumericRoot);

    double hi = lo;
    const double bound = kSearchUpperBound;
    while (true) {
        hi = std::min(2.0 * hi, bound);
        if (margin(hi) >= 0.0) break;
        if (hi >= bound) {
            throw SearchBoundError("no antenna count up to 1e6 meets the outage target", kSearchUpperBound);
        }
        lo = hi;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (margin(mid) >= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return query.requirement_for(count_from_raw(hi), hi, SolveMethod::NumericRoot);
}

AntennaRequirement min_antennas_search(const AntennaQuery& query) {
    query.validate();
    const double theta = query.constraint.theta;
    const int n = smallest_satisfying(
        [&](int count) { return outage_approx(gaussian_moments(query.geometry_for(count)), query.harq) <= theta; });
    return query.requirement_for(n, n, SolveMethod::IntegerSearch);
}

double supported_rate(const SystemGeometry& geom, const HarqConfig& harq, const OutageConstraint& constraint,
                      const SupportedRateOptions& options) {
    harq.validate();
    constraint.validate();
    const GaussianMoments g =
        options.pa ? gaussian_moments_pa(geom, *options.pa, options.phi_cons) : gaussian_moments(geom);
    const double c = harq.multiplicity();
    const double rate = harq.m * (g.mu - g.sigma() * specfun::inv_q(constraint.theta) / std::sqrt(c));
    return std::max(0.0, rate);
}

std::vector<double> power_grid(double budget) {
    std::vector<double> grid;
    grid.reserve(kPowerGridPoints);
    for (int i = 0; i < kPowerGridPoints; ++i) grid.push_back(budget * std::pow(10.0, (i - 20) / 10.0));
    return grid;
}

PowerAllocResult best_schedule(const SystemGeometry& geom, const HarqConfig& harq, double budget) {
    harq.validate();
    if (harq.fading == Fading::QuasiStatic) {
        throw std::invalid_argument("power allocation is defined for slow or fast fading only");
    }
    if (harq.m > 4) throw std::invalid_argument("power allocation grid search supports at most 4 rounds");
    if (!(budget > 0.0)) throw std::invalid_argument("power budget must be positive");

    const std::vector<double> grid = power_grid(budget);
    std::vector<GaussianMoments> moments;
    moments.reserve(grid.size());
    for (double p : grid) moments.push_back(gaussian_moments(geom.with_snr(p)));

    const int rounds = harq.m;
    const double t = harq.realizations_per_round();
    // Admit schedules whose average power equals the budget up to rounding.
    const double limit = budget * (1.0 + 1e-12);

    std::vector<int> idx(rounds, 0);
    PowerAllocResult best;
    bool found = false;
    while (true) {
        double mu_sum = 0.0;
        double var_sum = 0.0;
        double num = grid[idx[0]];
        double den = 1.0;
        for (int m = 1; m <= rounds; ++m) {
            mu_sum += moments[idx[m - 1]].mu;
            var_sum += moments[idx[m - 1]].sigma2;
            if (m < rounds) {
                const double q =
                    specfun::q_func((mu_sum / m - harq.rate / m) / std::sqrt(var_sum / (t * m * m)));
                num += grid[idx[m]] * q;
                den += q;
            }
        }
        const double avg = num / den;
        if (avg <= limit) {
            const double out = specfun::q_func((mu_sum / rounds - harq.rate / rounds) /
                                               std::sqrt(var_sum / (t * rounds * rounds)));
            if (!found || out < best.outage) {
                found = true;
                best.outage = out;
                best.average_power = avg;
                best.schedule.powers.clear();
                for (int i : idx) best.schedule.powers.push_back(grid[i]);
            }
        }
        int pos = rounds - 1;
        while (pos >= 0 && ++idx[pos] == kPowerGridPoints) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return best;
}

PowerAllocResult min_antennas_power_alloc(const AntennaQuery& query, double power_budget) {
    AntennaQuery q = query;
    q.snr = power_budget;
    q.validate();
    const double theta = q.constraint.theta;
    const int n = smallest_satisfying(
        [&](int count) { return best_schedule(q.geometry_for(count), q.harq, power_budget).outage <= theta; });
    PowerAllocResult result = best_schedule(q.geometry_for(n), q.harq, power_budget);
    result.requirement = q.requirement_for(n, n, SolveMethod::IntegerSearch);
    return result;
}

} // namespace harqmimo
