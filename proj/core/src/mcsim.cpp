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

#include "harqmimo/mcsim.hpp"

#include "harqmimo/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace harqmimo {

namespace {

constexpr std::uint64_t kChunkSamples = 4096;

// Runs body(state, sample) over [0, samples) on `workers` threads, one State per
// worker. Callers only merge integer tallies, so the split never shows in results.
template <class State, class Body>
std::vector<State> run_samples(std::uint64_t samples, int workers, Body body) {
    const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
    const int threads = static_cast<int>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(chunks, 1)));
    std::vector<State> states(threads);
    std::atomic<std::uint64_t> next{0};
    auto work = [&](State& state) {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t end = std::min(samples, (c + 1) * kChunkSamples);
            for (std::uint64_t s = c * kChunkSamples; s < end; ++s) body(state, s);
        }
    };
    if (threads == 1) {
        work(states[0]);
        return states;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work, std::ref(states[i]));
    for (auto& t : pool) t.join();
    return states;
}

void check_options(const McOptions& opts) {
    if (opts.samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (opts.workers < 1) throw std::invalid_argument("workers must be at least 1");
}

} // namespace

void CorrelationSpec::validate() const {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("correlation beta must lie in [0, 1]");
}

ChannelSample sample_channel(const SystemGeometry& geom, const CorrelationSpec& corr, const ChannelStream& stream) {
    corr.validate();
    if (geom.n_t < 1 || geom.n_r < 1) throw std::invalid_argument("antenna counts must be at least 1");
    if (corr.beta > 0.0 && geom.n_r > 1) {
        throw UnsupportedGeometryError("correlated channels are defined for a single receive antenna only");
    }
    ChannelSample out;
    out.n_r = geom.n_r;
    out.n_t = geom.n_t;
    out.h.resize(static_cast<std::size_t>(geom.n_r) * geom.n_t);
    EntryAddress addr{stream.sample, stream.realization, 0};
    for (std::size_t e = 0; e < out.h.size(); ++e) {
        addr.entry = static_cast<std::uint32_t>(e);
        out.h[e] = complex_normal(stream.key, addr);
    }
    if (corr.beta > 0.0) {
        const double innovation = std::sqrt(1.0 - corr.beta * corr.beta);
        for (std::size_t e = 1; e < out.h.size(); ++e) out.h[e] = corr.beta * out.h[e - 1] + innovation * out.h[e];
    }
    return out;
}

double mutual_info(const ChannelSample& h, double snr, int n_t) {
    const double scale = snr / n_t;
    const int rows = h.n_r;
    const int cols = h.n_t;

    if (rows == 1 || cols == 1) {
        double sum = 0.0;
        for (const auto& v : h.h) sum += std::norm(v);
        return std::log1p(scale * sum);
    }

    const bool outer = rows <= cols;  // H H^h (rows x rows) or H^h H (cols x cols)
    const int d = outer ? rows : cols;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            std::complex<double> g{};
            if (i == j) {
                double diag = 0.0;
                if (outer) {
                    for (int c = 0; c < cols; ++c) diag += std::norm(h.at(i, c));
                } else {
                    for (int r = 0; r < rows; ++r) diag += std::norm(h.at(r, i));
                }
                g = diag;
            } else if (outer) {
                for (int c = 0; c < cols; ++c) g += h.at(i, c) * std::conj(h.at(j, c));
            } else {
                for (int r = 0; r < rows; ++r) g += std::conj(h.at(r, i)) * h.at(r, j);
            }
            a[static_cast<std::size_t>(i) * d + j] = scale * g + (i == j ? 1.0 : 0.0);
        }
    }

    auto factor = [&](double jitter, double& logdet) {
        std::vector<std::complex<double>> l(a.size());
        logdet = 0.0;
        for (int j = 0; j < d; ++j) {
            for (int i = j; i < d; ++i) {
                std::complex<double> s = a[static_cast<std::size_t>(i) * d + j];
                for (int k = 0; k < j; ++k) s -= l[static_cast<std::size_t>(i) * d + k] * std::conj(l[static_cast<std::size_t>(j) * d + k]);
                if (i == j) {
                    const double piv = s.real() + jitter;
                    if (!(piv > 0.0)) return false;
                    l[static_cast<std::size_t>(j) * d + j] = std::sqrt(piv);
                    logdet += std::log(piv);
                } else {
                    l[static_cast<std::size_t>(i) * d + j] = s / l[static_cast<std::size_t>(j) * d + j].real();
                }
            }
        }
        return true;
    };
    double logdet = 0.0;
    if (!factor(0.0, logdet)) factor(1e-12, logdet);
    return logdet;
}

std::pair<double, double> wilson_interval(std::uint64_t violations, std::uint64_t samples) {
    if (samples == 0) throw std::invalid_argument("samples must be at least 1");
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(violations) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
}

namespace {

OutageEstimate make_estimate(std::uint64_t violations, std::uint64_t samples, std::uint64_t seed) {
    OutageEstimate e;
    e.samples = samples;
    e.violations = violations;
    e.seed = seed;
    e.p_hat = static_cast<double>(violations) / static_cast<double>(samples);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(violations, samples);
    return e;
}

} // namespace

OutageEstimate estimate_outage(const SystemGeometry& geom, const HarqConfig& harq, const CorrelationSpec& corr,
                               const std::optional<PowerSchedule>& sched, const McOptions& opts) {
    harq.validate();
    corr.validate();
    check_options(opts);
    if (geom.n_t < 1 || geom.n_r < 1) throw std::invalid_argument("antenna counts must be at least 1");
    if (!(geom.snr > 0.0)) throw std::invalid_argument("snr must be positive");
    if (sched) sched->validate(harq.m);
    if (corr.beta > 0.0 && geom.n_r > 1) {
        throw UnsupportedGeometryError("correlated channels are defined for a single receive antenna only");
    }

    const Philox4x32::Key key = Philox4x32::key_from_seed(opts.seed);
    const double threshold = harq.threshold();
    const int per_round = harq.realizations_per_round();
    const int draws = harq.fading == Fading::QuasiStatic ? 1 : harq.m * per_round;

    auto round_snr = [&](int round) { return sched ? sched->powers[round] : geom.snr; };

    struct Tally {
        std::uint64_t violations = 0;
    };
    auto states = run_samples<Tally>(opts.samples, opts.workers, [&](Tally& tally, std::uint64_t s) {
        double sum = 0.0;
        int terms = 0;
        if (harq.fading == Fading::QuasiStatic) {
            const ChannelSample h = sample_channel(geom, corr, {key, s, 0});
            if (sched) {
                for (int m = 0; m < harq.m; ++m) sum += mutual_info(h, round_snr(m), geom.n_t);
                terms = harq.m;
            } else {
                sum = mutual_info(h, geom.snr, geom.n_t);
                terms = 1;
            }
        } else {
            for (int r = 0; r < draws; ++r) {
                const ChannelSample h = sample_channel(geom, corr, {key, s, static_cast<std::uint32_t>(r)});
                sum += mutual_info(h, round_snr(r / per_round), geom.n_t);
            }
            terms = draws;
        }
        if (sum / terms <= threshold) ++tally.violations;
    });

    std::uint64_t violations = 0;
    for (const auto& st : states) violations += st.violations;
    return make_estimate(violations, opts.samples, opts.seed);
}

double siso_outage_closed(double snr, double rate) {
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    if (!(rate >= 0.0)) throw std::invalid_argument("rate must be non-negative");
    return -std::expm1(-std::expm1(rate) / snr);
}

SimoOutageCurve::SimoOutageCurve(double snr, const HarqConfig& harq, const McOptions& opts, int max_antennas)
    : samples_(opts.samples), seed_(opts.seed), max_antennas_(max_antennas) {
    harq.validate();
    check_options(opts);
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    if (max_antennas < 1) throw std::invalid_argument("max_antennas must be at least 1");
    if (harq.fading != Fading::QuasiStatic) throw std::invalid_argument("SIMO outage curve needs quasi-static fading");

    const Philox4x32::Key key = Philox4x32::key_from_seed(opts.seed);
    const double threshold = harq.threshold();
    // log1p(snr * S) cannot exceed the threshold while S is clearly below this.
    const double near = std::expm1(threshold) / snr * (1.0 - 1e-9);

    struct Tally {
        std::vector<std::uint64_t> counts;
        std::uint64_t never = 0;
    };
    auto states = run_samples<Tally>(samples_, opts.workers, [&](Tally& tally, std::uint64_t s) {
        double sum = 0.0;
        for (int n = 1; n <= max_antennas_; ++n) {
            sum += std::norm(complex_normal(key, {s, 0, static_cast<std::uint32_t>(n - 1)}));
            if (sum >= near && std::log1p(snr * sum) > threshold) {
                if (tally.counts.size() <= static_cast<std::size_t>(n)) tally.counts.resize(n + 1, 0);
                ++tally.counts[n];
                return;
            }
        }
        ++tally.never;
    });

    for (const auto& st : states) {
        if (passage_counts_.size() < st.counts.size()) passage_counts_.resize(st.counts.size(), 0);
        for (std::size_t n = 0; n < st.counts.size(); ++n) passage_counts_[n] += st.counts[n];
        never_cleared_ += st.never;
    }
}

std::uint64_t SimoOutageCurve::violations(int n_r) const {
    if (n_r < 1 || n_r > max_antennas_) throw std::invalid_argument("n_r outside the simulated range");
    std::uint64_t v = never_cleared_;
    for (std::size_t n = static_cast<std::size_t>(n_r) + 1; n < passage_counts_.size(); ++n) v += passage_counts_[n];
    return v;
}

OutageEstimate SimoOutageCurve::at(int n_r) const { return make_estimate(violations(n_r), samples_, seed_); }

int SimoOutageCurve::min_antennas(double theta) const {
    std::uint64_t v = samples_;
    for (int n = 1; n <= max_antennas_; ++n) {
        v -= n < static_cast<int>(passage_counts_.size()) ? passage_counts_[n] : 0;
        if (static_cast<double>(v) / static_cast<double>(samples_) <= theta) return n;
        if (v == never_cleared_ && static_cast<std::size_t>(n) >= passage_counts_.size()) break;
    }
    throw SearchBoundError("no receive antenna count up to " + std::to_string(max_antennas_) +
                               " meets the outage target",
                           max_antennas_);
}

McRequirement min_antennas_mc(const AntennaQuery& query, const CorrelationSpec& corr, const McOptions& opts) {
    query.validate();
    corr.validate();
    check_options(opts);
    const double theta = query.constraint.theta;

    McRequirement out;
    if (query.regime == Regime::Case1 && query.fixed_antennas == 1 && query.harq.fading == Fading::QuasiStatic &&
        corr.beta == 0.0) {
        const SimoOutageCurve curve(query.snr, query.harq, opts, kSearchUpperBound);
        const int n = curve.min_antennas(theta);
        out.requirement = query.requirement_for(n, n, SolveMethod::MonteCarloSearch);
        out.estimate = curve.at(n);
        return out;
    }

    auto outage_at = [&](int n) {
        return estimate_outage(query.geometry_for(n), query.harq, corr, std::nullopt, opts);
    };
    const int n = smallest_satisfying([&](int count) { return outage_at(count).p_hat <= theta; });
    out.requirement = query.requirement_for(n, n, SolveMethod::MonteCarloSearch);
    out.estimate = outage_at(n);
    return out;
}

} // namespace harqmimo
