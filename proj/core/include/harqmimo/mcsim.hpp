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

#pragma once

#include "harqmimo/dimension.hpp"
#include "harqmimo/model.hpp"
#include "harqmimo/philox.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace harqmimo {

/// One channel realization H, row-major N_r x N_t.
struct ChannelSample {
    int n_r = 1;
    int n_t = 1;
    std::vector<std::complex<double>> h;

    std::complex<double>& at(int row, int col) { return h[static_cast<std::size_t>(row) * n_t + col]; }
    const std::complex<double>& at(int row, int col) const { return h[static_cast<std::size_t>(row) * n_t + col]; }
};

/// AR(1) correlation along the transmit dimension of a vector channel.
struct CorrelationSpec {
    double beta = 0.0;

    void validate() const;
};

struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t seed = 0;
};

struct McOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Position of one realization inside the random stream of a run.
struct ChannelStream {
    Philox4x32::Key key{};
    std::uint64_t sample = 0;
    std::uint32_t realization = 0;
};

/// Draws H for the geometry. beta = 0 gives IID CN(0,1) entries; beta > 0
/// chains h_i = beta h_{i-1} + sqrt(1 - beta^2) w_i along a single receive row
/// (UnsupportedGeometryError when N_r > 1). Entry (row, col) uses address
/// row * N_t + col, so beta = 0 reproduces the IID draw bit for bit.
ChannelSample sample_channel(const SystemGeometry& geom, const CorrelationSpec& corr, const ChannelStream& stream);

/// ln det(I + (snr / n_t) H H^h) through the smaller Gram matrix and a
/// Cholesky factorization.
double mutual_info(const ChannelSample& h, double snr, int n_t);

/// 95% Wilson score interval for `violations` successes in `samples` trials.
std::pair<double, double> wilson_interval(std::uint64_t violations, std::uint64_t samples);

/// Monte Carlo outage of the accumulated mutual information against R/M.
/// Quasi-static packets draw one H (shared by all rounds), slow fading one per
/// round and fast fading T per round. The schedule, when given, sets the SNR
/// of each round. Results depend only on (seed, samples, configuration).
OutageEstimate estimate_outage(const SystemGeometry& geom, const HarqConfig& harq, const CorrelationSpec& corr,
                               const std::optional<PowerSchedule>& sched, const McOptions& opts);

/// 1 - exp(-(e^R - 1) / snr): quasi-static SISO outage.
double siso_outage_closed(double snr, double rate);

/// Empirical SIMO outage curve for N_t = 1, quasi-static, IID entries.
/// Each packet sample walks receive antennas until log(1 + snr * sum |h_i|^2)
/// exceeds R/M; outage at N_r = n is the share of samples still below after n
/// antennas. Agrees exactly with estimate_outage at every n for the same seed.
class SimoOutageCurve {
public:
    SimoOutageCurve(double snr, const HarqConfig& harq, const McOptions& opts, int max_antennas = 1'000'000);

    std::uint64_t samples() const { return samples_; }
    std::uint64_t seed() const { return seed_; }
    int max_antennas() const { return max_antennas_; }

    /// Number of samples whose outage persists with n receive antennas.
    std::uint64_t violations(int n_r) const;
    OutageEstimate at(int n_r) const;

    /// Smallest N_r with estimated outage <= theta; SearchBoundError when none.
    int min_antennas(double theta) const;

private:
    std::uint64_t samples_;
    std::uint64_t seed_;
    int max_antennas_;
    std::vector<std::uint64_t> passage_counts_;  ///< [n] = samples first clearing the rate at n antennas
    std::uint64_t never_cleared_ = 0;
};

struct McRequirement {
    AntennaRequirement requirement;
    OutageEstimate estimate;  ///< outage at the returned count
};

/// Smallest count of the growing dimension whose Monte Carlo outage meets the
/// target. All counts share the same random stream. The SIMO quasi-static case
/// with IID entries uses SimoOutageCurve.
McRequirement min_antennas_mc(const AntennaQuery& query, const CorrelationSpec& corr, const McOptions& opts);

} // namespace harqmimo
