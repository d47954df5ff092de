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

#include <string_view>
#include <vector>

namespace harqmimo {

/// Antenna regime of the Gaussian approximation of the log-det mutual information.
///   Case1: many receive antennas, given transmit antennas.
///   Case2: many transmit antennas, given receive antennas.
///   Case3: both large, low SNR, N_t / N_r = k.
///   Case4: both large, high SNR, N_t / N_r = k.
enum class Regime { Case1, Case2, Case3, Case4 };

enum class Fading { QuasiStatic, SlowFading, FastFading };

std::string_view to_string(Regime regime);
std::string_view to_string(Fading fading);

double db_to_linear(double db);
double linear_to_db(double linear);

struct SystemGeometry {
    int n_t = 1;
    int n_r = 1;
    double snr = 1.0;  ///< linear total transmit power (unit noise variance)
    Regime regime = Regime::Case1;
    double k = 1.0;    ///< N_t / N_r, meaningful for Case3 / Case4

    /// Throws std::invalid_argument if counts or SNR are not positive or the
    /// counts disagree with k by one antenna or more in Cases 3/4.
    void validate() const;

    SystemGeometry with_snr(double new_snr) const;
};

struct HarqConfig {
    Fading fading = Fading::QuasiStatic;
    int m = 1;          ///< maximum number of rounds
    int t = 1;          ///< channel realizations per round (fast fading)
    double rate = 1.0;  ///< initial rate R, nats per channel use

    /// Validating factory; t is forced to 1 unless the fading is fast.
    static HarqConfig make(Fading fading, int m, int t, double rate);

    void validate() const;

    /// Number of independent realizations averaged over a packet: 1, M or MT.
    int multiplicity() const;

    /// Effective realizations per round, 1 unless fast fading.
    int realizations_per_round() const { return fading == Fading::FastFading ? t : 1; }

    double threshold() const { return rate / m; }
};

struct GaussianMoments {
    double mu = 0.0;
    double sigma2 = 1.0;

    double sigma() const;
};

/// Non-ideal power amplifier: radiated power phi from consumed power phi_cons
/// through phi / phi_cons = epsilon * (phi / phi_max)^theta_pa.
struct PaProfile {
    double epsilon = 1.0;
    double theta_pa = 0.0;
    double phi_max = 1.0;

    void validate() const;
    bool is_ideal() const { return epsilon == 1.0 && theta_pa == 0.0; }
};

struct PowerSchedule {
    std::vector<double> powers;

    void validate(int rounds) const;
};

/// Mean and variance of one realization of log|I + (phi/N_t) H H^h| for the
/// geometry's regime. Case 4 evaluates the finite sums exactly.
GaussianMoments gaussian_moments(const SystemGeometry& geom);

/// Case 4 moments with the harmonic sums continued to real antenna counts
/// through digamma/trigamma. Agrees with the integer sums at integer counts.
GaussianMoments case4_moments_continuous(double n_t, double n_r, double snr);

/// Radiated power delivered by the amplifier for a consumed power.
/// Throws InfeasibleError if the result exceeds phi_max.
double pa_output(const PaProfile& pa, double phi_cons);

GaussianMoments gaussian_moments_pa(const SystemGeometry& geom, const PaProfile& pa, double phi_cons);

/// Q(sqrt(c) (mu - R/M) / sigma) with c = 1, M, MT for quasi-static, slow, fast.
double outage_approx(const GaussianMoments& moments, const HarqConfig& harq);

/// Outage with round-dependent transmit powers (slow or fast fading only).
double outage_power_alloc(const SystemGeometry& geom, const HarqConfig& harq, const PowerSchedule& sched);

/// Expected transmit energy over expected channel uses for a power schedule.
double average_power(const SystemGeometry& geom, const HarqConfig& harq, const PowerSchedule& sched);

} // namespace harqmimo
