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

#include "harqmimo/errors.hpp"
#include "harqmimo/model.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace harqmimo {

struct OutageConstraint {
    double theta = 1e-3;

    /// Throws std::invalid_argument unless 0 < theta <= 0.5.
    void validate() const;
};

enum class SolveMethod { ClosedForm, HighSnrApprox, NumericRoot, IntegerSearch, MonteCarloSearch };

std::string_view to_string(SolveMethod method);

struct AntennaRequirement {
    int n_t_hat = 1;
    int n_r_hat = 1;
    double raw_value = 0.0;  ///< continuous solution before rounding
    SolveMethod method = SolveMethod::ClosedForm;
};

/// A minimum-antenna question: which dimension grows, which is fixed, the
/// link parameters and the outage target.
struct AntennaQuery {
    Regime regime = Regime::Case1;
    int fixed_antennas = 1;  ///< N_t in Case 1, N_r in Case 2; unused otherwise
    double k = 1.0;          ///< N_t / N_r in Cases 3 and 4
    double snr = 1.0;
    HarqConfig harq;
    OutageConstraint constraint;

    void validate() const;

    /// Geometry with growing dimension n: N_r = n (Case 1, 3, 4) or N_t = n
    /// (Case 2); Cases 3/4 set N_t = ceil(k * n).
    SystemGeometry geometry_for(int n) const;

    /// Requirement record for a count n of the growing dimension.
    AntennaRequirement requirement_for(int n, double raw, SolveMethod method) const;
};

/// Smallest integer count, clearing rounding noise: values within 1e-12
/// (relative) above an integer map to that integer.
int ceil_count(double raw);

inline constexpr int kSearchUpperBound = 1'000'000;

/// Smallest n in [1, upper] with pred(n) true, assuming pred is monotone
/// (false ... false true ... true). Exponential bracketing, then bisection.
/// Throws SearchBoundError if pred(upper) is false.
template <class Pred>
int smallest_satisfying(Pred&& pred, int upper = kSearchUpperBound) {
    int lo = 0;  // largest count known to fail (0 = none tested)
    int hi = 1;
    while (!pred(hi)) {
        lo = hi;
        if (hi >= upper) {
            throw SearchBoundError("no antenna count up to " + std::to_string(upper) + " meets the outage target",
                                   upper);
        }
        hi = hi > upper / 2 ? upper : 2 * hi;
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

/// Closed-form minimum antenna count for the query's regime.
/// Case 4 uses the K > 1 or K < 1 approximation; K = 1 throws DomainError
/// (see min_antennas_k1). Throws InfeasibleError when no finite count exists.
AntennaRequirement min_antennas_closed(const AntennaQuery& query);

struct HighSnrRequirement {
    AntennaRequirement simplified;        ///< (Q^-1)^2 / (c N_t (ln phi)^2)
    std::optional<double> expanded_raw;   ///< W-expanded form; empty where its logarithm is undefined
};

/// High-SNR receive-antenna estimate for Case 1.
HighSnrRequirement min_antennas_highsnr(int n_t, const HarqConfig& harq, double snr, const OutageConstraint& constraint);

/// Case 4 with N_t = N_r: root of N (ln phi - gamma - 1) - R/M = q sqrt(ln(N - 1) + 1)
/// on N in [1 + 1/e, 1e6]. When the target already holds at 1 + 1/e that point is
/// returned. Throws NoRootError when it still fails at 1e6.
AntennaRequirement min_antennas_k1(const HarqConfig& harq, double snr, const OutageConstraint& constraint);

/// Continuous root of sqrt(c)(mu(N) - R/M)/sigma(N) = Q^-1(theta) with the
/// exact Case 4 moments (harmonic sums continued to real N). Cases 3 and 4.
AntennaRequirement min_antennas_numeric(const AntennaQuery& query);

/// Smallest integer count whose Gaussian-approximated outage meets theta.
AntennaRequirement min_antennas_search(const AntennaQuery& query);

struct SupportedRateOptions {
    std::optional<PaProfile> pa;
    double phi_cons = 0.0;  ///< consumed power, used only with a PA profile
};

/// Largest initial rate meeting the outage target: M (mu - sigma Q^-1(theta) / sqrt(c)),
/// floored at zero. harq.rate is ignored.
double supported_rate(const SystemGeometry& geom, const HarqConfig& harq, const OutageConstraint& constraint,
                      const SupportedRateOptions& options = {});

/// Number of grid points per round in the power-allocation search.
inline constexpr int kPowerGridPoints = 31;

struct PowerAllocResult {
    AntennaRequirement requirement;
    PowerSchedule schedule;
    double outage = 1.0;
    double average_power = 0.0;
};

/// Geometric power grid budget * 10^(-2 + 3 i / 30), i = 0..30.
std::vector<double> power_grid(double budget);

/// Best schedule on the power grid for one geometry: minimum outage subject
/// to average power <= budget. Ties keep the first schedule in grid order.
PowerAllocResult best_schedule(const SystemGeometry& geom, const HarqConfig& harq, double budget);

/// Minimum antenna count when the per-round powers may adapt under an
/// average power budget (query.snr is ignored in favour of power_budget).
PowerAllocResult min_antennas_power_alloc(const AntennaQuery& query, double power_budget);

} // namespace harqmimo
