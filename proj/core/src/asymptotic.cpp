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

#include "harqmimo/asymptotic.hpp"

#include "harqmimo/errors.hpp"
#include "harqmimo/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace harqmimo {

namespace {

double case4_alpha(double k, double snr) {
    const double g = specfun::Constants::euler_gamma;
    const double ln_phi = std::log(snr);
    if (k > 1.0) {
        const double spread = std::log(k / (k - 1.0));
        const double lead = ln_phi + (k - 1.0) * spread - g - 1.0;
        return lead * lead / spread;
    }
    const double spread = -std::log1p(-k);
    const double lead = ln_phi + ((k - 1.0) / k) * std::log1p(-k) - std::log(k) - g - 1.0;
    return k * k * lead * lead / spread;
}

} // namespace

OutageFactor gamma_closed(const SystemGeometry& geom, const HarqConfig& harq) {
    harq.validate();
    geom.validate();
    if (geom.regime == Regime::Case4 && geom.k == 1.0) {
        throw DomainError("Case 4 outage factor is undefined for k = 1");
    }

    OutageFactor out;
    out.c = harq.multiplicity();
    const GaussianMoments moments = gaussian_moments(geom);
    if (moments.mu < harq.threshold()) {
        out.below_rate = true;
        return out;
    }

    // Every row is the multiplicity times a fading-independent part.
    double base = 0.0;
    const double phi = geom.snr;
    const double per_rate = harq.threshold();
    switch (geom.regime) {
    case Regime::Case1: {
        const double gap = std::log1p(geom.n_r * phi / geom.n_t) - per_rate / geom.n_t;
        base = 0.5 * gap * gap;
        break;
    }
    case Regime::Case2: {
        const double gap = std::log1p(phi) - per_rate / geom.n_r;
        const double gain = (1.0 + phi) / phi;
        base = 0.5 * gain * gain * gap * gap;
        break;
    }
    case Regime::Case3:
        base = 0.5;
        break;
    case Regime::Case4:
        base = case4_alpha(geom.k, phi) / (2.0 * geom.k);
        break;
    }
    out.gamma = out.c * base;
    return out;
}

OutageFactor gamma_empirical(double outage, int n_t, int n_r, int c) {
    if (!(outage > 0.0 && outage < 1.0)) {
        throw DomainError("outage probability must lie in (0, 1), got " + std::to_string(outage));
    }
    if (n_t < 1 || n_r < 1) throw std::invalid_argument("antenna counts must be at least 1");
    if (c < 1) throw std::invalid_argument("fading multiplicity must be at least 1");
    OutageFactor out;
    out.c = c;
    out.gamma = -std::log(outage) / (static_cast<double>(n_t) * n_r);
    return out;
}

} // namespace harqmimo
