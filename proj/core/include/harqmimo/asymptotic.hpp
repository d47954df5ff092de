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

#include "harqmimo/model.hpp"

namespace harqmimo {

/// Normalized outage factor: -ln(outage) / (N_t N_r).
struct OutageFactor {
    double gamma = 0.0;
    int c = 1;                ///< fading multiplicity (1, M or MT)
    bool below_rate = false;  ///< mean mutual information under R/M; outage tends to 1 and gamma is 0
};

/// Large-array closed form of the normalized outage factor for the geometry's
/// regime. Case 4 with k = 1 throws DomainError.
OutageFactor gamma_closed(const SystemGeometry& geom, const HarqConfig& harq);

/// Normalized outage factor of an observed outage probability.
/// Throws DomainError unless 0 < outage < 1.
OutageFactor gamma_empirical(double outage, int n_t, int n_r, int c = 1);

} // namespace harqmimo
