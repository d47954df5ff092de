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

#include <numbers>

namespace harqmimo::specfun {

struct Constants {
    static constexpr double euler_gamma = std::numbers::egamma_v<double>;
};

/// Upper tail of the standard normal distribution, Q(x) = P(N(0,1) > x).
///
/// Evaluated through a self-contained erfc: a positive-term series for
/// |x| <= 2*sqrt(2) and a continued fraction (modified Lentz) beyond. The
/// lower tail is obtained by reflection so small probabilities keep their
/// relative accuracy on both sides.
double q_func(double x);

/// Inverse of q_func on (0, 1). Throws DomainError outside the open interval.
double inv_q(double p);

/// Principal branch W0 of the Lambert W function, y * exp(y) = x, x >= -1/e.
/// Throws DomainError for x < -1/e.
double lambert_w(double x);

/// Digamma psi(x) for x > 0.
double digamma(double x);

/// Trigamma psi'(x) for x > 0.
double trigamma(double x);

} // namespace harqmimo::specfun
