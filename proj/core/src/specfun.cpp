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

#include "harqmimo/specfun.hpp"

#include "harqmimo/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace harqmimo::specfun {

namespace {

constexpr double kInvSqrt2Pi = 0.5 * std::numbers::inv_sqrtpi_v<double> * std::numbers::sqrt2_v<double>;

// Recurrence shift before the polygamma asymptotic series.
constexpr double kPolygammaShift = 20.0;

// Boundary between the series and the continued fraction.
constexpr double kSeriesLimit = 3.0;

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Q(x) = 1/2 - pdf(x) * sum_n x^(2n+1) / (2n+1)!!, all terms positive.
double q_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 500; ++n) {
        term *= x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return 0.5 - normal_pdf(x) * sum;
}

// Mills ratio Q(x)/pdf(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))), x > 0.
double mills_ratio(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int n = 1; n < 5000; ++n) {
        d = x + n * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + n / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / f;
}

double upper_tail(double x) {
    // x >= 0
    if (x <= kSeriesLimit) return q_series(x);
    if (x > 40.0) return 0.0;
    return normal_pdf(x) * mills_ratio(x);
}

} // namespace

double q_func(double x) {
    if (std::isnan(x)) return x;
    if (x >= 0.0) return upper_tail(x);
    return 1.0 - upper_tail(-x);
}

double inv_q(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("inv_q: probability must lie in (0, 1), got " + std::to_string(p));
    }
    if (p == 0.5) return 0.0;
    if (p > 0.5) return -inv_q(1.0 - p);

    // Abramowitz & Stegun 26.2.23 as the starting point (|error| < 4.5e-4).
    const double t = std::sqrt(-2.0 * std::log(p));
    double x = t - (2.515517 + 0.802853 * t + 0.010328 * t * t) /
                       (1.0 + 1.432788 * t + 0.189269 * t * t + 0.001308 * t * t * t);

    // Halley on Q(x) - p; f' = -pdf, f'' = x * pdf.
    for (int i = 0; i < 50; ++i) {
        const double pdf = normal_pdf(x);
        if (pdf == 0.0) break;
        const double u = -(q_func(x) - p) / pdf;
        const double step = u / (1.0 + 0.5 * x * u);
        x -= step;
        if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(x))) break;
    }
    return x;
}

double lambert_w(double x) {
    constexpr double minus_inv_e = -0.36787944117144233;
    if (std::isnan(x)) return x;
    if (x < minus_inv_e) {
        // Allow one ulp of slack for callers that computed -1/e themselves.
        if (x >= std::nextafter(minus_inv_e, -1.0)) return -1.0;
        throw DomainError("lambert_w: argument below -1/e");
    }
    if (x == 0.0) return 0.0;
    if (x == minus_inv_e) return -1.0;

    double w;
    if (x < -0.25) {
        // Series about the branch point.
        const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (x < 3.0) {
        w = std::log1p(x);
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int i = 0; i < 100; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(w))) break;
    }
    return w;
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: argument must be positive");
    double result = 0.0;
    while (x < kPolygammaShift) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    result += std::log(x) - 0.5 / x -
              r * (1.0 / 12.0 - r * (1.0 / 120.0 - r * (1.0 / 252.0 - r * (1.0 / 240.0 - r / 132.0))));
    return result;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: argument must be positive");
    double result = 0.0;
    while (x < kPolygammaShift) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    result += 1.0 / x + 0.5 * r +
              (1.0 / x) * r * (1.0 / 6.0 - r * (1.0 / 30.0 - r * (1.0 / 42.0 - r * (1.0 / 30.0 - r * 5.0 / 66.0))));
    return result;
}

} // namespace harqmimo::specfun
