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

#include "commands.hpp"

#include <cmath>
#include <stdexcept>

namespace harqmimo::cli {

namespace {

std::vector<std::string> methods_or(const RunConfig& c, std::vector<std::string> defaults) {
    return c.method.empty() ? defaults : c.method;
}

std::vector<double> steps(double start, double stop, double step) {
    std::vector<double> v;
    const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) v.push_back(start + i * step);
    return v;
}

// Case 1, N_t = 1, slow fading, M = 2; required N_r versus R.
Table fig1(const RunConfig& c) {
    Table t;
    const auto methods = methods_or(c, {"closed", "search"});
    for (double theta : {1e-2, 1e-4})
        for (double snr_db : {0.0, 5.0, 10.0, 15.0})
            for (double rate : steps(0.5, 8.0, 0.5)) {
                Point p{1, "slow", 2, 1, rate, snr_db, theta, 1, 1, 1.0, 0.0};
                dimension_rows(p, methods, c, t, true);
            }
    return t;
}

// Case 2, theta = 1e-4, T = 2, M = 2, 15 dB; required N_t for N_r in {1, 2}.
Table fig2(const RunConfig& c) {
    Table t;
    const auto methods = methods_or(c, {"closed", "search"});
    for (const char* fading : {"quasi", "slow", "fast"})
        for (int nr : {1, 2})
            for (double rate : steps(0.5, 7.0, 0.5)) {
                Point p{2, fading, 2, 2, rate, 15.0, 1e-4, 1, nr, 1.0, 0.0};
                dimension_rows(p, methods, c, t, true);
            }
    return t;
}

// Case 1, quasi-static, 5 dB, theta = 1e-4; with and without HARQ.
Table fig3(const RunConfig& c) {
    Table t;
    const auto methods = methods_or(c, {"closed", "search"});
    for (int m : {1, 2})
        for (int nt : {1, 5})
            for (double rate : steps(2.0, 20.0, 2.0)) {
                Point p{1, "quasi", m, 1, rate, 5.0, 1e-4, nt, 1, 1.0, 0.0};
                dimension_rows(p, methods, c, t, true);
            }
    return t;
}

// Cases 3 (-5 dB) and 4 (15 dB), quasi-static, M = 1, theta = 1e-3.
Table fig4(const RunConfig& c) {
    Table t;
    const auto methods = methods_or(c, {"closed", "numeric", "search"});
    for (int regime : {3, 4})
        for (double k : {0.5, 1.0, 2.0})
            for (double rate : steps(1.0, 10.0, 1.0)) {
                Point p{regime, "quasi", 1, 1, rate, regime == 3 ? -5.0 : 15.0, 1e-3, 1, 1, k, 0.0};
                dimension_rows(p, methods, c, t, true);
            }
    return t;
}

Row simo_row(const char* series, const Point& p) {
    Row r;
    r.set("series", series)
        .set("case", 1)
        .set("fading", p.fading)
        .set("m", p.m)
        .set("t", 1)
        .set("rate", p.rate)
        .set("snr_db", p.snr_db)
        .set("n_t", 1);
    return r;
}

// SIMO, quasi-static, M = 1, 5 dB: Monte Carlo outage versus N_r for R in
// {3, 4}, and the smallest N_r for theta in {1e-3, 1e-4, 1e-5}.
Table fig5a(const RunConfig& c) {
    Table t;
    McOptions o;
    o.samples = c.samples ? *c.samples : default_samples(1e-5);
    o.seed = c.seed;
    o.workers = c.workers;
    constexpr int kMaxAntennas = 60;
    for (double rate : {3.0, 4.0}) {
        const Point p{1, "quasi", 1, 1, rate, 5.0, 1e-3, 1, 1, 1.0, 0.0};
        const HarqConfig h = harq_of(p);
        const SimoOutageCurve curve(db_to_linear(p.snr_db), h, o, kMaxAntennas);
        for (int nr = 1; nr <= kMaxAntennas; ++nr) {
            Row r = simo_row("curve", p);
            r.set("n_r", nr).set("antenna_product", nr);
            const OutageEstimate e = curve.at(nr);
            r.set("samples", e.samples).set("seed", e.seed).set("violations", e.violations);
            r.set("p_hat", e.p_hat).set("ci_low", e.ci_low).set("ci_high", e.ci_high);
            SystemGeometry g{1, nr, db_to_linear(p.snr_db), Regime::Case1, 1.0};
            r.set("outage_gauss", outage_approx(gaussian_moments(g), h));
            r.set("status", "ok");
            t.add(r);
        }
        for (double theta : {1e-3, 1e-4, 1e-5}) {
            Point q = p;
            q.theta = theta;
            Row r = simo_row("min", q);
            r.set("theta", theta).set("method", "mc");
            emit(t, r, true, [&](Row& row) {
                const int n = curve.min_antennas(theta);
                const OutageEstimate e = curve.at(n);
                row.set("n_r_hat", n).set("samples", e.samples).set("seed", e.seed).set("violations", e.violations);
                row.set("p_hat", e.p_hat).set("ci_low", e.ci_low).set("ci_high", e.ci_high);
            });
        }
    }
    return t;
}

// Case 1 normalized outage factor versus N_r (N_t = 1, quasi-static, M = 1, 5 dB, R = 1).
Table fig5b(const RunConfig& c) {
    Table t;
    McOptions o;
    o.samples = c.samples ? *c.samples : 1'000'000;
    o.seed = c.seed;
    o.workers = c.workers;
    constexpr int kMaxAntennas = 40;
    const Point p{1, "quasi", 1, 1, 1.0, 5.0, 1e-3, 1, 1, 1.0, 0.0};
    const HarqConfig h = harq_of(p);
    const SimoOutageCurve curve(db_to_linear(p.snr_db), h, o, kMaxAntennas);
    for (int nr = 1; nr <= kMaxAntennas; ++nr) {
        Row r = simo_row("gamma", p);
        r.set("n_r", nr).set("antenna_product", nr);
        const SystemGeometry g{1, nr, db_to_linear(p.snr_db), Regime::Case1, 1.0};
        const OutageFactor closed = gamma_closed(g, h);
        const double approx = outage_approx(gaussian_moments(g), h);
        const OutageEstimate e = curve.at(nr);
        r.set("gamma_closed", closed.gamma).set("c", closed.c).set("outage_gauss", approx);
        r.set("gamma_gauss", approx > 0.0 && approx < 1.0 ? format_real(gamma_empirical(approx, 1, nr).gamma) : "");
        r.set("samples", e.samples).set("seed", e.seed).set("violations", e.violations).set("p_hat", e.p_hat);
        r.set("gamma_mc", e.p_hat > 0.0 && e.p_hat < 1.0 ? format_real(gamma_empirical(e.p_hat, 1, nr).gamma) : "");
        r.set("status", "ok");
        t.add(r);
    }
    return t;
}

// Case 2, N_r = 1, R = 1, M = 1, 5 dB: outage and normalized outage factor
// versus N_t in slow and fast (T = 2) fading.
Table fig5c(const RunConfig& c) {
    Table t;
    RunConfig mc = c;
    if (!mc.samples) mc.samples = 1'000'000;
    for (const char* fading : {"slow", "fast"})
        for (int nt = 1; nt <= 24; ++nt) {
            const Point p{2, fading, 1, 2, 1.0, 5.0, 1e-3, nt, 1, 1.0, 0.0};
            gamma_rows(p, mc, t, true);
        }
    return t;
}

// Supported rate versus consumed power, N_t = 64, fast fading T = 2, M = 2,
// theta = 1e-4; ideal PA and a PA with epsilon 0.65, exponent 0.5, 30 dB cap.
Table fig6a(const RunConfig& c) {
    Table t;
    for (int nr : {1, 2})
        for (bool ideal : {true, false}) {
            RunConfig pa = c;
            pa.power_cons_db = steps(-10.0, 40.0, 1.0);
            if (ideal) {
                pa.pa_eps = 1.0;
                pa.pa_theta = 0.0;
                pa.pa_max_db.reset();
            } else {
                pa.pa_eps = 0.65;
                pa.pa_theta = 0.5;
                pa.pa_max_db = 30.0;
            }
            const Point p{2, "fast", 2, 2, 0.0, 0.0, 1e-4, 64, nr, 1.0, 0.0};
            Table part;
            rate_rows(p, pa, part, true);
            for (std::size_t i = 0; i < part.size(); ++i) {
                Row r = part.row(i);
                r.set("rate", "").set("pa", ideal ? "ideal" : "nonideal");
                t.add(r);
            }
        }
    return t;
}

// Case 2, N_r = 1, slow fading, M = 2, theta = 1e-3, budgets -5 and 0 dB.
// Rates span the feasible range R < M ln(1 + budget).
Table fig6b(const RunConfig& c) {
    Table t;
    const auto methods = methods_or(c, {"search", "poweralloc"});
    for (double snr_db : {-5.0, 0.0}) {
        const double limit = 2.0 * std::log1p(db_to_linear(snr_db));
        for (int i = 1; i <= 9; ++i) {
            const double rate = limit * i / 10.0;
            Point p{2, "slow", 2, 1, rate, snr_db, 1e-3, 1, 1, 1.0, 0.0};
            dimension_rows(p, methods, c, t, true);
        }
    }
    return t;
}

// Case 2, N_r = 1, quasi-static, M = 1, theta = 1e-4, 15 dB: required N_t
// versus the transmit-side correlation beta.
Table fig7(const RunConfig& c) {
    Table t;
    const auto methods = methods_or(c, {"mc", "search"});
    for (double rate : {1.0, 2.0})
        for (double beta : {0.0, 0.2, 0.4, 0.6, 0.8, 0.9}) {
            Point p{2, "quasi", 1, 1, rate, 15.0, 1e-4, 1, 1, 1.0, beta};
            std::vector<std::string> active;
            for (const auto& m : methods) {
                if (m == "mc" || beta == 0.0) active.push_back(m);  // analytic rows do not depend on beta
            }
            dimension_rows(p, active, c, t, true);
        }
    return t;
}

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1",  "fig2",  "fig3",  "fig4",  "fig5a",
                                                "fig5b", "fig5c", "fig6a", "fig6b", "fig7"};
    return names;
}

std::string preset_summary(const std::string& name) {
    if (name == "fig1") return "case 1, N_t=1, slow, M=2, theta 1e-2/1e-4, snr 0/5/10/15 dB, R 0.5..8";
    if (name == "fig2") return "case 2, N_r=1/2, quasi/slow/fast, M=2, T=2, 15 dB, theta 1e-4, R 0.5..7";
    if (name == "fig3") return "case 1, N_t=1/5, quasi, M=1/2, 5 dB, theta 1e-4, R 2..20";
    if (name == "fig4") return "cases 3 (-5 dB) and 4 (15 dB), k 0.5/1/2, quasi, M=1, theta 1e-3, R 1..10";
    if (name == "fig5a") return "SIMO Monte Carlo outage vs N_r, quasi, M=1, 5 dB, R 3/4, minima for theta 1e-3..1e-5";
    if (name == "fig5b") return "case 1 outage factor vs N_r, N_t=1, quasi, M=1, 5 dB, R=1";
    if (name == "fig5c") return "case 2 outage and factor vs N_t, N_r=1, slow/fast T=2, M=1, 5 dB, R=1";
    if (name == "fig6a") return "supported rate vs consumed power, N_t=64 (fixed), N_r=1/2, fast T=2, M=2, theta 1e-4, "
                                "ideal PA vs eps 0.65, exponent 0.5, 30 dB cap";
    if (name == "fig6b") return "case 2 power allocation, N_r=1, slow, M=2, theta 1e-3, budget -5/0 dB";
    if (name == "fig7") return "case 2 correlation sweep, N_r=1, quasi, M=1, 15 dB, theta 1e-4, R 1/2";
    throw std::invalid_argument("unknown preset '" + name + "'");
}

Table run_preset(const RunConfig& c) {
    const std::string& name = c.preset;
    if (name == "fig1") return fig1(c);
    if (name == "fig2") return fig2(c);
    if (name == "fig3") return fig3(c);
    if (name == "fig4") return fig4(c);
    if (name == "fig5a") return fig5a(c);
    if (name == "fig5b") return fig5b(c);
    if (name == "fig5c") return fig5c(c);
    if (name == "fig6a") return fig6a(c);
    if (name == "fig6b") return fig6b(c);
    if (name == "fig7") return fig7(c);
    throw std::invalid_argument("unknown preset '" + name + "'");
}

} // namespace harqmimo::cli
