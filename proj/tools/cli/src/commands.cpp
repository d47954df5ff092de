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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace harqmimo::cli {

std::vector<Point> expand_grid(const RunConfig& c) {
    for (const auto* list : {&c.nt, &c.nr, &c.m, &c.t}) {
        if (list->empty()) throw std::invalid_argument("empty parameter grid");
    }
    for (const auto* list : {&c.k, &c.rate, &c.snr_db, &c.theta, &c.beta}) {
        if (list->empty()) throw std::invalid_argument("empty parameter grid");
    }
    if (c.fading.empty()) throw std::invalid_argument("empty parameter grid");

    std::vector<Point> points;
    for (const auto& fading : c.fading)
        for (int m : c.m)
            for (int t : c.t)
                for (double theta : c.theta)
                    for (double snr_db : c.snr_db)
                        for (int nt : c.nt)
                            for (int nr : c.nr)
                                for (double k : c.k)
                                    for (double beta : c.beta)
                                        for (double rate : c.rate)
                                            points.push_back({c.regime, fading, m, t, rate, snr_db, theta, nt, nr, k, beta});
    return points;
}

Regime regime_of(int regime) {
    switch (regime) {
    case 1: return Regime::Case1;
    case 2: return Regime::Case2;
    case 3: return Regime::Case3;
    case 4: return Regime::Case4;
    }
    throw std::invalid_argument("case must be 1, 2, 3 or 4");
}

Fading fading_of(const std::string& name) {
    if (name == "quasi") return Fading::QuasiStatic;
    if (name == "slow") return Fading::SlowFading;
    if (name == "fast") return Fading::FastFading;
    throw std::invalid_argument("fading must be quasi, slow or fast");
}

HarqConfig harq_of(const Point& p) { return HarqConfig::make(fading_of(p.fading), p.m, p.t, p.rate); }

SystemGeometry geometry_of(const Point& p) {
    SystemGeometry g;
    g.n_t = p.nt;
    g.n_r = p.nr;
    g.snr = db_to_linear(p.snr_db);
    g.regime = regime_of(p.regime);
    g.k = static_cast<double>(p.nt) / p.nr;
    return g;
}

AntennaQuery query_of(const Point& p) {
    AntennaQuery q;
    q.regime = regime_of(p.regime);
    q.fixed_antennas = q.regime == Regime::Case1 ? p.nt : p.nr;
    q.k = p.k;
    q.snr = db_to_linear(p.snr_db);
    q.harq = harq_of(p);
    q.constraint = {p.theta};
    return q;
}

std::uint64_t default_samples(double theta) {
    if (!(theta > 0.0)) return 100'000'000;
    return static_cast<std::uint64_t>(std::min(1e8, std::ceil(1000.0 / theta)));
}

namespace {

std::pair<std::string, std::string> classify(std::exception_ptr ep) {
    try {
        std::rethrow_exception(ep);
    } catch (const InfeasibleError& e) {
        return {"infeasible", e.what()};
    } catch (const NoRootError& e) {
        return {"no_root", e.what()};
    } catch (const SearchBoundError& e) {
        return {"search_bound", e.what()};
    } catch (const UnsupportedGeometryError& e) {
        return {"unsupported", e.what()};
    } catch (const DomainError& e) {
        return {"domain", e.what()};
    } catch (const std::invalid_argument& e) {
        return {"invalid", e.what()};
    }
}

enum Use : unsigned {
    kUseNt = 1u << 0,
    kUseNr = 1u << 1,
    kUseK = 1u << 2,
    kUseTheta = 1u << 3,
    kUseBeta = 1u << 4,
    kUseSnr = 1u << 5,
};

Row base_row(const char* command, const Point& p, unsigned use) {
    const bool fast = p.fading == "fast";
    Row r;
    r.set("command", command)
        .set("case", p.regime)
        .set("fading", p.fading)
        .set("m", p.m)
        .set("t", fast ? p.t : 1)
        .set("rate", p.rate)
        .set("snr_db", (use & kUseSnr) ? format_real(p.snr_db) : std::string())
        .set("theta", (use & kUseTheta) ? format_real(p.theta) : std::string())
        .set("n_t", (use & kUseNt) ? std::to_string(p.nt) : std::string())
        .set("n_r", (use & kUseNr) ? std::to_string(p.nr) : std::string())
        .set("k", (use & kUseK) ? format_real(p.k) : std::string())
        .set("beta", (use & kUseBeta) ? format_real(p.beta) : std::string());
    return r;
}

unsigned dimension_use(const Point& p) {
    unsigned use = kUseTheta | kUseSnr;
    if (p.regime == 1) use |= kUseNt;
    if (p.regime == 2) use |= kUseNr;
    if (p.regime >= 3) use |= kUseK;
    return use;
}

McOptions mc_options(const RunConfig& c, double theta) {
    McOptions o;
    o.samples = c.samples ? *c.samples : default_samples(theta);
    o.seed = c.seed;
    o.workers = c.workers;
    return o;
}

void put_estimate(Row& r, const OutageEstimate& e) {
    r.set("samples", e.samples)
        .set("seed", e.seed)
        .set("violations", e.violations)
        .set("p_hat", e.p_hat)
        .set("ci_low", e.ci_low)
        .set("ci_high", e.ci_high);
}

void put_requirement(Row& r, const AntennaRequirement& req) {
    r.set("raw_value", req.raw_value).set("n_t_hat", req.n_t_hat).set("n_r_hat", req.n_r_hat);
}

std::string schedule_text(const PowerSchedule& s) {
    std::string out;
    for (std::size_t i = 0; i < s.powers.size(); ++i) out += (i ? ";" : "") + format_real(linear_to_db(s.powers[i]));
    return out;
}

PowerSchedule schedule_of(const RunConfig& c) {
    PowerSchedule s;
    for (double db : c.schedule_db) s.powers.push_back(db_to_linear(db));
    return s;
}

} // namespace

void emit(Table& table, Row row, bool tolerant, const std::function<void(Row&)>& fill) {
    try {
        Row filled = row;
        fill(filled);
        filled.set("status", "ok");
        table.add(filled);
    } catch (...) {
        if (!tolerant) throw;
        const auto [status, note] = classify(std::current_exception());
        row.set("status", status).set("note", note);
        table.add(row);
    }
}

void dimension_rows(const Point& p, const std::vector<std::string>& methods, const RunConfig& config, Table& table,
                    bool tolerant) {
    for (const auto& method : methods) {
        unsigned use = dimension_use(p);
        if (method == "mc") use |= kUseBeta;
        Row row = base_row("dimension", p, use);
        row.set("method", method);
        emit(table, row, tolerant, [&](Row& r) {
            const AntennaQuery q = query_of(p);
            if (method == "closed") {
                if (q.regime == Regime::Case4 && q.k == 1.0) {
                    const AntennaRequirement req = min_antennas_k1(q.harq, q.snr, q.constraint);
                    put_requirement(r, req);
                    r.set("method", "k1");
                } else {
                    put_requirement(r, min_antennas_closed(q));
                }
            } else if (method == "highsnr") {
                if (q.regime != Regime::Case1) throw std::invalid_argument("highsnr applies to case 1 only");
                const HighSnrRequirement h = min_antennas_highsnr(q.fixed_antennas, q.harq, q.snr, q.constraint);
                put_requirement(r, h.simplified);
                r.set("expanded_raw", h.expanded_raw ? format_real(*h.expanded_raw) : std::string());
            } else if (method == "numeric") {
                put_requirement(r, min_antennas_numeric(q));
            } else if (method == "search") {
                put_requirement(r, min_antennas_search(q));
            } else if (method == "mc") {
                const McRequirement mc = min_antennas_mc(q, {p.beta}, mc_options(config, p.theta));
                put_requirement(r, mc.requirement);
                put_estimate(r, mc.estimate);
            } else if (method == "poweralloc") {
                const PowerAllocResult res = min_antennas_power_alloc(q, q.snr);
                put_requirement(r, res.requirement);
                r.set("schedule_db", schedule_text(res.schedule))
                    .set("average_power", res.average_power)
                    .set("outage", res.outage);
            } else {
                throw std::invalid_argument("unknown method '" + method +
                                            "' (closed, highsnr, numeric, search, mc, poweralloc)");
            }
        });
    }
}

void outage_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant) {
    Row row = base_row("outage", p, kUseNt | kUseNr | kUseSnr);
    emit(table, row, tolerant, [&](Row& r) {
        const SystemGeometry g = geometry_of(p);
        const HarqConfig h = harq_of(p);
        const GaussianMoments mom = gaussian_moments(g);
        r.set("mu", mom.mu).set("sigma2", mom.sigma2).set("outage", outage_approx(mom, h));
        if (!config.schedule_db.empty()) {
            const PowerSchedule s = schedule_of(config);
            r.set("schedule_db", schedule_text(s))
                .set("outage_schedule", outage_power_alloc(g, h, s))
                .set("average_power", average_power(g, h, s));
        }
    });
}

void rate_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant) {
    if (config.power_cons_db.empty()) {
        if (config.has_pa()) throw std::invalid_argument("PA flags need --power-cons-db");
        Row row = base_row("rate", p, kUseNt | kUseNr | kUseTheta | kUseSnr);
        emit(table, row, tolerant, [&](Row& r) {
            r.set("supported_rate", supported_rate(geometry_of(p), harq_of(p), {p.theta}));
        });
        return;
    }
    PaProfile pa;
    pa.epsilon = config.pa_eps.value_or(1.0);
    pa.theta_pa = config.pa_theta.value_or(0.0);
    pa.phi_max = config.pa_max_db ? db_to_linear(*config.pa_max_db) : std::numeric_limits<double>::infinity();
    for (double cons_db : config.power_cons_db) {
        Row row = base_row("rate", p, kUseNt | kUseNr | kUseTheta);
        row.set("pa_eps", pa.epsilon)
            .set("pa_theta", pa.theta_pa)
            .set("pa_max_db", config.pa_max_db ? format_real(*config.pa_max_db) : std::string("inf"))
            .set("power_cons_db", cons_db);
        emit(table, row, tolerant, [&](Row& r) {
            const double phi_cons = db_to_linear(cons_db);
            const double radiated = pa_output(pa, phi_cons);
            SupportedRateOptions opts;
            opts.pa = pa;
            opts.phi_cons = phi_cons;
            r.set("snr_out_db", linear_to_db(radiated))
                .set("supported_rate", supported_rate(geometry_of(p), harq_of(p), {p.theta}, opts));
        });
    }
}

void gamma_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant) {
    Row row = base_row("gamma", p, kUseNt | kUseNr | kUseSnr | (config.samples ? kUseBeta : 0u));
    emit(table, row, tolerant, [&](Row& r) {
        const SystemGeometry g = geometry_of(p);
        const HarqConfig h = harq_of(p);
        const OutageFactor closed = gamma_closed(g, h);
        r.set("gamma_closed", closed.gamma).set("c", closed.c).set("below_rate", closed.below_rate ? "1" : "0");
        const double approx = outage_approx(gaussian_moments(g), h);
        r.set("outage_gauss", approx);
        r.set("gamma_gauss", approx > 0.0 && approx < 1.0
                                 ? format_real(gamma_empirical(approx, p.nt, p.nr, closed.c).gamma)
                                 : std::string());
        if (config.samples) {
            const OutageEstimate e = estimate_outage(g, h, {p.beta}, std::nullopt, mc_options(config, p.theta));
            put_estimate(r, e);
            auto gamma_at = [&](double q) {
                return q > 0.0 && q < 1.0 ? format_real(gamma_empirical(q, p.nt, p.nr, closed.c).gamma)
                                          : std::string();
            };
            r.set("gamma_mc", gamma_at(e.p_hat)).set("gamma_mc_low", gamma_at(e.ci_high)).set("gamma_mc_high",
                                                                                           gamma_at(e.ci_low));
        }
    });
}

void simulate_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant) {
    Row row = base_row("simulate", p, kUseNt | kUseNr | kUseSnr | kUseBeta);
    emit(table, row, tolerant, [&](Row& r) {
        const SystemGeometry g = geometry_of(p);
        const HarqConfig h = harq_of(p);
        std::optional<PowerSchedule> sched;
        if (!config.schedule_db.empty()) {
            sched = schedule_of(config);
            r.set("schedule_db", schedule_text(*sched));
        }
        McOptions o = mc_options(config, p.theta);
        if (!config.samples) o.samples = 1'000'000;
        put_estimate(r, estimate_outage(g, h, {p.beta}, sched, o));
        if (p.nt == 1 && p.nr == 1 && h.fading == Fading::QuasiStatic && h.m == 1 && !sched) {
            r.set("siso_closed", siso_outage_closed(g.snr, p.rate));
        }
    });
}

} // namespace harqmimo::cli
