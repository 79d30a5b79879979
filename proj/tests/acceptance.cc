// Copyright 2026 The ccdecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ccdecode/cc.h"
#include "ccdecode/dense.h"
#include "ccdecode/experiment.h"
#include "ccdecode/hp.h"
#include "ccdecode/oracle.h"
#include "ccdecode/subroutines.h"

namespace ccd {
namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

ExperimentConfig fig2_config() {
    ExperimentConfig cfg;
    cfg.n = 8;
    cfg.a = 1;
    cfg.d = 4;
    cfg.t_min = 0;
    cfg.t_max = 6;
    cfg.samples = 100;
    cfg.seed = 2026;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    return cfg;
}

Outcome criterion_failure_fraction(const std::vector<Fig2Summary> &summary) {
    Outcome o;
    std::string detail;
    for (const auto &s : summary) {
        double p = std::ldexp(1.0, (int)s.t - 8);
        double limit = p + 3 * std::sqrt(p * (1 - p) / (double)s.samples);
        detail += fmt("t=%.0f:%.3f ", (double)s.t, s.failure_fraction);
        if (s.samples < 100 || s.failure_fraction > limit) {
            o.fail(fmt("t=%.0f failure fraction %.4f exceeds %.4f", (double)s.t, s.failure_fraction, limit));
        }
    }
    if (o.pass) {
        o.detail = detail;
    }
    return o;
}

Outcome criterion_fidelity(const ExperimentConfig &cfg, const std::vector<Fig2Row> &rows) {
    Outcome o;
    const Partition part(cfg.n, cfg.a, cfg.d);
    const RootTwo da2 = RootTwo::from_int(int64_t{1} << (2 * cfg.a));
    size_t checked = 0, scramblers = 0, below = 0;
    double worst_gap = 0;
    for (const Fig2Row &row : rows) {
        if (!row.r_zero) {
            continue;
        }
        // Rebuild the sample and recompute the truncated OTOC on its own.
        Rng rng(row.seed);
        DopedCircuit c = make_scrambler(cfg.n, row.t, rng);
        CCParams params;
        params.m = part.c();
        LearnResult learned = learn(c, params, rng);
        std::vector<PauliString> gens;
        for (const auto &g : learned.generators) {
            gens.push_back(g.source);
        }
        RootTwo omega = truncated_otoc(c, part, gens);
        RootTwo f = fidelity(c, learned.v, part);
        checked++;
        if (f != RootTwo::from_int(1) / (da2 * omega) || f != row.report.fidelity) {
            o.fail(fmt("t=%.0f sample=%.0f: fidelity is not 1/(d_A^2 omega)", (double)row.t, (double)row.sample));
        }
        if (is_scrambler(c, part)) {
            scramblers++;
            double bound = 1.0 / (1.0 + std::ldexp(1.0, (int)row.t - 2 * (int)cfg.d + 2 * (int)cfg.a));
            if (f.to_double() < bound) {
                below++;
                worst_gap = std::max(worst_gap, bound - f.to_double());
            }
        }
    }
    if (below) {
        o.fail(fmt("exact identity held on %.0f rows, but %.0f scrambling rows fall below the bound (worst gap %.4f)",
                   (double)checked, (double)below, worst_gap));
    }
    if (o.pass) {
        o.detail = fmt("%.0f successful rows exact, %.0f scramblers above the bound", (double)checked, (double)scramblers);
    }
    return o;
}

Outcome criterion_clifford_limit() {
    Outcome o;
    uint64_t max_queries = 0;
    for (size_t n : {4u, 8u}) {
        for (uint64_t seed = 0; seed < 50; seed++) {
            Rng rng(derive_seed(3, n, seed));
            DopedCircuit c = make_scrambler(n, 0, rng);
            CliffordTableau u = CliffordTableau::from_gates(n, c.gates());
            LearnResult r = learn(c, {}, rng);
            if (!(r.v == u)) {
                o.fail(fmt("n=%.0f seed=%.0f: decoder differs from the circuit", (double)n, (double)seed));
            }
            if (n == 8) {
                max_queries = std::max(max_queries, r.stats.oracle_queries);
            }
        }
    }
    if (max_queries > 100000) {
        o.fail(fmt("n=8 used %.0f queries", (double)max_queries));
    }
    if (o.pass) {
        o.detail = fmt("100/100 decoders exact, max queries at n=8: %.0f", (double)max_queries);
    }
    return o;
}

Outcome criterion_compression() {
    Outcome o;
    const size_t n = 8;
    size_t min_margin = n;
    double worst = 0;
    for (size_t t : {2u, 4u, 6u}) {
        for (uint64_t sample = 0; sample < 20; sample++) {
            Rng rng(derive_seed(4, t, sample));
            DopedCircuit c = make_scrambler(n, t, rng);
            DecomposeResult d;
            try {
                d = decompose(c, rng);
            } catch (const std::exception &e) {
                o.fail(fmt("t=%.0f sample=%.0f: decompose threw", (double)t, (double)sample));
                continue;
            }
            if (d.s + t < n || !identity_block_holds(d.residual, d.s)) {
                o.fail(fmt("t=%.0f sample=%.0f: s=%.0f", (double)t, (double)sample, (double)d.s));
                continue;
            }
            min_margin = std::min(min_margin, d.s + t - n);
            DenseMatrix r;
            try {
                r = residual_reconstruct(c, d.u0, d.u0_prime, d.s, 1e-8);
            } catch (const std::exception &e) {
                o.fail(fmt("t=%.0f sample=%.0f: dense residual is not block diagonal", (double)t, (double)sample));
                continue;
            }
            const Eigen::Index lo = (Eigen::Index)1 << d.s;
            DenseMatrix block = DenseMatrix::Zero(r.rows() * lo, r.cols() * lo);
            for (Eigen::Index i = 0; i < block.rows(); i++) {
                for (Eigen::Index j = 0; j < block.cols(); j++) {
                    if (i % lo == j % lo) {
                        block(i, j) = r(i / lo, j / lo);
                    }
                }
            }
            DenseMatrix u = dense_unitary(c);
            DenseMatrix rebuilt = dense_unitary(d.u0) * block * dense_unitary(d.u0_prime);
            double gap = 1.0 - std::abs((rebuilt.adjoint() * u).trace()) / (double)u.rows();
            worst = std::max(worst, std::abs(gap));
            if (std::abs(gap) > 1e-8) {
                o.fail(fmt("t=%.0f sample=%.0f: dense mismatch %.3g", (double)t, (double)sample, gap));
            }
        }
    }
    if (o.pass) {
        o.detail = fmt("60 circuits, min s-(n-t)=%.0f, worst dense gap %.2g", (double)min_margin, worst);
    }
    return o;
}

Outcome criterion_group_bounds() {
    Outcome o;
    const size_t n = 4;
    const Partition part(n, 1, 2);
    size_t cases = 0;
    for (size_t t = 0; t <= 4; t++) {
        for (uint64_t sample = 0; sample < 50; sample++) {
            Rng rng(derive_seed(5, t, sample));
            DopedCircuit c = make_scrambler(n, t, rng);
            uint64_t g = 0;
            for (uint64_t i = 0; i < (uint64_t{1} << (2 * n)); i++) {
                g += check_preserved(local_pauli(n, 0, n, i), c).has_value();
            }
            uint64_t gd = preserved_subgroup(c, part).size();
            cases++;
            if (g < (uint64_t{1} << (2 * n - t))) {
                o.fail(fmt("t=%.0f sample=%.0f: |G|=%.0f", (double)t, (double)sample, (double)g));
            }
            if (gd < (uint64_t{1} << (2 * part.d - std::min(t, 2 * part.d)))) {
                o.fail(fmt("t=%.0f sample=%.0f: |G_D|=%.0f", (double)t, (double)sample, (double)gd));
            }
        }
    }
    if (o.pass) {
        o.detail = fmt("%.0f circuits", (double)cases);
    }
    return o;
}

Outcome criterion_sampler() {
    Outcome o;
    Rng rng(6);
    const size_t draws = 24000;
    std::map<std::string, size_t> counts;
    for (size_t i = 0; i < draws; i++) {
        CliffordTableau t = sample_random_clifford(1, rng);
        if (!t.is_valid()) {
            o.fail("invalid draw");
        }
        counts[t.str()]++;
    }
    const double expected = (double)draws / 24;
    double chi2 = 0;
    for (const auto &[key, c] : counts) {
        chi2 += ((double)c - expected) * ((double)c - expected) / expected;
    }
    chi2 += (double)(24 - std::min<size_t>(24, counts.size())) * expected;
    boost::math::chi_squared dist(23);
    double p = boost::math::cdf(boost::math::complement(dist, chi2));
    if (counts.size() != 24 || p <= 0.01) {
        o.fail(fmt("%.0f classes, chi2=%.2f, p=%.4f", (double)counts.size(), chi2, p));
    }
    if (o.pass) {
        o.detail = fmt("24 classes, chi2=%.2f, p=%.3f", chi2, p);
    }
    return o;
}

Outcome criterion_oracle() {
    Outcome o;
    Rng rng(7);
    double worst = 0;
    size_t trials = 0, agree = 0;
    for (int i = 0; i < 1000; i++) {
        size_t n = 1 + (size_t)i % 6;
        size_t t = (size_t)(i / 6) % 7;
        DopedCircuit c = random_doped_circuit(n, 6 * n, t, rng);
        PauliString p = random_pauli(n, 0, rng);
        DenseMatrix u = dense_unitary(c);
        worst = std::max(worst, (dense_pauli_sum(propagate_pauli(p, c)) - dense_heisenberg(u, p)).cwiseAbs().maxCoeff());

        // A nontrivial preserved Pauli, when one turns up quickly.
        std::optional<PauliString> pres;
        for (int k = 0; k < 4000 && !pres; k++) {
            PauliString cand = random_pauli(n, 0, rng);
            if (!cand.is_identity() && check_preserved(cand, c)) {
                pres = cand;
            }
        }
        if (!pres) {
            continue;
        }
        Oracle exact(c), shots(c, {OracleMode::Shots, 20, 1e-3});
        PauliString qe = exact.learn(*pres, rng), qs = shots.learn(*pres, rng);
        bool same = qe == qs && exact.verify(*pres, qe, rng) && shots.verify(*pres, qs, rng) &&
                    exact.phase(*pres, qe, rng) == shots.phase(*pres, qs, rng);
        trials++;
        agree += same;
    }
    if (worst > 1e-10) {
        o.fail(fmt("propagation differs from dense by %.3g", worst));
    }
    double rate = trials ? (double)agree / (double)trials : 0;
    if (trials == 0 || rate < 0.999) {
        o.fail(fmt("shots agreed on %.0f of %.0f preserved-Pauli trials", (double)agree, (double)trials));
    }
    if (o.pass) {
        o.detail = fmt("worst propagation error %.2g, shots agreement %.0f/%.0f", worst, (double)agree, (double)trials);
    }
    return o;
}

Outcome criterion_resolution() {
    Outcome o;
    Rng rng(8);
    double worst_ratio = INFINITY;
    for (int i = 0; i < 100; i++) {
        size_t n = 2 + (size_t)i % 4;
        size_t t = (size_t)i % 7;
        DopedCircuit c = random_doped_circuit(n, 6 * n, t, rng);
        std::vector<double> values = {0.0};
        for (uint64_t k = 0; k < (uint64_t{1} << (2 * n)); k++) {
            PauliSum img = propagate_pauli(local_pauli(n, 0, n, k), c);
            for (const auto &term : img.terms()) {
                // Choi expectation of (Q, P) carries (-1)^{#Y(Q)}.
                int ys = 0;
                for (size_t q = 0; q < n; q++) {
                    ys += term.vec.x(q) && term.vec.z(q);
                }
                values.push_back((ys & 1 ? -1 : 1) * term.coeff.to_double());
            }
        }
        std::sort(values.begin(), values.end());
        const double bound = resolution_bound(t);
        for (size_t k = 1; k < values.size(); k++) {
            double gap = values[k] - values[k - 1];
            if (gap < 1e-13) {
                continue;
            }
            worst_ratio = std::min(worst_ratio, gap / bound);
            if (gap < bound * (1 - 1e-12)) {
                o.fail(fmt("circuit %.0f (t=%.0f): gap %.3g below the bound", (double)i, (double)t, gap));
            }
        }
    }
    if (o.pass) {
        o.detail = fmt("100 circuits, smallest gap / bound = %.3f", worst_ratio);
    }
    return o;
}

Outcome criterion_steps(const std::vector<Fig2Summary> &summary) {
    Outcome o;
    // Least-squares slope of log(steps) against t, compared with log 4.
    double st = 0, sy = 0, stt = 0, sty = 0, c = 0;
    const double k = (double)summary.size();
    for (size_t i = 0; i < summary.size(); i++) {
        const auto &s = summary[i];
        double t = (double)s.t, y = std::log(std::max(s.mean_steps, 1.0));
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
        c = std::max(c, s.mean_steps / std::pow(4.0, t));
        if (i > 0 && s.mean_steps < summary[i - 1].mean_steps) {
            o.fail(fmt("mean steps drop at t=%.0f", t));
        }
    }
    double slope = (k * sty - st * sy) / (k * stt - st * st);
    if (slope > std::log(4.0)) {
        o.fail(fmt("steps grow as %.3f^t", std::exp(slope)));
    }
    if (o.pass) {
        o.detail = fmt("growth %.3f^t per T gate, steps <= %.3f * 4^t", std::exp(slope), c);
    }
    return o;
}

}  // namespace
}  // namespace ccd

int main() {
    using namespace ccd;
    int failures = 0;
    auto report = [&](int id, const char *name, const Outcome &o) {
        std::printf("%s criterion %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    };

    const ExperimentConfig cfg = fig2_config();
    const std::vector<Fig2Row> rows = run_fig2(cfg);
    const std::vector<Fig2Summary> summary = summarize_fig2(rows, cfg.n - cfg.d);

    report(1, "failure_fraction", criterion_failure_fraction(summary));
    report(2, "fidelity_exactness", criterion_fidelity(cfg, rows));
    report(3, "clifford_limit", criterion_clifford_limit());
    report(4, "compression", criterion_compression());
    report(5, "group_bounds", criterion_group_bounds());
    report(6, "sampler_uniformity", criterion_sampler());
    report(7, "oracle_equivalence", criterion_oracle());
    report(8, "finite_resolution", criterion_resolution());
    report(9, "steps_scaling", criterion_steps(summary));
    return failures ? 1 : 0;
}
