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

#include "ccdecode/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace ccd {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

size_t log2_exact(uint64_t v) {
    size_t k = 0;
    while ((uint64_t{1} << k) < v) {
        k++;
    }
    return k;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n == 0 || a > n || d > n) {
        throw std::invalid_argument("Partition sizes must satisfy |A|, |D| <= n.");
    }
    if (d == n) {
        throw std::invalid_argument("|D| = n leaves no qubits for C; use gate_fidelity instead.");
    }
    if (samples == 0) {
        throw std::invalid_argument("samples must be at least 1.");
    }
    if (t_min > t_max) {
        throw std::invalid_argument("t_min exceeds t_max.");
    }
    if ((t_max + 1) / 2 > n) {
        throw std::invalid_argument("t_max needs ceil(t/2) <= n.");
    }
    if (workers == 0) {
        throw std::invalid_argument("workers must be at least 1.");
    }
}

Fig2Row run_fig2_sample(const ExperimentConfig &cfg, size_t t, size_t sample) {
    Fig2Row row;
    row.t = t;
    row.sample = sample;
    row.seed = derive_seed(cfg.seed, t, sample);
    Rng rng(row.seed);
    const Partition part(cfg.n, cfg.a, cfg.d);
    DopedCircuit c = make_scrambler(cfg.n, t, rng);

    CCParams params;
    params.m = part.c();
    params.budget = cfg.budget;
    params.oracle = cfg.oracle;
    LearnResult learned = learn(c, params, rng);
    std::vector<PauliString> gens;
    for (const auto &g : learned.generators) {
        gens.push_back(g.source);
    }

    row.report = hp_report(c, learned.v, part, gens);
    const HPReport &rep = row.report;
    row.steps = learned.stats.sampling_steps;
    row.queries = learned.stats.oracle_queries;
    row.gd_rank = gens.size();
    row.true_gd_rank = log2_exact(rep.true_gd_size);
    row.r_zero = rep.success;
    row.fidelity = rep.fidelity.to_double();
    row.verified = rep.fidelity == rep.fidelity_from_parts;
    const RootTwo da2 = RootTwo::from_int(int64_t{1} << (2 * part.a));
    row.success = rep.success && rep.fidelity == RootTwo::from_int(1) / (da2 * rep.omega_gd);
    row.scrambler = std::abs((rep.omega4 - scrambler_otoc_value(part)).to_double()) <= 4.0 / std::ldexp(1.0, (int)cfg.n);
    return row;
}

std::vector<Fig2Row> run_fig2(const ExperimentConfig &cfg) {
    cfg.validate();
    struct Job {
        size_t t, sample;
    };
    std::vector<Job> jobs;
    for (size_t t = cfg.t_min; t <= cfg.t_max; t++) {
        for (size_t s = 0; s < cfg.samples; s++) {
            jobs.push_back({t, s});
        }
    }
    std::vector<Fig2Row> rows(jobs.size());
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            try {
                rows[i] = run_fig2_sample(cfg, jobs[i].t, jobs[i].sample);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 1; w < std::min(cfg.workers, jobs.size()); w++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return rows;
}

void write_fig2_csv(std::ostream &out, const std::vector<Fig2Row> &rows) {
    out << "t,sample,seed,steps,queries,gd_rank,R_zero,fidelity,success\n";
    for (const auto &r : rows) {
        out << r.t << "," << r.sample << "," << r.seed << "," << r.steps << "," << r.queries << "," << r.gd_rank << ","
            << (r.r_zero ? 1 : 0) << "," << fmt12(r.fidelity) << "," << (r.success ? 1 : 0) << "\n";
    }
}

void write_fig2_exact(std::ostream &out, const std::vector<Fig2Row> &rows) {
    for (const auto &r : rows) {
        out << "[t=" << r.t << " sample=" << r.sample << "]\n" << r.report.str();
    }
}

std::vector<Fig2Summary> summarize_fig2(const std::vector<Fig2Row> &rows, size_t c) {
    std::vector<Fig2Summary> out;
    for (const auto &r : rows) {
        if (out.empty() || out.back().t != r.t) {
            out.push_back({});
            out.back().t = r.t;
            out.back().bound = std::ldexp(1.0, (int)r.t - 2 * (int)c);
        }
        Fig2Summary &s = out.back();
        s.samples++;
        s.mean_steps += (double)r.steps;
        s.mean_queries += (double)r.queries;
        s.mean_fidelity += r.fidelity;
        s.failure_fraction += r.r_zero ? 0 : 1;
    }
    for (auto &s : out) {
        s.mean_steps /= (double)s.samples;
        s.mean_queries /= (double)s.samples;
        s.mean_fidelity /= (double)s.samples;
        s.failure_fraction /= (double)s.samples;
    }
    return out;
}

void write_fig2_summary(std::ostream &out, const std::vector<Fig2Summary> &summary) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3s %7s %14s %14s %14s %12s %12s\n", "t", "samples", "mean_steps", "mean_queries",
                  "mean_fidelity", "fail_frac", "bound");
    out << buf;
    for (const auto &s : summary) {
        std::snprintf(buf, sizeof buf, "%3zu %7zu %14.4f %14.6g %14.10f %12.6f %12.6f\n", s.t, s.samples, s.mean_steps,
                      s.mean_queries, s.mean_fidelity, s.failure_fraction, s.bound);
        out << buf;
    }
}

}  // namespace ccd
