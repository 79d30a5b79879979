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

#ifndef _CCDECODE_EXPERIMENT_H
#define _CCDECODE_EXPERIMENT_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccdecode/cc.h"
#include "ccdecode/hp.h"

namespace ccd {

struct ExperimentConfig {
    size_t n = 8;
    size_t a = 1;
    size_t d = 4;
    size_t t_min = 0;
    size_t t_max = 6;
    size_t samples = 100;
    uint64_t seed = 1;
    OracleConfig oracle;
    /// Learning budget per search; 0 selects default_budget(n, t).
    size_t budget = 0;
    size_t workers = 1;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

/// One (t, sample) point of the decoding experiment.
struct Fig2Row {
    size_t t = 0;
    size_t sample = 0;
    uint64_t seed = 0;
    uint64_t steps = 0;
    uint64_t queries = 0;
    /// Number of independent learned generators (log2 of the learned |G_D|).
    size_t gd_rank = 0;
    /// log2 of the exhaustively counted |G_D|.
    size_t true_gd_rank = 0;
    bool r_zero = false;
    double fidelity = 0;
    /// R = R' = 0 and the fidelity equals 1 / (d_A^2 omega_gd) exactly.
    bool success = false;
    /// The fidelity recomputed from (R, R', omega_gd) equals the direct ratio.
    bool verified = false;
    bool scrambler = false;
    HPReport report;
};

/// Builds the doped scrambler for (t, sample), learns a decoder with m = |C|
/// and evaluates it. Depends only on (cfg, t, sample).
Fig2Row run_fig2_sample(const ExperimentConfig &cfg, size_t t, size_t sample);

/// All rows sorted by (t, sample). Output does not depend on cfg.workers.
std::vector<Fig2Row> run_fig2(const ExperimentConfig &cfg);

/// Header "t,sample,seed,steps,queries,gd_rank,R_zero,fidelity,success";
/// floats at 12 significant digits.
void write_fig2_csv(std::ostream &out, const std::vector<Fig2Row> &rows);
/// Exact values per row, one "key=value" block per (t, sample).
void write_fig2_exact(std::ostream &out, const std::vector<Fig2Row> &rows);

struct Fig2Summary {
    size_t t = 0;
    size_t samples = 0;
    double mean_steps = 0;
    double mean_queries = 0;
    double mean_fidelity = 0;
    double failure_fraction = 0;
    /// 2^{t - 2|C|}.
    double bound = 0;
};

std::vector<Fig2Summary> summarize_fig2(const std::vector<Fig2Row> &rows, size_t c);
void write_fig2_summary(std::ostream &out, const std::vector<Fig2Summary> &summary);

}  // namespace ccd

#endif
