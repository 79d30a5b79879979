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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccd {
namespace {

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.n = 6;
    cfg.a = 1;
    cfg.d = 3;
    cfg.t_min = 0;
    cfg.t_max = 3;
    cfg.samples = 4;
    cfg.seed = 11;
    return cfg;
}

std::string csv_of(const std::vector<Fig2Row> &rows) {
    std::ostringstream out;
    write_fig2_csv(out, rows);
    return out.str();
}

TEST(Experiment, ConfigValidation) {
    ExperimentConfig cfg = small_config();
    EXPECT_NO_THROW(cfg.validate());
    cfg.t_min = 4;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.a = 7;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.workers = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Experiment, DeterministicAcrossWorkerCounts) {
    ExperimentConfig cfg = small_config();
    std::string one = csv_of(run_fig2(cfg));
    cfg.workers = 3;
    EXPECT_EQ(csv_of(run_fig2(cfg)), one);
}

TEST(Experiment, CsvLayout) {
    ExperimentConfig cfg = small_config();
    std::vector<Fig2Row> rows = run_fig2(cfg);
    ASSERT_EQ(rows.size(), 16u);
    std::string csv = csv_of(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,sample,seed,steps,queries,gd_rank,R_zero,fidelity,success");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
}

TEST(Experiment, RowsAreSelfConsistent) {
    ExperimentConfig cfg = small_config();
    for (const Fig2Row &row : run_fig2(cfg)) {
        EXPECT_TRUE(row.verified);
        EXPECT_LE(row.gd_rank, row.true_gd_rank);
        EXPECT_EQ(row.success, row.r_zero && row.report.success);
        if (row.t == 0) {
            EXPECT_TRUE(row.success);
        }
    }
}

TEST(Experiment, SummaryPerT) {
    ExperimentConfig cfg = small_config();
    std::vector<Fig2Summary> s = summarize_fig2(run_fig2(cfg), cfg.n - cfg.d);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0].t, 0u);
    EXPECT_EQ(s[0].samples, 4u);
    EXPECT_DOUBLE_EQ(s[2].bound, std::ldexp(1.0, 2 - 6));
    EXPECT_DOUBLE_EQ(s[0].failure_fraction, 0.0);
}

}  // namespace
}  // namespace ccd
