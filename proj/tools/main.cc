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

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccdecode/cc.h"
#include "ccdecode/experiment.h"
#include "ccdecode/hp.h"
#include "verify.h"

namespace {

using namespace ccd;

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Cannot open '" + path + "' for reading.");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("Cannot open '" + path + "' for writing.");
    }
    out << text;
}

std::filesystem::path output_dir() {
    const char *env = std::getenv("CCDECODE_OUTPUT_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".");
}

OracleConfig oracle_config(const std::string &mode, size_t shots) {
    OracleConfig cfg;
    cfg.mode = parse_oracle_mode(mode);
    cfg.shots = shots;
    return cfg;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford decoders for t-doped scramblers"};
    app.require_subcommand(1);

    uint64_t seed = 1;
    std::string out_path, circuit_path, mode = "exact";
    size_t n = 8, t = 0, m = 0, budget = 0, shots = 0;

    auto *sample = app.add_subcommand("sample-clifford", "Sample a uniformly random Clifford tableau");
    sample->add_option("--n", n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--out", out_path, "Output file (default stdout)");

    auto *scrambler = app.add_subcommand("scrambler", "Write a doped scrambler circuit");
    scrambler->add_option("--n", n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    scrambler->add_option("--t", t, "Number of T gates");
    scrambler->add_option("--seed", seed, "RNG seed");
    scrambler->add_option("--out", out_path, "Output file (default stdout)");

    auto *learn_cmd = app.add_subcommand("learn-decoder", "Learn a Clifford decoder for a circuit file");
    learn_cmd->add_option("--circuit", circuit_path, "Circuit file")->required();
    learn_cmd->add_option("--m", m, "Qubits excluded from the search (|C|)");
    learn_cmd->add_option("--budget", budget, "Candidates per search (0: default)");
    learn_cmd->add_option("--mode", mode, "Oracle mode")->check(CLI::IsMember({"exact", "shots"}));
    learn_cmd->add_option("--shots", shots, "Shots per learning probe (0: n)");
    learn_cmd->add_option("--seed", seed, "RNG seed");
    learn_cmd->add_option("--out", out_path, "Output file (default stdout)");

    size_t a = 1, d = 4;
    std::string decoder_path;
    auto *evaluate = app.add_subcommand("evaluate", "Fidelity report for a learned decoder");
    evaluate->add_option("--circuit", circuit_path, "Circuit file")->required();
    evaluate->add_option("--decoder", decoder_path, "Output of learn-decoder")->required();
    evaluate->add_option("--a", a, "|A|");
    evaluate->add_option("--d", d, "|D|");
    evaluate->add_option("--out", out_path, "Output file (default stdout)");

    auto *decompose_cmd = app.add_subcommand("decompose", "Split a circuit into Clifford layers and a small residual");
    decompose_cmd->add_option("--circuit", circuit_path, "Circuit file")->required();
    decompose_cmd->add_option("--mode", mode, "Oracle mode")->check(CLI::IsMember({"exact", "shots"}));
    decompose_cmd->add_option("--seed", seed, "RNG seed");
    decompose_cmd->add_option("--out", out_path, "Output file (default stdout)");

    size_t cases = 1000;
    auto *verify = app.add_subcommand("verify", "Dense cross-validation suite (n <= 6)");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--cases", cases, "Randomized propagation cases")->check(CLI::PositiveNumber);

    auto *bound = app.add_subcommand("resolution-bound", "Gap between distinct Choi expectations");
    bound->add_option("--t", t, "Number of T gates")->required();

    ExperimentConfig cfg;
    std::string exact_path;
    auto *fig2 = app.add_subcommand("fig2", "Decoding experiment over t and samples");
    fig2->add_option("--n", cfg.n, "Number of qubits");
    fig2->add_option("--a", cfg.a, "|A|");
    fig2->add_option("--d", cfg.d, "|D|");
    fig2->add_option("--t-min", cfg.t_min, "Smallest t");
    fig2->add_option("--t-max", cfg.t_max, "Largest t");
    fig2->add_option("--samples", cfg.samples, "Samples per t");
    fig2->add_option("--seed", cfg.seed, "RNG seed");
    fig2->add_option("--budget", cfg.budget, "Candidates per search (0: default)");
    fig2->add_option("--mode", mode, "Oracle mode")->check(CLI::IsMember({"exact", "shots"}));
    fig2->add_option("--shots", shots, "Shots per learning probe (0: n)");
    fig2->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    fig2->add_option("--out", out_path, "CSV path (default $CCDECODE_OUTPUT_DIR/fig2.csv)");
    fig2->add_option("--exact-out", exact_path, "Optional sidecar with exact values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) {
            Rng rng(seed);
            emit(out_path, sample_random_clifford(n, rng).str());
        } else if (*scrambler) {
            Rng rng(seed);
            emit(out_path, make_scrambler(n, t, rng).str());
        } else if (*learn_cmd) {
            DopedCircuit c = DopedCircuit::from_text(read_file(circuit_path));
            Rng rng(seed);
            CCParams params;
            params.m = m;
            params.budget = budget;
            params.oracle = oracle_config(mode, shots);
            emit(out_path, learn(c, params, rng).str());
        } else if (*evaluate) {
            DopedCircuit c = DopedCircuit::from_text(read_file(circuit_path));
            LearnResult learned = LearnResult::from_text(read_file(decoder_path));
            std::vector<PauliString> gens;
            for (const auto &g : learned.generators) {
                gens.push_back(g.source);
            }
            emit(out_path, hp_report(c, learned.v, Partition(c.num_qubits(), a, d), gens).str());
        } else if (*decompose_cmd) {
            DopedCircuit c = DopedCircuit::from_text(read_file(circuit_path));
            Rng rng(seed);
            CCParams params;
            params.oracle = oracle_config(mode, 0);
            DecomposeResult r = decompose(c, rng, params);
            std::ostringstream ss;
            ss << "s=" << r.s << "\nattempts=" << r.attempts << "\n";
            ss << "[U0]\n" << r.u0.str() << "[U0prime]\n" << r.u0_prime.str() << "[residual]\n" << r.residual.str();
            emit(out_path, ss.str());
        } else if (*verify) {
            return run_dense_verification(seed, cases, std::cout) == 0 ? 0 : 1;
        } else if (*bound) {
            std::printf("%.12g\n", resolution_bound(t));
        } else if (*fig2) {
            cfg.oracle = oracle_config(mode, shots);
            std::vector<Fig2Row> rows = run_fig2(cfg);
            std::string csv_path = out_path.empty() ? (output_dir() / "fig2.csv").string() : out_path;
            std::ostringstream csv;
            write_fig2_csv(csv, rows);
            emit(csv_path, csv.str());
            if (!exact_path.empty()) {
                std::ostringstream ex;
                write_fig2_exact(ex, rows);
                emit(exact_path, ex.str());
            }
            write_fig2_summary(std::cout, summarize_fig2(rows, cfg.n - cfg.d));
            size_t unverified = 0;
            for (const auto &r : rows) {
                unverified += !r.verified;
            }
            if (unverified) {
                std::cerr << unverified << " samples failed the fidelity self-consistency check.\n";
                return 1;
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
