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

#include <benchmark/benchmark.h>

#include "ccdecode/cc.h"
#include "ccdecode/hp.h"

namespace ccd {
namespace {

void BM_PropagatePauli(benchmark::State &state) {
    const size_t t = (size_t)state.range(0);
    Rng rng(1);
    DopedCircuit c = make_scrambler(8, t, rng);
    PauliString p = random_pauli(8, 0, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagate_pauli(p, c));
    }
}
BENCHMARK(BM_PropagatePauli)->DenseRange(0, 8, 2);

void BM_SampleRandomClifford(benchmark::State &state) {
    const size_t n = (size_t)state.range(0);
    Rng rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_random_clifford(n, rng));
    }
}
BENCHMARK(BM_SampleRandomClifford)->RangeMultiplier(2)->Range(4, 64);

void BM_Learn(benchmark::State &state) {
    const size_t t = (size_t)state.range(0);
    Rng rng(3);
    DopedCircuit c = make_scrambler(8, t, rng);
    CCParams params;
    params.m = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(learn(c, params, rng));
    }
}
BENCHMARK(BM_Learn)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

void BM_HPReport(benchmark::State &state) {
    const size_t t = (size_t)state.range(0);
    Rng rng(4);
    DopedCircuit c = make_scrambler(8, t, rng);
    const Partition part(8, 1, 4);
    CCParams params;
    params.m = part.c();
    LearnResult r = learn(c, params, rng);
    std::vector<PauliString> gens;
    for (const auto &g : r.generators) {
        gens.push_back(g.source);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hp_report(c, r.v, part, gens));
    }
}
BENCHMARK(BM_HPReport)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ccd

BENCHMARK_MAIN();
