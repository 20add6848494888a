// Copyright 2026 The nonsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <vector>

#include "benchmark/benchmark.h"

#include "nonsep/entangled.h"
#include "nonsep/identical.h"
#include "nonsep/oracle.h"
#include "nonsep/scenario_generator.h"

using namespace nonsep;

namespace {

void BM_ValidateGram(benchmark::State &state) {
    oracle::ScenarioGenerator gen(1);
    std::vector<std::string> labels;
    for (int i = 0; i < state.range(0); ++i) {
        labels.push_back("m" + std::to_string(i));
    }
    GramSpec g = gen.random_gram(labels, labels.size());
    for (auto _ : state) {
        validate_gram(g);
    }
}
BENCHMARK(BM_ValidateGram)->Arg(4)->Arg(8)->Arg(12);

void BM_ClosedFormAbsorption(benchmark::State &state) {
    auto s = oracle::ScenarioGenerator(2).absorption_scenario(Statistics::Fermion);
    for (auto _ : state) {
        benchmark::DoNotOptimize(identical::one_absorption_probability_identical(s).total);
    }
}
BENCHMARK(BM_ClosedFormAbsorption);

void BM_OracleAbsorption(benchmark::State &state) {
    auto s = oracle::ScenarioGenerator(2).absorption_scenario(Statistics::Fermion);
    for (auto _ : state) {
        benchmark::DoNotOptimize(static_cast<double>(oracle::oracle_one_absorption_identical(s)));
    }
}
BENCHMARK(BM_OracleAbsorption);

void BM_OracleEmission(benchmark::State &state) {
    entangled::EmissionParams p{.tau_a = 1.0, .tau_b = 0.1, .t = 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(static_cast<double>(oracle::oracle_emission_probability(p)));
    }
}
BENCHMARK(BM_OracleEmission);

void BM_Fig2Sweep(benchmark::State &state) {
    std::vector<double> x(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = 0.999 * static_cast<double>(i) / static_cast<double>(x.size() - 1);
    }
    const std::vector<double> tilde{0.5, 0.9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(identical::fig2_sweep(x, tilde).rows.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fig2Sweep)->Arg(200)->Arg(2000);

void BM_EquivalenceCampaign(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::run_equivalence_campaign(42, 10).max_abs_err);
    }
}
BENCHMARK(BM_EquivalenceCampaign)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
