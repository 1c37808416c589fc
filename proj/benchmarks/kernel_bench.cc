// Copyright 2026 The iqpsim Authors
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

// Compares the serial reference kernel, the Gray-code kernel at several worker counts, and
// brute-force summation on dense instances.
#include <benchmark/benchmark.h>

#include "iqpsim/circuit.h"
#include "iqpsim/engine.h"
#include "iqpsim/graph.h"

namespace {

struct Fixture {
    iqp::RestrictedInstance inst;
    iqp::CutPlan plan;
};

Fixture make_fixture(int n) {
    iqp::RestrictedInstance inst = iqp::full_instance(iqp::gen_dense(n, 2026));
    iqp::CutPlan plan = iqp::make_cut_plan(inst, iqp::mis_exact(iqp::build_interaction(inst)));
    return {std::move(inst), std::move(plan)};
}

void BM_reference(benchmark::State &state) {
    Fixture f = make_fixture(int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iqp::amplitude_cut_reference(f.inst, f.plan));
    }
    state.counters["cut"] = f.plan.cut_size();
}

void BM_gray(benchmark::State &state) {
    Fixture f = make_fixture(int(state.range(0)));
    const int workers = int(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iqp::amplitude_cut(f.inst, f.plan, workers));
    }
    state.counters["cut"] = f.plan.cut_size();
}

void BM_gray_float(benchmark::State &state) {
    Fixture f = make_fixture(int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iqp::amplitude_cut(f.inst, f.plan, 1, iqp::Accumulation::floating));
    }
}

void BM_bruteforce(benchmark::State &state) {
    Fixture f = make_fixture(int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iqp::amplitude_bruteforce(f.inst));
    }
}

void BM_pipeline(benchmark::State &state) {
    iqp::IqpCircuit c = iqp::gen_dense(int(state.range(0)), 2026);
    iqp::Bits zero(c.num_qubits(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iqp::amplitude(c, zero));
    }
}

}  // namespace

BENCHMARK(BM_reference)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gray)->ArgsProduct({{12, 16, 20, 24}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gray_float)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bruteforce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pipeline)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
