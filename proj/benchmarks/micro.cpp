// Copyright 2026 The Abstraqt Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "abstraqt/bench_gen.hpp"
#include "abstraqt/f2_linalg.hpp"
#include "abstraqt/pauli.hpp"
#include "abstraqt/simulator.hpp"

using namespace abstraqt;

namespace {

ConcretePauli random_pauli(std::mt19937_64 &rng, std::size_t n) {
    std::vector<PauliLetter> letters(n);
    for (auto &l : letters) {
        l = static_cast<PauliLetter>(uniform_below(rng, 4));
    }
    return ConcretePauli(static_cast<std::uint8_t>(uniform_below(rng, 4)), std::move(letters));
}

void BM_PauliMultiply(benchmark::State &state) {
    std::mt19937_64 rng(7);
    auto n = static_cast<std::size_t>(state.range(0));
    ConcretePauli a = random_pauli(rng, n);
    ConcretePauli b = random_pauli(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PauliMultiply)->Arg(16)->Arg(64)->Arg(256);

void BM_Solve(benchmark::State &state) {
    std::mt19937_64 rng(11);
    auto n = static_cast<std::size_t>(state.range(0));
    BitMatrix a(2 * n, n);
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a.set(r, c, uniform_below(rng, 2) == 1);
        }
    }
    BitVector x(n);
    for (std::size_t c = 0; c < n; ++c) {
        x.set(c, uniform_below(rng, 2) == 1);
    }
    BitVector rhs = a.multiply(x);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(a, rhs));
    }
}
BENCHMARK(BM_Solve)->Arg(16)->Arg(64)->Arg(128);

void BM_GateApplication(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Gate h = Gate::unitary("h", {0});
    Gate cx = Gate::unitary("cx", {0, n - 1});
    Gate t = Gate::unitary("t", {n - 1});
    for (auto _ : state) {
        AbstractSimulator sim(n);
        sim.apply(h);
        sim.apply(cx);
        sim.apply(t);
        benchmark::DoNotOptimize(sim.trace());
    }
}
BENCHMARK(BM_GateApplication)->Arg(16)->Arg(64);

void BM_FamilyRun(benchmark::State &state) {
    BenchSpec spec;
    spec.family = all_families()[static_cast<std::size_t>(state.range(0))];
    spec.num_qubits = 16;
    spec.gates_per_block = 200;
    spec.rounds = 10;
    Circuit circuit = generate(spec);
    state.SetLabel(std::string(family_label(spec.family)));
    for (auto _ : state) {
        AbstractSimulator sim(circuit.num_qubits);
        sim.run(circuit);
        benchmark::DoNotOptimize(sim.probability_one(circuit.num_qubits - 1));
    }
}
BENCHMARK(BM_FamilyRun)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
