// Copyright 2026 The nandsim Authors
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

#include "nandsim/circuit.hpp"
#include "nandsim/declared.hpp"
#include "nandsim/gates.hpp"
#include "nandsim/state_vector.hpp"

using namespace nandsim;

namespace {

LeafAssignment alternating(unsigned depth) {
    std::vector<Bit> leaves(std::size_t{1} << depth);
    for (std::size_t j = 0; j < leaves.size(); ++j) leaves[j] = static_cast<Bit>(j & 1);
    return LeafAssignment(depth, leaves);
}

void BM_Hadamard(benchmark::State &state) {
    const unsigned width = static_cast<unsigned>(state.range(0));
    StateVector s(width);
    ResourceCounter c;
    for (auto _ : state) {
        apply_gate(s, gate::Hadamard{width / 2}, c);
        benchmark::DoNotOptimize(s.amplitude(0));
    }
}
BENCHMARK(BM_Hadamard)->Arg(12)->Arg(16)->Arg(20);

void BM_Toffoli(benchmark::State &state) {
    const unsigned width = static_cast<unsigned>(state.range(0));
    StateVector s(width);
    ResourceCounter c;
    for (auto _ : state) {
        apply_gate(s, gate::Toffoli{0, 1, width - 1}, c);
        benchmark::DoNotOptimize(s.amplitude(0));
    }
}
BENCHMARK(BM_Toffoli)->Arg(12)->Arg(16)->Arg(20);

void BM_ControlledOracle(benchmark::State &state) {
    const unsigned depth = static_cast<unsigned>(state.range(0));
    LeafAssignment a = alternating(depth);
    DiagonalUnitary u = build_diagonal_unitary(a);
    StateVector s(0);
    const Qubit anc = s.allocate("X", 1).qubits[0];
    std::vector<Qubit> targets = s.allocate("T", depth).qubits;
    ResourceCounter c;
    for (auto _ : state) {
        apply_gate(s, gate::ControlledDiagonal{anc, targets, std::cref(u)}, c);
        benchmark::DoNotOptimize(s.amplitude(0));
    }
}
BENCHMARK(BM_ControlledOracle)->Arg(8)->Arg(12)->Arg(16);

void BM_CircuitSimulate(benchmark::State &state) {
    const unsigned depth = static_cast<unsigned>(state.range(0));
    const auto interp = state.range(1) == 0 ? Interpretation::FreshB : Interpretation::ReuseIndex;
    LeafAssignment a = alternating(depth);
    for (auto _ : state) benchmark::DoNotOptimize(circuit_simulate(a, interp));
}
BENCHMARK(BM_CircuitSimulate)->Args({3, 0})->Args({3, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_DeclaredRun(benchmark::State &state) {
    LeafAssignment a = alternating(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(declared_run(a));
}
BENCHMARK(BM_DeclaredRun)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
