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

#include "nandsim/declared.hpp"

#include <bit>

#include "nandsim/diagonal.hpp"
#include "nandsim/errors.hpp"

namespace nandsim {

namespace {

std::string bits_of(std::uint64_t value, unsigned width) {
    std::string out(width, '0');
    for (unsigned k = 0; k < width; ++k) {
        out[k] = static_cast<char>('0' + ((value >> (width - 1 - k)) & 1));
    }
    return out;
}

std::string bit(Bit b) { return b != 0 ? "1" : "0"; }

// Bit estimate of an exact phase in {0, 1/2}.
Bit estimate(double phase) { return phase == 0.5 ? 1 : 0; }

}  // namespace

std::uint64_t closed_form_iteration_steps(unsigned depth) { return depth == 0 ? 0 : 6 * std::uint64_t{depth} - 1; }

std::uint64_t closed_form_total_steps(unsigned depth) { return 7 * std::uint64_t{depth}; }

ClassicalState fourier_mixture(std::span<const Bit> result, const PhaseEstimationConfig &cfg) {
    const std::uint64_t size = cfg.fourier_size();
    const unsigned index_width = static_cast<unsigned>(std::countr_zero(result.size()));
    const double norm = 1.0 / (static_cast<double>(size) * static_cast<double>(result.size()));
    std::vector<ClassicalState::Entry> support;
    for (std::uint64_t j = 0; j < result.size(); ++j) {
        for (std::uint64_t k = 0; k < size; ++k) {
            const auto turns = static_cast<long long>(result[j] * k);
            Complex ket = unit_root(turns, static_cast<long long>(size));
            Complex bra = std::conj(unit_root(turns, static_cast<long long>(size)));
            double weight = norm * (ket * bra).real();
            support.push_back({weight, {{"Z", bits_of(k, cfg.fourier_width)}, {"A", bits_of(j, index_width)}}});
        }
    }
    return ClassicalState(std::move(support));
}

DeclaredResult declared_run(const LeafAssignment &a, const PhaseEstimationConfig &cfg) {
    const unsigned n = a.depth();
    if (n == 0) {
        throw Unsupported("the algorithm needs depth >= 1");
    }
    if (cfg.precision_bits != 1 || cfg.fourier_width != 1) {
        throw InvalidConfig("only one-bit phase estimation (precision 1, Fourier width 1) is supported");
    }
    if (n > 24) {
        throw TooLarge("declared mode supports depth <= 24");
    }

    DeclaredResult out;
    DeclaredTrace &trace = out.trace;
    trace.depth = n;
    {
        std::vector<Label> labels;
        for (std::uint64_t j = 0; j < a.size(); ++j) {
            labels.push_back({{"A", bits_of(j, n)}});
        }
        trace.mixed_index = ClassicalState::uniform(std::move(labels));
    }

    const std::uint64_t pe_cost = std::uint64_t{cfg.precision_bits} * cfg.precision_bits;
    const std::uint64_t fourier_cost = std::uint64_t{cfg.fourier_width} * cfg.fourier_width;
    trace.steps.oracle_encoding = n * DiagonalHamiltonian::sparsity() * DiagonalHamiltonian::sparsity();
    trace.steps.measurement = 1;

    std::vector<Bit> values(a.leaves().begin(), a.leaves().end());
    for (unsigned q = 1; q <= n; ++q) {
        const DiagonalUnitary oracle = build_diagonal_unitary(values);
        const unsigned m = n - q;
        const std::uint64_t count = std::uint64_t{1} << m;

        DeclaredIteration it;
        it.q = q;
        std::vector<Label> xb, bs, xyb, xy1b, xyzb;
        for (std::uint64_t j = 0; j < count; ++j) {
            const Bit x = estimate(oracle.phase(2 * j));
            const Bit y = estimate(oracle.phase(2 * j + 1));
            const Bit z = nand(x, y);
            it.left.push_back(x);
            it.right.push_back(y);
            it.result.push_back(z);
            const std::string b = bits_of(j, m);
            xb.push_back({{"X", bit(x)}, {"B", b}});
            bs.push_back({{"B", b}, {"aux-1", "1"}});
            xyb.push_back({{"X", bit(x)}, {"Y", bit(y)}, {"B", b}});
            xy1b.push_back({{"X", bit(x)}, {"Y", bit(y)}, {"Z", "1"}, {"B", b}});
            xyzb.push_back({{"X", bit(x)}, {"Y", bit(y)}, {"Z", bit(z)}, {"B", b}});
        }
        it.left_estimated = ClassicalState::uniform(std::move(xb));
        it.right_selector = ClassicalState::uniform(std::move(bs));
        it.estimated = ClassicalState::uniform(std::move(xyb));
        it.with_fresh_result = ClassicalState::uniform(std::move(xy1b));
        it.nand_applied = ClassicalState::uniform(std::move(xyzb));

        // Two controlled-oracle estimations: ancilla Hadamard, oracle, width-1 inverse QFT.
        trace.resources.oracle_queries += 2;
        trace.resources.add_gates(1, 4);
        trace.resources.add_gates(3);
        trace.steps.phase_estimation += 2 * pe_cost;
        trace.steps.toffoli += 3;
        if (q < n) {
            it.fourier_on_result = fourier_mixture(it.result, cfg);
            trace.resources.add_gates(1, cfg.fourier_width);
            trace.steps.fourier += fourier_cost;
        }
        values = it.result;
        trace.iterations.push_back(std::move(it));
    }
    out.root = values.at(0);
    return out;
}

}  // namespace nandsim
