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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nandsim/classical_state.hpp"
#include "nandsim/gates.hpp"
#include "nandsim/tree.hpp"

namespace nandsim {

/// One-bit phase estimation with a width-1 Fourier transform; exact for phases 0 and 1/2.
struct PhaseEstimationConfig {
    unsigned precision_bits = 1;
    unsigned fourier_width = 1;

    std::uint64_t fourier_size() const { return std::uint64_t{1} << fourier_width; }
};

/// Abstract cost model of the algorithm (unit costs per stage).
///
/// Per iteration q = 1..n: two phase estimations at precision_bits^2 each,
/// a Toffoli at 3, and, when q < n, one Fourier transform at fourier_width^2.
/// Preparing the index superposition, adding the result register and
/// relabelling registers cost nothing. Outside the loop the oracle encoding
/// costs n * sparsity^2 * t (t = 1) and the final measurement costs 1.
struct StepCount {
    std::uint64_t oracle_encoding = 0;
    std::uint64_t phase_estimation = 0;
    std::uint64_t toffoli = 0;
    std::uint64_t fourier = 0;
    std::uint64_t measurement = 0;

    /// Steps inside the iteration loop.
    std::uint64_t iteration_steps() const { return phase_estimation + toffoli + fourier; }
    std::uint64_t total() const { return oracle_encoding + iteration_steps() + measurement; }
    bool operator==(const StepCount &) const = default;
};

/// Closed forms of StepCount for the default configuration: 6n - 1 and 7n.
std::uint64_t closed_form_iteration_steps(unsigned depth);
std::uint64_t closed_form_total_steps(unsigned depth);

/// The mixtures written down for one iteration. Labels use registers
/// X, Y (estimates), Z (result), B (index, n - q qubits), aux-1 (right selector)
/// and A (index after relabelling).
struct DeclaredIteration {
    unsigned q = 0;
    std::vector<Bit> left;   // x_j: estimates at index (j, 0)
    std::vector<Bit> right;  // y_j: estimates at index (j, 1)
    std::vector<Bit> result; // z_j = NAND(x_j, y_j)

    ClassicalState left_estimated;     // X, B
    ClassicalState right_selector;     // B, aux-1
    ClassicalState estimated;          // X, Y, B
    ClassicalState with_fresh_result;  // X, Y, Z = 1, B
    ClassicalState nand_applied;       // X, Y, Z, B
    std::optional<ClassicalState> fourier_on_result;  // Z, A; only while q < n
};

struct DeclaredTrace {
    unsigned depth = 0;
    ClassicalState mixed_index;  // uniform over A, n qubits
    std::vector<DeclaredIteration> iterations;
    StepCount steps;
    ResourceCounter resources;
};

struct DeclaredResult {
    Bit root = 0;
    DeclaredTrace trace;
};

/// Builds the asserted states iteration by iteration, with every phase
/// estimate equal to the true phase of the current oracle. Throws Unsupported
/// for depth 0.
DeclaredResult declared_run(const LeafAssignment &a, const PhaseEstimationConfig &cfg = {});

/// Uniform mixture over (k, j) after the Fourier transform on the result
/// register: each term's phase e^{2 pi i z_j k / T} is multiplied by its own
/// conjugate, so the weights never depend on z.
ClassicalState fourier_mixture(std::span<const Bit> result, const PhaseEstimationConfig &cfg = {});

}  // namespace nandsim
