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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nandsim/declared.hpp"
#include "nandsim/density_matrix.hpp"
#include "nandsim/gates.hpp"
#include "nandsim/tree.hpp"

namespace nandsim {

/// How iteration q >= 2 obtains its index register and its controlled oracle.
enum class Interpretation {
    /// Every iteration prepares a new uniform index register B_q of n - q
    /// qubits. The rebuilt oracle is a controlled-Z from the estimation
    /// ancilla onto the previous result qubit, conditioned on the selector
    /// qubit's polarity (aux-0 for the left branch, aux-1 for the right).
    FreshB,
    /// Iteration q >= 2 keeps the surviving index register of iteration q - 1,
    /// splits off its last qubit as the selector, and realizes the rebuilt
    /// oracle as a doubly-controlled Z (ancilla on 1, selector on the branch
    /// polarity) onto the previous result qubit.
    ReuseIndex,
};

std::string_view to_string(Interpretation i);
/// Accepts "fresh-b" and "reuse-index"; throws InvalidConfig otherwise.
Interpretation parse_interpretation(std::string_view text);

inline constexpr unsigned kDefaultMaxWidth = 22;

struct CircuitOptions {
    unsigned max_width = kDefaultMaxWidth;
    unsigned reduction_limit = kDefaultReductionLimit;
};

/// Total qubits the circuit allocates for a depth-n run.
unsigned required_width(unsigned depth, Interpretation interp);

struct CircuitResult {
    /// Exact distribution of the final result qubit, indexed by bit value.
    std::array<double, 2> root{};
    /// Reduced state on (X_q, Y_q, B_q) right after both estimations of iteration q.
    std::vector<DensityMatrix> snapshots;
    ResourceCounter resources;
    unsigned width = 0;
};

/// Runs the literal unitary circuit on an exact state vector. Throws
/// Unsupported for depth 0 and TooLarge when required_width exceeds the budget.
CircuitResult circuit_simulate(const LeafAssignment &a, Interpretation interp, const CircuitOptions &opts = {});

struct DivergenceRecord {
    unsigned q = 0;
    double trace_distance = 0.0;
    double coherence_mass = 0.0;
    bool operator==(const DivergenceRecord &) const = default;
};

/// Per iteration: trace distance between the declared (X, Y, B) mixture and
/// the circuit snapshot, and the snapshot's coherence mass. Throws LayoutError
/// when iteration counts or dimensions disagree.
std::vector<DivergenceRecord> compare_traces(const DeclaredTrace &declared, std::span<const DensityMatrix> snapshots);

/// Declared (X, Y, B) mixtures as density matrices, one per iteration.
std::vector<DensityMatrix> declared_snapshots(const DeclaredTrace &declared);

}  // namespace nandsim
