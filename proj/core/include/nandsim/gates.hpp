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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "nandsim/diagonal.hpp"
#include "nandsim/state_vector.hpp"

namespace nandsim {

/// Gate and oracle-query tallies for one run. Counts only ever increase.
struct ResourceCounter {
    std::uint64_t oracle_queries = 0;
    std::uint64_t one_qubit_gates = 0;
    std::uint64_t two_qubit_gates = 0;
    std::uint64_t three_qubit_gates = 0;

    void add_gates(unsigned arity, std::uint64_t count = 1);
    std::uint64_t total_gates() const { return one_qubit_gates + two_qubit_gates + three_qubit_gates; }

    ResourceCounter &operator+=(const ResourceCounter &o);
    bool operator==(const ResourceCounter &) const = default;
};

namespace gate {

struct Hadamard {
    Qubit target;
};

struct PauliX {
    Qubit target;
};

/// Applies `oracle` to `targets` (most significant first) when `control` is 1.
/// Counted as one oracle query, never decomposed.
struct ControlledDiagonal {
    Qubit control;
    std::vector<Qubit> targets;
    std::reference_wrapper<const DiagonalUnitary> oracle;
};

struct Toffoli {
    Qubit control0;
    Qubit control1;
    Qubit target;
};

struct ControlledZ {
    Qubit control;
    Qubit target;
};

/// Z on `target` when control0 == polarity0 and control1 == polarity1.
struct PolarityCCZ {
    Qubit control0;
    Bit polarity0;
    Qubit control1;
    Bit polarity1;
    Qubit target;
};

/// QFT |k> -> 2^{-w/2} sum_y e^{+-2 pi i k y / 2^w} |y> on a register of width w.
/// Counted as its textbook decomposition: w Hadamards, w(w-1)/2 controlled
/// phases and floor(w/2) swaps.
struct Fourier {
    std::vector<Qubit> qubits;
    bool inverse = false;
};

}  // namespace gate

using Gate = std::variant<gate::Hadamard, gate::PauliX, gate::ControlledDiagonal, gate::Toffoli, gate::ControlledZ,
                          gate::PolarityCCZ, gate::Fourier>;

/// Applies `g` exactly and records it in `counter`. Throws LayoutError on
/// out-of-range or overlapping qubits, or an oracle/target width mismatch.
void apply_gate(StateVector &s, const Gate &g, ResourceCounter &counter);

}  // namespace nandsim
