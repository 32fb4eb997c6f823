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

#include "nandsim/circuit.hpp"

#include "nandsim/errors.hpp"

namespace nandsim {

namespace {

struct Branch {
    const char *ancilla;
    Qubit selector;
    Bit polarity;
};

std::string numbered(const char *name, unsigned q) { return std::string(name) + std::to_string(q); }

}  // namespace

std::string_view to_string(Interpretation i) {
    switch (i) {
        case Interpretation::FreshB:
            return "fresh-b";
        case Interpretation::ReuseIndex:
            return "reuse-index";
    }
    throw InvalidConfig("unknown interpretation");
}

Interpretation parse_interpretation(std::string_view text) {
    if (text == "fresh-b") return Interpretation::FreshB;
    if (text == "reuse-index") return Interpretation::ReuseIndex;
    throw InvalidConfig("unknown interpretation '" + std::string(text) + "' (expected fresh-b or reuse-index)");
}

unsigned required_width(unsigned depth, Interpretation interp) {
    if (depth == 0) {
        return 0;
    }
    // aux-0, aux-1 and X_q, Y_q, Z_q per iteration.
    unsigned width = 2 + 3 * depth;
    if (interp == Interpretation::FreshB) {
        width += depth * (depth - 1) / 2;
    } else {
        width += depth - 1;
    }
    return width;
}

CircuitResult circuit_simulate(const LeafAssignment &a, Interpretation interp, const CircuitOptions &opts) {
    const unsigned n = a.depth();
    if (n == 0) {
        throw Unsupported("the algorithm needs depth >= 1");
    }
    if (n > 16 || required_width(n, interp) > opts.max_width) {
        throw TooLarge("depth " + std::to_string(n) + " under " + std::string(to_string(interp)) + " needs " +
                       std::to_string(required_width(n, interp)) + " qubits, budget is " +
                       std::to_string(opts.max_width));
    }

    CircuitResult out;
    ResourceCounter &counter = out.resources;
    StateVector s;

    const Qubit aux0 = s.allocate("aux-0", 1).qubits[0];
    const Qubit aux1 = s.allocate("aux-1", 1).qubits[0];
    apply_gate(s, gate::PauliX{aux1}, counter);

    const DiagonalUnitary leaf_oracle = build_diagonal_unitary(a);
    std::vector<Qubit> index;
    std::optional<Qubit> previous_result;

    for (unsigned q = 1; q <= n; ++q) {
        const unsigned m = n - q;

        // (i) index register for this iteration.
        std::optional<Qubit> reused_selector;
        if (q == 1 || interp == Interpretation::FreshB) {
            index = s.allocate(numbered("B", q), m).qubits;
            for (Qubit b : index) {
                apply_gate(s, gate::Hadamard{b}, counter);
            }
        } else {
            reused_selector = index.back();
            index.pop_back();
        }

        // (ii), (iii) one-bit phase estimation for the left then the right children.
        const Branch branches[2] = {
            {"X", reused_selector.value_or(aux0), 0},
            {"Y", reused_selector.value_or(aux1), 1},
        };
        Qubit ancillas[2];
        for (int k = 0; k < 2; ++k) {
            const Branch &br = branches[k];
            const Qubit ancilla = s.allocate(numbered(br.ancilla, q), 1).qubits[0];
            ancillas[k] = ancilla;
            apply_gate(s, gate::Hadamard{ancilla}, counter);
            if (q == 1) {
                std::vector<Qubit> targets = index;
                targets.push_back(k == 0 ? aux0 : aux1);
                apply_gate(s, gate::ControlledDiagonal{ancilla, targets, std::cref(leaf_oracle)}, counter);
            } else {
                apply_gate(s, gate::PolarityCCZ{ancilla, 1, br.selector, br.polarity, *previous_result}, counter);
            }
            apply_gate(s, gate::Fourier{{ancilla}, true}, counter);
        }

        std::vector<Qubit> observed = {ancillas[0], ancillas[1]};
        observed.insert(observed.end(), index.begin(), index.end());
        out.snapshots.push_back(reduced_density(s, observed, opts.reduction_limit));

        // (iv) result qubit prepared in |1>, then Toffoli.
        const Qubit result = s.allocate(numbered("Z", q), 1).qubits[0];
        apply_gate(s, gate::PauliX{result}, counter);
        apply_gate(s, gate::Toffoli{ancillas[0], ancillas[1], result}, counter);

        // (v) the next iteration's oracle is a phase on this result qubit.
        previous_result = result;
    }

    const Qubit final_result = *previous_result;
    Distribution d = measure_qubits(s, std::span<const Qubit>(&final_result, 1));
    out.root = {d.count("0") ? d.at("0") : 0.0, d.count("1") ? d.at("1") : 0.0};
    out.width = s.width();
    return out;
}

std::vector<DensityMatrix> declared_snapshots(const DeclaredTrace &declared) {
    static const std::string kRegisters[] = {"X", "Y", "B"};
    std::vector<DensityMatrix> out;
    for (const DeclaredIteration &it : declared.iterations) {
        out.push_back(classical_to_density(it.estimated, kRegisters));
    }
    return out;
}

std::vector<DivergenceRecord> compare_traces(const DeclaredTrace &declared, std::span<const DensityMatrix> snapshots) {
    if (snapshots.size() != declared.iterations.size()) {
        throw LayoutError("declared trace has " + std::to_string(declared.iterations.size()) + " iterations but " +
                          std::to_string(snapshots.size()) + " snapshots were given");
    }
    std::vector<DensityMatrix> expected = declared_snapshots(declared);
    std::vector<DivergenceRecord> out;
    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        if (expected[k].dimension() != snapshots[k].dimension()) {
            throw LayoutError("iteration " + std::to_string(k + 1) + " compares registers of different widths");
        }
        out.push_back({declared.iterations[k].q, trace_distance(expected[k], snapshots[k]),
                       coherence_mass(snapshots[k])});
    }
    return out;
}

}  // namespace nandsim
