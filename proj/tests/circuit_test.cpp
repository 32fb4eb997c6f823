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

#include <gtest/gtest.h>

#include "nandsim/errors.hpp"
#include "nandsim/report.hpp"
#include "support/dense_oracle.hpp"

using namespace nandsim;

namespace {

// Dense replay of the depth <= 2 circuit with explicit qubit numbering:
// aux-0 = 0, aux-1 = 1, B = 2 (depth 2 only), then X1, Y1, Z1, X2, Y2, Z2.
// Returns P(final result = 1).
double dense_root_one(const std::vector<int> &leaves, bool reuse) {
    const unsigned n = leaves.size() == 2 ? 1 : 2;
    const unsigned b = 2;
    const unsigned x1 = n == 1 ? 2 : 3;
    const unsigned y1 = x1 + 1, z1 = x1 + 2;
    const unsigned width = n == 1 ? 5 : 9;
    reference::DenseCircuit c(width);
    c.x(1);
    std::vector<unsigned> index = n == 2 ? std::vector<unsigned>{b} : std::vector<unsigned>{};
    for (unsigned q : index) c.h(q);

    for (unsigned anc : {x1, y1}) {
        c.h(anc);
        std::vector<unsigned> targets = index;
        targets.push_back(anc == x1 ? 0 : 1);
        c.controlled_sign_oracle(anc, targets, leaves);
        c.fourier({anc}, -1);
    }
    c.x(z1);
    c.ccnot(x1, y1, z1);
    if (n == 1) return c.prob_one(z1);

    const unsigned x2 = 6, y2 = 7, z2 = 8;
    // FreshB's second index register is empty at depth 2; selectors stay aux-0/aux-1.
    for (unsigned anc : {x2, y2}) {
        int polarity = anc == x2 ? 0 : 1;
        unsigned selector = reuse ? b : (anc == x2 ? 0u : 1u);
        c.h(anc);
        c.polarity_ccz(anc, 1, selector, polarity, z1);
        c.fourier({anc}, -1);
    }
    c.x(z2);
    c.ccnot(x2, y2, z2);
    return c.prob_one(z2);
}

std::vector<int> ints(const LeafAssignment &a) { return {a.leaves().begin(), a.leaves().end()}; }

}  // namespace

TEST(Interpretation, names) {
    EXPECT_EQ(parse_interpretation("fresh-b"), Interpretation::FreshB);
    EXPECT_EQ(parse_interpretation("reuse-index"), Interpretation::ReuseIndex);
    EXPECT_EQ(to_string(Interpretation::ReuseIndex), "reuse-index");
    EXPECT_THROW(parse_interpretation("fresh"), InvalidConfig);
}

TEST(CircuitSimulate, widths) {
    EXPECT_EQ(required_width(1, Interpretation::FreshB), 5u);
    EXPECT_EQ(required_width(1, Interpretation::ReuseIndex), 5u);
    EXPECT_EQ(required_width(4, Interpretation::FreshB), 20u);
    EXPECT_EQ(required_width(4, Interpretation::ReuseIndex), 17u);
    EXPECT_EQ(circuit_simulate(LeafAssignment(3, std::vector<Bit>(8, 0)), Interpretation::FreshB).width, 14u);
}

TEST(CircuitSimulate, errors) {
    EXPECT_THROW(circuit_simulate(LeafAssignment(0, {1}), Interpretation::FreshB), Unsupported);
    EXPECT_THROW(circuit_simulate(LeafAssignment(5, std::vector<Bit>(32, 0)), Interpretation::FreshB), TooLarge);
    EXPECT_THROW(circuit_simulate(LeafAssignment(2, {0, 0, 0, 0}), Interpretation::FreshB, {8, 12}), TooLarge);
}

TEST(CircuitSimulate, depth_one_always_succeeds) {
    for (Interpretation interp : {Interpretation::FreshB, Interpretation::ReuseIndex}) {
        for (const LeafAssignment &a : enumerate_assignments(1)) {
            RunReport r = circuit_run(a, interp);
            EXPECT_NEAR(r.success_probability, 1.0, 1e-12) << a.to_bits();
            ASSERT_EQ(r.per_iteration.size(), 1u);
            EXPECT_NEAR(r.per_iteration[0].trace_distance, 0.0, 1e-10);
            EXPECT_NEAR(r.per_iteration[0].coherence_mass, 0.0, 1e-10);
            EXPECT_EQ(r.resources.oracle_queries, 2u);
        }
    }
}

TEST(CircuitSimulate, matches_dense_replay) {
    for (unsigned depth = 1; depth <= 2; ++depth) {
        for (const LeafAssignment &a : enumerate_assignments(depth)) {
            for (Interpretation interp : {Interpretation::FreshB, Interpretation::ReuseIndex}) {
                CircuitResult r = circuit_simulate(a, interp);
                double want = dense_root_one(ints(a), interp == Interpretation::ReuseIndex);
                EXPECT_NEAR(r.root[1], want, 1e-12) << a.to_bits() << " " << to_string(interp);
                EXPECT_NEAR(r.root[0] + r.root[1], 1.0, 1e-12);
            }
        }
    }
}

TEST(CircuitSimulate, depth_two_closed_forms) {
    // With z = (NAND(a,b), NAND(c,d)): FreshB writes z_j into both estimates
    // for a uniformly random j and outputs NOT z_j; ReuseIndex leaves one
    // estimate at 0 on every branch and always outputs 1.
    for (const LeafAssignment &a : enumerate_assignments(2)) {
        Bit z0 = nand(a[0], a[1]);
        Bit z1 = nand(a[2], a[3]);
        double fresh_one = 0.5 * ((1 - z0) + (1 - z1));
        EXPECT_NEAR(circuit_simulate(a, Interpretation::FreshB).root[1], fresh_one, 1e-12);
        EXPECT_NEAR(circuit_simulate(a, Interpretation::ReuseIndex).root[1], 1.0, 1e-12);
    }
}

TEST(CircuitSimulate, snapshots_match_dense_partial_trace_at_depth_one) {
    LeafAssignment a(1, {0, 1});
    CircuitResult r = circuit_simulate(a, Interpretation::FreshB);
    ASSERT_EQ(r.snapshots.size(), 1u);
    EXPECT_EQ(r.snapshots[0].dimension(), 4);
    // X holds u_0 = 0 and Y holds u_1 = 1.
    EXPECT_NEAR(r.snapshots[0](0b01, 0b01).real(), 1.0, 1e-12);
}

TEST(CircuitSimulate, snapshot_dimensions) {
    LeafAssignment a(3, {0, 1, 1, 0, 1, 1, 1, 0});
    for (Interpretation interp : {Interpretation::FreshB, Interpretation::ReuseIndex}) {
        CircuitResult r = circuit_simulate(a, interp);
        ASSERT_EQ(r.snapshots.size(), 3u);
        for (unsigned q = 1; q <= 3; ++q) {
            EXPECT_EQ(r.snapshots[q - 1].dimension(), Eigen::Index{1} << (2 + 3 - q));
        }
    }
}

TEST(PhaseEstimation, exact_on_basis_eigenstates) {
    for (unsigned depth = 0; depth <= 3; ++depth) {
        for (const LeafAssignment &a : enumerate_assignments(depth)) {
            DiagonalUnitary u = build_diagonal_unitary(a);
            for (std::uint64_t j = 0; j < a.size(); ++j) {
                StateVector s(0);
                const Qubit anc = s.allocate("X", 1).qubits[0];
                std::vector<Qubit> target = s.allocate("T", depth, j).qubits;
                ResourceCounter c;
                apply_gate(s, gate::Hadamard{anc}, c);
                apply_gate(s, gate::ControlledDiagonal{anc, target, std::cref(u)}, c);
                apply_gate(s, gate::Fourier{{anc}, true}, c);
                std::uint64_t idx = (std::uint64_t{a[j]} << depth) | j;
                ASSERT_LE(std::abs(std::abs(s.amplitude(idx)) - 1.0), 1e-12);
            }
        }
    }
}

TEST(CompareTraces, identical_snapshots_give_zero) {
    DeclaredResult d = declared_run(LeafAssignment(3, {1, 1, 0, 1, 0, 0, 1, 1}));
    std::vector<DensityMatrix> same = declared_snapshots(d.trace);
    for (const DivergenceRecord &rec : compare_traces(d.trace, same)) {
        EXPECT_EQ(rec.trace_distance, 0.0);
        EXPECT_EQ(rec.coherence_mass, 0.0);
    }
    same.pop_back();
    EXPECT_THROW(compare_traces(d.trace, same), LayoutError);
}

TEST(CompareTraces, coherent_first_iteration_at_depth_two) {
    // The circuit holds a pure superposition over two distinct labels where
    // the declared state is their even mixture: trace distance 1/2, coherence 1.
    RunReport r = circuit_run(LeafAssignment(2, {0, 1, 1, 1}), Interpretation::FreshB);
    ASSERT_EQ(r.per_iteration.size(), 2u);
    EXPECT_NEAR(r.per_iteration[0].trace_distance, 0.5, 1e-12);
    EXPECT_NEAR(r.per_iteration[0].coherence_mass, 1.0, 1e-12);
}

TEST(CircuitRun, deterministic) {
    LeafAssignment a(3, {0, 1, 1, 1, 0, 0, 1, 0});
    for (Interpretation interp : {Interpretation::FreshB, Interpretation::ReuseIndex}) {
        RunReport x = circuit_run(a, interp);
        RunReport y = circuit_run(a, interp);
        EXPECT_EQ(x, y);
        EXPECT_EQ(to_json(x), to_json(y));
        EXPECT_GE(x.success_probability, 0.0);
        EXPECT_LE(x.success_probability, 1.0);
        for (const DivergenceRecord &d : x.per_iteration) {
            EXPECT_GE(d.trace_distance, -1e-10);
            EXPECT_LE(d.trace_distance, 1.0 + 1e-10);
        }
    }
}
