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

#include "nandsim/gates.hpp"

#include <gtest/gtest.h>

#include <random>

#include "nandsim/errors.hpp"
#include "support/dense_oracle.hpp"

using namespace nandsim;

namespace {

StateVector random_state(unsigned width, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << width);
    double norm = 0.0;
    for (Complex &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (Complex &a : amps) a /= std::sqrt(norm);
    return StateVector::from_amplitudes(width, std::move(amps));
}

Eigen::VectorXcd to_eigen(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.amplitudes().size()));
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
    return v;
}

double max_diff(const StateVector &s, const Eigen::VectorXcd &v) { return (to_eigen(s) - v).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Gates, hadamard_on_zero) {
    StateVector s(1);
    ResourceCounter c;
    apply_gate(s, gate::Hadamard{0}, c);
    EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(c.one_qubit_gates, 1u);
}

TEST(Gates, toffoli_truth_table) {
    // z starts at 1 and ends as NAND(x, y).
    for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) {
            StateVector s = StateVector::basis(3, static_cast<std::uint64_t>(x << 2 | y << 1 | 1));
            ResourceCounter c;
            apply_gate(s, gate::Toffoli{0, 1, 2}, c);
            std::uint64_t want = static_cast<std::uint64_t>(x << 2 | y << 1 | (x && y ? 0 : 1));
            EXPECT_EQ(s.amplitude(want), Complex(1, 0));
            EXPECT_EQ(c.three_qubit_gates, 1u);
        }
    }
}

TEST(Gates, controlled_oracle_kicks_back_phase) {
    DiagonalUnitary u = build_diagonal_unitary(std::vector<Bit>{0, 1});
    // control |1>, target |1> with phase 1/2: amplitude picks up -1.
    StateVector s = StateVector::basis(2, 0b11);
    ResourceCounter c;
    apply_gate(s, gate::ControlledDiagonal{0, {1}, std::cref(u)}, c);
    EXPECT_EQ(s.amplitude(0b11), Complex(-1, 0));
    EXPECT_EQ(c.oracle_queries, 1u);
    EXPECT_EQ(c.total_gates(), 0u);

    StateVector off = StateVector::basis(2, 0b01);
    apply_gate(off, gate::ControlledDiagonal{0, {1}, std::cref(u)}, c);
    EXPECT_EQ(off.amplitude(0b01), Complex(1, 0));
}

TEST(Gates, layout_errors) {
    StateVector s(3);
    ResourceCounter c;
    DiagonalUnitary u = build_diagonal_unitary(std::vector<Bit>{0, 1, 1, 0});
    EXPECT_THROW(apply_gate(s, gate::ControlledDiagonal{0, {1}, std::cref(u)}, c), LayoutError);
    EXPECT_THROW(apply_gate(s, gate::ControlledDiagonal{0, {0, 1}, std::cref(u)}, c), LayoutError);
    EXPECT_THROW(apply_gate(s, gate::Toffoli{0, 0, 1}, c), LayoutError);
    EXPECT_THROW(apply_gate(s, gate::Hadamard{3}, c), LayoutError);
    EXPECT_THROW(apply_gate(s, gate::Fourier{{1, 1}, false}, c), LayoutError);
    EXPECT_EQ(c, ResourceCounter{});
}

TEST(Gates, width_one_fourier_is_exactly_hadamard) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector a = random_state(3, rng);
        StateVector b = a;
        ResourceCounter c;
        apply_gate(a, gate::Hadamard{1}, c);
        apply_gate(b, gate::Fourier{{1}, false}, c);
        for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
            EXPECT_EQ(a.amplitude(i), b.amplitude(i));
        }
        StateVector d = b;
        apply_gate(d, gate::Fourier{{1}, true}, c);
        apply_gate(b, gate::Hadamard{1}, c);
        for (std::size_t i = 0; i < b.amplitudes().size(); ++i) {
            EXPECT_EQ(d.amplitude(i), b.amplitude(i));
        }
    }
}

TEST(Gates, inverses_restore_state) {
    std::mt19937_64 rng(11);
    StateVector s = random_state(5, rng);
    const StateVector start = s;
    ResourceCounter c;
    apply_gate(s, gate::Fourier{{4, 0, 2}, false}, c);
    apply_gate(s, gate::Fourier{{4, 0, 2}, true}, c);
    apply_gate(s, gate::Hadamard{3}, c);
    apply_gate(s, gate::Hadamard{3}, c);
    apply_gate(s, gate::Toffoli{1, 4, 2}, c);
    apply_gate(s, gate::Toffoli{1, 4, 2}, c);
    apply_gate(s, gate::PolarityCCZ{0, 0, 3, 1, 2}, c);
    apply_gate(s, gate::PolarityCCZ{0, 0, 3, 1, 2}, c);
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
        EXPECT_LE(std::abs(s.amplitude(i) - start.amplitude(i)), 1e-10);
    }
    EXPECT_LT(std::abs(s.norm() - 1.0), 1e-10);
}

TEST(Gates, kernels_match_dense_reference) {
    std::mt19937_64 rng(3);
    const unsigned width = 5;
    DiagonalUnitary u = build_diagonal_unitary(std::vector<Bit>{0, 1, 1, 0, 1, 1, 0, 0});
    for (int trial = 0; trial < 10; ++trial) {
        StateVector s = random_state(width, rng);
        reference::DenseCircuit ref(width);
        ref.set_state(to_eigen(s));
        ResourceCounter c;

        apply_gate(s, gate::Hadamard{2}, c);
        ref.h(2);
        apply_gate(s, gate::PauliX{4}, c);
        ref.x(4);
        apply_gate(s, gate::ControlledDiagonal{1, {3, 0, 4}, std::cref(u)}, c);
        ref.controlled_sign_oracle(1, {3, 0, 4}, {0, 1, 1, 0, 1, 1, 0, 0});
        apply_gate(s, gate::Toffoli{4, 0, 1}, c);
        ref.ccnot(4, 0, 1);
        apply_gate(s, gate::ControlledZ{2, 3}, c);
        ref.polarity_ccz(2, 1, 2, 1, 3);
        apply_gate(s, gate::PolarityCCZ{3, 0, 1, 1, 0}, c);
        ref.polarity_ccz(3, 0, 1, 1, 0);
        apply_gate(s, gate::Fourier{{2, 4, 1}, false}, c);
        ref.fourier({2, 4, 1}, +1);
        apply_gate(s, gate::Fourier{{0, 3}, true}, c);
        ref.fourier({0, 3}, -1);

        EXPECT_LE(max_diff(s, ref.state()), 1e-12);
        EXPECT_LT(std::abs(s.norm() - 1.0), 1e-10);
    }
}

TEST(Gates, fourier_counts_textbook_decomposition) {
    StateVector s(4);
    ResourceCounter c;
    apply_gate(s, gate::Fourier{{0, 1, 2, 3}, false}, c);
    // 4 Hadamards, 6 controlled phases, 2 swaps.
    EXPECT_EQ(c.one_qubit_gates, 4u);
    EXPECT_EQ(c.two_qubit_gates, 8u);
}

TEST(Gates, counts_are_deterministic) {
    auto run = [] {
        StateVector s(3);
        ResourceCounter c;
        DiagonalUnitary u = build_diagonal_unitary(std::vector<Bit>{1, 0});
        apply_gate(s, gate::Hadamard{0}, c);
        apply_gate(s, gate::ControlledDiagonal{0, {2}, std::cref(u)}, c);
        apply_gate(s, gate::Toffoli{0, 1, 2}, c);
        apply_gate(s, gate::ControlledZ{0, 1}, c);
        return c;
    };
    ResourceCounter a = run();
    EXPECT_EQ(a, run());
    EXPECT_EQ(a.oracle_queries, 1u);
    EXPECT_EQ(a.one_qubit_gates, 1u);
    EXPECT_EQ(a.two_qubit_gates, 1u);
    EXPECT_EQ(a.three_qubit_gates, 1u);
}

TEST(Measure, examples) {
    StateVector zero(1);
    zero.name_register("A", {0});
    EXPECT_EQ(measure_distribution(zero, {"A"}), (Distribution{{"0", 1.0}}));

    StateVector plus(1);
    plus.name_register("A", {0});
    ResourceCounter c;
    apply_gate(plus, gate::Hadamard{0}, c);
    Distribution d = measure_distribution(plus, {"A"});
    EXPECT_NEAR(d.at("0"), 0.5, 1e-15);
    EXPECT_NEAR(d.at("1"), 0.5, 1e-15);

    StateVector t = StateVector::basis(3, 0b111);
    t.name_register("X", {0});
    t.name_register("Y", {1});
    t.name_register("Z", {2});
    apply_gate(t, gate::Toffoli{0, 1, 2}, c);
    EXPECT_EQ(measure_distribution(t, {"Z"}), (Distribution{{"0", 1.0}}));
    EXPECT_THROW(measure_distribution(t, {"W"}), LayoutError);
}

TEST(Measure, marginal_sums_to_one) {
    std::mt19937_64 rng(9);
    StateVector s = random_state(6, rng);
    Distribution d = measure_qubits(s, std::vector<Qubit>{5, 1, 3});
    double total = 0.0;
    for (const auto &[k, p] : d) {
        EXPECT_EQ(k.size(), 3u);
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(StateVector, allocate_appends_least_significant_qubits) {
    StateVector s(0);
    s.allocate("A", 1);
    s.allocate("B", 2, 0b10);
    EXPECT_EQ(s.width(), 3u);
    EXPECT_EQ(s.amplitude(0b010), Complex(1, 0));
    EXPECT_EQ(s.layout().at("B").qubits, (std::vector<Qubit>{1, 2}));
    EXPECT_THROW(s.allocate("A", 1), LayoutError);
    EXPECT_THROW(s.name_register("C", {0}), LayoutError);
    EXPECT_THROW(StateVector::from_amplitudes(1, {1.0, 1.0}), InvalidInput);
}
