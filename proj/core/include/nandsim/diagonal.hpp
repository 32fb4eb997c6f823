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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nandsim/tree.hpp"

namespace nandsim {

using Complex = std::complex<double>;

/// e^{2 pi i num / den}, exact whenever num/den is a multiple of 1/4.
Complex unit_root(long long num, long long den);

/// Diagonal oracle whose entry j is e^{2 pi i phase_j}, phase_j in {0, 1/2}.
class DiagonalUnitary {
   public:
    DiagonalUnitary() = default;
    explicit DiagonalUnitary(std::vector<double> phases);

    std::size_t size() const { return phases_.size(); }
    std::span<const double> phases() const { return phases_; }
    double phase(std::size_t j) const { return phases_[j]; }

    /// Diagonal matrix entry j.
    Complex entry(std::size_t j) const { return entries_[j]; }
    std::span<const Complex> entries() const { return entries_; }

    /// Number of qubits needed to index the diagonal; size() must be a power of two.
    unsigned width() const;

    /// Entries supplied directly (phase_j is recorded alongside); |entry| must be 1 within 1e-12.
    DiagonalUnitary(std::vector<double> phases, std::vector<Complex> entries);

   private:
    std::vector<double> phases_;
    std::vector<Complex> entries_;
};

/// Generator of a DiagonalUnitary: the real diagonal 2 pi phase_j (radians).
/// Diagonal, hence 1-sparse and Hermitian.
class DiagonalHamiltonian {
   public:
    explicit DiagonalHamiltonian(std::vector<double> diagonal);
    static DiagonalHamiltonian from_assignment(const LeafAssignment &a);

    std::size_t size() const { return diagonal_.size(); }
    std::span<const double> diagonal() const { return diagonal_; }
    static constexpr std::size_t sparsity() { return 1; }

   private:
    std::vector<double> diagonal_;
};

/// Phase oracle with phase_j = u_j / 2 for leaf bits u_j.
DiagonalUnitary build_diagonal_unitary(const LeafAssignment &a);

/// Same oracle for an arbitrary bit table (e.g. an intermediate level of the tree).
DiagonalUnitary build_diagonal_unitary(std::span<const Bit> bits);

/// e^{i A t}: entry j equals e^{i (2 pi phase_j) t}.
DiagonalUnitary exp_hamiltonian(const DiagonalHamiltonian &h, double t);

}  // namespace nandsim
