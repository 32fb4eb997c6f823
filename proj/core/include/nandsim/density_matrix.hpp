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

#include <Eigen/Dense>
#include <span>
#include <string>

#include "nandsim/classical_state.hpp"
#include "nandsim/state_vector.hpp"

namespace nandsim {

/// Hermitian, unit-trace, positive semidefinite matrix (all within 1e-10).
///
/// Positivity is only verified for dimension <= 256; larger matrices come
/// from partial traces of normalized states and are positive by construction.
class DensityMatrix {
   public:
    explicit DensityMatrix(Eigen::MatrixXcd m);

    static DensityMatrix pure(std::span<const Complex> amplitudes);

    Eigen::Index dimension() const { return m_.rows(); }
    const Eigen::MatrixXcd &matrix() const { return m_; }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

   private:
    Eigen::MatrixXcd m_;
};

/// Partial trace of |s><s| onto `qubits` (kept in listed order, most significant first).
/// Throws TooLarge when more than `limit` qubits are kept.
DensityMatrix reduced_density(const StateVector &s, std::span<const Qubit> qubits,
                              unsigned limit = kDefaultReductionLimit);
DensityMatrix reduced_density(const StateVector &s, std::span<const std::string> registers,
                              unsigned limit = kDefaultReductionLimit);

/// Diagonal matrix over the concatenated `registers`, summing weights of labels
/// that agree on them. Throws LayoutError if a label lacks a register or widths disagree.
DensityMatrix classical_to_density(const ClassicalState &c, std::span<const std::string> registers);

/// Half the trace norm of p - q.
double trace_distance(const DensityMatrix &p, const DensityMatrix &q);

/// Sum of |entries| strictly off the diagonal.
double coherence_mass(const DensityMatrix &p);

/// {"dimension":d,"entries":[[re,im],...]} row-major.
std::string to_json(const DensityMatrix &p);

/// {"bits":probability,...} in key order.
std::string to_json(const Distribution &d);

}  // namespace nandsim
