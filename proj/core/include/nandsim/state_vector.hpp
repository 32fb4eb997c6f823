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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nandsim/diagonal.hpp"
#include "nandsim/register_layout.hpp"

namespace nandsim {

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kEntryTolerance = 1e-12;
inline constexpr unsigned kDefaultReductionLimit = 12;

/// Exact pure state over a RegisterLayout. Qubit 0 is the most significant
/// bit of the amplitude index.
class StateVector {
   public:
    /// |0...0> on `width` unnamed qubits.
    explicit StateVector(unsigned width = 0);

    /// Throws InvalidInput unless amplitudes.size() == 2^width and the norm is 1 within 1e-10.
    static StateVector from_amplitudes(unsigned width, std::vector<Complex> amplitudes);
    static StateVector basis(unsigned width, std::uint64_t index);

    unsigned width() const { return layout_.width(); }
    const RegisterLayout &layout() const { return layout_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_[index]; }

    /// Tensors |value> onto `count` fresh least-significant qubits named `name`.
    /// `value` is read most-significant first over the new qubits.
    const RegisterLayout::Register &allocate(std::string name, unsigned count, std::uint64_t value = 0);

    /// Names existing qubits (see RegisterLayout::add).
    const RegisterLayout::Register &name_register(std::string name, std::vector<Qubit> qubits);

    std::vector<Qubit> qubits(std::span<const std::string> names) const { return layout_.qubits_of(names); }
    std::vector<Qubit> qubits(std::initializer_list<std::string> names) const;

    double norm() const;

    /// Mask of qubit q inside an amplitude index.
    std::uint64_t mask(Qubit q) const { return std::uint64_t{1} << (width() - 1 - q); }

   private:
    RegisterLayout layout_;
    std::vector<Complex> amplitudes_;
};

/// Exact Born probabilities of the listed registers (concatenated in order),
/// marginalized over everything else. Keys are bitstrings, most significant first.
using Distribution = std::map<std::string, double>;

Distribution measure_distribution(const StateVector &s, std::span<const std::string> registers);
Distribution measure_distribution(const StateVector &s, std::initializer_list<std::string> registers);
Distribution measure_qubits(const StateVector &s, std::span<const Qubit> qubits);

}  // namespace nandsim
